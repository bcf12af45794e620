"""JSON geometry documents and center reports.

Input schema::

    {"kind": "polygon" | "polytope" | "spherical_polygon" | "hyperboloid_polygon",
     "dim": n, "vertices": [[...], ...], "facets": [[i, ...], ...],
     "metadata": {...}}

``facets`` (0-based) is required for polytopes only.  Reports are written
with 17 significant digits so that parsing them back gives equal floats.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import ParseError

KINDS = ("polygon", "polytope", "spherical_polygon", "hyperboloid_polygon")
_KIND_DIM = {"polygon": 2, "spherical_polygon": 3, "hyperboloid_polygon": 3}


@dataclass
class GeometryDocument:
    kind: str
    dim: int
    vertices: np.ndarray
    facets: np.ndarray | None = None
    metadata: dict = field(default_factory=dict)


def parse_document(text: str) -> GeometryDocument:
    """Parse and validate a geometry document.

    Raises
    ------
    ParseError
        On malformed JSON or any schema violation.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ParseError("document must be a JSON object")
    kind = raw.get("kind")
    if kind not in KINDS:
        raise ParseError(f"kind must be one of {', '.join(KINDS)}")
    try:
        vertices = np.array(raw.get("vertices"), dtype=float)
    except (TypeError, ValueError):
        raise ParseError("vertices must be a rectangular array of numbers") from None
    if vertices.ndim != 2 or len(vertices) == 0:
        raise ParseError("vertices must be a non-empty list of coordinate lists")
    if not np.all(np.isfinite(vertices)):
        raise ParseError("vertex coordinates must be finite")
    dim = raw.get("dim", vertices.shape[1])
    if not isinstance(dim, int) or isinstance(dim, bool) or dim != vertices.shape[1]:
        raise ParseError(f"dim {dim!r} does not match vertex width {vertices.shape[1]}")
    if kind in _KIND_DIM and dim != _KIND_DIM[kind]:
        raise ParseError(f"{kind} needs dim {_KIND_DIM[kind]}")
    if kind == "spherical_polygon":
        norms = np.linalg.norm(vertices, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-9):
            raise ParseError("spherical_polygon vertices must be unit vectors")
    if kind == "hyperboloid_polygon":
        q = vertices[:, 2] ** 2 - vertices[:, 0] ** 2 - vertices[:, 1] ** 2
        if np.any(np.abs(q - 1.0) > 1e-9 * np.maximum(1.0, vertices[:, 2] ** 2)) or np.any(vertices[:, 2] <= 0):
            raise ParseError("hyperboloid_polygon vertices must satisfy z^2 - x^2 - y^2 = 1, z > 0")
    facets = None
    if kind == "polytope":
        facets = _parse_facets(raw.get("facets"), dim, len(vertices))
    elif raw.get("facets") is not None:
        raise ParseError(f"facets are only allowed for polytopes, not {kind}")
    metadata = raw.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError("metadata must be an object")
    return GeometryDocument(kind, dim, vertices, facets, metadata)


def _parse_facets(raw, dim, nverts) -> np.ndarray:
    if not isinstance(raw, list) or not raw:
        raise ParseError("polytope needs a non-empty facets list")
    if not all(isinstance(f, list) and all(isinstance(i, int) and not isinstance(i, bool) for i in f) for f in raw):
        raise ParseError("facets must be lists of integer indices")
    facets = np.array(raw, dtype=object)
    if facets.ndim != 2 or facets.shape[1] != dim:
        raise ParseError(f"every facet needs exactly {dim} vertex indices")
    facets = facets.astype(np.int64)
    if facets.min() < 0 or facets.max() >= nverts:
        raise ParseError("facet index out of range")
    return facets


def document_to_json(doc: GeometryDocument) -> str:
    out: dict[str, Any] = {"kind": doc.kind, "dim": doc.dim, "vertices": doc.vertices.tolist()}
    if doc.facets is not None:
        out["facets"] = doc.facets.tolist()
    if doc.metadata:
        out["metadata"] = doc.metadata
    return dumps(out)


# ---------------------------------------------------------------------------
# reports

@dataclass
class CenterResult:
    """One requested center: either ``value`` or ``error`` (a code), never both."""

    value: list[float] | None = None
    error: str | None = None
    message: str | None = None

    def __post_init__(self):
        if (self.value is None) == (self.error is None):
            raise ValueError("a center result needs exactly one of value and error")

    @classmethod
    def ok(cls, value) -> CenterResult:
        return cls(value=[float(x) for x in np.atleast_1d(value)])

    @classmethod
    def failed(cls, exc) -> CenterResult:
        return cls(error=getattr(exc, "code", type(exc).__name__), message=str(exc))

    def to_dict(self) -> dict:
        if self.error is not None:
            return {"status": "error", "error": self.error, "message": self.message}
        return {"status": "ok", "value": self.value}

    @classmethod
    def from_dict(cls, raw: dict) -> CenterResult:
        if raw.get("status") == "ok":
            return cls(value=[float(x) for x in raw["value"]])
        return cls(error=raw["error"], message=raw.get("message"))


@dataclass
class CenterReport:
    kind: str
    dim: int
    measure: float | None
    centers: dict[str, CenterResult] = field(default_factory=dict)
    diagnostics: dict[str, Any] = field(default_factory=dict)

    @property
    def partial(self) -> bool:
        return any(c.error is not None for c in self.centers.values())

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "dim": self.dim,
            "measure": self.measure,
            "centers": {k: v.to_dict() for k, v in self.centers.items()},
            "diagnostics": self.diagnostics,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> CenterReport:
        return cls(
            kind=raw["kind"],
            dim=raw["dim"],
            measure=raw["measure"],
            centers={k: CenterResult.from_dict(v) for k, v in raw["centers"].items()},
            diagnostics=raw.get("diagnostics", {}),
        )

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> CenterReport:
        return cls.from_dict(json.loads(text))


def _format(obj, indent: int) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            raise ValueError("non-finite numbers cannot be written to JSON")
        return format(x, ".17g")
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_format(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if all(isinstance(x, (int, float, np.number)) and not isinstance(x, bool) for x in seq):
            return "[" + ", ".join(_format(x, indent) for x in seq) + "]"
        if not seq:
            return "[]"
        return "[\n" + ",\n".join(inner + _format(x, indent + 1) for x in seq) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    """Deterministic JSON with 17-significant-digit floats."""
    return _format(obj, 0) + "\n"


__all__ = [
    "KINDS",
    "CenterReport",
    "CenterResult",
    "GeometryDocument",
    "document_to_json",
    "dumps",
    "parse_document",
]
