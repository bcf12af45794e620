"""Circumcenters of mass of polygons, simplicial polytopes and spherical polygons.

The circumcenter of mass (CCM) of a polygon is the area-weighted mean of the
circumcenters of any triangulation; it does not depend on the triangulation.
Together with the centroid it spans the family ``C_t = t CM + (1 - t) CCM``.
"""

from .axioms import euler_family_height, functional_eq_residual, kite_height
from .core import (
    INFINITE,
    DegeneracyClass,
    Tolerance,
    WeightedPoint,
    circumcenter,
    circumradius,
    combine,
    signed_area,
)
from .errors import GeometryError
from .planar import (
    EulerLine,
    archimedes_combine,
    c_t,
    ccm_closed_form,
    ccm_fan,
    cm_lamina,
    curve_ccm,
    euler_line,
    polygon_area,
    symmetry_diagnostics,
)
from .polytope import (
    SimplicialBoundary,
    c_t_polytope,
    ccm_polytope,
    ccm_polytope_closed_form,
    cm_polytope,
    monge_point,
    polytope_volume,
    simplex_circumcenter,
)
from .spherical import (
    MassedDirection,
    minkowski_ccm,
    spherical_ccm,
    spherical_ccm_fan,
    spherical_polygon_lamina_cm,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "DegeneracyClass",
    "EulerLine",
    "GeometryError",
    "MassedDirection",
    "SimplicialBoundary",
    "Tolerance",
    "WeightedPoint",
    "archimedes_combine",
    "c_t",
    "c_t_polytope",
    "ccm_closed_form",
    "ccm_fan",
    "ccm_polytope",
    "ccm_polytope_closed_form",
    "circumcenter",
    "circumradius",
    "cm_lamina",
    "cm_polytope",
    "combine",
    "curve_ccm",
    "euler_family_height",
    "euler_line",
    "functional_eq_residual",
    "kite_height",
    "minkowski_ccm",
    "monge_point",
    "polygon_area",
    "polytope_volume",
    "signed_area",
    "simplex_circumcenter",
    "spherical_ccm",
    "spherical_ccm_fan",
    "spherical_polygon_lamina_cm",
    "symmetry_diagnostics",
]
