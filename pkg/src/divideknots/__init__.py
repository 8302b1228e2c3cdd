"""Exact invariants and four-genus bounds for divide knots."""

__version__ = "0.1.0"

from .defect import (BoundsReport, DefectCertificate, SearchConfig,
                     SubgroupBasis, g4_bounds, restrict_form, search_defect,
                     snail_subgroup, verify_alex_trivial)
from .divides import (CombinatorialMap, Divide, Region, build_map,
                      checkerboard, faces, loads_divide, parse_divide,
                      read_divide_file, snail)
from .errors import (DivideError, GaussCodeError, InternalInvariantError,
                     PlanarityError)
from .exact import (IntMatrix, LaurentMatrix, LaurentPoly, alexander_matrix,
                    int_det, is_unit, laurent_det, normalize_alexander,
                    signature_exact, unimodular_check)
from .invariants import (InvariantSet, alexander, compute_invariants, genus,
                         knot_determinant, signature_of_knot, smooth_g4)
from .report import family_rows, report_document, to_json
from .seifert import (Generator, SeifertData, ishikawa_basis, seifert_matrix,
                      shared_edges, vertex_incidences)

__all__ = [
    "BoundsReport", "CombinatorialMap", "DefectCertificate", "Divide",
    "DivideError", "GaussCodeError", "Generator", "IntMatrix",
    "InternalInvariantError", "InvariantSet", "LaurentMatrix", "LaurentPoly",
    "PlanarityError", "Region", "SearchConfig", "SeifertData", "SubgroupBasis",
    "alexander", "alexander_matrix", "build_map", "checkerboard",
    "compute_invariants", "faces", "family_rows", "g4_bounds", "genus",
    "int_det", "is_unit", "ishikawa_basis", "knot_determinant", "laurent_det",
    "loads_divide", "normalize_alexander", "parse_divide", "read_divide_file",
    "report_document", "restrict_form", "search_defect", "seifert_matrix",
    "shared_edges", "signature_exact", "signature_of_knot", "smooth_g4",
    "snail", "snail_subgroup", "to_json", "unimodular_check",
    "vertex_incidences", "verify_alex_trivial",
]
