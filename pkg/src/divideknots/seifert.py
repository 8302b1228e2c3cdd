"""Seifert form of a divide knot from region/vertex incidence counts.

The fibre surface of a divide knot deformation-retracts to a spine
with one cycle per inner region of the divide and one per double
point.  The Seifert pairing of the corresponding homology classes is
determined entirely by coarse incidence data of the disc picture:

==========================  =========================================
pairing                     value
==========================  =========================================
S(g, g)                     1 for every generator
S(black, white)             number of shared arc edges
S(black, vertex)            multiplicity of the vertex on the black
                            region's boundary walk
S(vertex, white)            multiplicity of the vertex on the white
                            region's boundary walk
everything else             0  (the reversed orders above, distinct
                            vertex pairs, same-colour region pairs)
==========================  =========================================

Basis order is fixed for reproducibility: inner regions by region id,
then double points by first visit along the arc.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .divides import (CombinatorialMap, Divide, Region, build_map, checkerboard,
                      faces)
from .errors import InternalInvariantError
from .exact import IntMatrix, unimodular_check


@dataclass(frozen=True)
class Generator:
    """One basis element of the first homology of the fibre surface."""

    kind: str  # "black-region" | "white-region" | "double-point"
    ref: str   # region id or double-point name
    position: int

    @property
    def is_region(self) -> bool:
        return self.kind != "double-point"


@dataclass(frozen=True)
class SeifertData:
    """A divide together with its ordered basis and Seifert matrix."""

    basis: Tuple[Generator, ...]
    matrix: IntMatrix
    divide: Divide
    regions: Tuple[Region, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def ishikawa_basis(divide: Divide, regions: Sequence[Region]) -> Tuple[Generator, ...]:
    """Ordered spine basis: inner regions first, then double points."""
    gens = []
    for r in regions:
        if not r.is_inner:
            continue
        if r.colour not in ("black", "white"):
            raise ValueError(f"region {r.id} is not coloured")
        gens.append(Generator(kind=f"{r.colour}-region", ref=r.id, position=len(gens)))
    for name in divide.double_points:
        gens.append(Generator(kind="double-point", ref=name, position=len(gens)))
    return tuple(gens)


def shared_edges(cmap: CombinatorialMap, region_a: Region, region_b: Region) -> int:
    """Count arc edges bordered by ``region_a`` on one side and ``region_b`` on the other."""
    in_a = set(region_a.walk)
    in_b = set(region_b.walk)
    count = 0
    for e in range(cmap.edge_count):
        if cmap.is_boundary_edge(e):
            continue
        d, twin = 2 * e, 2 * e + 1
        if (d in in_a and twin in in_b) or (d in in_b and twin in in_a):
            count += 1
    return count


def vertex_incidences(cmap: CombinatorialMap, regions: Sequence[Region],
                      vertex: str) -> Dict[str, int]:
    """Multiplicity of a double point on each region's boundary walk."""
    return {r.id: r.vertex_multiplicity(cmap, vertex) for r in regions}


def seifert_matrix(divide: Divide, black: Optional[str] = None,
                   swap: bool = False) -> SeifertData:
    """Full pipeline from a divide to its Seifert matrix.

    ``black`` overrides the divide's own colour hint; ``swap`` inverts
    the finished colouring.  The intersection form ``A - A^T`` of the
    result must be unimodular (the spine carries the homology of a
    once-punctured surface); a violation means a bug in the incidence
    bookkeeping and raises InternalInvariantError.
    """
    cmap = build_map(divide)
    hint = black if black is not None else divide.black_hint
    regions = checkerboard(cmap, faces(cmap), black_hint=hint, swap=swap)
    basis = ishikawa_basis(divide, regions)
    by_id = {r.id: r for r in regions}

    def region_of(gen: Generator) -> Region:
        return by_id[gen.ref]

    n = len(basis)
    rows = [[0] * n for _ in range(n)]
    for i, gi in enumerate(basis):
        for j, gj in enumerate(basis):
            if i == j:
                rows[i][j] = 1
            elif gi.kind == "black-region" and gj.kind == "white-region":
                rows[i][j] = shared_edges(cmap, region_of(gi), region_of(gj))
            elif gi.kind == "black-region" and gj.kind == "double-point":
                rows[i][j] = region_of(gi).vertex_multiplicity(cmap, gj.ref)
            elif gi.kind == "double-point" and gj.kind == "white-region":
                rows[i][j] = region_of(gj).vertex_multiplicity(cmap, gi.ref)
            # every other off-diagonal pairing vanishes
    matrix = IntMatrix(rows)

    if not unimodular_check(matrix - matrix.transpose()):
        raise InternalInvariantError(
            "intersection form of the spine basis is not unimodular")
    return SeifertData(basis=basis, matrix=matrix, divide=divide, regions=regions)
