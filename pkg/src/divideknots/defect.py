"""Certified two-sided bounds on the topological four-genus.

A subgroup of the first homology of the fibre surface on which the
one-variable Alexander determinant ``det(t*B - B^T)`` is a unit
``+-t^k`` witnesses, through freedom-style surgery results for
topologically locally flat surfaces, that the topological four-genus
drops below the genus by half the subgroup rank.  The lower bound is
the classical half-signature bound.

Everything emitted here is a self-validating certificate: the
subgroup rows, the restricted matrix and the unit are stored so any
third party can replay the determinant check.
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

from .errors import InternalInvariantError
from .exact import (IntMatrix, alexander_matrix, is_unit, laurent_det)
from .invariants import InvariantSet, compute_invariants
from .seifert import SeifertData


@dataclass(frozen=True)
class SubgroupBasis:
    """Integer row vectors spanning a subgroup of the homology lattice."""

    vectors: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.vectors)

    @property
    def width(self) -> int:
        return len(self.vectors[0]) if self.vectors else 0


@dataclass(frozen=True)
class DefectCertificate:
    """A replayable witness for an upper four-genus bound.

    ``unit`` is the (sign, exponent) pair with
    ``det(t*B - B^T) == sign * t**exponent`` for the restricted matrix
    ``B``, and ``upper_bound = genus - rank/2``.
    """

    subgroup: SubgroupBasis
    restricted: IntMatrix
    unit: Tuple[int, int]
    upper_bound: int


@dataclass(frozen=True)
class SearchConfig:
    """Budget knobs for :func:`search_defect`.

    ``coeff_bound`` limits candidate coordinates to
    ``[-coeff_bound, coeff_bound]``; ``max_candidates`` caps how many
    box vectors are examined; ``time_budget`` (seconds) is a safety
    cutoff on the whole search.
    """

    coeff_bound: int = 1
    max_candidates: int = 100_000
    time_budget: float = 60.0


@dataclass(frozen=True)
class BoundsReport:
    invariants: InvariantSet
    g4top_lower: int
    g4top_upper: int
    certificates: Tuple[DefectCertificate, ...]

    @property
    def exact(self) -> bool:
        return self.g4top_lower == self.g4top_upper


def _pairing(a: IntMatrix, x: Sequence[int], y: Sequence[int]) -> int:
    """The Seifert pairing ``x * A * y^T`` of two coordinate vectors."""
    total = 0
    for i, xi in enumerate(x):
        if xi:
            row = a.row(i)
            total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
    return total


def _rational_rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(v) for v in vec] for vec in vectors]
    rank = 0
    col = 0
    width = len(rows[0]) if rows else 0
    while rank < len(rows) and col < width:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                f = rows[r][col] / lead
                for c in range(col, width):
                    rows[r][c] -= f * rows[rank][c]
        rank += 1
        col += 1
    return rank


def restrict_form(a: IntMatrix, basis: SubgroupBasis) -> IntMatrix:
    """Gram matrix of the Seifert pairing on a subgroup, ``V A V^T``."""
    if basis.rank and basis.width != a.rows:
        raise ValueError("subgroup vectors do not match the form's dimension")
    if basis.rank and _rational_rank(basis.vectors) != basis.rank:
        raise ValueError("subgroup rows are linearly dependent")
    return IntMatrix([[_pairing(a, x, y) for y in basis.vectors]
                      for x in basis.vectors])


def verify_alex_trivial(a: IntMatrix, basis: SubgroupBasis,
                        genus: int) -> Optional[DefectCertificate]:
    """Check the unit-Alexander criterion on a subgroup.

    Returns the certificate when ``det(t*B - B^T)`` is ``+-t^k`` on the
    restricted form ``B`` and None when the criterion fails.  The empty
    subgroup always certifies the trivial bound ``genus``.
    """
    restricted = restrict_form(a, basis)
    unit = is_unit(laurent_det(alexander_matrix(restricted)))
    if unit is None:
        return None
    if basis.rank % 2:
        raise InternalInvariantError("unit certificate on an odd-rank subgroup")
    return DefectCertificate(
        subgroup=basis,
        restricted=restricted,
        unit=unit,
        upper_bound=genus - basis.rank // 2,
    )


def snail_subgroup(n: int) -> SubgroupBasis:
    """The canonical rank ``2n - 2`` subgroup for the n-th snail knot.

    In the snail's spine basis the inner regions appear outermost
    first, so counting rings from the inside as 1..n, ring ``j`` sits
    at position ``n - j`` and double point ``j`` at ``2n - j``.  The
    rows are ``a_i = ring_{i+1} - vertex_i`` followed by
    ``b_i = vertex_{i+1}`` for ``i = 1 .. n-1``; on their span the
    Alexander determinant collapses to ``+-t^(n-1)``.
    """
    if n < 1:
        raise ValueError("snail divides are indexed from 1")
    dim = 2 * n
    a_rows: List[Tuple[int, ...]] = []
    b_rows: List[Tuple[int, ...]] = []
    for i in range(1, n):
        vec = [0] * dim
        vec[n - (i + 1)] = 1
        vec[2 * n - i] = -1
        a_rows.append(tuple(vec))
        vec = [0] * dim
        vec[2 * n - (i + 1)] = 1
        b_rows.append(tuple(vec))
    return SubgroupBasis(vectors=tuple(a_rows + b_rows))


# ---------------------------------------------------------------------------
# search


def _box_vectors(dim: int, bound: int):
    """Nonzero vectors with coordinates in [-bound, bound], first
    nonzero coordinate positive, in lexicographic order."""
    for vec in product(range(-bound, bound + 1), repeat=dim):
        lead = next((v for v in vec if v), None)
        if lead is None or lead < 0:
            continue
        yield vec


def _isotropic_candidates(a: IntMatrix, cfg: SearchConfig,
                          deadline: float) -> List[Tuple[int, ...]]:
    sym = a + a.transpose()
    rows = [sym.row(i) for i in range(sym.rows)]
    found: List[Tuple[int, ...]] = []
    examined = 0
    for vec in _box_vectors(a.rows, cfg.coeff_bound):
        examined += 1
        if examined > cfg.max_candidates:
            break
        if examined % 1024 == 0 and time.monotonic() > deadline:
            break
        q = 0
        for i, xi in enumerate(vec):
            if xi:
                ri = rows[i]
                q += xi * sum(ri[j] * xj for j, xj in enumerate(vec) if xj)
        if q == 0:
            found.append(vec)
    return found


def _grow_clique(a: IntMatrix, candidates: Sequence[Tuple[int, ...]],
                 seed: int, max_size: int) -> List[Tuple[int, ...]]:
    """Greedy set of mutually annihilating vectors starting from a seed."""
    clique = [candidates[seed]]
    for idx, cand in enumerate(candidates):
        if len(clique) >= max_size:
            break
        if idx == seed:
            continue
        if all(_pairing(a, cand, x) == 0 and _pairing(a, x, cand) == 0
               for x in clique):
            clique.append(cand)
    return clique


def _assign_partners(a: IntMatrix, xs: Sequence[Tuple[int, ...]],
                     cfg: SearchConfig, deadline: float
                     ) -> Optional[List[Tuple[int, ...]]]:
    """Pick one partner per clique vector so both mixed blocks of
    ``t*B - B^T`` come out triangular with monomial diagonal.

    Partner ``y_j`` must annihilate every earlier clique vector in both
    orders and pair with its own ``x_j`` as exactly one of
    ``(S(x,y), S(y,x)) in {(+-1, 0), (0, +-1)}``.
    """
    partners: List[Tuple[int, ...]] = []
    accepted = {(1, 0), (-1, 0), (0, 1), (0, -1)}
    for j, xj in enumerate(xs):
        choice = None
        checked = 0
        for vec in _box_vectors(a.rows, cfg.coeff_bound):
            checked += 1
            if checked % 1024 == 0 and time.monotonic() > deadline:
                return None
            if any(_pairing(a, xs[i], vec) or _pairing(a, vec, xs[i])
                   for i in range(j)):
                continue
            if (_pairing(a, xj, vec), _pairing(a, vec, xj)) in accepted:
                choice = vec
                break
        if choice is None:
            return None
        partners.append(choice)
    return partners


def search_defect(a: IntMatrix, genus: int,
                  config: Optional[SearchConfig] = None) -> DefectCertificate:
    """Deterministic greedy search for a unit-Alexander subgroup.

    Enumerates isotropic vectors in a small coordinate box, grows
    mutually annihilating families from every seed in order and tries
    to complete each family with partner vectors before handing the
    result to :func:`verify_alex_trivial`.  Always returns a
    certificate; with nothing better it is the empty-subgroup one whose
    bound is the genus itself.
    """
    cfg = config or SearchConfig()
    empty = verify_alex_trivial(a, SubgroupBasis(()), genus)
    assert empty is not None
    best = empty
    if a.rows == 0 or genus <= 0:
        return best
    deadline = time.monotonic() + cfg.time_budget
    candidates = _isotropic_candidates(a, cfg, deadline)
    if not candidates:
        return best
    max_pairs = min(a.rows // 2, genus)
    floor_bound = max(0, genus - max_pairs)
    for seed in range(len(candidates)):
        if best.upper_bound <= floor_bound or time.monotonic() > deadline:
            break
        clique = _grow_clique(a, candidates, seed, max_pairs)
        for k in range(len(clique), 0, -1):
            if genus - k >= best.upper_bound:
                break
            xs = clique[:k]
            ys = _assign_partners(a, xs, cfg, deadline)
            if ys is None:
                continue
            vectors = tuple(xs) + tuple(ys)
            if _rational_rank(vectors) != 2 * k:
                continue
            cert = verify_alex_trivial(a, SubgroupBasis(vectors), genus)
            if cert is not None and cert.upper_bound < best.upper_bound:
                best = cert
                break
    return best


def g4_bounds(sd: SeifertData, config: Optional[SearchConfig] = None,
              run_search: bool = True) -> BoundsReport:
    """Two-sided bounds on the topological four-genus of a divide knot.

    Lower bound: half the signature.  Upper bound: the genus, improved
    by the canonical snail subgroup when the divide came from
    :func:`.divides.snail`, and by :func:`search_defect` whenever the
    interval is still open.  All certificates are revalidated through
    the determinant criterion before use.
    """
    inv = compute_invariants(sd)
    g = inv.genus
    lower = max(0, -(-inv.signature // 2))
    upper = g
    certificates: List[DefectCertificate] = []

    if sd.divide.snail_index is not None:
        cert = verify_alex_trivial(sd.matrix, snail_subgroup(sd.divide.snail_index), g)
        if cert is None:
            raise InternalInvariantError("snail subgroup failed the unit criterion")
        if cert.subgroup.rank:
            certificates.append(cert)
            upper = min(upper, cert.upper_bound)

    if run_search and upper > lower:
        cert = search_defect(sd.matrix, g, config)
        if cert.subgroup.rank and cert.upper_bound < upper:
            certificates.append(cert)
            upper = min(upper, cert.upper_bound)

    if lower > upper:
        raise InternalInvariantError("four-genus bounds crossed")
    return BoundsReport(invariants=inv, g4top_lower=lower, g4top_upper=upper,
                        certificates=tuple(certificates))
