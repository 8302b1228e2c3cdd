"""Exact integer and Laurent-polynomial arithmetic.

This module is the trusted computational core of the package:
arbitrary-precision integers, sparse integer Laurent polynomials in a
single variable ``t``, fraction-free determinants over ``Z[t]`` and an
exact signature routine for symmetric integer matrices.  Floating
point appears nowhere here; every result is exact.
"""

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Tuple, Union


class LaurentPoly:
    """A sparse integer Laurent polynomial in ``t``.

    Terms are held as an exponent -> coefficient mapping containing no
    zero coefficients, so the zero polynomial is the empty mapping.
    Instances are treated as immutable; arithmetic returns new objects.

    >>> p = LaurentPoly({2: 1, 1: -1, 0: 1})
    >>> str(p)
    't^2 - t + 1'
    >>> str(p * LaurentPoly.t_power(-2))
    '1 - t^-1 + t^-2'
    >>> p.evaluate(1)
    1
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        data: dict = {}
        if terms is not None:
            items = terms.items() if hasattr(terms, "items") else terms
            for exp, coeff in items:
                e = int(exp)
                c = data.get(e, 0) + int(coeff)
                if c:
                    data[e] = c
                elif e in data:
                    del data[e]
        self._terms = data

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def t_power(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    # -- inspection --------------------------------------------------

    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        """All (exponent, coefficient) terms, sorted by exponent."""
        return tuple(sorted(self._terms.items()))

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no extremal exponent")
        return min(self._terms)

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no extremal exponent")
        return max(self._terms)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        if not k or not self._terms:
            return LaurentPoly(self._terms)
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def reversed(self) -> "LaurentPoly":
        """Substitute ``t -> 1/t``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def evaluate(self, value):
        """Evaluate at an integer or Fraction; exact in either case."""
        if not self._terms:
            return 0
        if any(e < 0 for e in self._terms):
            value = Fraction(value)
        total = 0
        for e, c in self._terms.items():
            total += c * value ** e
        return total

    # -- arithmetic --------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data = dict(self._terms)
        for e, c in other._terms.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            elif e in data:
                del data[e]
        out = LaurentPoly()
        out._terms = data
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-other if isinstance(other, LaurentPoly) else LaurentPoly({0: -other}))

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = data.get(e, 0) + c1 * c2
                if s:
                    data[e] = s
                elif e in data:
                    del data[e]
        out = LaurentPoly()
        out._terms = data
        return out

    __rmul__ = __mul__

    # -- rendering ---------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                body = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._terms.items()))!r})"


class IntMatrix:
    """An immutable rectangular matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows in matrix literal")
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        self._entries = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self._entries[i][j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self._entries[i]

    def to_lists(self):
        return [list(r) for r in self._entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self._entries[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        e = self._entries
        return all(e[i][j] == e[j][i] for i in range(self.rows) for j in range(i))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix([[a + b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self._entries, other._entries)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix([[a - b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self._entries, other._entries)])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions disagree")
        ot = other.transpose()._entries
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in ot]
                          for row in self._entries])

    def _check_same_shape(self, other: "IntMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()!r})"


class LaurentMatrix:
    """A square-or-rectangular matrix with :class:`LaurentPoly` entries."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]]):
        rows = tuple(tuple(p if isinstance(p, LaurentPoly) else LaurentPoly.constant(p)
                           for p in row) for row in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows in matrix literal")
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        self._entries = rows

    def __getitem__(self, key: Tuple[int, int]) -> LaurentPoly:
        i, j = key
        return self._entries[i][j]

    def to_lists(self):
        return [list(r) for r in self._entries]

    def __repr__(self) -> str:
        return f"LaurentMatrix({self.rows}x{self.cols})"


def alexander_matrix(a: IntMatrix) -> LaurentMatrix:
    """The Laurent matrix ``t*A - A^T`` of a square integer matrix."""
    if a.rows != a.cols:
        raise ValueError("Seifert-type matrices must be square")
    n = a.rows
    return LaurentMatrix([[LaurentPoly({1: a[i, j], 0: -a[j, i]})
                           for j in range(n)] for i in range(n)])


# ---------------------------------------------------------------------------
# determinants


def _poly_exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Divide ``p`` by ``q`` assuming the division is exact over Z[t].

    Used by the fraction-free elimination below, where exactness is a
    theorem; a nonzero remainder therefore raises ArithmeticError.
    """
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero():
        return LaurentPoly.zero()
    sp, sq = p.min_exponent(), q.min_exponent()
    rem = dict(p.shift(-sp)._terms)
    qd = q.shift(-sq)
    dq = qd.max_exponent()
    lead = qd.coeff(dq)
    qterms = qd.pairs()
    out: dict = {}
    while rem:
        d = max(rem)
        top = rem[d]
        if d < dq or top % lead:
            raise ArithmeticError("inexact polynomial division in elimination")
        c = top // lead
        out[d - dq] = c
        for e, k in qterms:
            s = rem.get(e + d - dq, 0) - c * k
            if s:
                rem[e + d - dq] = s
            else:
                rem.pop(e + d - dq, None)
    return LaurentPoly(out).shift(sp - sq)


def _cofactor_det(entries) -> LaurentPoly:
    n = len(entries)
    if n == 0:
        return LaurentPoly.one()
    if n == 1:
        return entries[0][0]
    total = LaurentPoly.zero()
    sign = 1
    for j in range(n):
        top = entries[0][j]
        if top:
            minor = [[row[c] for c in range(n) if c != j] for row in entries[1:]]
            total = total + top * _cofactor_det(minor) * sign
        sign = -sign
    return total


def _bareiss_det(entries) -> LaurentPoly:
    n = len(entries)
    a = [list(row) for row in entries]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot_row is None:
                return LaurentPoly.zero()
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _poly_exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
            a[i][k] = LaurentPoly.zero()
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def laurent_det(m: LaurentMatrix) -> LaurentPoly:
    """Exact determinant of a square Laurent-polynomial matrix.

    Negative exponents are first cleared by scaling every entry with a
    common power of ``t`` (multiplying the determinant by a known
    monomial), then a fraction-free Bareiss elimination runs over
    ordinary integer polynomials.  Small matrices go through plain
    cofactor expansion instead, which needs no division at all.

    >>> t = LaurentPoly.t_power
    >>> m = LaurentMatrix([[t(1) - 1, t(1)], [t(0, -1), t(1) - 1]])
    >>> str(laurent_det(m))
    't^2 - t + 1'
    """
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return LaurentPoly.one()
    mins = [p.min_exponent() for row in m.to_lists() for p in row if not p.is_zero()]
    shift = min(0, min(mins)) if mins else 0
    entries = [[p.shift(-shift) for p in row] for row in m.to_lists()]
    det = _cofactor_det(entries) if n <= 4 else _bareiss_det(entries)
    return det.shift(shift * n)


def int_det(m: IntMatrix) -> int:
    """Exact integer determinant via fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticError("inexact division in integer elimination")
                a[i][j] = q
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def unimodular_check(m: IntMatrix) -> bool:
    """True when the integer matrix has determinant +1 or -1."""
    return int_det(m) in (1, -1)


# ---------------------------------------------------------------------------
# units, normal forms, signatures


def is_unit(p: LaurentPoly) -> Optional[Tuple[int, int]]:
    """Decompose a unit of Z[t, 1/t].

    Returns ``(sign, exponent)`` when ``p == sign * t**exponent`` with
    sign +-1, and None otherwise (in particular for 0 and for
    monomials with |coefficient| != 1).
    """
    pairs = p.pairs()
    if len(pairs) != 1:
        return None
    e, c = pairs[0]
    if c not in (1, -1):
        return None
    return (c, e)


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of a Laurent polynomial up to ``+-t^k``.

    The lowest exponent is shifted to zero and the sign is fixed so the
    top-degree coefficient is positive.  Raises on the zero polynomial,
    which never arises from a valid Seifert pairing.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no canonical form")
    q = p.shift(-p.min_exponent())
    if q.coeff(q.max_exponent()) < 0:
        q = -q
    return q


def signature_exact(m: IntMatrix) -> int:
    """Signature of a symmetric integer matrix, computed exactly.

    Performs congruence diagonalization over the rationals.  A zero
    pivot whose row is nonzero is repaired by adding a row/column with
    a nonzero coupling entry, which cannot fail once no nonzero
    diagonal entry remains to swap in.  Zero rows contribute nothing.
    """
    if m.rows != m.cols:
        raise ValueError("signature of a non-square matrix")
    if not m.is_symmetric():
        raise ValueError("signature requires a symmetric matrix")
    n = m.rows
    a = [[Fraction(m[i, j]) for j in range(n)] for i in range(n)]
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue  # zero row: rank deficiency, no sign contribution
                for c in range(n):
                    a[k][c] += a[j][c]
                for r in range(n):
                    a[r][k] += a[r][j]
        pivot = a[k][k]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / pivot
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
                for r in range(k, n):
                    a[r][i] -= f * a[r][k]
    return pos - neg
