"""Classical knot invariants computed exactly from a Seifert matrix.

For divide knots the fibre-surface basis realizes the Seifert genus,
and the fibre genus equals the smooth four-genus, so both are plain
consequences of the basis size.  The Alexander polynomial, determinant
and signature come from the matrix by exact arithmetic.
"""

from dataclasses import dataclass

from .errors import InternalInvariantError
from .exact import (LaurentPoly, alexander_matrix, laurent_det,
                    normalize_alexander, signature_exact)
from .seifert import SeifertData


@dataclass(frozen=True)
class InvariantSet:
    genus: int
    smooth_g4: int
    alexander: LaurentPoly  # canonical representative, lowest exponent 0
    knot_determinant: int
    signature: int

    #: With the orientation conventions of this package a divide knot
    #: has positive signature; tables using the mirror convention
    #: negate it.
    signature_convention = "signature of A + A^T for the stated rotation rules"


def genus(sd: SeifertData) -> int:
    """Genus of the fibre surface: half the basis size."""
    if sd.dimension % 2:
        raise InternalInvariantError(
            "odd first Betti number: input does not bound a knot")
    return sd.dimension // 2


def smooth_g4(sd: SeifertData) -> int:
    """Smooth four-genus; equals the fibre genus for divide knots."""
    return genus(sd)


def alexander(sd: SeifertData) -> LaurentPoly:
    """Alexander polynomial ``det(t*A - A^T)`` in canonical form."""
    return normalize_alexander(laurent_det(alexander_matrix(sd.matrix)))


def knot_determinant(sd: SeifertData) -> int:
    """|Alexander(-1)|."""
    value = alexander(sd).evaluate(-1)
    return abs(int(value))


def signature_of_knot(sd: SeifertData) -> int:
    """Signature of the symmetrized Seifert matrix ``A + A^T``."""
    return signature_exact(sd.matrix + sd.matrix.transpose())


def compute_invariants(sd: SeifertData) -> InvariantSet:
    """All invariants at once, with cross-checks that hold for knots.

    ``Alexander(1) = +-1``, odd determinant and even signature are
    theorems for the inputs this package accepts, so violations point
    at an internal fault and raise rather than return bad data.
    """
    alex = alexander(sd)
    det = knot_determinant(sd)
    sig = signature_of_knot(sd)
    if alex.evaluate(1) not in (1, -1):
        raise InternalInvariantError("Alexander polynomial at t=1 is not a unit")
    if det % 2 == 0:
        raise InternalInvariantError("knot determinant must be odd")
    if sig % 2:
        raise InternalInvariantError("knot signature must be even")
    return InvariantSet(
        genus=genus(sd),
        smooth_g4=smooth_g4(sd),
        alexander=alex,
        knot_determinant=det,
        signature=sig,
    )
