"""Exception hierarchy shared across the package.

Input-data problems (bad Gauss codes, unrealizable divides, unknown
region hints) derive from :class:`DivideError`; the command line maps
these to exit code 2.  :class:`InternalInvariantError` signals that a
computation violated an invariant that holds for every valid input
(for example a Seifert pairing whose intersection form is not
unimodular) and maps to exit code 4.
"""


class DivideError(Exception):
    """Base class for invalid divide input."""


class GaussCodeError(DivideError):
    """The signed Gauss code is syntactically or combinatorially bad."""


class PlanarityError(DivideError):
    """The signed code is not realizable as an immersed arc in the disc."""


class InternalInvariantError(Exception):
    """A structural invariant failed; indicates a bug, not bad input."""
