"""Frame-presented ultrametric norms on Q_p^n and exact norm values.

A norm is always given by a frame (an N-orthogonal basis e_1, ..., e_n of the
whole space, stored as matrix rows) and one rational weight exponent per
frame vector, so that

    N(a_1 e_1 + ... + a_n e_n) = max_i |a_i|_p * p**w_i.

Every norm on a finite dimensional Q_p vector space has this shape, so the
presentation loses nothing. Norm values are stored as exact rational
exponents of p and are compared exactly.

Authors
-------
    - Mario Gennaro
    - Mees Fix

Use
---
    Routines in this module can be imported as follows:

    >>> from padic_lattice_tool.norms import make_space, norm_eval
    >>> space = make_space(2, identity_matrix(4), [0, 0, 0, 0])
    >>> str(norm_eval(space, (2, 8, 16, 16)))
    '2^-1'
"""

from fractions import Fraction
from functools import total_ordering
import re

from padic_lattice_tool.errors import (
    InvalidFrameError,
    InvalidParameterError,
    SingularMatrixError,
)
from padic_lattice_tool.padic_core import (
    as_matrix,
    as_rational,
    as_vector,
    check_prime,
    format_rational,
    identity_matrix,
    inverse_matrix,
    multiply_by_inverse,
    parse_rational,
    valuation,
)

NORM_PATTERN = re.compile(r"^([0-9]+)\^(.+)$")


@total_ordering
class normValue:
    """A norm magnitude: zero, or p**exponent with a rational exponent.

    Parameters
    ----------
    p : int
        Prime the exponent refers to

    exponent : fractions.Fraction or None
        Exponent e of p**e, None for the zero value
    """

    def __init__(self, p, exponent=None):
        self.p = p
        self.exponent = None if exponent is None else as_rational(exponent)

    @classmethod
    def parse(cls, text, p):
        """Inverse of ``str``: "0" or "p^e" with e a serialized rational."""
        text = text.strip()
        if text == "0":
            return cls(p)

        match = NORM_PATTERN.match(text)
        if match is None or int(match.group(1)) != p:
            raise InvalidParameterError(f"{text!r} IS NOT A NORM VALUE FOR p={p}")
        return cls(p, parse_rational(match.group(2)))

    @property
    def is_zero(self):
        return self.exponent is None

    def _check_comparable(self, other):
        if self.p != other.p:
            raise InvalidParameterError(
                f"CAN NOT COMPARE NORM VALUES FOR p={self.p} AND p={other.p}"
            )

    def __eq__(self, other):
        if not isinstance(other, normValue):
            return NotImplemented
        return self.p == other.p and self.exponent == other.exponent

    def __lt__(self, other):
        if not isinstance(other, normValue):
            return NotImplemented
        self._check_comparable(other)
        if other.is_zero:
            return False
        if self.is_zero:
            return True
        return self.exponent < other.exponent

    def __hash__(self):
        return hash((self.p, self.exponent))

    def __str__(self):
        if self.is_zero:
            return "0"
        return f"{self.p}^{format_rational(self.exponent)}"

    def __repr__(self):
        return f"normValue({self})"

    def scale(self, k):
        """Norm of p**k times a vector of this norm (exponent shifts by -k)."""
        if self.is_zero:
            return self
        return normValue(self.p, self.exponent - k)

    def times_abs(self, x):
        """Norm of x times a vector of this norm, N(xv) = |x|_p N(v)."""
        v = valuation(self.p, x)
        if self.is_zero or v == float("inf"):
            return normValue(self.p)
        return self.scale(v)


def scale_norm(nv, p, k):
    """Multiply a norm value by |p**k|_p.

    Parameters
    ----------
    nv : normValue
        Norm value

    p : int
        Prime of the norm value

    k : int
        Power of p the vector is multiplied by

    Returns
    -------
    scaled : normValue
        Zero stays zero, p**e becomes p**(e - k)
    """
    if nv.p != p:
        raise InvalidParameterError(f"NORM VALUE FOR p={nv.p} SCALED WITH p={p}")
    return nv.scale(k)


class normedSpace:
    """Q_p^n with the norm presented by a frame and weight exponents.

    Parameters
    ----------
    p : int
        Prime

    frame : sequence of rows
        n x n invertible matrix, rows are the N-orthogonal basis e_1..e_n

    weights : sequence
        n rational exponents, N(e_i) = p**weights[i]
    """

    def __init__(self, p, frame, weights):
        self.p = check_prime(p)
        self.frame = as_matrix(frame)
        self.n = len(self.frame)

        if self.n == 0 or any(len(row) != self.n for row in self.frame):
            raise InvalidParameterError("FRAME MUST BE A NON-EMPTY SQUARE MATRIX")
        if len(weights) != self.n:
            raise InvalidParameterError(
                f"{len(weights)} WEIGHTS GIVEN FOR A FRAME OF DIMENSION {self.n}"
            )
        self.weights = as_vector(weights)

        try:
            self._frame_inverse = inverse_matrix(self.frame)
        except SingularMatrixError:
            raise InvalidFrameError("FRAME IS SINGULAR")

    def __eq__(self, other):
        if not isinstance(other, normedSpace):
            return NotImplemented
        return (
            self.p == other.p
            and self.frame == other.frame
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.p, self.frame, self.weights))

    def __repr__(self):
        return f"normedSpace(p={self.p}, n={self.n}, weights={[str(w) for w in self.weights]})"

    def check_vector(self, v):
        v = as_vector(v)
        if len(v) != self.n:
            raise InvalidParameterError(
                f"VECTOR OF LENGTH {len(v)} GIVEN FOR DIMENSION {self.n}"
            )
        return v

    def zero_norm(self):
        return normValue(self.p)

    def frame_coordinates(self, v):
        """Coordinates a with v = sum_j a_j e_j."""
        return multiply_by_inverse(self.check_vector(v), self._frame_inverse)

    def from_frame_coordinates(self, a):
        """The vector sum_j a_j e_j in standard coordinates."""
        vector = [Fraction(0)] * self.n
        for coordinate, row in zip(a, self.frame):
            if coordinate == 0:
                continue
            for k, entry in enumerate(row):
                vector[k] += coordinate * entry
        return tuple(vector)

    def coordinate_exponent(self, j, a_j):
        """Exponent of N(a_j e_j), None for a zero coordinate."""
        if a_j == 0:
            return None
        return self.weights[j] - valuation(self.p, a_j)

    def norm_from_coordinates(self, a):
        """N(sum_j a_j e_j) = max_j |a_j|_p p**w_j."""
        exponents = [
            self.coordinate_exponent(j, a_j) for j, a_j in enumerate(a) if a_j != 0
        ]
        if not exponents:
            return normValue(self.p)
        return normValue(self.p, max(exponents))

    def norm(self, v):
        return self.norm_from_coordinates(self.frame_coordinates(v))


def make_space(p, frame, weights):
    """Validated normed space N(sum a_i e_i) = max |a_i|_p p**w_i.

    Raises ``InvalidFrameError`` for a singular frame and
    ``InvalidParameterError`` for a non-prime p or a length mismatch.
    """
    return normedSpace(p, frame, weights)


def identity_space(p, n, weights=None):
    """Q_p^n with the identity frame (zero weights unless given)."""
    if weights is None:
        weights = [0] * n
    return normedSpace(p, identity_matrix(n), weights)


def norm_eval(S, v):
    """Norm of ``v`` in the normed space ``S``."""
    return S.norm(v)
