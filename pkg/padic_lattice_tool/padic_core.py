"""Exact rational scalars, p-adic valuations and exact linear algebra over Q.

Scalars are ``fractions.Fraction`` values, the computable dense subfield of
Q_p. Vectors are tuples of Fractions and matrices are tuples of row vectors
(row-vector convention throughout: a basis is a matrix of rows and
``x . M = b`` is solved for row vectors ``x``).

Authors
-------
    - Mario Gennaro
    - Mees Fix

Use
---
    Routines in this module can be imported as follows:

    >>> from padic_lattice_tool.padic_core import in_Zp, rank, solve_linear, valuation
    >>> valuation(3, Fraction(2, 9))
    -2
"""

from fractions import Fraction
from functools import lru_cache
import math
import re

from sympy import isprime, multiplicity
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from padic_lattice_tool.errors import InvalidParameterError, SingularMatrixError

RATIONAL_PATTERN = re.compile(r"(0|-?[1-9][0-9]*)(?:/([2-9]|[1-9][0-9]+))?")


@lru_cache(maxsize=None, typed=True)
def check_prime(p):
    """Validate that ``p`` is a prime integer.

    Parameters
    ----------
    p : int
        Candidate prime

    Returns
    -------
    p : int
        The validated prime
    """
    if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
        raise InvalidParameterError(f"{p!r} IS NOT A PRIME")
    return p


def parse_rational(text):
    """Parse the serialized form "a" or "a/b" (lowest terms, b > 0).

    Parameters
    ----------
    text : str
        Serialized rational

    Returns
    -------
    value : fractions.Fraction
        Parsed rational
    """
    match = RATIONAL_PATTERN.fullmatch(text) if isinstance(text, str) else None
    if match is None:
        raise InvalidParameterError(f"{text!r} IS NOT A RATIONAL OF THE FORM 'a' OR 'a/b'")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if math.gcd(numerator, denominator) != 1:
        raise InvalidParameterError(f"{text!r} IS NOT IN LOWEST TERMS")

    return Fraction(numerator, denominator)


def format_rational(value):
    """Serialize a rational as "a" or "a/b"."""
    return str(as_rational(value))


def as_rational(value):
    """Convert an int, Fraction or serialized string to a Fraction.

    Floats are rejected: every computation in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidParameterError(f"CAN NOT INTERPRET {value!r} AS A RATIONAL")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)

    raise InvalidParameterError(f"CAN NOT INTERPRET {value!r} AS AN EXACT RATIONAL")


def valuation(p, x):
    """Exponent of ``p`` in the rational ``x``.

    Parameters
    ----------
    p : int
        Prime

    x : fractions.Fraction or int
        Rational scalar

    Returns
    -------
    v : int or float
        v_p(numerator) - v_p(denominator), ``math.inf`` when ``x`` is zero
    """
    check_prime(p)
    x = as_rational(x)
    if x == 0:
        return math.inf

    return int(multiplicity(p, abs(x.numerator))) - int(multiplicity(p, x.denominator))


def in_Zp(p, x):
    """True when ``x`` is a p-adic integer (valuation >= 0)."""
    return valuation(p, x) >= 0


def abs_p(p, x):
    """Exact p-adic absolute value |x|_p = p**(-v_p(x)), zero for zero."""
    v = valuation(p, x)
    if v == math.inf:
        return Fraction(0)
    return Fraction(p) ** (-v)


def unit_part(p, x):
    """The p-adic unit ``x * p**(-v_p(x))`` of a nonzero rational."""
    v = valuation(p, x)
    if v == math.inf:
        raise InvalidParameterError("ZERO HAS NO UNIT PART")
    return as_rational(x) * Fraction(p) ** (-v)


def as_vector(entries):
    """Convert a sequence of scalars to a vector (tuple of Fractions)."""
    return tuple(as_rational(entry) for entry in entries)


def as_matrix(rows):
    """Convert a sequence of rows to a rectangular matrix (tuple of vectors)."""
    matrix = tuple(as_vector(row) for row in rows)
    if len({len(row) for row in matrix}) > 1:
        raise InvalidParameterError("MATRIX ROWS MUST ALL HAVE THE SAME LENGTH")
    return matrix


def identity_matrix(n):
    """The n x n identity matrix."""
    return tuple(
        tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
    )


def zero_vector(n):
    return (Fraction(0),) * n


def is_zero_vector(v):
    return all(entry == 0 for entry in v)


def add_vectors(v, w):
    return tuple(a + b for a, b in zip(v, w))


def subtract_vectors(v, w):
    return tuple(a - b for a, b in zip(v, w))


def scale_vector(k, v):
    k = as_rational(k)
    return tuple(k * a for a in v)


def linear_combination(coefficients, rows):
    """Row vector ``coefficients . rows``.

    Parameters
    ----------
    coefficients : sequence
        One scalar per row

    rows : sequence of vectors
        Rows of equal length (at least one)

    Returns
    -------
    vector : tuple
        Sum of ``coefficients[i] * rows[i]``
    """
    if len(coefficients) != len(rows):
        raise InvalidParameterError(
            f"{len(coefficients)} COEFFICIENTS GIVEN FOR {len(rows)} ROWS"
        )

    combination = [Fraction(0)] * len(rows[0])
    for coefficient, row in zip(coefficients, rows):
        coefficient = as_rational(coefficient)
        if coefficient == 0:
            continue
        for j, entry in enumerate(row):
            combination[j] += coefficient * entry

    return tuple(combination)


def _to_domain_matrix(matrix):
    """Build a sympy DomainMatrix over QQ from a matrix of Fractions."""
    rows = [[QQ(entry.numerator, entry.denominator) for entry in row] for row in matrix]
    shape = (len(rows), len(rows[0]) if rows else 0)
    return DomainMatrix(rows, shape, QQ)


def _from_domain_element(element):
    rational = QQ.to_sympy(element)
    return Fraction(int(rational.p), int(rational.q))


def _check_square(matrix):
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise InvalidParameterError("MATRIX MUST BE SQUARE AND NON-EMPTY")
    return n


def inverse_matrix(M):
    """Exact inverse of a square matrix.

    Parameters
    ----------
    M : sequence of rows
        Square matrix of rationals

    Returns
    -------
    inverse : tuple of tuples
        Exact inverse of ``M``
    """
    M = as_matrix(M)
    _check_square(M)
    try:
        inverse = _to_domain_matrix(M).inv()
    except DMNonInvertibleMatrixError:
        raise SingularMatrixError("MATRIX IS SINGULAR")

    return tuple(
        tuple(_from_domain_element(entry) for entry in row)
        for row in inverse.to_list()
    )


def multiply_by_inverse(b, inverse):
    """Row vector ``b . inverse`` for a precomputed inverse matrix."""
    n = len(inverse)
    if len(b) != n:
        raise InvalidParameterError(f"VECTOR OF LENGTH {len(b)} GIVEN FOR DIMENSION {n}")
    return linear_combination(b, inverse)


def solve_linear(M, b):
    """Solve ``x . M = b`` exactly for an invertible square matrix ``M``.

    Parameters
    ----------
    M : sequence of rows
        n x n invertible matrix

    b : sequence
        Right hand side of length n

    Returns
    -------
    x : tuple
        The unique solution
    """
    return multiply_by_inverse(as_vector(b), inverse_matrix(M))


def rank(M):
    """Exact rank over the rationals (equal to the rank over Q_p)."""
    M = as_matrix(M)
    if not M or not M[0]:
        return 0
    return _to_domain_matrix(M).rank()


def determinant(M):
    """Exact determinant of a square matrix."""
    M = as_matrix(M)
    _check_square(M)
    return _from_domain_element(_to_domain_matrix(M).det())


def solve_in_span(rows, target):
    """Coefficients ``c`` with ``c . rows = target``, or None outside the span.

    Parameters
    ----------
    rows : sequence of vectors
        Linearly independent rows

    target : sequence
        Vector of the same length as the rows

    Returns
    -------
    coefficients : tuple or None
        The unique coefficient tuple when ``target`` lies in the row span
    """
    rows = as_matrix(rows)
    target = as_vector(target)
    m = len(rows)
    if any(len(row) != len(target) for row in rows):
        raise InvalidParameterError("TARGET LENGTH DOES NOT MATCH THE ROWS")

    # Columns of the augmented system are the rows followed by the target.
    augmented = [[row[j] for row in rows] + [target[j]] for j in range(len(target))]
    reduced, pivots = _to_domain_matrix(augmented).rref()
    if m in pivots:
        return None
    if tuple(pivots) != tuple(range(m)):
        raise InvalidParameterError("ROWS ARE NOT LINEARLY INDEPENDENT")

    reduced = reduced.to_list()
    return tuple(_from_domain_element(reduced[k][m]) for k in range(m))
