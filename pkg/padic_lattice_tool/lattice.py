"""p-adic lattices: orthogonalization with a frame, invariants, elementary
operations and a seeded instance generator.

A lattice is the set of Z_p-linear combinations of m linearly independent
vectors in a normed space Q_p^n. Its successive maxima (the sorted norm
sequence of any N-orthogonal basis) do not depend on the orthogonal basis,
and every other invariant here (escape distance, norm ladder, norm set) is
derived from them.

Authors
-------
    - Mario Gennaro
    - Mees Fix

Use
---
    This module can be used as follows:

    >>> from padic_lattice_tool.lattice import latticeBasis, orthogonalize_with_frame
    >>> basis = latticeBasis(space, [(1, 0, 0, 0), (1, 2, 0, 0), (2, 8, 16, 16)])
    >>> orthogonal = orthogonalize_with_frame(basis)
    >>> [str(norm) for norm in orthogonal.norms()]
    ['2^0', '2^-1', '2^-4']
"""

from fractions import Fraction
import math

import numpy as np

from padic_lattice_tool.constants import (
    DEFAULT_LADDER_LENGTH,
    WEIGHT_RANGE,
    WEIGHT_SPECS,
)
from padic_lattice_tool.errors import (
    InvalidOperationError,
    InvalidParameterError,
    PadicLatticeError,
    PreconditionError,
    RankError,
)
from padic_lattice_tool.norms import make_space, normValue
from padic_lattice_tool.padic_core import (
    add_vectors,
    as_matrix,
    as_vector,
    check_prime,
    determinant,
    identity_matrix,
    in_Zp,
    rank,
    scale_vector,
    solve_in_span,
    subtract_vectors,
    valuation,
)
from padic_lattice_tool.utils import format_norms


class latticeBasis:
    """An ordered basis of a p-adic lattice inside a normed space.

    Parameters
    ----------
    space : padic_lattice_tool.norms.normedSpace
        Ambient normed space Q_p^n

    vectors : sequence of vectors
        m linearly independent vectors of length n, 1 <= m <= n

    check : bool
        Verify the length and rank conditions (skipped for bases produced by
        rank preserving operations)
    """

    def __init__(self, space, vectors, check=True):
        self.space = space
        self.vectors = as_matrix(vectors)

        if check:
            m = len(self.vectors)
            if m < 1 or m > space.n:
                raise InvalidParameterError(
                    f"LATTICE RANK MUST BE BETWEEN 1 AND {space.n}, GOT {m}"
                )
            for vector in self.vectors:
                space.check_vector(vector)
            if rank(self.vectors) != m:
                raise RankError("BASIS VECTORS ARE NOT LINEARLY INDEPENDENT")

    @property
    def p(self):
        return self.space.p

    @property
    def m(self):
        return len(self.vectors)

    @property
    def n(self):
        return self.space.n

    def __eq__(self, other):
        if not isinstance(other, latticeBasis):
            return NotImplemented
        return self.space == other.space and self.vectors == other.vectors

    def __hash__(self):
        return hash((self.space, self.vectors))

    def __repr__(self):
        return f"latticeBasis(p={self.p}, m={self.m}, n={self.n})"

    def norms(self):
        """Norms of the basis vectors, in basis order."""
        return tuple(self.space.norm(vector) for vector in self.vectors)

    def with_vectors(self, vectors, check=False):
        """A basis of the same space with new vectors."""
        return latticeBasis(self.space, vectors, check=check)

    def coordinates(self, v):
        """Coefficients c with c . vectors = v, or None when v is not in the span."""
        return solve_in_span(self.vectors, self.space.check_vector(v))

    def contains(self, v):
        """True when v is a Z_p-linear combination of the basis vectors."""
        coefficients = self.coordinates(v)
        if coefficients is None:
            return False
        return all(in_Zp(self.p, c) for c in coefficients)


class frameElimination:
    """Orthogonalization of a lattice basis with the frame of its space.

    Rows are kept in frame coordinates. Each step moves the longest
    remaining row to the current position, chooses the pivot column of
    maximal weighted norm among the columns not used yet and eliminates
    that column from every row below. Ties are broken by the lowest current
    index. The m x m ``transform`` satisfies rows = transform . input rows.

    Parameters
    ----------
    basis : latticeBasis
        Lattice basis to orthogonalize
    """

    def __init__(self, basis):
        self.basis_in = basis
        self.space = basis.space
        self.p = basis.p
        self.rows = [list(self.space.frame_coordinates(v)) for v in basis.vectors]
        self.transform = [list(row) for row in identity_matrix(basis.m)]
        self.columns = list(range(self.space.n))
        self.step = 0

    def row_norm(self, index):
        return self.space.norm_from_coordinates(self.rows[index])

    def _move_row(self, source, destination):
        for table in (self.rows, self.transform):
            table.insert(destination, table.pop(source))

    def select_longest(self, i):
        """Move the longest of rows i..m-1 to position i (lowest index on ties)."""
        norms = [self.row_norm(index) for index in range(i, len(self.rows))]
        longest = i + norms.index(max(norms))
        if longest != i:
            self._move_row(longest, i)
        return longest

    def select_pivot(self, i):
        """Move the maximal column of row i among positions i..n-1 to position i."""
        row = self.rows[i]
        best_position, best_exponent = None, None
        for position in range(i, len(self.columns)):
            column = self.columns[position]
            exponent = self.space.coordinate_exponent(column, row[column])
            if exponent is None:
                continue
            if best_exponent is None or exponent > best_exponent:
                best_position, best_exponent = position, exponent

        if best_position is None:
            raise RankError(f"ROW {i} VANISHED DURING ELIMINATION")

        self.columns.insert(i, self.columns.pop(best_position))
        return self.columns[i]

    def eliminate_below(self, i):
        """Clear the pivot column of row i from every later row."""
        pivot_column = self.columns[i]
        pivot = self.rows[i][pivot_column]
        for index in range(i + 1, len(self.rows)):
            entry = self.rows[index][pivot_column]
            if entry == 0:
                continue
            # |entry / pivot|_p <= 1 because row i is the longest remaining row.
            factor = entry / pivot
            self.rows[index] = [
                a - factor * b for a, b in zip(self.rows[index], self.rows[i])
            ]
            self.transform[index] = [
                a - factor * b for a, b in zip(self.transform[index], self.transform[i])
            ]

    @property
    def done(self):
        return self.step == len(self.rows)

    def advance(self):
        """Run one step: fix row ``step``, choose its pivot and eliminate below it."""
        i = self.step
        self.select_longest(i)
        self.select_pivot(i)
        self.eliminate_below(i)
        self.step = i + 1
        return self

    def run(self):
        while not self.done:
            self.advance()
        return self

    def vector(self, index):
        """Row ``index`` in standard coordinates."""
        return self.space.from_frame_coordinates(self.rows[index])

    def basis(self):
        """Orthogonal basis in standard coordinates."""
        vectors = [self.space.from_frame_coordinates(row) for row in self.rows]
        return self.basis_in.with_vectors(vectors)

    @property
    def permutation(self):
        """Frame axes in pivot order (0-based)."""
        return tuple(self.columns)

    def triangular(self):
        """Rows in permuted frame coordinates, upper-triangular after ``run``."""
        return tuple(tuple(row[c] for c in self.columns) for row in self.rows)


def orthogonalize_with_frame(L):
    """Return an N-orthogonal basis of the lattice ``L``.

    Parameters
    ----------
    L : latticeBasis
        Lattice basis

    Returns
    -------
    orthogonal : latticeBasis
        Orthogonal basis of the same lattice, norms non-increasing
    """
    return frameElimination(L).run().basis()


def successive_maxima(L):
    """Sorted (non-increasing) norm sequence of any orthogonal basis of ``L``."""
    return tuple(sorted(orthogonalize_with_frame(L).norms(), reverse=True))


def _ladder_from_maxima(maxima, k):
    if k < 1:
        raise InvalidParameterError(f"LADDER LENGTH MUST BE AT LEAST 1, GOT {k}")

    p = maxima[0].p
    exponents = {
        value.exponent - i for value in set(maxima) for i in range(k)
    }
    return tuple(normValue(p, e) for e in sorted(exponents, reverse=True)[:k])


def _escape_from_maxima(maxima):
    return maxima[-1].scale(-1)


def escape_distance(L):
    """Minimal distance from ``L`` to a point outside it, p times the last maximum.

    Raises ``RankError`` unless ``L`` is full rank.
    """
    if L.m != L.n:
        raise RankError(
            f"ESCAPE DISTANCE NEEDS A FULL RANK LATTICE, RANK {L.m} IN DIMENSION {L.n}"
        )
    return _escape_from_maxima(successive_maxima(L))


def lambda_ladder(L, k):
    """The k largest distinct norms of nonzero lattice vectors, decreasing.

    Parameters
    ----------
    L : latticeBasis
        Lattice basis

    k : int
        Number of ladder values, at least 1

    Returns
    -------
    ladder : tuple of normValue
        lambda_1 > lambda_2 > ... > lambda_k with lambda_1 the first maximum
    """
    if k < 1:
        raise InvalidParameterError(f"LADDER LENGTH MUST BE AT LEAST 1, GOT {k}")
    return _ladder_from_maxima(successive_maxima(L), k)


def norm_set(L, depth):
    """Lattice norms p**(-i) * maxima_j for 0 <= i < depth, plus zero, decreasing."""
    if depth < 1:
        raise InvalidParameterError(f"DEPTH MUST BE AT LEAST 1, GOT {depth}")

    maxima = successive_maxima(L)
    exponents = {value.exponent - i for value in set(maxima) for i in range(depth)}
    values = [normValue(L.p, e) for e in sorted(exponents, reverse=True)]
    return tuple(values + [normValue(L.p)])


def is_orthogonal_basis(L):
    """True when the norms of the basis vectors are the successive maxima."""
    return tuple(sorted(L.norms(), reverse=True)) == successive_maxima(L)


def _check_same_space(B1, B2):
    if B1.space != B2.space:
        raise InvalidParameterError("BASES LIVE IN DIFFERENT NORMED SPACES")


def change_of_basis(B1, B2):
    """Matrix C with B2 = C . B1, or None when the spans differ.

    Raises ``InvalidParameterError`` when the bases live in different spaces.
    """
    _check_same_space(B1, B2)
    if B1.m != B2.m:
        return None

    C = []
    for vector in B2.vectors:
        coefficients = B1.coordinates(vector)
        if coefficients is None:
            return None
        C.append(coefficients)
    return tuple(C)


def same_lattice(B1, B2):
    """True when ``B1`` and ``B2`` generate the same lattice.

    The change of basis must have entries in Z_p and a unit determinant.
    Bases of different ranks never span the same lattice.
    """
    C = change_of_basis(B1, B2)
    if C is None:
        return False
    if not all(in_Zp(B1.p, entry) for row in C for entry in row):
        return False
    return valuation(B1.p, determinant(C)) == 0


class elementaryOp:
    """One of the three operations connecting orthogonal bases of a lattice.

    ``scale_unit(i, k)``: alpha_i <- k alpha_i with k a p-adic unit.
    ``swap(i, j)``: exchange alpha_i and alpha_j.
    ``add_multiple(i, j, k)``: alpha_i <- alpha_i + k alpha_j with k in Z_p and
    N(k alpha_j) <= N(alpha_i).

    Indices are 0-based.
    """

    KINDS = ("scale_unit", "swap", "add_multiple")

    def __init__(self, kind, i, j=None, k=None):
        if kind not in self.KINDS:
            raise InvalidParameterError(f"UNKNOWN ELEMENTARY OPERATION {kind!r}")
        self.kind = kind
        self.i = i
        self.j = j
        self.k = None if k is None else Fraction(k)

    @classmethod
    def scale_unit(cls, i, k):
        return cls("scale_unit", i, k=k)

    @classmethod
    def swap(cls, i, j):
        return cls("swap", i, j=j)

    @classmethod
    def add_multiple(cls, i, j, k):
        return cls("add_multiple", i, j=j, k=k)

    def inverse(self):
        """The operation undoing this one."""
        if self.kind == "scale_unit":
            return elementaryOp.scale_unit(self.i, 1 / self.k)
        if self.kind == "swap":
            return self
        return elementaryOp.add_multiple(self.i, self.j, -self.k)

    def _key(self):
        return (self.kind, self.i, self.j, self.k)

    def __eq__(self, other):
        if not isinstance(other, elementaryOp):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        if self.kind == "scale_unit":
            return f"scale_unit({self.i}, {self.k})"
        if self.kind == "swap":
            return f"swap({self.i}, {self.j})"
        return f"add_multiple({self.i}, {self.j}, {self.k})"

    __repr__ = __str__

    def to_dict(self):
        entry = {"kind": self.kind, "i": self.i}
        if self.j is not None:
            entry["j"] = self.j
        if self.k is not None:
            entry["k"] = str(self.k)
        return entry


def _check_op(op, index, vectors, space):
    """Raise ``InvalidOperationError`` if ``op`` may not be applied to ``vectors``."""
    m = len(vectors)
    indices = [op.i] if op.kind == "scale_unit" else [op.i, op.j]
    if any(not isinstance(x, int) or not 0 <= x < m for x in indices):
        raise InvalidOperationError(index, op, f"INDEX OUT OF RANGE FOR RANK {m}")

    if op.kind == "scale_unit":
        if op.k == 0 or valuation(space.p, op.k) != 0:
            raise InvalidOperationError(index, op, "MULTIPLIER IS NOT A p-ADIC UNIT")
    elif op.kind == "add_multiple":
        if op.i == op.j:
            raise InvalidOperationError(index, op, "A VECTOR CAN NOT BE ADDED TO ITSELF")
        if not in_Zp(space.p, op.k):
            raise InvalidOperationError(index, op, "MULTIPLIER IS NOT IN Z_p")
        added = space.norm(vectors[op.j]).times_abs(op.k)
        if added > space.norm(vectors[op.i]):
            raise InvalidOperationError(
                index, op, "N(k alpha_j) EXCEEDS N(alpha_i)"
            )


def _apply_op(op, vectors):
    if op.kind == "scale_unit":
        vectors[op.i] = scale_vector(op.k, vectors[op.i])
    elif op.kind == "swap":
        vectors[op.i], vectors[op.j] = vectors[op.j], vectors[op.i]
    else:
        vectors[op.i] = add_vectors(vectors[op.i], scale_vector(op.k, vectors[op.j]))


def apply_ops(B, ops):
    """Apply elementary operations in order, checking each constraint.

    Parameters
    ----------
    B : latticeBasis
        Starting basis

    ops : list of elementaryOp
        Transcript to replay

    Returns
    -------
    transformed : latticeBasis
        The transformed basis
    """
    vectors = list(B.vectors)
    for index, op in enumerate(ops):
        _check_op(op, index, vectors, B.space)
        _apply_op(op, vectors)
    return B.with_vectors(vectors)


def elementary_transform(B1, B2):
    """Transcript of elementary operations turning ``B1`` into ``B2``.

    Both bases must be orthogonal bases of the same lattice. The change of
    basis C (B2 = C . B1) is reduced to the identity by row operations on the
    ``B2`` side, pivoting on the columns of ``B1`` in order of decreasing norm.
    The inverses of those operations, in reverse order, turn ``B1`` into
    ``B2``.

    Parameters
    ----------
    B1 : latticeBasis
        Orthogonal basis to start from

    B2 : latticeBasis
        Orthogonal basis of the same lattice

    Returns
    -------
    ops : list of elementaryOp
        Transcript with ``apply_ops(B1, ops) == B2``
    """
    if B1.space != B2.space:
        raise PreconditionError("BASES LIVE IN DIFFERENT NORMED SPACES")
    if not is_orthogonal_basis(B1) or not is_orthogonal_basis(B2):
        raise PreconditionError("BOTH BASES MUST BE N-ORTHOGONAL")
    if not same_lattice(B1, B2):
        raise PreconditionError("BASES DO NOT GENERATE THE SAME LATTICE")

    p = B1.p
    m = B1.m
    C = [list(row) for row in change_of_basis(B1, B2)]
    alpha_norms = B1.norms()
    order = sorted(range(m), key=lambda c: alpha_norms[c], reverse=True)

    reduction = []

    def swap_rows(a, b):
        C[a], C[b] = C[b], C[a]
        reduction.append(elementaryOp.swap(a, b))

    for position, column in enumerate(order):
        pivot_row = next(
            (r for r in range(position, m) if C[r][column] != 0
             and valuation(p, C[r][column]) == 0),
            None,
        )
        if pivot_row is None:
            raise PreconditionError(f"NO UNIT PIVOT FOR BASIS VECTOR {column}")
        if pivot_row != position:
            swap_rows(position, pivot_row)

        unit = C[position][column]
        if unit != 1:
            C[position] = [entry / unit for entry in C[position]]
            reduction.append(elementaryOp.scale_unit(position, 1 / unit))

        for row in range(m):
            factor = C[row][column]
            if row == position or factor == 0:
                continue
            C[row] = [a - factor * b for a, b in zip(C[row], C[position])]
            reduction.append(elementaryOp.add_multiple(row, position, -factor))

    # Row ``position`` now holds alpha_{order[position]}; restore basis order.
    current = list(order)
    for target in range(m):
        source = current.index(target)
        if source != target:
            current[source], current[target] = current[target], current[source]
            swap_rows(target, source)

    ops = [op.inverse() for op in reversed(reduction)]
    if apply_ops(B1, ops) != B2:
        raise PadicLatticeError("TRANSCRIPT DOES NOT REPRODUCE THE TARGET BASIS")
    return ops


class invariantReport:
    """Successive maxima, escape distance and norm ladder of a lattice.

    Parameters
    ----------
    maxima : sequence of normValue
        Successive maxima, non-increasing

    escape : normValue or None
        Escape distance, None unless the lattice is full rank

    ladder : sequence of normValue
        First values of the norm ladder, strictly decreasing
    """

    def __init__(self, maxima, escape, ladder):
        self.maxima = tuple(maxima)
        self.escape = escape
        self.ladder = tuple(ladder)

    @classmethod
    def from_maxima(cls, maxima, full_rank, ladder_length=DEFAULT_LADDER_LENGTH):
        maxima = tuple(sorted(maxima, reverse=True))
        escape = _escape_from_maxima(maxima) if full_rank else None
        return cls(maxima, escape, _ladder_from_maxima(maxima, ladder_length))

    @classmethod
    def from_dict(cls, entry, p):
        """Inverse of ``to_dict``."""
        escape = entry.get("escape")
        return cls(
            [normValue.parse(value, p) for value in entry["maxima"]],
            None if escape is None else normValue.parse(escape, p),
            [normValue.parse(value, p) for value in entry["ladder"]],
        )

    def __eq__(self, other):
        if not isinstance(other, invariantReport):
            return NotImplemented
        return (self.maxima, self.escape, self.ladder) == (
            other.maxima,
            other.escape,
            other.ladder,
        )

    def __repr__(self):
        return f"invariantReport({self.to_dict()})"

    def to_text(self):
        escape = "undefined: not full rank" if self.escape is None else str(self.escape)
        return "\n".join(
            [
                f"lambda~: {format_norms(self.maxima)}",
                f"mu: {escape}",
                f"ladder: {format_norms(self.ladder)}",
            ]
        )

    def to_dict(self):
        return {
            "maxima": [str(value) for value in self.maxima],
            "escape": None if self.escape is None else str(self.escape),
            "ladder": [str(value) for value in self.ladder],
        }


def invariant_report(L, ladder_length=DEFAULT_LADDER_LENGTH):
    """Build the invariantReport of ``L``."""
    return invariantReport.from_maxima(
        successive_maxima(L), L.m == L.n, ladder_length=ladder_length
    )


def random_unit(p, rng, size=3):
    """Random p-adic unit a/b with p dividing neither a nor b."""
    while True:
        numerator, denominator = (int(x) for x in rng.integers(1, p**size + 1, size=2))
        if numerator % p and denominator % p:
            break
    sign = -1 if rng.integers(0, 2) else 1
    return Fraction(sign * numerator, denominator)


def random_rational(p, rng, valuation_range):
    """Random nonzero rational with valuation in the inclusive range."""
    low, high = valuation_range
    return random_unit(p, rng) * Fraction(p) ** int(rng.integers(low, high + 1))


def random_vector(space, rng, valuation_range=(0, 4)):
    """Random vector whose frame coordinates have valuations in the range (or are 0)."""
    coordinates = [
        Fraction(0) if rng.integers(0, 4) == 0 else random_rational(space.p, rng, valuation_range)
        for _ in range(space.n)
    ]
    return space.from_frame_coordinates(coordinates)


def random_elementary_ops(basis, rng, count):
    """``count`` random elementary operations valid in sequence on ``basis``.

    AddMultiple multipliers get a valuation at least the gap between the two
    current norm exponents, so N(k alpha_j) <= N(alpha_i) holds by construction.
    """
    p = basis.p
    vectors = list(basis.vectors)
    norms = [basis.space.norm(v) for v in vectors]
    ops = []

    for _ in range(count):
        choice = int(rng.integers(0, 3)) if basis.m > 1 else 0
        if choice == 0:
            op = elementaryOp.scale_unit(int(rng.integers(0, basis.m)), random_unit(p, rng))
        else:
            i, j = (int(x) for x in rng.choice(basis.m, size=2, replace=False))
            if choice == 1:
                op = elementaryOp.swap(i, j)
            else:
                gap = max(0, math.ceil(norms[j].exponent - norms[i].exponent))
                shift = gap + int(rng.integers(0, 3))
                op = elementaryOp.add_multiple(i, j, random_unit(p, rng) * Fraction(p) ** shift)

        _apply_op(op, vectors)
        if op.kind == "swap":
            norms[op.i], norms[op.j] = norms[op.j], norms[op.i]
        else:
            norms[op.i] = basis.space.norm(vectors[op.i])
        ops.append(op)

    return ops


def rebase_basis(basis, rng, count):
    """Random re-basing of ``basis`` by unit scalings, swaps and Z_p shears.

    The shears carry no norm constraint, so the result spans the same lattice
    but is generally not orthogonal.
    """
    p = basis.p
    vectors = list(basis.vectors)
    for _ in range(count):
        if basis.m == 1:
            vectors[0] = scale_vector(random_unit(p, rng), vectors[0])
            continue
        i, j = (int(x) for x in rng.choice(basis.m, size=2, replace=False))
        kind = int(rng.integers(0, 3))
        if kind == 0:
            vectors[i] = scale_vector(random_unit(p, rng), vectors[i])
        elif kind == 1:
            vectors[i], vectors[j] = vectors[j], vectors[i]
        else:
            k = random_unit(p, rng) * Fraction(p) ** int(rng.integers(0, 3))
            vectors[i] = add_vectors(vectors[i], scale_vector(k, vectors[j]))
    return basis.with_vectors(vectors)


def random_weights(n, weight_spec, rng):
    """Weight exponents for a generated space."""
    if weight_spec not in WEIGHT_SPECS:
        raise InvalidParameterError(
            f"WEIGHT SPEC MUST BE ONE OF {', '.join(WEIGHT_SPECS)}, GOT {weight_spec!r}"
        )

    low, high = WEIGHT_RANGE
    if weight_spec == "zero":
        return [Fraction(0)] * n
    if weight_spec == "integer":
        return [Fraction(int(w)) for w in rng.integers(low, high + 1, size=n)]
    return [Fraction(int(w), 2) for w in rng.integers(2 * low, 2 * high + 1, size=n)]


def random_frame_matrix(n, rng):
    """Random invertible integer matrix with small entries."""
    while True:
        frame = as_matrix(rng.integers(-3, 4, size=(n, n)).tolist())
        if determinant(frame) != 0:
            return frame


def gen_instance(
    p,
    n,
    m,
    weight_spec="zero",
    valuation_range=(0, 4),
    seed=0,
    random_frame=False,
    ladder_length=DEFAULT_LADDER_LENGTH,
):
    """Seeded lattice instance with exactly known invariants.

    A diagonal basis p**d_i * e_sigma(i) of known norms is scrambled with
    valid elementary operations and then re-based by random Z_p shears.

    Parameters
    ----------
    p : int
        Prime

    n : int
        Dimension of the space

    m : int
        Rank of the lattice, 1 <= m <= n

    weight_spec : str
        One of "zero", "integer" or "half"

    valuation_range : tuple of int
        Inclusive range of the diagonal valuations d_i

    seed : int
        Seed of the numpy random generator

    random_frame : bool
        Use a random invertible frame instead of the identity

    ladder_length : int
        Number of ladder values in the ground truth report

    Returns
    -------
    space : padic_lattice_tool.norms.normedSpace
        Generated space

    basis : latticeBasis
        Scrambled lattice basis

    ground_truth : invariantReport
        Invariants known from the construction
    """
    check_prime(p)
    if not 1 <= m <= n:
        raise InvalidParameterError(f"RANK MUST SATISFY 1 <= m <= n, GOT m={m}, n={n}")
    low, high = valuation_range
    if low > high:
        raise InvalidParameterError(f"EMPTY VALUATION RANGE {valuation_range}")

    rng = np.random.default_rng(seed)
    weights = random_weights(n, weight_spec, rng)
    frame = random_frame_matrix(n, rng) if random_frame else identity_matrix(n)
    space = make_space(p, frame, weights)

    axes = [int(axis) for axis in rng.permutation(n)[:m]]
    diagonal = [int(d) for d in rng.integers(low, high + 1, size=m)]
    vectors = [
        scale_vector(Fraction(p) ** d, space.frame[axis]) for axis, d in zip(axes, diagonal)
    ]
    maxima = [normValue(p, weights[axis] - d) for axis, d in zip(axes, diagonal)]

    basis = latticeBasis(space, vectors)
    basis = apply_ops(basis, random_elementary_ops(basis, rng, 2 * m + 2))
    basis = rebase_basis(basis, rng, m + 1)

    ground_truth = invariantReport.from_maxima(maxima, m == n, ladder_length=ladder_length)
    return space, basis, ground_truth


def difference_norm(space, v, w):
    """N(v - w)."""
    return space.norm(subtract_vectors(as_vector(v), as_vector(w)))
