"""Closest and longest vector solvers for p-adic lattices.

``cvp_with_frame`` and ``lvp_with_frame`` run in polynomial time on top of the
frame orthogonalization. ``cvpOrthogonalizer`` builds an orthogonal basis
from any exact CVP oracle. ``brute_cvp`` and ``brute_lambda2`` are
independent enumeration oracles whose answers carry an ultrametric
certificate: coefficients are enumerated modulo powers of p just deep enough
that the remaining perturbations can no longer change the reported norm.

Authors
-------
    - Mario Gennaro
    - Mees Fix

Use
---
    This module can be used as follows:

    >>> from padic_lattice_tool.solvers import brute_cvp, cvp_with_frame
    >>> solution = cvp_with_frame(basis, target)
    >>> solution.distance == brute_cvp(basis, target).distance
    True
"""

from fractions import Fraction
from functools import partial
import math

import numpy as np

from padic_lattice_tool.constants import ENUMERATION_CHUNK, ORACLE_START_DEPTH
from padic_lattice_tool.errors import (
    OracleBudgetError,
    PadicLatticeError,
    RankError,
)
from padic_lattice_tool.lattice import (
    difference_norm,
    frameElimination,
    latticeBasis,
    orthogonalize_with_frame,
)
from padic_lattice_tool.norms import normValue
from padic_lattice_tool.padic_core import (
    in_Zp,
    is_zero_vector,
    linear_combination,
    scale_vector,
    subtract_vectors,
    valuation,
    zero_vector,
)
from padic_lattice_tool.utils import format_vector, get_oracle_budget

SENTINEL = np.iinfo(np.int64).min


class cvpSolution:
    """A closest lattice vector to a target.

    Parameters
    ----------
    vector : tuple
        Lattice vector, the sum of ``coefficients[i]`` times basis vector i

    coefficients : tuple
        Coefficients in Z_p with respect to the input basis

    distance : normValue
        N(target - vector)
    """

    def __init__(self, vector, coefficients, distance):
        self.vector = tuple(vector)
        self.coefficients = tuple(coefficients)
        self.distance = distance

    def to_text(self):
        return "\n".join(
            [
                f"vector: {format_vector(self.vector)}",
                f"coefficients: {format_vector(self.coefficients)}",
                f"distance: {self.distance}",
            ]
        )

    def to_dict(self):
        return {
            "vector": [str(entry) for entry in self.vector],
            "coefficients": [str(entry) for entry in self.coefficients],
            "distance": str(self.distance),
        }


class lvpSolution:
    """A lattice vector of norm lambda_2, the largest norm below lambda_1."""

    def __init__(self, vector, norm):
        self.vector = tuple(vector)
        self.norm = norm

    def to_text(self):
        return "\n".join([f"vector: {format_vector(self.vector)}", f"norm: {self.norm}"])

    def to_dict(self):
        return {"vector": [str(entry) for entry in self.vector], "norm": str(self.norm)}


def cvp_with_frame(L, t):
    """Closest vector of ``t`` in the lattice ``L``.

    The lattice is orthogonalized with the frame, then the target is reduced
    one pivot column at a time until its norm exceeds the norm of the next
    orthogonal basis vector or it vanishes.

    Parameters
    ----------
    L : padic_lattice_tool.lattice.latticeBasis
        Lattice basis

    t : sequence
        Target vector of the space's dimension

    Returns
    -------
    solution : cvpSolution
        A minimizer of N(t - w) over the lattice and its distance
    """
    space = L.space
    t = space.check_vector(t)
    elimination = frameElimination(L).run()

    residual = list(space.frame_coordinates(t))
    orthogonal_coefficients = [Fraction(0)] * L.m
    for i, row in enumerate(elimination.rows):
        if all(entry == 0 for entry in residual):
            break
        if space.norm_from_coordinates(residual) > elimination.row_norm(i):
            break

        pivot_column = elimination.columns[i]
        factor = residual[pivot_column] / row[pivot_column]
        if factor == 0:
            continue
        residual = [a - factor * b for a, b in zip(residual, row)]
        orthogonal_coefficients[i] = factor

    coefficients = linear_combination(orthogonal_coefficients, elimination.transform)
    vector = linear_combination(coefficients, L.vectors)
    return cvpSolution(vector, coefficients, difference_norm(space, t, vector))


def lvp_with_frame(L):
    """A lattice vector whose norm is lambda_2.

    With an orthogonal basis sorted by decreasing norm, lambda_2 is the larger
    of N(p alpha_1) and the first norm strictly below N(alpha_1). When all
    orthogonal norms are equal the answer is p alpha_1.

    Parameters
    ----------
    L : padic_lattice_tool.lattice.latticeBasis
        Lattice basis

    Returns
    -------
    solution : lvpSolution
        Lattice vector of norm lambda_2
    """
    elimination = frameElimination(L).advance()
    first_norm = elimination.row_norm(0)
    longest = scale_vector(L.p, elimination.vector(0))

    # Rows fixed so far all have norm lambda_1; stop at the first shorter one.
    while not elimination.done:
        i = elimination.step
        elimination.select_longest(i)
        norm = elimination.row_norm(i)
        if norm < first_norm:
            if L.space.norm(longest) > norm:
                break
            return lvpSolution(elimination.vector(i), norm)
        elimination.advance()

    return lvpSolution(longest, L.space.norm(longest))


class cvpOrthogonalizer:
    """Orthogonalization driven by a CVP oracle.

    Each round fixes the longest remaining vector (lowest index on ties) and
    replaces every remaining vector by its difference with the closest vector
    of the lattice spanned by the fixed vectors.

    Parameters
    ----------
    basis : padic_lattice_tool.lattice.latticeBasis
        Lattice basis

    cvp : callable
        Exact CVP oracle ``cvp(lattice, target) -> cvpSolution``
    """

    def __init__(self, basis, cvp=None):
        self.basis_in = basis
        self.cvp = cvp_with_frame if cvp is None else cvp
        self.oracle_calls = 0
        self.trace = []
        self.basis = None

    def run(self):
        space = self.basis_in.space
        remaining = list(self.basis_in.vectors)
        fixed = []

        while remaining:
            norms = [space.norm(vector) for vector in remaining]
            fixed.append(remaining.pop(norms.index(max(norms))))
            if not remaining:
                break

            sublattice = latticeBasis(space, fixed, check=False)
            reduced = []
            for vector in remaining:
                solution = self.cvp(sublattice, vector)
                self.oracle_calls += 1
                difference = subtract_vectors(vector, solution.vector)
                self.trace.append(
                    (space.norm(vector), solution.distance, space.norm(difference))
                )
                reduced.append(difference)
            remaining = reduced

        self.basis = self.basis_in.with_vectors(fixed)
        return self


def orthogonalize_via_cvp(basis, cvp=None):
    """Orthogonal basis of ``basis``'s lattice using a CVP oracle (frame CVP by default)."""
    return cvpOrthogonalizer(basis, cvp).run().basis


def frame_cvp_oracle():
    """CVP oracle backed by ``cvp_with_frame``."""
    return cvp_with_frame


def brute_cvp_oracle(budget=None):
    """CVP oracle backed by ``brute_cvp`` with a fixed budget."""
    return partial(brute_cvp, budget=budget)


class coefficientEnumerator:
    """Exponents of N(t - sum c_i alpha_i) for coefficient tuples, vectorized.

    At threshold ``theta`` coefficient i is known modulo p**K_i, K_i being the
    smallest depth with N(p**K_i alpha_i) <= p**theta. Exponents above
    ``theta`` are exact for the whole residue class and are reported scaled
    by the common denominator ``scale`` of the weights and ``theta``. Classes
    whose exponent is at most ``theta`` are reported as ``SENTINEL``.

    Parameters
    ----------
    basis : padic_lattice_tool.lattice.latticeBasis
        Lattice basis

    target : tuple
        Target vector (the zero vector for norms of lattice vectors)
    """

    def __init__(self, basis, target):
        space = basis.space
        self.p = basis.p
        self.m = basis.m
        self.weights = space.weights
        self.norm_exponents = [norm.exponent for norm in basis.norms()]

        self.rows = [space.frame_coordinates(vector) for vector in basis.vectors]
        self.target = space.frame_coordinates(target)
        self.denominator = math.lcm(
            *(entry.denominator for row in self.rows + [self.target] for entry in row)
        )
        self.shift = valuation(self.p, self.denominator)
        self.set_threshold(max(self.norm_exponents))

    def depths(self, theta):
        return [max(0, math.ceil(e - theta)) for e in self.norm_exponents]

    def set_threshold(self, theta):
        """Precompute the residues of every frame axis that can exceed ``theta``."""
        p = self.p
        self.theta = theta
        self.scale = math.lcm(theta.denominator, *(w.denominator for w in self.weights))

        self.columns = []
        for j, weight in enumerate(self.weights):
            precision = math.ceil(weight + self.shift - theta)
            if precision <= 0:
                continue
            modulus = p**precision
            dtype = np.int64 if self.m * modulus**2 < 2**62 else object
            target_residue = int(self.target[j] * self.denominator) % modulus
            row_residues = np.array(
                [int(row[j] * self.denominator) % modulus for row in self.rows], dtype=dtype
            )
            base = int((weight + self.shift) * self.scale)
            self.columns.append((precision, modulus, dtype, target_residue, row_residues, base))

    def exponents(self, coefficients):
        """Scaled exponents for a (k, m) array of coefficient tuples."""
        result = np.full(len(coefficients), SENTINEL, dtype=np.int64)
        for precision, modulus, dtype, target_residue, row_residues, base in self.columns:
            c = coefficients.astype(object) if dtype is object else coefficients
            c = (c % modulus).astype(dtype)
            residue = (target_residue - c.dot(row_residues)) % modulus

            nonzero = np.asarray(residue != 0, dtype=bool)
            v = np.zeros(len(coefficients), dtype=np.int64)
            for _ in range(precision - 1):
                divisible = nonzero & np.asarray(residue % self.p == 0, dtype=bool)
                if not divisible.any():
                    break
                v += divisible
                residue = np.where(divisible, residue // self.p, residue)

            column = np.where(nonzero, base - self.scale * v, SENTINEL).astype(np.int64)
            result = np.maximum(result, column)
        return result

    def refinement_count(self, frontier, old_depths, new_depths):
        extras = [self.p ** (new - old) for new, old in zip(new_depths, old_depths)]
        return len(frontier) * math.prod(extras)

    def refine(self, frontier, old_depths, new_depths):
        """Yield chunks of every lift of the frontier classes to the new depths."""
        p = self.p
        extras = tuple(p ** (new - old) for new, old in zip(new_depths, old_depths))
        count = math.prod(extras)
        total = len(frontier) * count

        dtype = object if p ** max(new_depths) >= 2**62 else np.int64
        frontier = np.asarray(frontier).astype(dtype)
        steps = np.array([p**old for old in old_depths], dtype=dtype)

        for start in range(0, total, ENUMERATION_CHUNK):
            indices = np.arange(start, min(start + ENUMERATION_CHUNK, total))
            digits = np.stack(np.unravel_index(indices % count, extras), axis=1).astype(dtype)
            yield frontier[indices // count] + digits * steps

    def norm_value(self, scaled):
        return normValue(self.p, Fraction(int(scaled), self.scale))


def _check_budget(budget, evaluated, count, bound):
    if evaluated + count > budget:
        raise OracleBudgetError(budget, evaluated, bound)


def _lexicographic_first(rows):
    """Lexicographically smallest coefficient row, as Fractions."""
    return min(tuple(Fraction(int(c)) for c in row) for row in rows)


def brute_cvp(L, t, budget=None):
    """Exact closest vector by enumeration with iterative deepening.

    At depth K every coefficient is known modulo the power of p that bounds
    the remaining perturbation by p**theta, theta = top - K with top the
    largest basis norm exponent. A class whose distance exceeds p**theta is
    settled: no refinement changes its distance. While some class is still
    within p**theta of the target only those classes can contain a closest
    vector, so only they are refined at the next depth.

    Parameters
    ----------
    L : padic_lattice_tool.lattice.latticeBasis
        Lattice basis

    t : sequence
        Target vector

    budget : int or None
        Maximum number of coefficient tuples, ``get_oracle_budget()`` if None

    Returns
    -------
    solution : cvpSolution
        Minimizer, lexicographically first among the optimal representatives
    """
    space = L.space
    t = space.check_vector(t)
    budget = get_oracle_budget() if budget is None else budget

    coefficients = L.coordinates(t)
    if coefficients is not None and all(in_Zp(L.p, c) for c in coefficients):
        return cvpSolution(t, coefficients, space.zero_norm())

    enumerator = coefficientEnumerator(L, t)
    top = max(enumerator.norm_exponents)
    frontier = np.zeros((1, L.m), dtype=np.int64)
    old_depths = [0] * L.m
    evaluated, bound = 0, None
    depth = ORACLE_START_DEPTH

    while True:
        theta = top - depth
        enumerator.set_threshold(theta)
        new_depths = enumerator.depths(theta)
        count = enumerator.refinement_count(frontier, old_depths, new_depths)
        _check_budget(budget, evaluated, count, bound)

        best_value, best_rows, unsettled_rows = None, [], []
        for chunk in enumerator.refine(frontier, old_depths, new_depths):
            values = enumerator.exponents(chunk)
            evaluated += len(values)
            unsettled = values == SENTINEL
            if unsettled.any():
                unsettled_rows.append(chunk[unsettled])
            if unsettled_rows:
                continue
            chunk_best = int(values.min())
            if best_value is None or chunk_best < best_value:
                best_value, best_rows = chunk_best, []
            if chunk_best == best_value:
                best_rows.append(chunk[values == chunk_best])

        if not unsettled_rows:
            coefficients = _lexicographic_first(np.concatenate(best_rows))
            vector = linear_combination(coefficients, L.vectors)
            return cvpSolution(vector, coefficients, difference_norm(space, t, vector))

        frontier, old_depths = np.concatenate(unsettled_rows), new_depths
        bound = normValue(L.p, theta)
        depth += 1


def brute_lambda2(L, budget=None):
    """Exact lambda_2 by enumeration of coefficients modulo p**2 (or less).

    p alpha for a longest basis vector alpha shows lambda_2 >= lambda_1 / p,
    and every lattice norm above lambda_1 / p**2 is attained by a
    representative of the enumerated classes.

    Parameters
    ----------
    L : padic_lattice_tool.lattice.latticeBasis
        Lattice basis

    budget : int or None
        Maximum number of coefficient tuples, ``get_oracle_budget()`` if None

    Returns
    -------
    solution : lvpSolution
        Lattice vector of norm lambda_2, lexicographically first representative
    """
    budget = get_oracle_budget() if budget is None else budget
    enumerator = coefficientEnumerator(L, zero_vector(L.n))
    top = max(enumerator.norm_exponents)
    theta = top - 2
    enumerator.set_threshold(theta)

    frontier = np.zeros((1, L.m), dtype=np.int64)
    old_depths = [0] * L.m
    new_depths = enumerator.depths(theta)
    _check_budget(budget, 0, enumerator.refinement_count(frontier, old_depths, new_depths), None)

    ceiling = int(top * enumerator.scale)
    best_value, best_rows = None, []
    for chunk in enumerator.refine(frontier, old_depths, new_depths):
        values = enumerator.exponents(chunk)
        values = np.where(values < ceiling, values, SENTINEL)
        chunk_best = int(values.max())
        if chunk_best == SENTINEL:
            continue
        if best_value is None or chunk_best > best_value:
            best_value, best_rows = chunk_best, []
        if chunk_best == best_value:
            best_rows.append(chunk[values == chunk_best])

    if best_value is None:
        raise PadicLatticeError("NO LATTICE NORM FOUND BELOW lambda_1")

    coefficients = _lexicographic_first(np.concatenate(best_rows))
    vector = linear_combination(coefficients, L.vectors)
    return lvpSolution(vector, L.space.norm(vector))


def verify_cvp(L, t, solution, budget=None):
    """True when ``solution`` is a lattice vector at the brute force distance of ``t``."""
    t = L.space.check_vector(t)
    if not L.contains(solution.vector):
        return False
    if difference_norm(L.space, t, solution.vector) != solution.distance:
        return False
    return brute_cvp(L, t, budget=budget).distance == solution.distance


def verify_lvp(L, solution, budget=None):
    """True when ``solution`` is a lattice vector of the brute force lambda_2."""
    if is_zero_vector(solution.vector) or not L.contains(solution.vector):
        return False
    if L.space.norm(solution.vector) != solution.norm:
        return False
    return brute_lambda2(L, budget=budget).norm == solution.norm


def escape_distance_by_cvp(L, cvp=None):
    """Escape distance as the smallest CVP distance of p**-1 beta_j to ``L``.

    The beta_j are the vectors of an orthogonal basis of the full rank
    lattice ``L``.
    """
    if L.m != L.n:
        raise RankError(
            f"ESCAPE DISTANCE NEEDS A FULL RANK LATTICE, RANK {L.m} IN DIMENSION {L.n}"
        )

    cvp = cvp_with_frame if cvp is None else cvp
    orthogonal = orthogonalize_with_frame(L)
    return min(
        cvp(L, scale_vector(Fraction(1, L.p), vector)).distance
        for vector in orthogonal.vectors
    )
