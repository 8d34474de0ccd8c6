"""Evaluation codes on projective point sets: generator matrices indexed by
standard monomials, subcode validation, codeword supports, and brute-force
relative generalized Hamming weights by subspace enumeration."""

from __future__ import annotations

import numpy as np

from .groebner import Ideal
from .linalg import (
    gaussian_binomial,
    iter_subspace_batches,
    kernel_basis,
    matrix_rank,
    projective_reps,
    rref,
)
from .points import ProjectivePointSet, evaluation_matrix
from .polyring import GREVLEX, MonomialOrder, PolyRing, Polynomial


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would visit more candidates than allowed."""

    def __init__(self, needed: int, budget: int):
        super().__init__(
            f"enumeration needs {needed} candidates, budget is {budget}"
        )
        self.needed = needed
        self.budget = budget


class DependentSubcodeError(ValueError):
    """Raised for generator lists whose evaluations are linearly dependent;
    carries a nonzero coefficient vector witnessing the dependency."""

    def __init__(self, witness):
        super().__init__(f"dependent generators, witness combination {witness}")
        self.witness = tuple(witness)


class EvaluationCode:
    """The image of the degree-d slice of S/I_X under evaluation at X.

    Rows of generator_rows evaluate the degree-d standard monomials, listed
    in decreasing monomial order so that echelon pivots line up with leading
    monomials.  k = number of standard monomials = rank, n = |X|.
    """

    def __init__(self, X: ProjectivePointSet, d: int, order: MonomialOrder = GREVLEX):
        if d < 1:
            raise ValueError(f"degree must be at least 1, got {d}")
        self.X = X
        self.d = d
        self.order = order
        self.ideal = X.vanishing_ideal(order)
        self.ring = self.ideal.ring
        self.standard_monomials = order.sorted(self.ideal.footprint_slice(d), reverse=True)
        self.generator_rows = evaluation_matrix(X, self.standard_monomials)
        self.k = len(self.standard_monomials)
        self.n = len(X)
        assert matrix_rank(self.generator_rows, self.q) == self.k

    @property
    def q(self) -> int:
        return self.X.field.q

    def coefficients_to_polynomial(self, coeffs) -> Polynomial:
        field = self.X.field
        return self.ring.from_terms(
            {
                m: field(int(c))
                for m, c in zip(self.standard_monomials, coeffs)
                if int(c) % field.q
            }
        )

    def polynomial_to_coefficients(self, poly: Polynomial) -> np.ndarray:
        """Coefficient vector of the normal form over the standard-monomial
        coordinates; rejects polynomials of the wrong degree."""
        nf = self.ideal.normal_form(poly)
        out = np.zeros(self.k, dtype=np.int64)
        index = {m: i for i, m in enumerate(self.standard_monomials)}
        for mono, coeff in nf.terms.items():
            if mono not in index:
                raise ValueError(
                    f"{poly.format()} is not homogeneous of degree {self.d} modulo the ideal"
                )
            out[index[mono]] = coeff.value
        return out

    def __repr__(self) -> str:
        return f"EvaluationCode(n={self.n}, k={self.k}, d={self.d}, q={self.q})"


def build_code(X: ProjectivePointSet, d: int, order: MonomialOrder = GREVLEX) -> EvaluationCode:
    return EvaluationCode(X, d, order)


class SubcodeSpec:
    """A validated independent generator list for the subcode: the original
    polynomials, echelon-normalized representatives with distinct leading
    monomials, their coefficient rows, and their evaluation rows."""

    def __init__(self, code: EvaluationCode, polynomials, normalized_coeffs: np.ndarray):
        self.code = code
        self.polynomials = tuple(polynomials)
        self.coeff_rows = normalized_coeffs
        self.k1 = normalized_coeffs.shape[0]
        self.normalized = tuple(
            code.coefficients_to_polynomial(row) for row in normalized_coeffs
        )
        self.rows = (
            evaluation_matrix(code.X, self.normalized)
            if self.k1
            else np.zeros((0, code.n), dtype=np.int64)
        )

    def leading_monomials(self):
        return tuple(
            p.leading_monomial(self.code.order) for p in self.normalized
        )

    def __repr__(self) -> str:
        inner = ", ".join(p.format(self.code.order) for p in self.normalized)
        return f"SubcodeSpec(k1={self.k1}, [{inner}])"


def validate_subcode(code: EvaluationCode, polynomials) -> SubcodeSpec:
    """Checks the generators are homogeneous of the code degree with
    independent evaluations, and produces echelon representatives."""
    polys = list(polynomials)
    q = code.q
    if not polys:
        return SubcodeSpec(code, (), np.zeros((0, code.k), dtype=np.int64))
    coeff_rows = []
    for p in polys:
        if not isinstance(p, Polynomial):
            raise ValueError(f"expected a polynomial, got {type(p).__name__}")
        if p.is_zero() or not p.is_homogeneous() or p.degree() != code.d:
            raise ValueError(
                f"subcode generator {p.format()} is not homogeneous of degree {code.d}"
            )
        coeff_rows.append(code.polynomial_to_coefficients(p))
    A = np.array(coeff_rows, dtype=np.int64)
    if matrix_rank(A, q) < len(polys):
        witness = kernel_basis(A.T, q)[0]
        raise DependentSubcodeError(witness.tolist())
    if len(polys) > code.k:
        raise ValueError(f"more generators than the code dimension {code.k}")
    reduced, _ = rref(A, q)
    return SubcodeSpec(code, polys, reduced)


def subspace_support(rows, q: int) -> int:
    """Support size of the row space: coordinates where some row is nonzero.
    The rows must be an independent basis."""
    rows = np.asarray(rows, dtype=np.int64) % q
    if rows.ndim != 2 or rows.shape[0] == 0:
        raise ValueError("need a nonempty list of rows")
    if matrix_rank(rows, q) < rows.shape[0]:
        raise ValueError("dependent basis rows")
    return int((rows.any(axis=0)).sum())


def _reduce_rows_mod_subcode(Z: np.ndarray, sub_rref: np.ndarray, pivots, q: int) -> np.ndarray:
    """Eliminate the subcode's pivot coordinates from every row of every
    batch entry; the result is zero exactly on combinations lying in the
    subcode."""
    out = Z.copy()
    for row_idx, col in enumerate(pivots):
        factor = out[:, :, col]
        out = (out - factor[:, :, None] * sub_rref[row_idx][None, None, :]) % q
    return out


def rghw_bruteforce(
    code: EvaluationCode, sub: SubcodeSpec, r: int, budget: int = 10**7
) -> int:
    """Minimum support size over all r-dimensional subcodes D of C with
    D meeting the fixed subcode only in zero, by exhaustive enumeration of
    echelon-canonical bases."""
    k, n, q = code.k, code.n, code.q
    k1 = sub.k1
    if not 1 <= r <= k - k1:
        raise ValueError(f"rank r={r} outside [1, {k - k1}]")
    total = gaussian_binomial(k, r, q)
    if total > budget:
        raise BudgetExceededError(total, budget)
    gen = code.generator_rows
    if k1:
        sub_rref, sub_pivots = rref(sub.rows, q)
        combos = projective_reps(r, q)
    best = None
    for batch in iter_subspace_batches(k, r, q):
        Z = np.matmul(batch, gen) % q
        if k1:
            reduced = _reduce_rows_mod_subcode(Z, sub_rref, sub_pivots, q)
            mixed = np.einsum("ck,bkn->bcn", combos, reduced) % q
            feasible = ~((mixed == 0).all(axis=2).any(axis=1))
        else:
            feasible = np.ones(Z.shape[0], dtype=bool)
        if not feasible.any():
            continue
        supports = (Z[feasible] != 0).any(axis=1).sum(axis=1)
        m = int(supports.min())
        if best is None or m < best:
            best = m
    assert best is not None, "no feasible subspace despite r <= k - k1"
    return best


def singleton_bound(code: EvaluationCode, sub: SubcodeSpec, r: int) -> int:
    """n - k + r, an upper bound for the r-th relative weight."""
    if not 1 <= r <= code.k - sub.k1:
        raise ValueError(f"rank r={r} outside [1, {code.k - sub.k1}]")
    return code.n - code.k + r
