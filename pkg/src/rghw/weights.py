"""The three weight functions on a degree-d slice: the footprint lower bound
from monomial subsets of the initial ideal, and the two subspace-enumeration
functions (degree-drop maximization and colon-degree minimization) that both
compute the relative generalized Hamming weight for vanishing ideals."""

from __future__ import annotations

import numpy as np

from .codes import (
    BudgetExceededError,
    EvaluationCode,
    SubcodeSpec,
    validate_subcode,
)
from .groebner import Ideal
from .linalg import gaussian_binomial, iter_subspace_batches, projective_reps
from .monideal import FootprintRays, MonomialIdeal
from .points import zero_set
from .polyring import Monomial, Polynomial


class WeightQuery:
    """A validated (d, r, k1, G) tuple bound to a code: r must lie in
    [1, k - k1] for the code's dimension k."""

    def __init__(self, code: EvaluationCode, r: int, subcode: SubcodeSpec | None = None):
        if subcode is None:
            subcode = validate_subcode(code, [])
        if subcode.code is not code:
            raise ValueError("subcode was validated against a different code")
        if not 1 <= r <= code.k - subcode.k1:
            raise ValueError(f"rank r={r} outside [1, {code.k - subcode.k1}]")
        self.code = code
        self.d = code.d
        self.r = r
        self.k1 = subcode.k1
        self.subcode = subcode

    def __repr__(self) -> str:
        return f"WeightQuery(d={self.d}, r={self.r}, k1={self.k1})"


class FootprintProfile:
    """Shared depth-first scan over admissible monomial subsets of the
    degree-d footprint slice, recording for every size r both the number of
    admissible subsets and the largest degree of S modulo the enlarged
    initial ideal."""

    def __init__(self, ideal: Ideal, d: int, rmax: int | None = None):
        self.ideal = ideal
        self.d = d
        initial = ideal.initial_ideal()
        self.pool = ideal.order.sorted(ideal.footprint_slice(d), reverse=True)
        self.total_degree = ideal.degree()
        rmax = len(self.pool) if rmax is None else min(rmax, len(self.pool))
        self.rmax = rmax
        self.counts = [0] * (rmax + 1)
        self.best = [None] * (rmax + 1)
        if not self.pool or rmax < 1:
            return
        engine = FootprintRays(initial)
        witness = [engine.witness_mask(m) for m in self.pool]
        survival = [engine.survival_mask(m) for m in self.pool]
        full = (1 << len(engine.ray_cells)) - 1
        fallback_cache: dict[tuple, int] = {}

        def degree_of(chosen, survivors):
            if survivors:
                return survivors.bit_count()
            key = initial.add([self.pool[i] for i in chosen]).gens
            if key not in fallback_cache:
                fallback_cache[key] = engine.sum_degree(
                    [self.pool[i] for i in chosen], survivors
                )
            return fallback_cache[key]

        chosen: list[int] = []

        def walk(start, wmask, smask):
            size = len(chosen)
            for i in range(start, len(self.pool)):
                w = wmask & witness[i]
                if w == 0:
                    continue
                chosen.append(i)
                s = smask & survival[i]
                value = degree_of(chosen, s)
                self.counts[size + 1] += 1
                if self.best[size + 1] is None or value > self.best[size + 1]:
                    self.best[size + 1] = value
                if size + 1 < rmax:
                    walk(i + 1, w, s)
                chosen.pop()

        walk(0, -1, full)

    def value(self, r: int) -> int:
        """fp at rank r: degree drop against the best admissible subset, or
        the full degree when no subset of size r is admissible."""
        if r < 1:
            raise ValueError(f"rank must be positive, got {r}")
        if r > self.rmax or self.best[r] is None:
            return self.total_degree
        return self.total_degree - self.best[r]

    def candidate_count(self, r: int) -> int:
        return self.counts[r] if 1 <= r <= self.rmax else 0


def rgff(ideal_or_query, d: int | None = None, r: int | None = None) -> int:
    """Footprint lower bound fp(d, r) for a graded ideal, from the maximal
    degree drop over admissible monomial subsets of the degree-d footprint.
    Accepts either (ideal, d, r) or a WeightQuery."""
    if isinstance(ideal_or_query, WeightQuery):
        query = ideal_or_query
        profile = FootprintProfile(query.code.ideal, query.d, query.r)
        return profile.value(query.r)
    if d is None or r is None:
        raise ValueError("rgff needs d and r when called with an ideal")
    return FootprintProfile(ideal_or_query, d, r).value(r)


class CandidateScan:
    """One pass over all echelon-canonical r-dimensional coefficient
    subspaces, filtered by independence from the subcode, collecting the
    vanishing-count aggregates both weight functions reduce over."""

    def __init__(self, query: WeightQuery, budget: int = 10**7):
        code = query.code
        k, n, q, r = code.k, code.n, code.q, query.r
        total = gaussian_binomial(k, r, q)
        if total > budget:
            raise BudgetExceededError(total, budget)
        sub = query.subcode
        combos = projective_reps(r, q) if sub.k1 else None
        pivots = None
        if sub.k1:
            pivots = [int(np.argmax(row != 0)) for row in sub.coeff_rows]
        family_count = 0
        max_vanishing = 0
        min_nonvanishing = None
        rows = code.generator_rows
        for batch in iter_subspace_batches(k, r, q, max_batch=1 << 14):
            if sub.k1:
                reduced = batch.copy()
                for row_idx, col in enumerate(pivots):
                    factor = reduced[:, :, col]
                    reduced = (
                        reduced - factor[:, :, None] * sub.coeff_rows[row_idx][None, None, :]
                    ) % q
                mixed = np.einsum("ck,bkj->bcj", combos, reduced) % q
                independent = ~((mixed == 0).all(axis=2).any(axis=1))
            else:
                independent = np.ones(batch.shape[0], dtype=bool)
            Z = np.matmul(batch, rows) % q
            vanishing = (Z == 0).all(axis=1).sum(axis=1)
            admissible = independent & (vanishing > 0)
            family_count += int(admissible.sum())
            if admissible.any():
                max_vanishing = max(max_vanishing, int(vanishing[admissible].max()))
                live = int((n - vanishing[admissible]).min())
                if min_nonvanishing is None or live < min_nonvanishing:
                    min_nonvanishing = live
        self.family_count = family_count
        self.max_vanishing = max_vanishing
        self.min_nonvanishing = min_nonvanishing


def rgmdf(query: WeightQuery, budget: int = 10**7) -> int:
    """Degree-drop weight: deg(S/I) minus the largest vanishing-set size over
    admissible subspaces; deg(S/I) itself when no subspace is admissible."""
    scan = CandidateScan(query, budget)
    degree = query.code.ideal.degree()
    if scan.family_count == 0:
        return degree
    return degree - scan.max_vanishing


def vasconcelos(query: WeightQuery, budget: int = 10**7) -> int:
    """Colon-degree weight: the smallest count of points left alive by an
    admissible subspace; deg(S/I) when no subspace is admissible."""
    scan = CandidateScan(query, budget)
    if scan.min_nonvanishing is None:
        return query.code.ideal.degree()
    return scan.min_nonvanishing


def candidate_membership_check(code: EvaluationCode, items):
    """Admissibility test with a witness.

    For polynomials: whether the common zero set on X is nonempty; the
    witness is its first point.  For monomials: whether coloning the initial
    ideal by the set enlarges it; the witness is a standard monomial landing
    inside the initial ideal under every member."""
    items = list(items)
    if not items:
        raise ValueError("empty candidate set")
    if all(isinstance(m, Monomial) for m in items):
        initial = code.ideal.initial_ideal()
        engine = FootprintRays(initial)
        acc = -1
        for m in items:
            acc &= engine.witness_mask(m)
        if acc == 0:
            return False, None
        low = (acc & -acc).bit_length() - 1
        return True, Monomial(engine.witness_cells[low])
    if all(isinstance(p, Polynomial) for p in items):
        V = zero_set(code.X, items)
        if V:
            return True, V[0]
        return False, None
    raise ValueError("mix of monomials and polynomials in candidate set")


def full_space_rgmdf(code: EvaluationCode, query: WeightQuery, budget: int = 10**7) -> int:
    """Oracle variant of rgmdf over subspaces of the entire degree-d
    coefficient space (not just standard polynomials): used to confirm that
    restricting to standard polynomials never changes the maximum."""
    ring = code.ring
    q = code.q
    monomials = code.order.sorted(ring.monomials_of_degree(code.d), reverse=True)
    N = len(monomials)
    r = query.r
    total = gaussian_binomial(N, r, q)
    if total > budget:
        raise BudgetExceededError(total, budget)
    from .points import evaluation_matrix

    rows = evaluation_matrix(code.X, monomials)
    # coefficient rows of the normal forms, for independence-mod-I tests
    nf_rows = np.zeros((N, code.k), dtype=np.int64)
    for i, m in enumerate(monomials):
        nf_rows[i] = code.polynomial_to_coefficients(ring.from_terms({m: code.X.field(1)}))
    sub = query.subcode
    combos = projective_reps(r + sub.k1, q)
    degree = code.ideal.degree()
    best = None
    for batch in iter_subspace_batches(N, r, q, max_batch=1 << 12):
        coeff = np.matmul(batch, nf_rows) % q
        if sub.k1:
            stacked = np.concatenate(
                [coeff, np.broadcast_to(sub.coeff_rows, (batch.shape[0],) + sub.coeff_rows.shape)],
                axis=1,
            )
        else:
            stacked = coeff
        mixed = np.einsum("ck,bkj->bcj", combos, stacked) % q
        independent = ~((mixed == 0).all(axis=2).any(axis=1))
        Z = np.matmul(batch, rows) % q
        vanishing = (Z == 0).all(axis=1).sum(axis=1)
        admissible = independent & (vanishing > 0)
        if admissible.any():
            m = int(vanishing[admissible].max())
            if best is None or m > best:
                best = m
    if best is None:
        return degree
    return degree - best
