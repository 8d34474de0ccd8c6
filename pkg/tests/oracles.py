"""Shared reference constructions used by the acceptance tests: independent
slow routes to the same quantities the package computes."""

import numpy as np

from rghw.codes import build_code, validate_subcode
from rghw.field import PrimeField
from rghw.groebner import Ideal, ideal_intersection
from rghw.linalg import all_vectors, gaussian_binomial, matrix_rank
from rghw.points import ProjectivePointSet, all_projective_points
from rghw.polyring import PolyRing


def minimum_distance_scan(code):
    """Smallest codeword weight found by walking every coefficient vector."""
    q = code.q
    best = code.n
    for coeffs in all_vectors(code.k, q):
        if not any(coeffs):
            continue
        word = np.asarray(coeffs, dtype=np.int64) @ code.generator_rows % q
        best = min(best, int(np.count_nonzero(word)))
    return best


def single_point_ideal(ring, point):
    """Linear forms cutting out one projective point: all 2x2 minors of the
    matrix stacking the variables over the coordinates."""
    a = point.values
    variables = ring.gens()
    gens = []
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            coeffs = {}
            if a[j]:
                coeffs[variables[i].leading_monomial()] = ring.field(a[j])
            if a[i]:
                coeffs[variables[j].leading_monomial()] = -ring.field(a[i])
            if coeffs:
                gens.append(ring.from_terms(coeffs))
    return Ideal(ring, gens)


def intersection_of_point_ideals(X):
    """Vanishing ideal computed the slow way: intersect the ideals of the
    individual points."""
    ring = PolyRing(X.field, X.s)
    result = None
    for p in X:
        ideal = single_point_ideal(ring, p)
        result = ideal if result is None else ideal_intersection(result, ideal)
    return result


def enumeration_cost(k, q):
    """Number of echelon bases touched when every feasible (r, k1) pair of a
    dimension-k code is enumerated once."""
    total = 0
    for k1 in range(k):
        for r in range(1, k - k1 + 1):
            total += gaussian_binomial(k, r, q)
    return total


def sample_instance(rng, cost_cap=60_000):
    """One random (X, d, code) with every enumeration pass affordable;
    rejection keeps drawing until the cost cap is met."""
    while True:
        q = rng.choice([2, 3])
        s = rng.choice([3, 4])
        pool = list(all_projective_points(q, s))
        n = rng.randrange(3, min(8, len(pool)) + 1)
        X = ProjectivePointSet(PrimeField(q), rng.sample(pool, n))
        d = rng.choice([1, 2])
        code = build_code(X, d)
        if enumeration_cost(code.k, q) <= cost_cap:
            return code


def random_subcode(rng, code, k1):
    """A rank-k1 subcode spanned by random standard polynomials."""
    q = code.q
    while True:
        raw = np.array(
            [[rng.randrange(q) for _ in range(code.k)] for _ in range(k1)],
            dtype=np.int64,
        )
        if k1 == 0 or matrix_rank(raw.copy(), q) == k1:
            polys = [code.coefficients_to_polynomial(row) for row in raw]
            return validate_subcode(code, polys)
