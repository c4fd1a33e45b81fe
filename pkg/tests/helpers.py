"""Shared test utilities: random inputs and independent oracles.

The oracles here deliberately avoid the library's own code paths: naive
power-sum evaluation, float bisection, and Durand-Kerner simultaneous
iteration are used to cross-check exact results.
"""

from __future__ import annotations

import random
from fractions import Fraction

from multifold import Poly


def random_poly(rng: random.Random, max_degree=8, min_degree=1, num_bound=10, den_bound=10) -> Poly:
    degree = rng.randint(min_degree, max_degree)
    coeffs = [
        Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))
        for _ in range(degree + 1)
    ]
    while coeffs[-1] == 0:
        coeffs[-1] = Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))
    return Poly.from_coeffs(coeffs)


def random_rational_in(rng: random.Random, lo, hi, grid=1024) -> Fraction:
    t = Fraction(rng.randint(0, grid), grid)
    return Fraction(lo) + (Fraction(hi) - Fraction(lo)) * t


def naive_eval(p: Poly, x) -> Fraction:
    """Power-sum evaluation, independent of the Horner path."""
    xv = Fraction(x)
    return sum((c * xv**k for k, c in enumerate(p.coeffs)), Fraction(0))


def bisect_float(f, lo: float, hi: float, iterations=200) -> float:
    """Plain float bisection on a sign change."""
    flo = f(lo)
    assert flo * f(hi) < 0
    for _ in range(iterations):
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def durand_kerner(p: Poly, iterations=600) -> list[complex] | None:
    """Simultaneous-iteration root finding in complex floats.

    Returns None when the iteration fails to settle, so callers can skip or
    resample ill-conditioned inputs.
    """
    lead = complex(p.leading_coefficient)
    coeffs = [complex(c) / lead for c in p.coeffs]
    n = len(coeffs) - 1
    if n < 1:
        return []

    def value(z: complex) -> complex:
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    roots = [(0.4 + 0.9j) ** k for k in range(1, n + 1)]
    for _ in range(iterations):
        shift = 0.0
        new_roots = []
        for i, r in enumerate(roots):
            denom = 1.0 + 0j
            for j, s in enumerate(roots):
                if j != i:
                    denom *= r - s
            if denom == 0:
                return None
            nxt = r - value(r) / denom
            shift = max(shift, abs(nxt - r))
            new_roots.append(nxt)
        roots = new_roots
        if shift < 1e-14:
            break
    scale = max(1.0, max(abs(c) for c in coeffs))
    if any(abs(value(r)) > 1e-8 * scale for r in roots):
        return None
    return roots


# Deterministic polynomial pools shared between acceptance criteria, so the
# one-parameter/append-only audit runs over the same scripts the other
# criteria exercised.


def pool_symbolic_gap() -> list[Poly]:
    rng = random.Random(1001)
    return [random_poly(rng, max_degree=8) for _ in range(200)]


def pool_pointwise() -> list[Poly]:
    rng = random.Random(1002)
    return [random_poly(rng, max_degree=8) for _ in range(100)]


def pool_sturm_equivalence() -> list[Poly]:
    from multifold import squarefree_part

    rng = random.Random(1004)
    out = []
    while len(out) < 100:
        q = squarefree_part(random_poly(rng, max_degree=6))
        if q.degree >= 1:
            out.append(q)
    return out
