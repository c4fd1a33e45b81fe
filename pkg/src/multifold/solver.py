"""Solve the alignment condition gap(x) = 0 by rolling the parameter.

Rolling is realized as bisection on a sign change inside an interval the
Sturm oracle certifies to hold exactly one distinct root, so convergence is
guaranteed and every reported root carries a certificate.  All iterates are
exact rationals; tolerances bound both the bracket width and the exact
rational residual.  Negative roots are found by compiling the sign-flipped
polynomial and rolling on the mirrored interval, keeping the simulated
parameter nonnegative.

After the bracket has shrunk below tolerance the solver tries the smallest-
denominator rational inside it; rational roots (for instance an exact 1/2)
are therefore reported exactly, with residual zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import compiler
from .algebra import (
    Interval,
    Poly,
    _isolate,
    cauchy_root_bound,
    coefficient_majorant,
    count_real_roots,
    eval_horner,
    negate_variable,
    nudge_outward,
    simplest_rational_in,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)
from .errors import DomainError, InternalConsistencyError
from .reduction import RealImagReduction, reduce
from .simulator import symbolic_gap

DEFAULT_TOLERANCE = Fraction(1, 10**12)

_MAX_BISECTIONS = 100_000


class NoRootError(DomainError):
    """The certified root count over the interval is zero."""


class NotIsolatedError(DomainError):
    """The interval holds more than one distinct root; the caller must split it."""


class EvenTouchError(DomainError):
    """Root count one but no sign change: the gap polynomial is not squarefree."""


@dataclass(frozen=True)
class RealRoot:
    value: Fraction
    isolating: Interval
    residual: Fraction
    certified: bool
    multiplicity: int


@dataclass(frozen=True)
class RootReport:
    roots: tuple[RealRoot, ...]
    bound: Fraction
    tolerance: Fraction


@dataclass(frozen=True)
class ComplexRoot:
    re: Fraction
    im: Fraction
    residual: float
    residual_sq: Fraction


@dataclass(frozen=True)
class ComplexRootReport:
    pairs: tuple[ComplexRoot, ...]
    reduction: RealImagReduction


def _as_tolerance(tol) -> Fraction:
    t = DEFAULT_TOLERANCE if tol is None else Fraction(tol)
    if t <= 0:
        raise DomainError("tolerance must be positive")
    return t


def certify(p: Poly, iv: Interval) -> bool:
    """True exactly when p has a single distinct root in (iv.lo, iv.hi]."""
    if p.is_zero or p.degree < 1:
        return False
    return count_real_roots(sturm_chain(p), iv) == 1


def roll_to_alignment(script: compiler.FoldScript, iv: Interval, tol=None) -> Fraction:
    """Roll the parameter until the script's strip edges touch.

    Requires the interval to isolate one root of the script's gap; if the
    lower endpoint happens to sit exactly on a root, it is shifted outward
    by the deterministic doubling rule so the root lies strictly inside.
    Returns x* with both the final bracket width and |gap(x*)| within
    tolerance (exactly zero residual whenever the root is rational).
    """
    tolerance = _as_tolerance(tol)
    gap = symbolic_gap(script)
    lo, hi = iv.lo, iv.hi
    if eval_horner(gap, lo) == 0:
        if lo == hi:
            return lo
        lo = nudge_outward(lo, -1, gap)
    chain = sturm_chain(gap)
    found = count_real_roots(chain, Interval(lo, hi))
    if found == 0:
        raise NoRootError(f"no root of the gap in ({lo}, {hi}]")
    if found > 1:
        raise NotIsolatedError(f"{found} roots of the gap in ({lo}, {hi}]; split the interval")
    f_hi = eval_horner(gap, hi)
    if f_hi == 0:
        return hi
    f_lo = eval_horner(gap, lo)
    if (f_lo > 0) == (f_hi > 0):
        raise EvenTouchError(
            "root count is one but the gap does not change sign; "
            "the gap polynomial is not squarefree"
        )

    for _ in range(_MAX_BISECTIONS):
        if hi - lo <= tolerance:
            break
        mid = (lo + hi) / 2
        f_mid = eval_horner(gap, mid)
        if f_mid == 0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid

    snap = simplest_rational_in(lo, hi)
    if eval_horner(gap, snap) == 0:
        return snap
    for _ in range(_MAX_BISECTIONS):
        mid = (lo + hi) / 2
        f_mid = eval_horner(gap, mid)
        if f_mid == 0 or abs(f_mid) <= tolerance:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    raise InternalConsistencyError("bisection failed to meet the residual tolerance")


def _multiplicity(factors: list[tuple[Poly, int]], value: Fraction, iv: Interval) -> int:
    if len(factors) == 1 and factors[0][1] == 1:
        return 1
    for f, m in factors:
        if eval_horner(f, value) == 0:
            return m
    for f, m in factors:
        if f.degree >= 1 and count_real_roots(sturm_chain(f), iv) == 1:
            return m
    raise InternalConsistencyError("no squarefree factor claims the isolated root")


def _refine(p: Poly, script: compiler.FoldScript, roll_iv: Interval, tol: Fraction, negate: bool):
    """Roll, then tighten until the original polynomial's residual is in tolerance."""
    t = tol
    for _ in range(64):
        x = roll_to_alignment(script, roll_iv, t)
        value = -x if negate else x
        residual = abs(eval_horner(p, value))
        if residual <= tol:
            return value, residual
        t = t / 1024
    raise InternalConsistencyError("root refinement did not reach the requested residual")


def solve_real(p: Poly, tol=None) -> RootReport:
    """All real roots of p, certified and within tolerance.

    Pipeline: squarefree part, root bound, isolation of the nonnegative
    roots of the squarefree part and of its sign-flip (mirrored back), then
    one certified roll per isolating interval.  Multiplicities come from the
    squarefree decomposition, not from the rolling itself.
    """
    tolerance = _as_tolerance(tol)
    if p.is_zero:
        raise DomainError("the zero polynomial has no meaningful root set")
    if p.degree < 1:
        raise DomainError("a constant polynomial has no roots to solve for")
    q = squarefree_part(p)
    factors = squarefree_decomposition(p)
    bound = cauchy_root_bound(q)
    roots: list[RealRoot] = []

    work = q
    cut = Fraction(0)  # isolation stays outside [-cut, cut]
    if work.constant_term == 0:
        # x divides the squarefree part exactly once: an exact root at zero.
        # Shrink a bracket around it until it certifies and its endpoints
        # miss every other root, then isolate the rest outside the bracket.
        work = Poly.from_coeffs(work.coeffs[1:])
        chain_q = sturm_chain(q)
        w = Fraction(1, 2)
        while count_real_roots(chain_q, Interval(-w, w)) != 1 or (
            work.degree >= 1
            and (eval_horner(work, w) == 0 or eval_horner(work, -w) == 0)
        ):
            w /= 2
        zero_iv = Interval(-w, w)
        roots.append(
            RealRoot(
                value=Fraction(0),
                isolating=zero_iv,
                residual=Fraction(0),
                certified=certify(p, zero_iv),
                multiplicity=_multiplicity(factors, Fraction(0), zero_iv),
            )
        )
        cut = w

    if work.degree >= 1:
        chain = sturm_chain(work)
        script_pos = compiler.compile(work)
        script_neg = compiler.compile(negate_variable(work))
        for iv in _isolate(chain, cut, bound):
            value, residual = _refine(p, script_pos, iv, tolerance, negate=False)
            roots.append(
                RealRoot(
                    value=value,
                    isolating=iv,
                    residual=residual,
                    certified=certify(p, iv),
                    multiplicity=_multiplicity(factors, value, iv),
                )
            )
        for iv in _isolate(chain, -bound, -cut):
            mirrored = Interval(-iv.hi, -iv.lo)
            value, residual = _refine(p, script_neg, mirrored, tolerance, negate=True)
            roots.append(
                RealRoot(
                    value=value,
                    isolating=iv,
                    residual=residual,
                    certified=certify(p, iv),
                    multiplicity=_multiplicity(factors, value, iv),
                )
            )

    roots.sort(key=lambda r: r.isolating.lo)
    return RootReport(roots=tuple(roots), bound=bound, tolerance=tolerance)


def _eval_complex(p: Poly, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """Exact real and imaginary parts of p(a + b*i)."""
    re, im = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        re, im = re * a - im * b + c, re * b + im * a
    return re, im


def solve_complex(p: Poly, tol=None) -> ComplexRootReport:
    """Complex roots of p assembled from the real/imaginary companion polynomials.

    Real candidates come from the real-part companion, imaginary candidates
    from the imaginary-part companion (with both signs); a pair survives
    only when the exact rational residual |p(a + b i)| stays below tolerance
    scaled by a coefficient-norm majorant.  Conjugate pairs are both kept;
    presentation may group them.
    """
    tolerance = _as_tolerance(tol)
    if p.is_zero:
        raise DomainError("the zero polynomial has no meaningful root set")
    if p.degree < 1:
        raise DomainError("a constant polynomial has no roots to solve for")
    red = reduce(p)
    inner = tolerance / (8 * (p.degree + 1))
    re_roots = solve_real(red.q_re, inner).roots
    im_roots = solve_real(red.q_im, inner).roots
    im_values = sorted({v for r in im_roots for v in (r.value, -r.value)})
    pairs: list[ComplexRoot] = []
    for re_root in re_roots:
        a = re_root.value
        for b in im_values:
            re_val, im_val = _eval_complex(p, a, b)
            residual_sq = re_val * re_val + im_val * im_val
            threshold = tolerance * coefficient_majorant(p, abs(a) + abs(b))
            if residual_sq <= threshold * threshold:
                pairs.append(
                    ComplexRoot(
                        re=a,
                        im=b,
                        residual=math.sqrt(float(residual_sq)),
                        residual_sq=residual_sq,
                    )
                )
    pairs.sort(key=lambda c: (c.re, c.im))
    return ComplexRootReport(pairs=tuple(pairs), reduction=red)
