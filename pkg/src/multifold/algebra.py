"""Exact univariate polynomial arithmetic over the rationals.

Everything here is exact: coefficients are `fractions.Fraction` values
(arbitrary precision, always reduced, positive denominator), so equality
tests and sign queries are reliable.  A polynomial is a dense tuple of
coefficients, constant term first; the empty tuple is the zero polynomial
and a nonzero polynomial never stores trailing zero coefficients.

The module provides the substrate the rest of the package builds on:
parsing and printing, Horner evaluation and the chain of Horner partials,
root bounds, squarefree parts, resultants (Sylvester determinant via
fraction-free integer elimination), Sturm chains, and certified real-root
isolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, PolyParseError

# Exact rational scalar used throughout the package.
Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of x^k.  The zero polynomial is the
    empty tuple; otherwise the last coefficient is nonzero.
    """

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(values: Iterable) -> Poly:
        coeffs = [_as_fraction(v) for v in values]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return Poly(tuple(coeffs))

    @staticmethod
    def zero() -> Poly:
        return Poly(())

    @staticmethod
    def constant(value) -> Poly:
        return Poly.from_coeffs([value])

    @staticmethod
    def identity() -> Poly:
        """The polynomial x."""
        return Poly((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        """Coefficient of x^k (0 beyond the degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.from_coeffs([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.from_coeffs([self[k] - other[k] for k in range(n)])

    def __rsub__(self, other) -> Poly:
        return (-self).__add__(other)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            scalar = _as_fraction(other)
            if scalar == 0:
                return Poly.zero()
            return Poly(tuple(c * scalar for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly.from_coeffs(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Euclidean division over the rationals: self = q*divisor + r, deg r < deg divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quotient = [Fraction(0)] * max(len(self.coeffs) - len(divisor.coeffs) + 1, 0)
        rem = list(self.coeffs)
        dlead = divisor.leading_coefficient
        ddeg = divisor.degree
        while len(rem) - 1 >= ddeg and rem:
            if rem[-1] == 0:
                rem.pop()
                continue
            shift = len(rem) - 1 - ddeg
            factor = rem[-1] / dlead
            quotient[shift] = factor
            for j, c in enumerate(divisor.coeffs):
                rem[shift + j] -= factor * c
            rem.pop()
        return Poly.from_coeffs(quotient), Poly.from_coeffs(rem)

    def __floordiv__(self, divisor: Poly) -> Poly:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: Poly) -> Poly:
        return divmod(self, divisor)[1]

    def derivative(self) -> Poly:
        return Poly.from_coeffs([k * c for k, c in enumerate(self.coeffs)][1:])

    def scale_argument(self, factor) -> Poly:
        """p(c*x) for a rational constant c."""
        c = _as_fraction(factor)
        scaled = []
        power = Fraction(1)
        for coeff in self.coeffs:
            scaled.append(coeff * power)
            power *= c
        return Poly.from_coeffs(scaled)

    def compose(self, inner: Poly) -> Poly:
        """p(inner(x)) by Horner's rule."""
        result = Poly.zero()
        for coeff in reversed(self.coeffs):
            result = result * inner + coeff
        return result

    def __call__(self, x) -> Fraction:
        return eval_horner(self, x)

    def __str__(self) -> str:
        return poly_to_text(self)

    def __repr__(self) -> str:
        return f"Poly({poly_to_text(self)!r})"


@dataclass(frozen=True)
class HornerChain:
    """The nested-evaluation partials of a polynomial.

    ``partials[0]`` is the constant leading coefficient; each later entry is
    x times the previous one plus the next lower coefficient, so the final
    entry is the polynomial itself.
    """

    partials: tuple[Poly, ...]


@dataclass(frozen=True)
class SturmChain:
    """Signed remainder sequence used to count distinct real roots.

    ``seq[0]`` is the squarefree part of the source polynomial, ``seq[1]``
    its derivative, and each later entry is the negated remainder of the
    two before it; the last entry is a nonzero constant.
    """

    seq: tuple[Poly, ...]


@dataclass(frozen=True)
class Interval:
    """Rational interval with lo <= hi.  Root counts treat it as (lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _as_fraction(self.lo))
        object.__setattr__(self, "hi", _as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: ({self.lo}, {self.hi})")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value) -> bool:
        v = _as_fraction(value)
        return self.lo < v <= self.hi


# ---------------------------------------------------------------------------
# Parsing and printing
# ---------------------------------------------------------------------------

_MAX_EXPONENT = 10_000


def poly_parse(text: str) -> Poly:
    """Parse polynomial text like ``16x^5 - 20x^3 + 5x - 1/2``.

    Terms are an optional sign, an optional integer or p/q coefficient, and
    an optional x with an optional ^k exponent; whitespace is ignored
    everywhere.  Positions in error messages are 0-based character offsets.
    """
    coeffs: dict[int, Fraction] = {}
    i = 0
    n = len(text)

    def skip_ws():
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def read_int() -> int:
        nonlocal i
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            raise PolyParseError("expected digits", start)
        return int(text[start:i])

    def read_term(sign: int):
        nonlocal i
        skip_ws()
        coeff = None
        if i < n and text[i].isdigit():
            num = read_int()
            skip_ws()
            if i < n and text[i] == "/":
                i += 1
                skip_ws()
                den_pos = i
                den = read_int()
                if den == 0:
                    raise PolyParseError("zero denominator", den_pos)
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            skip_ws()
        exponent = 0
        if i < n and text[i] == "x":
            i += 1
            exponent = 1
            skip_ws()
            if i < n and text[i] == "^":
                i += 1
                skip_ws()
                exp_pos = i
                exponent = read_int()
                if exponent > _MAX_EXPONENT:
                    raise PolyParseError("exponent too large", exp_pos)
        elif coeff is None:
            raise PolyParseError("expected a term", i)
        if coeff is None:
            coeff = Fraction(1)
        coeffs[exponent] = coeffs.get(exponent, Fraction(0)) + sign * coeff

    skip_ws()
    if i == n:
        raise PolyParseError("empty polynomial text", 0)
    sign = 1
    if text[i] in "+-":
        sign = -1 if text[i] == "-" else 1
        i += 1
    read_term(sign)
    while True:
        skip_ws()
        if i == n:
            break
        if text[i] == "+":
            sign = 1
        elif text[i] == "-":
            sign = -1
        else:
            raise PolyParseError(f"unexpected character {text[i]!r}", i)
        i += 1
        read_term(sign)

    if not coeffs:
        return Poly.zero()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Poly.from_coeffs(out)


def poly_to_text(p: Poly) -> str:
    """Canonical text form; parses back to the same polynomial."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# Evaluation and elementary transforms
# ---------------------------------------------------------------------------


def eval_horner(p: Poly, x) -> Fraction:
    """Exact value of p at a rational point, by nested multiplication."""
    xv = _as_fraction(x)
    acc = Fraction(0)
    for coeff in reversed(p.coeffs):
        acc = acc * xv + coeff
    return acc


def horner_chain(p: Poly) -> HornerChain:
    """Partials of the nested form, outermost last; the final partial is p itself."""
    if p.is_zero:
        raise DomainError("the zero polynomial has no Horner chain")
    x = Poly.identity()
    partials = [Poly.constant(p.leading_coefficient)]
    for k in range(p.degree - 1, -1, -1):
        partials.append(x * partials[-1] + p[k])
    return HornerChain(tuple(partials))


def negate_variable(p: Poly) -> Poly:
    """p(-x): flips the sign of every odd-degree coefficient."""
    return Poly(tuple(-c if k % 2 else c for k, c in enumerate(p.coeffs)))


def cauchy_root_bound(p: Poly) -> Fraction:
    """B = 1 + max_k |a_k / a_n| over k < n; every real root has |r| < B."""
    if p.is_zero:
        raise DomainError("the zero polynomial has no root bound")
    if p.degree < 1:
        raise DomainError("a constant polynomial has no root bound")
    lead = abs(p.leading_coefficient)
    ratio = max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + ratio


# ---------------------------------------------------------------------------
# GCD, content, squarefree structure
# ---------------------------------------------------------------------------


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor over the rationals (zero if both inputs are zero)."""
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a * (1 / a.leading_coefficient)


def primitive_part(p: Poly) -> Poly:
    """Scale to coprime integer coefficients with a positive leading coefficient."""
    if p.is_zero:
        return p
    denom_lcm = 1
    for c in p.coeffs:
        denom_lcm = math.lcm(denom_lcm, c.denominator)
    nums = [int(c * denom_lcm) for c in p.coeffs]
    g = 0
    for v in nums:
        g = math.gcd(g, v)
    if nums[-1] < 0:
        g = -g
    return Poly.from_coeffs([Fraction(v, g) for v in nums])


def _exact_div(f: Poly, g: Poly) -> Poly:
    q, r = divmod(f, g)
    if not r.is_zero:
        raise ArithmeticError("expected exact polynomial division")
    return q


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'), made primitive: same roots, all simple."""
    if p.is_zero:
        raise DomainError("the zero polynomial has no squarefree part")
    g = poly_gcd(p, p.derivative())
    if g.is_zero:
        g = Poly.constant(1)
    return primitive_part(_exact_div(p, g))


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's decomposition: pairs (factor, multiplicity) with p = c * prod f_i^i.

    Factors are primitive, pairwise coprime, and squarefree; only factors of
    degree >= 1 are returned.
    """
    if p.is_zero:
        raise DomainError("the zero polynomial has no squarefree decomposition")
    if p.degree < 1:
        return []
    dp = p.derivative()
    g = poly_gcd(p, dp)
    if g.degree < 1:
        return [(primitive_part(p), 1)]
    w = _exact_div(p, g)
    y = _exact_div(dp, g)
    out: list[tuple[Poly, int]] = []
    i = 1
    while w.degree >= 1:
        z = y - w.derivative()
        f = poly_gcd(w, z)
        if f.degree >= 1:
            out.append((primitive_part(f), i))
        w = _exact_div(w, f)
        y = _exact_div(z, f)
        i += 1
    return out


# ---------------------------------------------------------------------------
# Resultants
# ---------------------------------------------------------------------------


def _det_bareiss(m: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[-1][-1]


def _integer_scale(p: Poly) -> tuple[list[int], int]:
    scale = 1
    for c in p.coeffs:
        scale = math.lcm(scale, c.denominator)
    return [int(c * scale) for c in p.coeffs], scale


def resultant(f: Poly, g: Poly) -> Fraction:
    """Sylvester resultant: lc(f)^deg(g) times the product of g over the roots of f.

    Zero exactly when f and g share a root.  Computed as an integer Sylvester
    determinant by fraction-free elimination after clearing denominators.
    """
    if f.is_zero or g.is_zero:
        raise DomainError("resultant of the zero polynomial is undefined")
    m, n = f.degree, g.degree
    fi, fscale = _integer_scale(f)
    gi, gscale = _integer_scale(g)
    size = m + n
    if size == 0:
        return Fraction(1)
    matrix: list[list[int]] = []
    frow = list(reversed(fi))
    grow = list(reversed(gi))
    for i in range(n):
        matrix.append([0] * i + frow + [0] * (n - 1 - i))
    for i in range(m):
        matrix.append([0] * i + grow + [0] * (m - 1 - i))
    det = _det_bareiss(matrix)
    return Fraction(det) / (Fraction(fscale) ** n * Fraction(gscale) ** m)


def interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Exact polynomial through the given points (Newton's divided differences)."""
    xs = [_as_fraction(x) for x, _ in points]
    coef = [_as_fraction(y) for _, y in points]
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = Poly.zero()
    x = Poly.identity()
    for i in range(n - 1, -1, -1):
        result = result * (x - xs[i]) + coef[i]
    return result


# ---------------------------------------------------------------------------
# Sturm chains and root isolation
# ---------------------------------------------------------------------------


def sturm_chain(p: Poly) -> SturmChain:
    """Signed remainder sequence starting from the squarefree part of p."""
    if p.is_zero:
        raise DomainError("the zero polynomial has no Sturm chain")
    if p.degree < 1:
        raise DomainError("a constant polynomial has no Sturm chain")
    s0 = squarefree_part(p)
    seq = [s0, s0.derivative()]
    while seq[-1].degree >= 1:
        seq.append(-(seq[-2] % seq[-1]))
    if seq[-1].is_zero:
        # Cannot happen for a squarefree start; guard against silent misuse.
        seq.pop()
    return SturmChain(tuple(seq))


def sign_variations(values: Iterable[Fraction]) -> int:
    """Sign changes in a sequence, zeros dropped."""
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(chain: SturmChain, iv: Interval) -> int:
    """Number of distinct real roots of the chain's first entry in (lo, hi].

    With zeros dropped from the sign sequence, the variation count is exact
    for half-open intervals even when an endpoint is itself a root, so no
    endpoint adjustment is needed here.
    """
    if iv.lo == iv.hi:
        return 0
    v_lo = sign_variations(eval_horner(s, iv.lo) for s in chain.seq)
    v_hi = sign_variations(eval_horner(s, iv.hi) for s in chain.seq)
    return v_lo - v_hi


_ISOLATION_WIDTH = Fraction(1, 2)


def _isolate(chain: SturmChain, lo: Fraction, hi: Fraction, max_width=_ISOLATION_WIDTH) -> list[Interval]:
    """Disjoint intervals within (lo, hi], one distinct root strictly inside
    each, refined until no wider than max_width.

    Requires that neither lo nor hi is a root of the chain's first entry;
    every returned interval then also has non-root endpoints, which keeps
    later sign-based refinement and mirroring unambiguous.
    """
    s0 = chain.seq[0]
    out: list[Interval] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        c = count_real_roots(chain, Interval(a, b))
        if c == 0:
            continue
        if c == 1 and b - a <= max_width:
            out.append(Interval(a, b))
            continue
        mid = (a + b) / 2
        if eval_horner(s0, mid) == 0:
            # The split point is itself a root: bracket it symmetrically and
            # recurse on the outside.
            delta = (b - a) / 4
            while (
                2 * delta > max_width
                or eval_horner(s0, mid - delta) == 0
                or eval_horner(s0, mid + delta) == 0
                or count_real_roots(chain, Interval(mid - delta, mid + delta)) != 1
            ):
                delta /= 2
            out.append(Interval(mid - delta, mid + delta))
            stack.append((a, mid - delta))
            stack.append((mid + delta, b))
        else:
            stack.append((a, mid))
            stack.append((mid, b))
    out.sort(key=lambda iv: iv.lo)
    return out


def isolate_real_roots(p: Poly) -> list[Interval]:
    """Disjoint rational intervals within (-B, B], each containing exactly one
    distinct real root of p; together they cover every real root."""
    if p.is_zero:
        raise DomainError("cannot isolate roots of the zero polynomial")
    if p.degree < 1:
        raise DomainError("cannot isolate roots of a constant polynomial")
    bound = cauchy_root_bound(p)
    chain = sturm_chain(p)
    return _isolate(chain, -bound, bound)


def simplest_rational_in(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in [lo, hi]."""
    lo = _as_fraction(lo)
    hi = _as_fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if lo == hi:
        return lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational_in(-hi, -lo)
    floor_lo = lo.numerator // lo.denominator
    if lo == floor_lo:
        return Fraction(floor_lo)
    if floor_lo + 1 <= hi:
        return Fraction(floor_lo + 1)
    frac = simplest_rational_in(1 / (hi - floor_lo), 1 / (lo - floor_lo))
    return floor_lo + 1 / frac


def coefficient_majorant(p: Poly, at) -> Fraction:
    """Sum of |c_j| * max(1, |at|)^j: an upper bound for |p| on [-|at|, |at|]."""
    m = max(Fraction(1), abs(_as_fraction(at)))
    total = Fraction(0)
    power = Fraction(1)
    for c in p.coeffs:
        total += abs(c) * power
        power *= m
    return total


def nudge_outward(value: Fraction, direction: int, avoid_root_of: Poly) -> Fraction:
    """Shift a point away from an interval until it is no longer a root.

    The step starts at 1/(2 * denominator) of the point and doubles until the
    shifted point misses every root of the given polynomial; with direction
    -1 the point moves down, with +1 up.  Deterministic and exact.
    """
    v = _as_fraction(value)
    step = Fraction(1, 2 * v.denominator)
    while True:
        candidate = v + direction * step
        if eval_horner(avoid_root_of, candidate) != 0:
            return candidate
        step *= 2
