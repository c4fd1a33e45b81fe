"""From one rational polynomial, build rational polynomials whose roots cover
the real and imaginary parts of every complex root of the original.

The construction goes through root-sum and root-difference polynomials.  If
p has roots z_1..z_n, then

* ``sum_roots_poly(p)``  has roots { z_i + z_j } over all ordered pairs, and
* ``diff_roots_poly(p)`` has roots { z_j - z_i } over all ordered pairs.

Since the coefficients of p are real, the conjugate of every root is again a
root, so z + conj(z) = 2 Re(z) appears among the sums and z - conj(z)
= 2i Im(z) among the differences.  Substituting recovers polynomials in
Re(z) and Im(z) directly:

* ``real_part_poly``: evaluate the sum polynomial at 2x.
* ``imag_part_poly``: strip the x-power from the difference polynomial,
  which leaves an even polynomial g(x^2); then x * g(-4x^2) vanishes at
  every Im(z), with the leading factor x covering the real roots.

Both resultants are computed by evaluation and interpolation: specialize the
free variable at enough rational points, take scalar Sylvester resultants,
and interpolate the exact result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, interpolate, primitive_part, resultant, squarefree_part
from .errors import DomainError, InternalConsistencyError


@dataclass(frozen=True)
class RealImagReduction:
    """Companion polynomials for the complex roots of ``source``.

    Every root z of ``source`` has Re(z) among the roots of ``q_re`` and
    Im(z) among the roots of ``q_im``.  The companions are not minimal; they
    may carry extra roots, which downstream pairing filters out.
    """

    source: Poly
    q_re: Poly
    q_im: Poly


def _check_input(p: Poly) -> None:
    if p.is_zero:
        raise DomainError("the zero polynomial has no root reduction")
    if p.degree < 1:
        raise DomainError("a constant polynomial has no root reduction")


def _pair_resultant(p: Poly, inner_sign: int) -> Poly:
    """Resultant in y of p(y) against p(t + inner_sign * y), as a polynomial in t.

    With inner_sign -1 this is the root-sum polynomial, with +1 (after
    flipping the roles) the root-difference polynomial.  The y-degree of the
    second argument never drops, so specializing t commutes with the
    resultant and interpolation through deg^2 + 1 samples is exact.
    """
    n = p.degree
    samples = n * n + 1
    points: list[tuple[Fraction, Fraction]] = []
    for step in range(samples):
        # 0, 1, -1, 2, -2, ...
        t = Fraction((step + 1) // 2 * (1 if step % 2 else -1))
        inner = Poly.from_coeffs([t, inner_sign])
        points.append((t, resultant(p, p.compose(inner))))
    return interpolate(points)


def sum_roots_poly(p: Poly) -> Poly:
    """Primitive polynomial whose roots are all ordered pairwise sums of roots of p."""
    _check_input(p)
    return primitive_part(_pair_resultant(p, -1))


def diff_roots_poly(p: Poly) -> Poly:
    """Primitive polynomial whose roots are all ordered pairwise differences of
    roots of p; divisible by x^deg(p) via the diagonal pairs."""
    _check_input(p)
    return primitive_part(_pair_resultant(p, +1))


def real_part_poly(p: Poly) -> Poly:
    """Primitive polynomial vanishing at Re(z) for every complex root z of p."""
    _check_input(p)
    sums = sum_roots_poly(squarefree_part(p))
    return primitive_part(sums.scale_argument(2))


def imag_part_poly(p: Poly) -> Poly:
    """Primitive polynomial vanishing at Im(z) for every complex root z of p.

    The factor x in the result covers the real roots (imaginary part zero).
    """
    _check_input(p)
    diffs = diff_roots_poly(squarefree_part(p))
    stripped = list(diffs.coeffs)
    while stripped and stripped[0] == 0:
        stripped.pop(0)
    r = Poly.from_coeffs(stripped)
    if any(c != 0 for k, c in enumerate(r.coeffs) if k % 2):
        raise InternalConsistencyError(
            "difference-root polynomial is not even after stripping x factors"
        )
    # r(x) = g(x^2); nonreal pairs contribute differences 2i*Im(z), so Im(z)
    # is a root of g(-4 x^2).
    g = Poly.from_coeffs(r.coeffs[::2])
    substituted = [Fraction(0)] * (2 * g.degree + 2)
    power = Fraction(1)
    for j, c in enumerate(g.coeffs):
        substituted[2 * j + 1] = c * power
        power *= -4
    return primitive_part(Poly.from_coeffs(substituted))


def reduce(p: Poly) -> RealImagReduction:
    """Bundle the real-part and imaginary-part companion polynomials of p."""
    _check_input(p)
    return RealImagReduction(source=p, q_re=real_part_poly(p), q_im=imag_part_poly(p))
