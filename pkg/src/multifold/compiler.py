"""Compile a polynomial into an explicit fold script.

A fold script is a fixed-shape sequence of steps on a square sheet:

* four setup steps (the zero crease, the unit crease one to its right, the
  45-degree diagonal reference, and the sliding sheet whose left-edge
  distance from the zero crease is the rolling parameter x),
* one seed step sandwiching the leading coefficient between a pair of
  horizontal strips,
* one iteration step per remaining coefficient, from high degree down to
  the constant term, each turning a strip pair with gap d into a pair with
  gap x*d + a,
* a final alignment check marking the condition "the inner edges touch",
  which holds exactly when the compiled polynomial vanishes at x.

Scripts are built append-only: no step deletes or modifies an earlier one,
so any prefix of a compiled script is itself a valid intermediate state.
``compile_steps`` exposes that incremental construction directly.

Coordinates are in sheet units, the zero crease at horizontal position 0;
vertical positions are polynomials in x (see the simulator module).  Signs
of coefficients are carried as signed rationals; a pair's gap is the signed
distance from the edge "locating zero" to the other edge, so the lower edge
locates zero exactly when the gap is positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from .algebra import Poly, Rational
from .errors import DomainError

# Step kinds, in the order they may appear in a script.
ZERO_CREASE = "zero-crease"
ONE_CREASE = "one-crease"
DIAGONAL_REFERENCE = "diagonal-reference"
PLACE_SHEET_X = "place-sheet-x"
SEED_PAIR = "seed-pair"
ITERATION_STEP = "iteration-step"
ALIGNMENT_CHECK = "alignment-check"

SETUP_KINDS = (ZERO_CREASE, ONE_CREASE, DIAGONAL_REFERENCE, PLACE_SHEET_X)
ALL_KINDS = SETUP_KINDS + (SEED_PAIR, ITERATION_STEP, ALIGNMENT_CHECK)

# Vertical strips for re-encoding a gap are placed on a clean part of the
# sheet, at offsets base + k * spacing for iteration index k.
PLACEMENT_BASE = Fraction(2)
PLACEMENT_SPACING = Fraction(1)


@dataclass(frozen=True)
class FoldStep:
    """One step of a fold script: a kind plus kind-specific parameters."""

    kind: str
    params: Mapping = field(default_factory=dict)


@dataclass(frozen=True)
class FoldScript:
    """An ordered, append-only fold program compiled from ``source``."""

    source: Poly
    steps: tuple[FoldStep, ...]


@dataclass(frozen=True)
class StripPair:
    """Two horizontal strip edges encoding a signed quantity.

    Both edges are vertical coordinates given as polynomials in the rolling
    parameter x.  The edge "locating zero" marks the zero of the signed gap.
    """

    loc_zero_edge: Poly
    other_edge: Poly

    @property
    def gap(self) -> Poly:
        """Signed distance from the zero-locating edge to the other edge."""
        return self.other_edge - self.loc_zero_edge


def placement_policy(k: int, n: int) -> Fraction:
    """Horizontal offset of the vertical re-encoding strip for iteration k of n."""
    if not 0 <= k < n:
        raise DomainError(f"iteration index {k} out of range for degree {n}")
    return PLACEMENT_BASE + k * PLACEMENT_SPACING


def seed_pair(leading: Rational) -> StripPair:
    """Initial pair sandwiching the leading coefficient.

    The zero-locating edge sits on the sheet's horizontal center line; the
    other edge sits at the coefficient's signed height, so the lower strip
    locates zero for a positive coefficient and the upper one otherwise.
    """
    a = Fraction(leading)
    if a == 0:
        raise DomainError("seed coefficient must be nonzero")
    return StripPair(loc_zero_edge=Poly.zero(), other_edge=Poly.constant(a))


def iteration_step(pair: StripPair, a: Rational, k: int, offset: Fraction | None = None) -> StripPair:
    """One folding iteration: turn a pair with gap d into a pair with gap x*d + a.

    Geometrically: the diagonal of the rectangle bounded by the pair's inner
    edges and the zero and unit creases has slope d; following it to the
    sliding sheet's edge marks a point x*d above the zero-locating edge, a
    translation by a (omitted when a is zero, the sheet being degenerate)
    gives the target point, and two 45-degree strips crossed by a vertical
    strip at the placement offset transfer the two points into a fresh
    horizontal pair with the same vertical separation.
    """
    if offset is None:
        offset = PLACEMENT_BASE + k * PLACEMENT_SPACING
    x = Poly.identity()
    z = pair.loc_zero_edge
    target = z + x * pair.gap + Fraction(a)
    return StripPair(loc_zero_edge=z + offset, other_edge=target + offset)


def compile_steps(p: Poly) -> Iterator[FoldStep]:
    """Yield the steps of the script for p, in construction order."""
    if p.is_zero:
        raise DomainError("cannot compile the zero polynomial")
    n = p.degree
    if n < 1:
        raise DomainError("cannot compile a constant polynomial: no rolling parameter to isolate")
    yield FoldStep(ZERO_CREASE)
    yield FoldStep(ONE_CREASE, {"unit": Fraction(1)})
    yield FoldStep(DIAGONAL_REFERENCE)
    yield FoldStep(PLACE_SHEET_X)
    yield FoldStep(SEED_PAIR, {"coefficient": p.leading_coefficient})
    for k in range(n - 1, -1, -1):
        yield FoldStep(
            ITERATION_STEP,
            {"index": k, "coefficient": p[k], "offset": placement_policy(k, n)},
        )
    yield FoldStep(ALIGNMENT_CHECK)


def compile(p: Poly) -> FoldScript:  # noqa: A001 - mirrors the operation name
    """Compile p into a fold script of exactly deg(p) + 6 steps."""
    return FoldScript(source=p, steps=tuple(compile_steps(p)))


def validate_script(script: FoldScript) -> None:
    """Check the canonical step shape; raises DomainError when malformed."""
    steps = script.steps
    if len(steps) < 7:
        raise DomainError(f"fold script too short: {len(steps)} steps")
    for i, kind in enumerate(SETUP_KINDS):
        if steps[i].kind != kind:
            raise DomainError(f"step {i} must be {kind}, found {steps[i].kind}")
    if steps[4].kind != SEED_PAIR:
        raise DomainError(f"step 4 must be {SEED_PAIR}, found {steps[4].kind}")
    if Fraction(steps[4].params["coefficient"]) == 0:
        raise DomainError("seed coefficient must be nonzero")
    if steps[-1].kind != ALIGNMENT_CHECK:
        raise DomainError(f"final step must be {ALIGNMENT_CHECK}, found {steps[-1].kind}")
    body = steps[5:-1]
    if not body:
        raise DomainError("fold script has no iteration steps")
    indices = []
    for step in body:
        if step.kind != ITERATION_STEP:
            raise DomainError(f"unexpected {step.kind} among iteration steps")
        indices.append(step.params["index"])
    if indices != list(range(len(body) - 1, -1, -1)):
        raise DomainError(f"iteration indices must decrease to zero, found {indices}")
