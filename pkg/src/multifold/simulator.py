"""Elaborate a fold script into a scene of x-parameterized geometry.

Every coordinate in a scene is a polynomial in the rolling parameter x
(``ParamScalar``), so "sliding sheet x" is re-evaluation, never mutation:
``evaluate`` produces a separate concrete scene with exact rational
coordinates for one x.  This makes the central claims checkable rather
than narrative:

* the symbolic gap of a compiled script equals the source polynomial,
* the final pair's gap at any x equals the Horner evaluation at x,
* the alignment condition depends on exactly one free parameter, and
* nothing ever needs to reach outside a finite sheet whose extents are
  computed up front from a root bound.

The element inventory is deterministic in the degree: 4 setup elements, 2
seed edges, and 7 elements per iteration (rectangle diagonal, auxiliary
edge, two 45-degree transfer diagonals, the vertical re-encoding strip,
and the new pair).  A nonzero coefficient's translation sheet is recorded
in the step parameters and appears geometrically as the spacing between
the two transfer diagonals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, cauchy_root_bound, eval_horner
from .compiler import (
    ALIGNMENT_CHECK,
    DIAGONAL_REFERENCE,
    ITERATION_STEP,
    ONE_CREASE,
    PLACE_SHEET_X,
    SEED_PAIR,
    ZERO_CREASE,
    FoldScript,
    StripPair,
    iteration_step,
    seed_pair,
    validate_script,
)
from .errors import DomainError

# A coordinate as an exact polynomial function of the rolling parameter x.
ParamScalar = Poly


@dataclass(frozen=True)
class VerticalLine:
    """x = u in sheet coordinates (u may depend on the rolling parameter)."""

    u: ParamScalar


@dataclass(frozen=True)
class HorizontalEdge:
    """y = v in sheet coordinates."""

    v: ParamScalar


@dataclass(frozen=True)
class DiagonalEdge:
    """y = slope * x + intercept; the slope itself may depend on the parameter."""

    slope: ParamScalar
    intercept: ParamScalar


@dataclass(frozen=True)
class Element:
    """One geometric element, tagged with the index of the step that created it."""

    id: str
    provenance: int
    geometry: VerticalLine | HorizontalEdge | DiagonalEdge


@dataclass(frozen=True)
class Scene:
    """All elements of an elaborated script, plus the evolving gap trace."""

    script: FoldScript
    elements: tuple[Element, ...]
    final_pair: StripPair
    trace: tuple[ParamScalar, ...]


@dataclass(frozen=True)
class Extents:
    """Required sheet size: width to the right of the zero crease, total height
    centered on the seed line."""

    width: Fraction
    height: Fraction


@dataclass(frozen=True)
class ConcreteScene:
    """A scene evaluated at one exact rational x."""

    x: Fraction
    elements: tuple[Element, ...]
    final_gap: Fraction
    trace: tuple[Fraction, ...]
    extents: Extents


@dataclass(frozen=True)
class IntersectionCheck:
    iteration: int
    name: str
    passed: bool
    expected: Fraction
    actual: Fraction


@dataclass(frozen=True)
class IntersectionReport:
    checks: tuple[IntersectionCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[IntersectionCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def elaborate(script: FoldScript) -> Scene:
    """Walk the script, emitting geometry and folding the strip-pair state."""
    validate_script(script)
    x = Poly.identity()
    one = Poly.constant(1)
    elements: list[Element] = []
    trace: list[Poly] = []
    pair: StripPair | None = None

    def emit(eid: str, index: int, geometry) -> None:
        elements.append(Element(id=eid, provenance=index, geometry=geometry))

    for i, step in enumerate(script.steps):
        if step.kind == ZERO_CREASE:
            emit("zero-crease", i, VerticalLine(Poly.zero()))
        elif step.kind == ONE_CREASE:
            emit("one-crease", i, VerticalLine(one))
        elif step.kind == DIAGONAL_REFERENCE:
            emit("diagonal-reference", i, DiagonalEdge(slope=one, intercept=Poly.zero()))
        elif step.kind == PLACE_SHEET_X:
            emit("sheet-x", i, VerticalLine(x))
        elif step.kind == SEED_PAIR:
            pair = seed_pair(step.params["coefficient"])
            emit("seed.zero-edge", i, HorizontalEdge(pair.loc_zero_edge))
            emit("seed.other-edge", i, HorizontalEdge(pair.other_edge))
        elif step.kind == ITERATION_STEP:
            assert pair is not None
            k = step.params["index"]
            a = Fraction(step.params["coefficient"])
            offset = Fraction(step.params["offset"])
            z = pair.loc_zero_edge
            d = pair.gap
            target = z + x * d + a
            tag = f"iteration-{k}"
            emit(f"{tag}.rect-diagonal", i, DiagonalEdge(slope=d, intercept=z))
            emit(f"{tag}.aux-edge", i, HorizontalEdge(z + x * d))
            emit(f"{tag}.transfer-zero", i, DiagonalEdge(slope=one, intercept=z))
            emit(f"{tag}.transfer-other", i, DiagonalEdge(slope=one, intercept=target))
            emit(f"{tag}.vertical-strip", i, VerticalLine(Poly.constant(offset)))
            pair = iteration_step(pair, a, k, offset)
            emit(f"{tag}.pair-zero", i, HorizontalEdge(pair.loc_zero_edge))
            emit(f"{tag}.pair-other", i, HorizontalEdge(pair.other_edge))
            trace.append(pair.gap)
        elif step.kind == ALIGNMENT_CHECK:
            pass
        else:
            raise DomainError(f"unknown step kind {step.kind!r}")

    assert pair is not None
    return Scene(script=script, elements=tuple(elements), final_pair=pair, trace=tuple(trace))


def symbolic_gap(script: FoldScript) -> Poly:
    """Recompute the final gap polynomial from the step parameters alone.

    Tolerates partial scripts (setup plus a seed, possibly no iterations),
    so intermediate states can be inspected.
    """
    pair: StripPair | None = None
    for step in script.steps:
        if step.kind == SEED_PAIR:
            pair = seed_pair(step.params["coefficient"])
        elif step.kind == ITERATION_STEP:
            if pair is None:
                raise DomainError("iteration step before any seed pair")
            pair = iteration_step(
                pair,
                Fraction(step.params["coefficient"]),
                step.params["index"],
                Fraction(step.params["offset"]),
            )
    if pair is None:
        raise DomainError("fold script has no seed pair")
    return pair.gap


def free_parameters(script: FoldScript) -> set[str]:
    """Names of the independent sliding parameters the alignment depends on.

    Every compiled script places exactly one sliding sheet, so the result is
    {"x"}; a script with several placed sheets reports x1, x2, ... and an
    empty script has none.  All other steps are determined by alignments
    once the sliding sheets are fixed.
    """
    count = sum(1 for step in script.steps if step.kind == PLACE_SHEET_X)
    if count == 0:
        return set()
    if count == 1:
        return {"x"}
    return {f"x{i}" for i in range(1, count + 1)}


def _gap_majorant(poly: Poly, bound: Fraction) -> Fraction:
    total = Fraction(0)
    power = Fraction(1)
    for c in poly.coeffs:
        total += abs(c) * power
        power *= bound
    return total


def paper_extents(script: FoldScript, bound: Fraction) -> Extents:
    """Sheet size sufficient for every configuration with x in [0, bound].

    The width covers the root bound plus the placement offsets; the height
    majorizes every strip-pair coordinate via coefficient norms of the gap
    polynomials, plus the vertical drift the placement offsets introduce.
    """
    b = Fraction(bound)
    if b <= 0:
        raise DomainError("paper extents need a positive parameter bound")
    offsets: list[Fraction] = []
    coeff_mag = Fraction(0)
    gap_majorant = Fraction(0)
    pair: StripPair | None = None
    for step in script.steps:
        if step.kind == SEED_PAIR:
            pair = seed_pair(step.params["coefficient"])
            coeff_mag = max(coeff_mag, abs(Fraction(step.params["coefficient"])))
            gap_majorant = max(gap_majorant, _gap_majorant(pair.gap, b))
        elif step.kind == ITERATION_STEP:
            if pair is None:
                raise DomainError("iteration step before any seed pair")
            offsets.append(Fraction(step.params["offset"]))
            coeff_mag = max(coeff_mag, abs(Fraction(step.params["coefficient"])))
            pair = iteration_step(
                pair,
                Fraction(step.params["coefficient"]),
                step.params["index"],
                offsets[-1],
            )
            gap_majorant = max(gap_majorant, _gap_majorant(pair.gap, b))
    if pair is None:
        raise DomainError("fold script has no seed pair")
    width = b + max(offsets, default=Fraction(0)) + 1
    half_height = gap_majorant + sum(offsets) + 2 * coeff_mag + 1
    return Extents(width=width, height=2 * half_height)


def evaluate(scene: Scene, x, bound=None) -> ConcreteScene:
    """Realize every coordinate at one exact rational x in [0, width].

    The sheet extents come from the script's own root bound unless a wider
    bound is supplied.
    """
    xv = Fraction(x)
    b = Fraction(bound) if bound is not None else cauchy_root_bound(scene.script.source)
    extents = paper_extents(scene.script, b)
    if not 0 <= xv <= extents.width:
        raise DomainError(
            f"parameter {xv} outside the sheet; allowed range is [0, {extents.width}]"
        )

    def concrete(geometry):
        if isinstance(geometry, VerticalLine):
            return VerticalLine(eval_horner(geometry.u, xv))
        if isinstance(geometry, HorizontalEdge):
            return HorizontalEdge(eval_horner(geometry.v, xv))
        return DiagonalEdge(
            slope=eval_horner(geometry.slope, xv),
            intercept=eval_horner(geometry.intercept, xv),
        )

    elements = tuple(
        Element(id=e.id, provenance=e.provenance, geometry=concrete(e.geometry))
        for e in scene.elements
    )
    return ConcreteScene(
        x=xv,
        elements=elements,
        final_gap=eval_horner(scene.final_pair.gap, xv),
        trace=tuple(eval_horner(g, xv) for g in scene.trace),
        extents=extents,
    )


def _elements_by_id(cs: ConcreteScene) -> dict[str, Element]:
    return {e.id: e for e in cs.elements}


def _iteration_tags(cs: ConcreteScene) -> list[int]:
    tags = set()
    for e in cs.elements:
        if e.id.startswith("iteration-"):
            tags.add(int(e.id.split(".")[0].split("-")[1]))
    return sorted(tags, reverse=True)


def check_intersections(cs: ConcreteScene) -> IntersectionReport:
    """Verify, per iteration, the two geometric coincidences the construction
    relies on: the rectangle diagonal meets the sliding sheet's edge at the
    auxiliary mark, and the 45-degree transfer preserves the pair separation."""
    by_id = _elements_by_id(cs)
    checks: list[IntersectionCheck] = []
    for k in _iteration_tags(cs):
        tag = f"iteration-{k}"
        rect = by_id[f"{tag}.rect-diagonal"].geometry
        aux = by_id[f"{tag}.aux-edge"].geometry
        tz = by_id[f"{tag}.transfer-zero"].geometry
        to = by_id[f"{tag}.transfer-other"].geometry
        pz = by_id[f"{tag}.pair-zero"].geometry
        po = by_id[f"{tag}.pair-other"].geometry
        expected_aux = rect.intercept + rect.slope * cs.x
        checks.append(
            IntersectionCheck(
                iteration=k,
                name="aux-edge-on-rect-diagonal",
                passed=aux.v == expected_aux,
                expected=expected_aux,
                actual=aux.v,
            )
        )
        expected_gap = to.intercept - tz.intercept
        actual_gap = po.v - pz.v
        checks.append(
            IntersectionCheck(
                iteration=k,
                name="transfer-preserves-separation",
                passed=actual_gap == expected_gap,
                expected=expected_gap,
                actual=actual_gap,
            )
        )
    return IntersectionReport(checks=tuple(checks))


def element_segments(cs: ConcreteScene) -> dict[str, tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
    """Concrete segment endpoints for every element, in sheet coordinates.

    Vertical lines span the sheet height and horizontal edges the sheet
    width; diagonal strips span only their working range (the unit rectangle
    for rectangle diagonals, zero crease to the re-encoding strip for
    transfers).
    """
    by_id = _elements_by_id(cs)
    half = cs.extents.height / 2
    width = cs.extents.width
    segments = {}
    for e in cs.elements:
        g = e.geometry
        if isinstance(g, VerticalLine):
            segments[e.id] = ((g.u, -half), (g.u, half))
        elif isinstance(g, HorizontalEdge):
            segments[e.id] = ((Fraction(0), g.v), (width, g.v))
        else:
            if e.id.endswith(".transfer-zero") or e.id.endswith(".transfer-other"):
                tag = e.id.split(".")[0]
                span = by_id[f"{tag}.vertical-strip"].geometry.u
            else:
                span = Fraction(1)
            segments[e.id] = (
                (Fraction(0), g.intercept),
                (span, g.intercept + g.slope * span),
            )
    return segments


def extent_violations(cs: ConcreteScene, extents: Extents | None = None) -> list[str]:
    """Descriptions of any concrete coordinate outside the sheet; empty when sound."""
    ext = extents or cs.extents
    half = ext.height / 2
    problems: list[str] = []
    for eid, (p1, p2) in element_segments(cs).items():
        for u, v in (p1, p2):
            if not 0 <= u <= ext.width:
                problems.append(f"{eid}: horizontal position {u} outside [0, {ext.width}]")
            if abs(v) > half:
                problems.append(f"{eid}: vertical position {v} outside [-{half}, {half}]")
    return problems


def total_strip_length(script: FoldScript, extents: Extents) -> Fraction:
    """Total strip length needed to realize the script at the given extents.

    Horizontal strips are counted at the sheet width, vertical strips at the
    sheet height, and diagonal strips at width + height (a rational bound on
    any in-sheet diagonal run); a connection slack of one width + height is
    added.  This is the side length of the single square sheet the whole
    apparatus can be folded from.
    """
    scene = elaborate(script)
    total = Fraction(0)
    for e in scene.elements:
        if isinstance(e.geometry, VerticalLine):
            total += extents.height
        elif isinstance(e.geometry, HorizontalEdge):
            total += extents.width
        else:
            total += extents.width + extents.height
    return total + extents.width + extents.height
