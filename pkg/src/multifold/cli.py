"""Command-line interface.

Commands: ``compile``, ``simulate``, ``solve``, ``reduce``, ``bound``,
``render``.  Exit codes are a stable contract: 0 success, 1 usage, 2
polynomial/document parse error, 3 domain error, 4 internal-consistency
error.  The environment variable ``MULTIFOLD_DEFAULT_TOL`` overrides the
default tolerance of 1e-12.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import cauchy_root_bound, poly_parse, poly_to_text
from .compiler import FoldScript, compile
from .document import (
    document_from_script,
    parse_script,
    rational_to_str,
)
from .errors import (
    EXIT_DOMAIN,
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
    DomainError,
    InternalConsistencyError,
    MultifoldError,
    PolyParseError,
)
from .reduction import reduce as reduce_roots
from .simulator import (
    DiagonalEdge,
    HorizontalEdge,
    VerticalLine,
    elaborate,
    evaluate,
    paper_extents,
)
from .solver import DEFAULT_TOLERANCE, solve_complex, solve_real
from .svgout import render_svg

TOLERANCE_ENV_VAR = "MULTIFOLD_DEFAULT_TOL"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


@dataclass
class RunConfig:
    tolerance: Fraction
    bound_override: Fraction | None
    fmt: str
    x: Fraction | None
    out: str | None
    want_complex: bool


def parse_rational_text(text: str) -> Fraction:
    """Accept p/q, integer, decimal, or scientific notation, exactly."""
    t = text.strip().lower()
    try:
        if "e" in t and "/" not in t:
            mantissa, _, exponent = t.partition("e")
            return Fraction(mantissa if mantissa not in ("", "+", "-") else mantissa + "1") * Fraction(10) ** int(exponent)
        return Fraction(t)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"cannot read {text!r} as a rational number: {exc}") from exc


def _default_tolerance() -> Fraction:
    env = os.environ.get(TOLERANCE_ENV_VAR)
    if env:
        return parse_rational_text(env)
    return DEFAULT_TOLERANCE


def _config_from(args: argparse.Namespace) -> RunConfig:
    tolerance = _default_tolerance()
    if getattr(args, "tolerance", None) is not None:
        tolerance = parse_rational_text(args.tolerance)
    if tolerance <= 0:
        raise _UsageError("tolerance must be positive")
    bound = None
    if getattr(args, "bound", None) is not None:
        bound = parse_rational_text(args.bound)
    x = None
    if getattr(args, "x", None) is not None:
        x = parse_rational_text(args.x)
    return RunConfig(
        tolerance=tolerance,
        bound_override=bound,
        fmt=getattr(args, "format", "text"),
        x=x,
        out=getattr(args, "out", None),
        want_complex=bool(getattr(args, "complex", False)),
    )


def _effective_bound(script: FoldScript, config: RunConfig) -> Fraction:
    computed = cauchy_root_bound(script.source)
    if config.bound_override is None:
        return computed
    if config.bound_override < computed:
        print(
            f"warning: bound override {config.bound_override} is below the computed "
            f"bound {computed}; using {computed}",
            file=sys.stderr,
        )
        return computed
    return config.bound_override


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _load_script(script_or_poly: str) -> FoldScript:
    """A path to a fold-script JSON document, or polynomial text."""
    if os.path.isfile(script_or_poly):
        return parse_script(Path(script_or_poly).read_text())
    return compile(poly_parse(script_or_poly))


def _decimal_digits(tolerance: Fraction) -> int:
    digits = 0
    t = Fraction(1)
    while t > tolerance and digits < 80:
        t /= 10
        digits += 1
    return max(digits, 1)


def fraction_to_decimal(value: Fraction, digits: int) -> str:
    """Exact decimal rendering of a rational, rounded half away from zero."""
    v = Fraction(value)
    sign = "-" if v < 0 else ""
    scaled = abs(v) * 10**digits
    whole, rem = divmod(scaled.numerator, scaled.denominator)
    if 2 * rem >= scaled.denominator:
        whole += 1
    int_part, frac_part = divmod(whole, 10**digits)
    return f"{sign}{int_part}.{str(frac_part).zfill(digits)}"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_compile(args: argparse.Namespace) -> int:
    config = _config_from(args)
    script = compile(poly_parse(args.polynomial))
    bound = _effective_bound(script, config)
    extents = paper_extents(script, bound)
    doc = document_from_script(script, extents)
    if config.fmt == "json":
        _emit(doc.to_json(), config.out)
    else:
        lines = [f"polynomial: {doc.polynomial}", f"steps ({len(script.steps)}):"]
        for i, step in enumerate(script.steps):
            params = " ".join(
                f"{k}={v if not isinstance(v, Fraction) else rational_to_str(v)}"
                for k, v in step.params.items()
            )
            lines.append(f"  {i:2d}  {step.kind}" + (f"  {params}" if params else ""))
        lines.append(f"bound: {rational_to_str(bound)}")
        lines.append(
            f"extents: width {rational_to_str(extents.width)}, "
            f"height {rational_to_str(extents.height)}"
        )
        _emit("\n".join(lines), config.out)
    return EXIT_OK


def _geometry_fields(geometry) -> dict:
    if isinstance(geometry, VerticalLine):
        return {"kind": "vertical", "u": rational_to_str(geometry.u)}
    if isinstance(geometry, HorizontalEdge):
        return {"kind": "horizontal", "v": rational_to_str(geometry.v)}
    assert isinstance(geometry, DiagonalEdge)
    return {
        "kind": "diagonal",
        "slope": rational_to_str(geometry.slope),
        "intercept": rational_to_str(geometry.intercept),
    }


def cmd_simulate(args: argparse.Namespace) -> int:
    config = _config_from(args)
    if config.x is None:
        raise _UsageError("simulate requires --x")
    script = _load_script(args.script_or_poly)
    scene = elaborate(script)
    bound = _effective_bound(script, config)
    cs = evaluate(scene, config.x, bound=bound)
    if config.fmt == "svg":
        _emit(render_svg(cs), config.out)
    elif config.fmt == "json":
        payload = {
            "polynomial": poly_to_text(script.source),
            "x": rational_to_str(cs.x),
            "final_gap": rational_to_str(cs.final_gap),
            "trace": [rational_to_str(v) for v in cs.trace],
            "elements": [
                {"id": e.id, "step": e.provenance, **_geometry_fields(e.geometry)}
                for e in cs.elements
            ],
        }
        _emit(json.dumps(payload, indent=2), config.out)
    else:
        lines = [
            f"polynomial: {poly_to_text(script.source)}",
            f"x: {rational_to_str(cs.x)}",
            f"elements ({len(cs.elements)}):",
        ]
        for e in cs.elements:
            fields = _geometry_fields(e.geometry)
            desc = " ".join(f"{k}={v}" for k, v in fields.items() if k != "kind")
            lines.append(f"  {e.id:32s} {fields['kind']:10s} {desc}")
        lines.append("trace: " + ", ".join(rational_to_str(v) for v in cs.trace))
        lines.append(f"final-gap: {rational_to_str(cs.final_gap)}")
        _emit("\n".join(lines), config.out)
    return EXIT_OK


def _real_roots_payload(report, digits: int) -> list[dict]:
    return [
        {
            "value": rational_to_str(r.value),
            "decimal": fraction_to_decimal(r.value, digits),
            "interval": [rational_to_str(r.isolating.lo), rational_to_str(r.isolating.hi)],
            "residual": rational_to_str(r.residual),
            "multiplicity": r.multiplicity,
            "certified": r.certified,
        }
        for r in report.roots
    ]


def _format_complex_pairs(pairs, digits: int) -> list[str]:
    lines = []
    seen = set()
    for c in pairs:
        if (c.re, c.im) in seen:
            continue
        conjugate = next((d for d in pairs if d.re == c.re and d.im == -c.im and c.im != 0), None)
        re_text = fraction_to_decimal(c.re, digits)
        if c.im == 0:
            lines.append(f"  {re_text}  (real)")
        elif conjugate is not None:
            seen.add((conjugate.re, conjugate.im))
            lines.append(f"  {re_text} +/- {fraction_to_decimal(abs(c.im), digits)}i")
        else:
            lines.append(f"  {re_text} + {fraction_to_decimal(c.im, digits)}i")
        seen.add((c.re, c.im))
    return lines


def cmd_solve(args: argparse.Namespace) -> int:
    config = _config_from(args)
    p = poly_parse(args.polynomial)
    digits = _decimal_digits(config.tolerance)
    report = solve_real(p, config.tolerance)
    complex_report = solve_complex(p, config.tolerance) if config.want_complex else None
    if config.fmt == "json":
        payload = {
            "polynomial": poly_to_text(p),
            "tolerance": rational_to_str(config.tolerance),
            "bound": rational_to_str(report.bound),
            "real_roots": _real_roots_payload(report, digits),
        }
        if complex_report is not None:
            payload["complex_roots"] = [
                {
                    "re": rational_to_str(c.re),
                    "im": rational_to_str(c.im),
                    "re_decimal": fraction_to_decimal(c.re, digits),
                    "im_decimal": fraction_to_decimal(c.im, digits),
                    "residual": c.residual,
                }
                for c in complex_report.pairs
            ]
        _emit(json.dumps(payload, indent=2), config.out)
    else:
        lines = [f"polynomial: {poly_to_text(p)}", f"bound: {rational_to_str(report.bound)}"]
        if not report.roots:
            lines.append("no real roots")
        else:
            lines.append(f"real roots ({len(report.roots)}):")
            for r in report.roots:
                extras = []
                if r.residual == 0:
                    extras.append(f"exact {rational_to_str(r.value)}")
                extras.append(f"residual {float(r.residual):.2e}")
                if r.multiplicity > 1:
                    extras.append(f"multiplicity {r.multiplicity}")
                extras.append("certified" if r.certified else "UNCERTIFIED")
                lines.append(
                    f"  x = {fraction_to_decimal(r.value, digits)}  in "
                    f"({rational_to_str(r.isolating.lo)}, {rational_to_str(r.isolating.hi)}]  "
                    + "  ".join(extras)
                )
        if complex_report is not None:
            if complex_report.pairs:
                lines.append(f"complex roots ({len(complex_report.pairs)}):")
                lines.extend(_format_complex_pairs(complex_report.pairs, digits))
            else:
                lines.append("no complex roots found")
        _emit("\n".join(lines), config.out)
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    config = _config_from(args)
    p = poly_parse(args.polynomial)
    red = reduce_roots(p)
    if config.fmt == "json":
        payload = {
            "polynomial": poly_to_text(p),
            "real_part_poly": poly_to_text(red.q_re),
            "imag_part_poly": poly_to_text(red.q_im),
        }
        _emit(json.dumps(payload, indent=2), config.out)
    else:
        _emit(
            "\n".join(
                [
                    f"polynomial: {poly_to_text(p)}",
                    f"real-part companion: {poly_to_text(red.q_re)}",
                    f"imag-part companion: {poly_to_text(red.q_im)}",
                ]
            ),
            config.out,
        )
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    config = _config_from(args)
    script = compile(poly_parse(args.polynomial))
    bound = _effective_bound(script, config)
    if config.fmt == "json":
        _emit(json.dumps({"bound": rational_to_str(bound)}), config.out)
    else:
        _emit(f"bound: {rational_to_str(bound)}", config.out)
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    config = _config_from(args)
    if config.x is None:
        raise _UsageError("render requires --x")
    script = _load_script(args.script_or_poly)
    cs = evaluate(elaborate(script), config.x, bound=_effective_bound(script, config))
    _emit(render_svg(cs), config.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser wiring
# ---------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    parser.add_argument("--tolerance", help="positive tolerance (decimal, p/q, or scientific)")
    parser.add_argument("--bound", help="override the parameter bound (must be >= computed)")
    parser.add_argument("--format", choices=formats, default="text")
    parser.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multifold", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_compile = sub.add_parser("compile", help="compile a polynomial into a fold script")
    p_compile.add_argument("polynomial")
    _add_common(p_compile, ("text", "json"))
    p_compile.set_defaults(func=cmd_compile)

    p_sim = sub.add_parser("simulate", help="evaluate a script's scene at a parameter value")
    p_sim.add_argument("script_or_poly", help="polynomial text or path to a fold-script JSON file")
    p_sim.add_argument("--x", help="parameter value (rational)")
    _add_common(p_sim, ("text", "json", "svg"))
    p_sim.set_defaults(func=cmd_simulate)

    p_solve = sub.add_parser("solve", help="find roots via the alignment condition")
    p_solve.add_argument("polynomial")
    p_solve.add_argument("--complex", action="store_true", help="also assemble complex roots")
    _add_common(p_solve, ("text", "json"))
    p_solve.set_defaults(func=cmd_solve)

    p_reduce = sub.add_parser("reduce", help="real/imaginary-part companion polynomials")
    p_reduce.add_argument("polynomial")
    _add_common(p_reduce, ("text", "json"))
    p_reduce.set_defaults(func=cmd_reduce)

    p_bound = sub.add_parser("bound", help="print the parameter bound for a polynomial")
    p_bound.add_argument("polynomial")
    _add_common(p_bound, ("text", "json"))
    p_bound.set_defaults(func=cmd_bound)

    p_render = sub.add_parser("render", help="render the scene at a parameter value as SVG")
    p_render.add_argument("script_or_poly")
    p_render.add_argument("--x", help="parameter value (rational)")
    _add_common(p_render, ("svg",))
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # argparse --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PolyParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except MultifoldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
