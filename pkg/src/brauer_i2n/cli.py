"""Command-line interface: ``brauer-i2n <verb> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import diagram, embedding, particle, presentation, render
from .errors import BrauerError, InvalidParameter, ParseError, UnsupportedSize

__all__ = ["Command", "parse_args", "execute", "main", "build_parser"]


@dataclass
class Command:
    verb: str
    params: dict = field(default_factory=dict)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="brauer-i2n", description="Brauer algebras of type I_2^n inside type A_{n-1}.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="solve theta and check every relation, rank and injectivity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")

    for verb, text in (
        ("rank", "size of the monoid generated by the phi images"),
        ("theta", "solved delta exponents"),
        ("orbits", "orbit sizes of Y0, Y1, Y2"),
        ("normal-forms", "normal-form count and injectivity"),
    ):
        p = sub.add_parser(verb, help=text)
        p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("particle", help="run the reflecting particle in a 2m x 2k box")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trace", action="store_true", help='print the path as "x y" lines instead of JSON')
    p.add_argument("--svg", type=Path, help="also write folded and unfolded paths as SVG")

    p = sub.add_parser("render", help="draw a diagram given in the JSON diagram format")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")

    p = sub.add_parser("atype-rank", help="enumerate the Brauer monoid of type A_t")
    p.add_argument("--t", type=int, required=True)
    return parser


def parse_args(argv) -> Command:
    """Parse ``argv`` (without the program name); raises ``UsageError``."""
    ns = build_parser().parse_args(list(argv))
    params = {k: v for k, v in vars(ns).items() if k != "verb"}
    return Command(ns.verb, params)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _verify_text(report: embedding.VerificationReport) -> str:
    lines = [f"n = {report.n}"]
    if report.theta is not None:
        for key, value in report.theta.to_dict().items():
            lines.append(f"  {key:<7} {value}")
    if report.error:
        lines.append(f"  error: {report.error}")
    lines.append(f"{'relation':<10}{'holds':<7}exponent")
    for source, holds, exp in report.relation_results:
        lines.append(f"{source:<10}{'yes' if holds else 'NO':<7}{'-' if exp is None else exp}")
    lines.append(f"image rank {report.image_rank}, formula {report.formula_rank}, "
                 f"normal forms injective: {'yes' if report.injective_on_normal_forms else 'no'}")
    return "\n".join(lines)


def execute(cmd: Command, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    p = cmd.params
    try:
        if cmd.verb == "verify":
            report = embedding.verify_presentation(p["n"])
            print(_verify_text(report) if p.get("format") == "text" else report.to_json(), file=out)
            if not report.ok:
                print(f"verification failed for n={p['n']}" + (f": {report.error}" if report.error else ""),
                      file=err)
                return 1
            return 0
        if cmd.verb == "rank":
            n = p["n"]
            rank, formula = embedding.image_rank(n), presentation.formula_rank(n)
            print(_dump({"n": n, "image_rank": rank, "formula_rank": formula}), file=out)
            return 0 if rank == formula else 1
        if cmd.verb == "theta":
            theta = embedding.solve_theta(p["n"])
            print(_dump({"n": theta.n, **theta.to_dict(), "unused": list(theta.unused)}), file=out)
            return 0
        if cmd.verb == "orbits":
            print(embedding.orbit_report(p["n"]).to_json(), file=out)
            return 0
        if cmd.verb == "normal-forms":
            n = p["n"]
            forms = presentation.normal_forms(n)
            ok = embedding.check_normal_form_injectivity(n)
            families = {}
            for f in forms:
                families[f.family] = families.get(f.family, 0) + 1
            print(_dump({
                "n": n,
                "count": len(forms),
                "formula": presentation.formula_rank(n),
                "families": families,
                "injective": ok,
            }), file=out)
            return 0 if ok else 1
        if cmd.verb == "particle":
            spec = particle.BoxSpec(p["m"], p["k"])
            stop, trace = particle.simulate(spec)
            if p.get("svg"):
                Path(p["svg"]).write_text(particle.to_svg(spec, trace), encoding="utf-8")
            if p.get("trace"):
                print("\n".join(f"{s.x} {s.y}" for s in trace), file=out)
                return 0
            closed = particle.closed_form(spec)
            print(_dump({
                "m": spec.m,
                "k": spec.k,
                "stop": list(stop),
                "closed_form": list(closed),
                "steps": len(trace) - 1,
                "relation": particle.classify_relation(spec),
            }), file=out)
            return 0 if tuple(stop) == closed else 1
        if cmd.verb == "render":
            d = diagram.deserialize(Path(p["input"]).read_text(encoding="utf-8"))
            text = render.render_svg(d) if p.get("format") == "svg" else render.render_ascii(d)
            out.write(text)
            return 0
        if cmd.verb == "atype-rank":
            t = p["t"]
            if t < 1:
                raise InvalidParameter(f"t must be >= 1, got {t}")
            count = len(diagram.enumerate_monoid(t))
            expected = diagram.double_factorial_odd(t)
            print(_dump({"t": t, "count": count, "expected": expected}), file=out)
            return 0 if count == expected else 1
    except (InvalidParameter, BrauerError, OSError) as exc:
        print(f"brauer-i2n: {exc}", file=err)
        return 2 if isinstance(exc, (InvalidParameter, ParseError, UnsupportedSize, OSError)) else 1
    print(f"brauer-i2n: unknown verb {cmd.verb!r}", file=err)
    return 2


def main(argv=None) -> int:
    try:
        cmd = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    return execute(cmd)


if __name__ == "__main__":
    sys.exit(main())
