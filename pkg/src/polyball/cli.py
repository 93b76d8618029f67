"""``polyball`` command line: JSON problem files in, deterministic reports out.

Exit status is 0 on success, 1 for bad input and 2 when two independent
computations of the same quantity disagree.
"""

import argparse
import json
import sys
from importlib import resources

from . import ratlin as rl
from . import serialize as ser
from .checks import verify_operator_space, verify_space
from .components import star_satisfiers, weak_star_satisfiers
from .errors import InconsistencyError, InputError
from .opspace import analyze_operator_space
from .polytope import (
    enumerate_vertices,
    facet_classes,
    is_maximal_star_constant,
    minimal_face,
    unit_ball_hrep,
)
from .spaces import analyze_space, embed_into_linf

DEMOS = ("optimal", "y2-closure", "y3", "w1", "w2", "lastex", "hexagon", "prop13",
         "weak-vs-strict")
DEFAULT_OPSPACE_N = 2


def demo_names():
    return DEMOS


def demo_document(name):
    if name not in DEMOS:
        raise InputError(f"unknown demo {name!r}; choose from {', '.join(DEMOS)}")
    text = resources.files("polyball").joinpath("data", f"{name}.json").read_text()
    return json.loads(text)


def parse_beta(text):
    parts = [p for p in text.replace(",", " ").split() if p]
    if not parts:
        raise InputError("--beta needs at least one rational")
    return rl.as_vector(parts)


def _components(problem):
    cs = problem.space()
    return ser.star_report_json(star_satisfiers(cs), weak_star_satisfiers(cs))


def _facets(problem):
    cs = problem.space()
    facets = facet_classes(unit_ball_hrep(cs))
    out = ser.facets_json(facets)
    r = star_satisfiers(cs).strict_count
    if out["facet_count"] != 2 * r:
        raise InconsistencyError(
            f"facet count {out['facet_count']} from redundancy LPs != 2 * strict count {r}")
    out["strict_count"] = r
    return out


def _vertices(problem):
    return ser.vertex_list_json(enumerate_vertices(unit_ball_hrep(problem.space())))


def _embed(problem, s):
    if s is not None and s < 1:
        raise InputError(f"--s must be a positive integer, got {s}")
    cs = problem.space()
    return {
        "embedding": ser.embedding_json(embed_into_linf(cs)),
        "verdict": ser.verdict_json(analyze_space(cs), s),
    }


def _opspace(problem):
    if problem.kind != "extreme_points":
        raise InputError("opspace needs an extreme_points problem")
    n = problem.n if problem.n is not None else DEFAULT_OPSPACE_N
    return ser.opspace_json(analyze_operator_space(problem.data, n))


def _query(problem, beta):
    if beta is None:
        beta = problem.query_beta
    if beta is None:
        raise InputError("query needs --beta or query_beta in the problem file")
    P = unit_ball_hrep(problem.space())
    face = minimal_face(P, beta)
    extreme = face.dim_estimate == 0
    by_lp = is_maximal_star_constant(P, beta)
    if extreme != by_lp:
        raise InconsistencyError(
            f"rank test says extreme={extreme} but LP extension test says {by_lp} "
            f"at beta={ser.vec(beta)}")
    return {"beta": ser.vec(rl.as_vector(beta)), "minimal_face": ser.face_json(face),
            "is_extreme": extreme}


def _verify(problem):
    if problem.kind == "extreme_points":
        n = problem.n if problem.n is not None else DEFAULT_OPSPACE_N
        results = verify_operator_space(problem.data, n)
    else:
        results = verify_space(problem.space())
    return {
        "checks": [{"name": r.name, "status": "PASS" if r.passed else "FAIL",
                    "detail": r.detail} for r in results],
        "all_passed": all(r.passed for r in results),
    }


def _summary(command, body):
    if command == "facets":
        return f"facet_count: {body['facet_count']}"
    if command == "vertices":
        return f"vertex_count: {body['vertex_count']}"
    if command == "opspace":
        return (f"extreme_contractions: {body['extreme_contractions']}, "
                f"facets: {body['facet_count']}")
    if command == "components":
        return f"strict_count: {body['strict_count']}, weak_count: {body['weak_count']}"
    if command == "embed":
        v = body["verdict"]
        return f"r: {v['r']}, iso_to_linf_m: {'yes' if v['iso_to_linf_m'] else 'no'}"
    if command == "query":
        return f"is_extreme: {'yes' if body['is_extreme'] else 'no'}"
    if command == "verify":
        return "verify: " + ("PASS" if body["all_passed"] else "FAIL")
    return None


def analyze(command, problem, s=None, beta=None):
    """Run one subcommand on a parsed problem; returns the report dict."""
    if s is None:
        s = problem.s
    if command == "components":
        body = _components(problem)
    elif command == "facets":
        body = _facets(problem)
    elif command == "vertices":
        body = _vertices(problem)
    elif command == "embed":
        body = _embed(problem, s)
    elif command == "opspace":
        body = _opspace(problem)
    elif command == "query":
        body = _query(problem, beta)
    elif command == "verify":
        body = _verify(problem)
    else:
        raise InputError(f"unknown command {command!r}")
    report = {"command": command, "summary": _summary(command, body),
              "input": ser.echo(problem)}
    if problem.kind == "component_set":
        report["provenance"] = ser.CLOSURE_NOTE
    if problem.kind == "extreme_points" and command not in ("opspace", "verify"):
        report["space"] = "W: the span of the transposed extreme points"
    report.update(body)
    return report


def run_demo(name, s=None):
    problem = ser.parse_problem(demo_document(name))
    if problem.kind == "extreme_points":
        commands = ("opspace", "components", "vertices")
    else:
        commands = ("components", "facets", "vertices", "embed")
    sections = {c: analyze(c, problem, s=s) for c in commands}
    for sec in sections.values():
        sec.pop("input")
        sec.pop("command")
        sec.pop("provenance", None)
    report = {"command": "demo", "demo": name,
              "summary": "; ".join(sec["summary"] for sec in sections.values()),
              "input": ser.echo(problem)}
    if problem.kind == "component_set":
        report["provenance"] = ser.CLOSURE_NOTE
    for c, sec in sections.items():
        sec.pop("summary")
        report[c] = sec
    return report


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; exit 2 is reserved for inconsistencies
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = _Parser(
        prog="polyball", description="Exact geometry of polyhedral subspaces of l_inf^n.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("components", "strict and weak star verdicts per component class"),
        ("facets", "facet count and facet classes of the unit ball"),
        ("vertices", "extreme points of the unit ball in coefficient coordinates"),
        ("embed", "isometric embedding into l_inf^r and the resulting verdicts"),
        ("opspace", "facets and extreme contractions of L(X, l_inf^n)"),
        ("query", "minimal face and extremality of one coefficient vector"),
        ("verify", "cross-check every invariant between independent routes"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--input", required=True, metavar="PATH")
        if name == "embed":
            p.add_argument("--s", type=int, metavar="K", help="embedding target dimension")
        if name == "query":
            p.add_argument("--beta", metavar="RATIONALS",
                           help='coefficients, e.g. "1,-1,1/2"')
    p = sub.add_parser("demo", parents=[common], help="run a bundled example")
    p.add_argument("name", nargs="?", choices=DEMOS, metavar="NAME")
    p.add_argument("--list", action="store_true", help="list bundled examples")
    p.add_argument("--s", type=int, metavar="K")
    return parser


def _emit(report, fmt, out):
    out.write(ser.dumps(report) if fmt == "json" else ser.render_text(report))


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "demo":
            if args.list or args.name is None:
                if args.format == "json":
                    out.write(ser.dumps({"demos": [
                        {"name": d, "source": demo_document(d)["source"]} for d in DEMOS]}))
                else:
                    for d in DEMOS:
                        out.write(f"{d:<15} {demo_document(d)['source']}\n")
                return 0
            report = run_demo(args.name, s=args.s)
        else:
            problem = ser.load_problem(args.input)
            beta = parse_beta(args.beta) if getattr(args, "beta", None) else None
            report = analyze(args.command, problem, s=getattr(args, "s", None), beta=beta)
        _emit(report, args.format, out)
        if args.command == "verify" and not report["all_passed"]:
            return 2
        return 0
    except InputError as exc:
        err.write(f"input error ({type(exc).__name__}): {exc}\n")
        return 1
    except InconsistencyError as exc:
        err.write(f"internal inconsistency: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
