"""Command line interface: JSON in, JSON out.

Exit codes: 0 success, 1 domain error (unbounded, empty interior, singular
head block, failed checks), 2 malformed input or usage.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import verify as verify_mod
from .center import SolverConfig, center_closed_form, center_newton, cross_check_center
from .construct import GeneratorConfig, enumerate_vertices, make_equal_gamma_simplex, random_bounded_simplex
from .errors import InputError, SimplexError
from .gamma import UnboundedCertificate, check_bounded, compute_gamma, evaluate_invariant
from .probe import harmonic_function, harmonic_point_on_line, probe_line
from .simplex import Simplex, as_point, normalize_rows

FORMAT = "simplex/1"


class UsageError(InputError):
    code = "UsageError"


class ParseError(InputError):
    code = "ParseError"


def dumps(obj) -> str:
    """JSON with every float written to 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return format(x, ".17g") if math.isfinite(x) else "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist())
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _check_array(doc: dict, key: str, depth: int):
    if key not in doc:
        raise ParseError(f"missing key {key!r}")
    try:
        arr = np.array(doc[key], dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{key!r} must be a numeric array") from exc
    if arr.ndim != depth:
        raise ParseError(f"{key!r} must be a {'matrix' if depth == 2 else 'vector'}")
    return arr


def load_document(path: str) -> dict:
    doc = _read_json(path)
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    fmt = doc.get("format", FORMAT)
    if fmt != FORMAT:
        raise ParseError(f"unsupported format {fmt!r}, expected {FORMAT!r}")
    return doc


def load_simplex(path: str) -> Simplex:
    doc = load_document(path)
    return normalize_rows(_check_array(doc, "A", 2), _check_array(doc, "b", 1))


def _vector(text: str, what: str) -> np.ndarray:
    try:
        vals = json.loads(text) if text.lstrip().startswith("[") else [float(t) for t in text.split(",")]
        return np.atleast_1d(np.array(vals, dtype=float))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"cannot parse {what} {text!r}") from exc


def _direction(s: Simplex, args) -> np.ndarray:
    if args.axis is not None:
        if not 1 <= args.axis <= s.dim:
            raise UsageError(f"--axis must be between 1 and {s.dim}")
        v = np.zeros(s.dim)
        v[args.axis - 1] = 1.0
        return v
    if args.direction is None:
        raise UsageError("one of --direction or --axis is required")
    v = as_point(s, _vector(args.direction, "direction"))
    nrm = np.linalg.norm(v)
    if nrm == 0:
        raise UsageError("direction must be nonzero")
    return v / nrm


def _solver_config(args) -> SolverConfig:
    kw = {}
    if getattr(args, "tol", None) is not None:
        kw["eq24_tol"] = args.tol
    if getattr(args, "max_iter", None) is not None:
        kw["max_iterations"] = args.max_iter
    try:
        return SolverConfig(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_normalize(args):
    return 0, load_simplex(args.input).to_json()


def cmd_gamma(args):
    s = load_simplex(args.input)
    g = compute_gamma(s)
    return 0, {
        "gamma": g.gamma,
        "b0": g.b0,
        "invariant_constant": g.invariant_constant,
        "bounded_by_gamma": g.bounded_by_gamma,
        "degenerate": [i + 1 for i in g.degenerate],
    }


def cmd_check_bounded(args):
    s = load_simplex(args.input)
    cert = check_bounded(s)
    if isinstance(cert, UnboundedCertificate):
        out = {"error": "Unbounded", "gamma": cert.gamma, "warnings": list(cert.warnings)}
        if cert.offending_index is not None:
            out["offending_index"] = cert.offending_index + 1
        if cert.witness_direction is not None:
            out["witness_direction"] = cert.witness_direction
        return 1, out
    return 0, {"bounded": True, "gamma": cert.gamma, "warnings": list(cert.warnings)}


def cmd_center(args):
    s = load_simplex(args.input)
    cfg = _solver_config(args)
    if args.method == "closed-form":
        res = center_closed_form(s)
    elif args.method == "newton":
        res = center_newton(s, cfg)
    else:
        res = cross_check_center(s, cfg)
    return 0, res.to_json()


def cmd_invariant(args):
    s = load_simplex(args.input)
    g = compute_gamma(s)
    p = _vector(args.point, "point")
    value = evaluate_invariant(s, g, as_point(s, p))
    return 0, {"value": value, "invariant_constant": g.invariant_constant, "difference": value - g.invariant_constant}


def cmd_probe(args):
    s = load_simplex(args.input)
    p = as_point(s, _vector(args.point, "point"))
    pr = probe_line(s, p, _direction(s, args))
    return 0, {
        "base": pr.base,
        "direction": pr.direction,
        "distances": pr.distances,
        "betas": pr.betas,
        "reciprocal_sum": pr.reciprocal_sum(),
    }


def cmd_harmonic_point(args):
    s = load_simplex(args.input)
    p = as_point(s, _vector(args.point, "point"))
    v = _direction(s, args)
    q, t = harmonic_point_on_line(s, p, v)
    return 0, {"point": q, "t": t, "reciprocal_sum": harmonic_function(s, p, v, t)}


def cmd_vertices(args):
    return 0, {"vertices": enumerate_vertices(load_simplex(args.input))}


def cmd_generate(args):
    try:
        cfg = GeneratorConfig(dim=args.dim, seed=args.seed, vertex_scale=args.scale)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return 0, random_bounded_simplex(cfg).to_json()


def cmd_equal_gamma(args):
    doc = load_document(args.input)
    head = _check_array(doc, "A", 2)
    head_b = _check_array(doc, "b", 1)
    if head.shape[0] != head.shape[1] or head_b.shape != (head.shape[0],):
        raise ParseError("equal-gamma input needs a square 'A' (n x n) and 'b' of length n")
    last_b = args.last_b if args.last_b is not None else doc.get("last_b")
    if last_b is None:
        raise UsageError("the last right-hand side is required (--last-b or 'last_b' key)")
    s, gamma = make_equal_gamma_simplex(head, head_b, float(last_b))
    out = s.to_json()
    out["gamma"] = gamma
    return 0, out


def cmd_verify(args):
    s = load_simplex(args.input)
    report = verify_mod.verify_simplex(s, samples=args.samples, seed=args.seed, cfg=_solver_config(args))
    return (0 if report["passed"] else 1), report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="harmonic-simplex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("input", nargs="?", default="-", help="simplex JSON file, '-' for stdin (default)")
        p.set_defaults(func=func)
        return p

    with_input("normalize", cmd_normalize, "scale rows to unit length")
    with_input("gamma", cmd_gamma, "row multipliers of the last constraint")
    with_input("check-bounded", cmd_check_bounded, "boundedness certificate")
    p = with_input("center", cmd_center, "harmonic center")
    p.add_argument("--method", choices=["closed-form", "newton", "both"], default="both")
    p.add_argument("--tol", type=float, help="Newton termination tolerance on the balance residual")
    p.add_argument("--max-iter", type=int, help="Newton iteration cap")
    p = with_input("invariant", cmd_invariant, "evaluate the invariant residual sum at a point")
    p.add_argument("--point", required=True, help="comma-separated coordinates")
    for name, func, text in (
        ("probe", cmd_probe, "signed facet distances along a line"),
        ("harmonic-point", cmd_harmonic_point, "harmonic point on a line"),
    ):
        p = with_input(name, func, text)
        p.add_argument("--point", required=True, help="comma-separated coordinates")
        grp = p.add_mutually_exclusive_group()
        grp.add_argument("--direction", help="comma-separated direction (normalized on input)")
        grp.add_argument("--axis", type=int, help="coordinate axis, 1-based")
    with_input("vertices", cmd_vertices, "enumerate the n+1 vertices")
    p = sub.add_parser("generate", help="random bounded simplex")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=float, default=1.0, help="vertex scale")
    p.set_defaults(func=cmd_generate)
    p = with_input("equal-gamma", cmd_equal_gamma, "append the normalized negative sum of the head rows")
    p.add_argument("--last-b", type=float, help="right-hand side of the new last facet")
    p = with_input("verify", cmd_verify, "run every identity check on one simplex")
    p.add_argument("--samples", type=int, default=100, help="random interior points for the invariant check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float)
    p.add_argument("--max-iter", type=int)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
        code, out = args.func(args)
    except SimplexError as exc:
        code, out = exc.exit_code, exc.to_json()
        print(f"error: {exc}", file=sys.stderr)
    stdout.write(dumps(out) + "\n")
    return code


def main(argv=None):
    sys.exit(run(argv))
