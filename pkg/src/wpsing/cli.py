"""Command-line front end: ``wpsing <command> [options] [--json]``.

Every command is a thin adapter over a library call.  Exit codes: 0 ok,
2 bad arguments, 3 consistency or integrality failure, 4 enumeration budget
exhausted.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import __version__
from .bpfamily import Family4Input, bp_analyze, family4_analyze
from .errors import ArgumentError, ConsistencyError, StateError, WpsingError
from .exactmath import det_exact, format_rational, hj_expansion
from .fpgroups import (
    abelianization,
    build,
    builder_params,
    count_epimorphisms_to_S3,
    homomorphism_coset_table,
    parse_presentation,
    reidemeister_schreier,
    todd_coxeter,
)
from .fpgroups.todd_coxeter import default_budget
from .leyomdin import (
    WlyCurveData,
    conjecture2_scan,
    conjecture_scan,
    cyclic_germ_det,
    ly_det,
    ly_intersection_matrix,
    si_det,
    si_intersection_matrix,
    wly_det,
    wly_det_matrix,
    wly_intersection_matrix,
)
from .plumbing import PlumbingGraph, classify_link, det_singularity
from .poly import (
    MultiPoly,
    are_collinear,
    catalog,
    cremona_push,
    flex_tangency_points,
    kummer_pull,
    parse_poly,
    strip_monomial_factor,
    wdegree_decompose,
)
from .quotientsing import CyclicQuotient, normalize, resolve_bamboo
from .wproj import Weight3, bezout, normalize_weight, quasi_smooth_genus, stratify, vertex_singularities

EXIT_OK, EXIT_ARGUMENT, EXIT_CONSISTENCY, EXIT_BUDGET = 0, 2, 3, 4


@dataclass
class CommandResult:
    payload: Any
    exit_code: int = EXIT_OK
    text: str = ""
    as_json: bool = False
    error: Optional[str] = None

    def render(self) -> str:
        if self.as_json:
            return dumps(self.payload)
        return self.text


class _ArgparseExit(Exception):
    def __init__(self, code, message=""):
        super().__init__(message)
        self.code = code
        self.message = message


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgparseExit(EXIT_ARGUMENT, f"{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        raise _ArgparseExit(status, message or "")


# --------------------------------------------------------------------------
# serialization

def to_jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(v) for v in obj)
    return str(obj)


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True)


def _table(rows: Sequence[Sequence], header: Sequence[str]) -> str:
    cells = [[str(h) for h in header]] + [[_cell(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _cell(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_cell(x) for x in v) + "]"
    return str(v)


def _kv(payload: dict) -> str:
    width = max((len(k) for k in payload), default=0)
    return "\n".join(f"{k.ljust(width)}  {_cell(v) if not isinstance(v, dict) else dumps(v)}"
                     for k, v in sorted(payload.items()))


# --------------------------------------------------------------------------
# argument helpers

def int_list(text: str, n: Optional[int] = None) -> tuple:
    try:
        vals = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ArgumentError(f"expected comma-separated integers, got {text!r}") from None
    if n is not None and len(vals) != n:
        raise ArgumentError(f"expected {n} integers, got {text!r}")
    return vals


def int_range(text: str) -> range:
    """``K`` or ``K1..K2`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise ArgumentError(f"expected K or K1..K2, got {text!r}") from None
    if lo > hi:
        raise ArgumentError(f"empty range {text!r}")
    return range(lo, hi + 1)


def read_poly(text: str) -> MultiPoly:
    """Inline expression, file path, or ``catalog:NAME``."""
    if text.startswith("catalog:"):
        return catalog(text.split(":", 1)[1])
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read().strip()
    return parse_poly(text, 3)


def _poly_payload(f: MultiPoly, w) -> dict:
    pieces = wdegree_decompose(f, w)
    out = {"poly": str(f), "weight": list(w), "wdegrees": sorted(pieces),
           "whomogeneous": len(pieces) == 1}
    if not f.is_zero():
        g, low = strip_monomial_factor(f)
        out["monomial_factor"] = list(low)
        out["stripped"] = str(g)
    return out


# --------------------------------------------------------------------------
# commands

def cmd_hj(a):
    bs = hj_expansion(a.d, a.a)
    g = PlumbingGraph.bamboo(-b for b in bs)
    p = {"d": a.d, "a": a.a, "hj": bs, "self_intersections": [-b for b in bs],
         "det": det_singularity(g)}
    return p, _kv(p)


def cmd_quotient(a):
    s = CyclicQuotient.parse(a.sing)
    n = normalize(s)
    p = {"input": str(s), "normalized": str(n), "order": n.d, "smooth": n.d == 1,
         "dual": str(n.dual())}
    if n.d > 1:
        g = resolve_bamboo(s)
        p["hj"] = hj_expansion(n.d, n.q)
        p["det"] = det_singularity(g)
    return p, _kv(p)


def cmd_weight(a):
    w = Weight3.parse(a.w)
    nz = normalize_weight(w)
    verts = vertex_singularities(nz.alpha)
    strata = stratify(w)
    p = {"weight": list(w), "d": list(nz.d), "alpha": list(nz.alpha),
         "vertices": {k: str(normalize(v)) for k, v in zip(("Px", "Py", "Pz"), verts)},
         "strata": {lab: {"members": sorted(s.members),
                          "transverse": None if s.transverse is None else str(s.transverse)}
                    for lab, s in strata.items()}}
    rows = [(lab, ",".join(sorted(s.members)) or "-", "" if s.transverse is None else str(s.transverse))
            for lab, s in strata.items()]
    head = _kv({k: p[k] for k in ("weight", "d", "alpha")})
    vert = "\n".join(f"{k}  {v}" for k, v in p["vertices"].items())
    return p, head + "\n" + vert + "\n" + _table(rows, ("stratum", "classes", "germ"))


def cmd_bezout(a):
    w = Weight3.parse(a.w)
    p = {"weight": list(w), "deg1": a.deg1, "deg2": a.deg2, "intersection": bezout(a.deg1, a.deg2, w)}
    return p, _kv(p)


def cmd_genus(a):
    w = Weight3.parse(a.w)
    g = quasi_smooth_genus(a.deg, w)
    p = {"weight": list(w), "degree": a.deg, "genus": g}
    if g.denominator != 1 or g < 0:
        raise ConsistencyError(f"genus {format_rational(g)} is not a nonnegative integer; "
                               "no quasi-smooth curve of this degree")
    return p, _kv(p)


def cmd_cremona(a):
    alpha, beta = int_list(a.alpha, 3), int_list(a.beta, 2)
    f = read_poly(a.poly)
    F = cremona_push(f, alpha, beta)
    p = _poly_payload(F, alpha)
    p.update({"alpha": list(alpha), "beta": list(beta), "input": str(f)})
    return p, _kv(p)


def cmd_kummer(a):
    d = int_list(a.d, 3)
    f = read_poly(a.poly)
    F = kummer_pull(f, d)
    w = (d[1] * d[2], d[0] * d[2], d[0] * d[1])
    p = _poly_payload(F, w)
    p.update({"d": list(d), "input": str(f)})
    return p, _kv(p)


def cmd_flexes(a):
    pts = flex_tangency_points(a.lam)
    col = are_collinear(*pts)
    p = {"lambda": a.lam, "points": [[str(c) for c in pt] for pt in pts], "collinear": col}
    text = "\n".join(f"{ax}=0  [{':'.join(str(c) for c in pt)}]" for ax, pt in zip("xyz", pts))
    return p, text + f"\ncollinear  {'yes' if col else 'no'}"


def cmd_det_graph(a):
    path = a.json_file or a.graph
    if path is None:
        raise ArgumentError("det-graph needs --json FILE or --graph FILE")
    try:
        with open(path, encoding="utf-8") as fh:
            g = PlumbingGraph.from_json(fh.read())
    except OSError as exc:
        raise ArgumentError(f"cannot read {path}: {exc}") from None
    p = {"det": det_singularity(g)}
    p.update(classify_link(g).as_dict())
    return p, _kv(p)


def _matrix_rows(A):
    return [[format_rational(x) for x in row] for row in A]


def cmd_si_det(a):
    deltas = int_list(a.deltas)
    A = si_intersection_matrix(a.d, deltas)
    p = {"d": a.d, "deltas": list(deltas), "det": si_det(a.d, deltas),
         "det_matrix": det_exact([[-x for x in r] for r in A])}
    return p, _kv(p)


def cmd_ly_det(a):
    deltas = int_list(a.deltas)
    germs = int_list(a.germ_dets) if a.germ_dets else ()
    A = ly_intersection_matrix(a.d, a.k, deltas)
    p = {"d": a.d, "k": a.k, "deltas": list(deltas), "germ_dets": list(germs),
         "det": ly_det(a.d, a.k, deltas, germs),
         "det_matrix": det_exact([[-x for x in r] for r in A])}
    return p, _kv(p)


def _wly_data(a) -> WlyCurveData:
    return WlyCurveData(Weight3.parse(a.w), a.k, a.d,
                        int_list(a.deltas) if a.deltas else (),
                        int_list(a.eps, 3), int_list(a.germ_dets) if a.germ_dets else ())


def cmd_wly_det(a):
    data = _wly_data(a)
    p = {"weight": list(data.weight), "k": data.k, "d": data.d, "deltas": list(data.deltas),
         "eps": list(data.eps), "germ_dets": list(data.germ_dets),
         "det_matrix": wly_det_matrix(data), "det": wly_det(data)}
    return p, _kv(p)


def cmd_wly_matrix(a):
    data = _wly_data(a)
    A = wly_intersection_matrix(data)
    p = {"matrix": _matrix_rows(A), "det_minus_A": det_exact([[-x for x in r] for r in A]),
         "components": [list(c) for c in data.components()]}
    text = "\n".join("  ".join(r) for r in p["matrix"])
    return p, text + f"\ndet(-A)  {format_rational(p['det_minus_A'])}"


def cmd_cyclic_det(a):
    rows = []
    for k in int_range(a.k):
        g = cyclic_germ_det(a.a, a.b, k)
        rows.append({"k": k, "det": g.det, "genus": g.exceptional_genus, "qhs": g.is_QHS})
    text = _table([(r["k"], r["det"], r["genus"], r["qhs"]) for r in rows], ("k", "det", "genus", "qhs"))
    return rows, text


def cmd_bp(a):
    p = bp_analyze(*int_list(a.n, 3)).as_dict()
    return p, _kv(p)


def cmd_family4(a):
    inp = Family4Input(int_list(a.n, 4), int_list(a.b2, 2), int_list(a.b3, 3))
    res = family4_analyze(inp, int_range(a.dq_scan) if a.dq_scan else ())
    p = res.as_dict()
    bad = [dq for dq, v in res.dq_checks.items() if v != res.det_closed]
    if bad:
        raise ConsistencyError(f"graph determinant differs from {res.det_closed} for dq in {bad}")
    if not res.genera_integral:
        return p, _kv(p), EXIT_CONSISTENCY, "genus formulas give a non-integral value"
    return p, _kv(p)


def cmd_conjecture_scan(a):
    r = conjecture_scan(a.a, a.b, a.kmax)
    p = r.as_dict()
    rows = [(res, " ".join(p["fits"][str(res)])) for res in sorted(r.fits)]
    head = _kv({"a": r.a, "b": r.b, "kmax": r.k_max, "period": r.period, "lcm": r.lcm,
                "verdict": r.verdict})
    return p, head + ("\n" + _table(rows, ("residue", "fit coefficients")) if rows else "")


def cmd_conjecture2_scan(a):
    stats = {}
    found = conjecture2_scan(a.bound, a.max_germs, stats)
    text = f"checked {stats.get('checked', '?')} cases, {len(found)} counterexamples"
    if found:
        text += "\n" + "\n".join(dumps(c) for c in found)
    return found, text


GROUP_ACTIONS = ("show", "abelianization", "order", "rs", "s3-count")


def _group_presentation(a, builder):
    if a.pres:
        return parse_presentation(a.pres)
    if builder is None:
        raise ArgumentError("group needs a builder name or --pres")
    params = {}
    for name in builder_params(builder):
        raw = getattr(a, name, None)
        if raw is None:
            raise ArgumentError(f"builder {builder} needs --{name}")
        if name in ("alpha", "beta"):
            params[name] = int_list(raw, 3 if name == "alpha" else 2)
        else:
            try:
                params[name] = int(raw)
            except ValueError:
                raise ArgumentError(f"--{name} must be an integer, got {raw!r}") from None
    return build(builder, **params)


def cmd_group(a):
    words = list(a.words)
    builder = None if a.pres else (words.pop(0) if words else None)
    action = words.pop(0) if words else "abelianization"
    if words:
        raise ArgumentError(f"unexpected arguments {words}")
    if action not in GROUP_ACTIONS:
        raise ArgumentError(f"unknown action {action!r}; choose from {list(GROUP_ACTIONS)}")
    P = _group_presentation(a, builder)
    budget = a.max_cosets if a.max_cosets is not None else default_budget()
    p = {"presentation": str(P), "action": action}
    code = EXIT_OK
    if action == "show":
        pass
    elif action == "abelianization":
        p.update(abelianization(P).as_dict())
    elif action == "order":
        r = todd_coxeter(P, (), budget)
        p.update(r.as_dict())
        if not r.finished:
            code = EXIT_BUDGET
    elif action == "s3-count":
        p["s3_epimorphisms"] = count_epimorphisms_to_S3(P)
    elif action == "rs":
        if a.index_2 or a.parity:
            odd = a.parity.split(",") if a.parity else [P.generators[0]]
            bad = [g for g in odd if g not in P.generators]
            if bad:
                raise ArgumentError(f"unknown generators {bad}")
            table = homomorphism_coset_table(P, [int(g in odd) for g in P.generators], 2)
        elif a.subgroup:
            r = todd_coxeter(P, [P.word(w) for w in a.subgroup], budget)
            if not r.finished:
                p.update(r.as_dict())
                return p, _kv(p), EXIT_BUDGET, "coset enumeration ran out of budget"
            table = r.table
        else:
            raise ArgumentError("rs needs --index-2, --parity or --subgroup")
        K = reidemeister_schreier(P, table, a.transversal)
        p.update({"index": len(table), "subgroup": str(K), "subgroup_generators": K.ngens,
                  "subgroup_abelianization": abelianization(K).as_dict()})
    text = _kv({k: v for k, v in p.items()})
    if code == EXIT_BUDGET:
        return p, text, code, f"coset enumeration ran out of budget after {p['cosets_used']} cosets"
    return p, text


# --------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wpsing", description="Exact invariants of surface singularities, "
                     "weighted projective plane curves and their complement groups.")
    parser.add_argument("--version", action="version", version=f"wpsing {__version__}")
    parser.add_argument("--json", dest="json_out", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)

    def cmd(name, func, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        p.set_defaults(func=func)
        if name != "det-graph":
            p.add_argument("--json", dest="json_out", action="store_true", default=argparse.SUPPRESS,
                           help="machine-readable output")
        return p

    p = cmd("hj", cmd_hj, "Hirzebruch-Jung expansion of d/a and its bamboo")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", type=int, required=True)

    p = cmd("quotient", cmd_quotient, "normalize and resolve a cyclic quotient 1/d(a,b)")
    p.add_argument("--sing", required=True)

    p = cmd("weight", cmd_weight, "weight normalization, vertex singularities and strata")
    p.add_argument("--w", required=True)

    p = cmd("bezout", cmd_bezout, "intersection number of two curves in P^2_w")
    p.add_argument("--w", required=True)
    p.add_argument("--deg1", type=int, required=True)
    p.add_argument("--deg2", type=int, required=True)

    p = cmd("genus", cmd_genus, "genus of a quasi-smooth curve in P^2_w")
    p.add_argument("--w", required=True)
    p.add_argument("--deg", type=int, required=True)

    p = cmd("cremona", cmd_cremona, "push a plane curve through the weighted Cremona map")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--poly", required=True, help="expression, file, or catalog:NAME")

    p = cmd("kummer", cmd_kummer, "pull a plane curve back by the Kummer cover")
    p.add_argument("--d", required=True)
    p.add_argument("--poly", required=True, help="expression, file, or catalog:NAME")

    p = cmd("flexes", cmd_flexes, "tangency points of H_lambda with the axes")
    p.add_argument("--lambda", dest="lam", required=True, choices=("1", "zeta", "zeta2"))

    p = cmd("det-graph", cmd_det_graph, "determinant and link type of a plumbing graph")
    p.add_argument("--json", dest="json_file", metavar="FILE", help="graph file; output is JSON")
    p.add_argument("--graph", metavar="FILE", help="graph file; output is a table")

    p = cmd("si-det", cmd_si_det, "determinant of a superisolated singularity")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--deltas", required=True)

    p = cmd("ly-det", cmd_ly_det, "determinant of a Le-Yomdin singularity")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--deltas", required=True)
    p.add_argument("--germ-dets", default="")

    for name, func, help_ in (("wly-det", cmd_wly_det, "determinant of a weighted Le-Yomdin singularity"),
                              ("wly-matrix", cmd_wly_matrix, "intersection matrix of the quasi-tangent cone")):
        p = cmd(name, func, help_)
        p.add_argument("--w", required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--deltas", default="")
        p.add_argument("--eps", default="0,0,0")
        p.add_argument("--germ-dets", default="")

    p = cmd("cyclic-det", cmd_cyclic_det, "determinants of z^k = x^a + y^b over a range of k")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", required=True, help="K or K1..K2")

    p = cmd("bp", cmd_bp, "Brieskorn-Pham analysis of x^n1 + y^n2 + z^n3")
    p.add_argument("--n", required=True)

    p = cmd("family4", cmd_family4, "complete intersection family in C^4")
    p.add_argument("--n", required=True)
    p.add_argument("--b2", default="0,0")
    p.add_argument("--b3", default="0,0,0")
    p.add_argument("--dq-scan", default=None, help="K1..K2")

    p = cmd("conjecture-scan", cmd_conjecture_scan, "periodicity scan of cyclic-germ determinants")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--kmax", type=int, default=60)

    p = cmd("conjecture2-scan", cmd_conjecture2_scan, "bounded search for homology-sphere Le-Yomdin links")
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--max-germs", type=int, default=3)

    p = cmd("group", cmd_group, "finitely presented groups: "
            "group <builder | --pres TEXT> [show|abelianization|order|rs|s3-count]")
    p.add_argument("words", nargs="*")
    p.add_argument("--pres")
    p.add_argument("--max-cosets", type=int, default=None)
    for name in ("p", "q", "r", "n", "A", "d1", "d2", "d3"):
        p.add_argument(f"--{name}")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--index-2", action="store_true", help="kernel of the map sending --parity generators to 1")
    p.add_argument("--parity", help="comma-separated generators mapped to 1 (default: the first)")
    p.add_argument("--subgroup", action="append", help="subgroup generator word (repeatable)")
    p.add_argument("--transversal", choices=("bfs", "dfs"), default="bfs")
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    argv = list(argv)
    try:
        args, rest = parser.parse_known_args(argv)
        if rest:
            if getattr(args, "command", None) == "group" and not any(r.startswith("-") for r in rest):
                args.words = list(args.words) + rest
            else:
                parser.error(f"unrecognized arguments: {' '.join(rest)}")
        if not getattr(args, "command", None):
            parser.error("a command is required")
    except _ArgparseExit as exc:
        return CommandResult(None, exc.code, exc.message.rstrip() if exc.code == 0 else "",
                             error=exc.message.rstrip() if exc.code else None)
    as_json = bool(getattr(args, "json_out", False)) or bool(getattr(args, "json_file", None))
    try:
        out = args.func(args)
    except ConsistencyError as exc:
        return CommandResult({"error": str(exc)}, EXIT_CONSISTENCY, as_json=as_json, error=str(exc))
    except (ArgumentError, StateError) as exc:
        return CommandResult({"error": str(exc)}, EXIT_ARGUMENT, as_json=as_json, error=str(exc))
    except OverflowError as exc:
        return CommandResult({"error": str(exc)}, EXIT_ARGUMENT, as_json=as_json, error=str(exc))
    except WpsingError as exc:
        return CommandResult({"error": str(exc)}, EXIT_CONSISTENCY, as_json=as_json, error=str(exc))
    payload, text = out[0], out[1]
    code = out[2] if len(out) > 2 else EXIT_OK
    err = out[3] if len(out) > 3 else None
    return CommandResult(payload, code, text, as_json=as_json, error=err)


def main(argv: Optional[Sequence[str]] = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    out = res.render()
    if out:
        print(out)
    if res.error:
        print(res.error, file=sys.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
