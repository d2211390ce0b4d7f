"""Command-line front end: tables, resolutions and verification reports,
serialized as JSON, aligned text, or LaTeX.

Subcommands: ext-table, poincare, resolve, verify, gamma-dims,
yoneda-product.  Exit codes: 0 all checks pass, 1 verification failure,
2 usage error.  EXTLINE_THREADS caps the worker count for the
embarrassingly parallel pieces; output ordering is canonical regardless.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from . import path_algebra, reps, strings, yoneda
from .ext_table import (
    RouteMismatchError,
    ext_table,
    poincare_numerator,
    poincare_series,
)
from .fields import field_for_characteristic
from .homs import LineAlgebra
from .resolutions import build_resolution, corrupted_resolution, verify_resolution


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("EXTLINE_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    workers = worker_count()
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def poly_str(coeffs) -> str:
    out = ""
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        sign = " - " if c < 0 else (" + " if out else "")
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "t" if e == 1 else f"t^{e}"
            body = mono if mag == 1 else f"{mag}{mono}"
        out += sign + body
    return out or "0"


def format_hom(alg, h) -> str:
    F = alg.field
    if h.is_zero(F):
        return "0"
    names = {"id": "Id", "loop": "Loop", "f": "F", "fstar": "FStar"}
    parts = []
    for gen in sorted(h.coeffs, key=lambda g: g.sort_key()):
        c = h.coeffs[gen]
        base = f"{names[gen.kind]}({gen.i})"
        one = F.one
        if F.is_zero(F.sub(c, one)):
            parts.append(base)
        elif F.is_zero(F.add(c, one)):
            parts.append(f"-{base}")
        else:
            parts.append(f"{c}*{base}")
    return " + ".join(parts)


def psum_str(psum) -> str:
    if not psum.indices:
        return "0"
    return "+".join(f"P{j}" for j in psum.indices)


# --------------------------------------------------------------- emitters


def emit(payload: dict, fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif fmt == "latex":
        text = to_latex(payload)
    else:
        text = to_table(payload)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def to_table(payload: dict) -> str:
    lines = [
        f"n={payload['n']} characteristic={payload['characteristic']} "
        f"max_degree={payload['max_degree']}"
    ]
    data = payload.get("data", {})
    if data:
        width = max(len(key) for key in data) + 2
        header = "cell".ljust(width) + " ".join(
            f"k={k}" for k in range(payload["max_degree"] + 1)
        )
        if all(isinstance(v, list) for v in data.values()):
            lines.append(header)
            for key in sorted(data, key=_cell_key):
                row = data[key]
                cells = " ".join(str(x).rjust(3 + len(str(k)))
                                 for k, x in enumerate(row))
                lines.append(key.ljust(width) + cells)
        else:
            for key in sorted(data, key=_cell_key):
                lines.append(f"{key}: {data[key]}")
    for extra in ("numerator", "denominator", "terms", "word", "classinfo"):
        if extra in payload:
            lines.append(f"{extra}: {payload[extra]}")
    if "differentials" in payload:
        lines.append("differentials:")
        for d in payload["differentials"]:
            lines.append(f"  d_{d['degree']}: {d['source']} -> {d['target']}")
            for row in d["matrix"]:
                lines.append("    [" + ", ".join(row) + "]")
    checks = payload.get("checks", [])
    if checks:
        lines.append("checks:")
        for c in checks:
            detail = f"  ({c['detail']})" if c.get("detail") else ""
            lines.append(f"  [{c['status'].upper():4}] {c['name']}{detail}")
    return "\n".join(lines) + "\n"


def _cell_key(key: str):
    return tuple(int(x) for x in re.findall(r"-?\d+", key)) or (0,)


def to_latex(payload: dict) -> str:
    data = payload.get("data", {})
    K = payload["max_degree"]
    lines = ["\\begin{tabular}{l" + "r" * (K + 1) + "}"]
    lines.append("cell & " + " & ".join(f"$k={k}$" for k in range(K + 1)) + " \\\\ \\hline")
    for key in sorted(data, key=_cell_key):
        row = data[key]
        if isinstance(row, list):
            lines.append(f"$({key})$ & " + " & ".join(str(x) for x in row) + " \\\\")
        else:
            lines.append(f"$({key})$ & \\multicolumn{{{K + 1}}}{{l}}{{{row}}} \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def checks_payload(checks) -> list:
    out = []
    for c in checks:
        out.append(
            {
                "name": c.name,
                "status": "pass" if c.ok else "fail",
                "detail": getattr(c, "detail", "") or "",
            }
        )
    return out


# --------------------------------------------------------------- commands


def cmd_ext_table(args) -> int:
    checks = []
    try:
        table = ext_table(args.n, args.max_deg)
        checks.append({"name": "route agreement", "status": "pass", "detail": ""})
        data = {
            f"{i},{j}": list(table.row(i, j))
            for i in range(1, args.n + 1)
            for j in range(1, args.n + 1)
        }
        ok = True
    except RouteMismatchError as exc:
        checks.append({"name": "route agreement", "status": "fail", "detail": str(exc)})
        data = {}
        ok = False
    payload = {
        "n": args.n,
        "characteristic": args.char,
        "max_degree": args.max_deg,
        "data": data,
        "checks": checks,
    }
    emit(payload, args.format, args.out)
    return 0 if ok else 1


def cmd_poincare(args) -> int:
    n = args.n
    num = poincare_numerator(n, args.i, args.j)
    series = poincare_series(n, args.i, args.j, args.max_deg)
    denom = [1] + [0] * (2 * n - 1) + [-1]
    payload = {
        "n": n,
        "characteristic": args.char,
        "max_degree": args.max_deg,
        "data": {f"{args.i},{args.j}": series},
        "numerator": poly_str(num),
        "denominator": poly_str(denom),
        "checks": [],
    }
    emit(payload, args.format, args.out)
    return 0


def cmd_resolve(args) -> int:
    alg = LineAlgebra(args.n, field_for_characteristic(args.char))
    depth = args.max_deg
    if args.debug_corrupt_sign:
        cx = corrupted_resolution(alg, args.i, depth)
    else:
        cx = build_resolution(alg, args.i, depth)
    report = verify_resolution(cx, args.i)
    terms = [psum_str(cx.term(k)) for k in range(depth + 1)]
    diffs = []
    for k in range(1, depth + 1):
        d = cx.diff(k)
        diffs.append(
            {
                "degree": k,
                "source": psum_str(d.source),
                "target": psum_str(d.target),
                "matrix": [[format_hom(alg, e) for e in row] for row in d.entries],
            }
        )
    payload = {
        "n": args.n,
        "characteristic": args.char,
        "max_degree": depth,
        "data": {},
        "terms": " | ".join(terms) + f" | period {2 * args.n}",
        "differentials": diffs,
        "checks": checks_payload(report.checks),
    }
    emit(payload, args.format, args.out)
    return 0 if report.ok else 1


def _suite_syzygy(alg, seed):
    n, F = alg.n, alg.field
    checks = []
    labels = strings.canonical_labels(n)

    def one(label):
        realized = strings.realize_x(n, F, label)
        omega = reps.syzygy(realized)
        expected = strings.realize_x(n, F, strings.syzygy_label(n, label))
        return reps.is_isomorphic(omega, expected, seed=seed)

    results = _pmap(one, labels)
    bad = [str(lab) for lab, ok in zip(labels, results) if not ok]
    checks.append(
        ResultCheck("syzygies of all canonical strings match their labels",
                    not bad, ", ".join(bad)))
    bad = []
    for i in range(1, n + 1):
        m = reps.syzygy_power(reps.simple_rep(n, F, i), n)
        if not reps.is_isomorphic(m, reps.simple_rep(n, F, n + 1 - i), seed=seed):
            bad.append(f"half-period at S_{i}")
        m2 = reps.syzygy_power(m, n)
        if not reps.is_isomorphic(m2, reps.simple_rep(n, F, i), seed=seed):
            bad.append(f"full period at S_{i}")
    checks.append(ResultCheck("syzygy periodicity", not bad, ", ".join(bad)))
    return checks


class ResultCheck:
    def __init__(self, name, ok, detail=""):
        self.name = name
        self.ok = ok
        self.detail = detail


def cmd_verify(args) -> int:
    alg = LineAlgebra(args.n, field_for_characteristic(args.char))
    checks = []
    suites = ["syzygy", "resolution", "relations", "gamma"] if args.suite == "all" else [args.suite]
    for suite in suites:
        if suite == "syzygy":
            checks.extend(_suite_syzygy(alg, args.seed))
        elif suite == "resolution":
            for i in range(1, args.n + 1):
                report = verify_resolution(build_resolution(alg, i, args.max_deg), i)
                for c in report.checks:
                    checks.append(ResultCheck(f"R_{i}: {c.name}", c.ok, c.detail))
        elif suite == "relations":
            report = yoneda.verify_chain_relations(alg)
            for c in report.checks:
                checks.append(ResultCheck(f"relation: {c.name}", c.ok, c.detail))
        elif suite == "gamma":
            K = args.max_deg if args.max_deg is not None else 2 * args.n + 2
            report = path_algebra.verify_presentation(alg, K)
            for c in report.checks:
                checks.append(ResultCheck(f"presentation: {c.name}", c.ok, c.detail))
    ok = all(c.ok for c in checks)
    payload = {
        "n": args.n,
        "characteristic": args.char,
        "max_degree": args.max_deg if args.max_deg is not None else 4 * args.n,
        "data": {},
        "checks": checks_payload(checks),
    }
    payload["status"] = "PASS" if ok else "FAIL"
    emit(payload, args.format, args.out)
    return 0 if ok else 1


def cmd_gamma_dims(args) -> int:
    alg = LineAlgebra(args.n, field_for_characteristic(args.char))
    K = args.max_deg
    gd = path_algebra.graded_dimension(args.n, K, alg.field)
    table = ext_table(args.n, K)
    data = {}
    bad = []
    for i in range(1, args.n + 1):
        for j in range(1, args.n + 1):
            row = [gd.dim(i, j, k) for k in range(K + 1)]
            data[f"{i},{j}"] = row
            for k in range(K + 1):
                if row[k] != table.entry(i, j, k):
                    bad.append((i, j, k))
    checks = [
        {
            "name": "graded dimensions match Ext table",
            "status": "pass" if not bad else "fail",
            "detail": str(bad) if bad else "",
        }
    ]
    payload = {
        "n": args.n,
        "characteristic": args.char,
        "max_degree": K,
        "data": data,
        "checks": checks,
    }
    emit(payload, args.format, args.out)
    return 0 if not bad else 1


_TOKEN = re.compile(r"^(x|y)(\d+)(\*?)$")


def parse_word(n: int, text: str):
    tokens = [t for t in re.split(r"[,\s.]+", text.strip()) if t]
    arrows = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"cannot parse arrow {tok!r} (expected like x1, x2*, y3)")
        kind, idx, star = m.group(1), int(m.group(2)), m.group(3)
        if kind == "y" and star:
            raise ValueError("turnaround arrows have no starred version")
        arrows.append(("xstar" if star else kind, idx))
    return path_algebra.PathWord(n, tuple(arrows))


def cmd_yoneda_product(args) -> int:
    alg = LineAlgebra(args.n, field_for_characteristic(args.char))
    try:
        word = parse_word(args.n, args.word)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    cls = path_algebra.evaluate_word(alg, word)
    verdict = "nonzero" if cls.nonzero else "zero"
    payload = {
        "n": args.n,
        "characteristic": args.char,
        "max_degree": cls.k,
        "data": {f"{cls.i},{cls.j}": verdict},
        "word": str(word),
        "classinfo": f"Ext^{cls.k}(S_{cls.i}, S_{cls.j}) class is {verdict}",
        "checks": [],
    }
    emit(payload, args.format, args.out)
    return 0


# ------------------------------------------------------------------ main


def _add_common(p, need_ij=False):
    p.add_argument("--n", type=int, required=True, help="number of simple modules")
    p.add_argument("--char", type=int, default=2,
                   help="field characteristic, 0 or a prime (default 2)")
    p.add_argument("--max-deg", type=int, default=None, help="top degree (default 4N)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    p.add_argument("--format", choices=["json", "table", "latex"], default="table")
    p.add_argument("--out", default=None, help="write output to this file")
    if need_ij:
        p.add_argument("--i", type=int, required=True)
        p.add_argument("--j", type=int, required=True)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="extline",
        description="Exact Ext-algebra computations for the Brauer line algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ext-table", help="table of dim Ext^k(S_i, S_j)")
    _add_common(p)
    p.set_defaults(func=cmd_ext_table)

    p = sub.add_parser("poincare", help="Poincare series of one (i, j) cell")
    _add_common(p, need_ij=True)
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("resolve", help="closed-form minimal resolution of S_i")
    _add_common(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--debug-corrupt-sign", action="store_true",
                   help="negative control: damage one differential entry")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("verify", help="run a verification suite")
    _add_common(p)
    p.add_argument("--suite", choices=["syzygy", "resolution", "relations", "gamma", "all"],
                   default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gamma-dims", help="graded dimensions of the presented algebra")
    _add_common(p)
    p.set_defaults(func=cmd_gamma_dims)

    p = sub.add_parser("yoneda-product", help="evaluate a word in the generators")
    _add_common(p)
    p.add_argument("--word", required=True,
                   help="arrows in path order, e.g. 'x1 x2' or 'y1 x2*'")
    p.set_defaults(func=cmd_yoneda_product)
    return parser


def validate(parser, args):
    if args.n < 1:
        parser.error("--n must be at least 1")
    if args.char != 0:
        from .fields import _is_prime

        if not _is_prime(args.char):
            parser.error("--char must be 0 or a prime")
    if args.max_deg is None:
        if args.command != "verify":
            args.max_deg = 4 * args.n
    elif args.max_deg < 0:
        parser.error("--max-deg must be nonnegative")
    for attr in ("i", "j"):
        if hasattr(args, attr) and getattr(args, attr) is not None:
            v = getattr(args, attr)
            if not 1 <= v <= args.n:
                parser.error(f"--{attr} must lie in 1..{args.n}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    validate(parser, args)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
