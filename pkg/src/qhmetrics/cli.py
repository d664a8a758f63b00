"""Command-line front end.

Commands: ``dist`` (evaluate a metric), ``mobius`` (apply a ball automorphism
to a point), ``verify`` (run named check suites), ``search`` (ratio-supremum
searches and sharpness tables), ``specfun`` (evaluate the special functions).

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage or
domain errors.  Output is deterministic for fixed flags and seeds.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import metrics, mobius, qhball, search, special, verify
from .errors import DomainError
from .geometry import INFINITY, is_infinity

_FULL = "%.17g"


def _parse_point(text: str, allow_infinity: bool = False):
    text = text.strip()
    if text.lower() in ("inf", "infinity"):
        if not allow_infinity:
            raise DomainError("the point at infinity is not allowed here")
        return INFINITY
    try:
        coords = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise DomainError(f"cannot parse point {text!r}: {exc}") from None
    if len(coords) < 2:
        raise DomainError(f"points need >= 2 coordinates, got {text!r}")
    return np.asarray(coords, dtype=float)


def _parse_boundary(text: str):
    return [_parse_point(tok, allow_infinity=True) for tok in text.split(";") if tok.strip()]


def _fmt12(v: float) -> str:
    return f"{v:.12f}"


def _emit(out, text: str):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_FULL % v if isinstance(v, float) else v for v in row])
    return buf.getvalue()


# ---------------------------------------------------------------------------


def _cmd_dist(args, out) -> int:
    metric = args.metric
    x = _parse_point(args.x, allow_infinity=metric == "q")
    y = _parse_point(args.y, allow_infinity=metric == "q")

    if metric == "j":
        if args.z is not None:
            value = metrics.j_punctured(_parse_point(args.z), x, y)
        else:
            value = metrics.j_ball(x, y)
    elif metric == "rho":
        value = metrics.rho_ball(x, y)
    elif metric == "k-punctured":
        if args.z is None:
            raise DomainError("k-punctured needs --z (the deleted point)")
        value = metrics.k_punctured(_parse_point(args.z), x, y)
    elif metric == "q":
        value = metrics.chordal(x, y)
    elif metric == "delta":
        boundary = (
            _parse_boundary(args.boundary)
            if args.boundary
            else metrics.UnitBall(x.size if not is_infinity(x) else 2)
        )
        value = metrics.seittenranta_delta(boundary, x, y)
    elif metric == "k-ball":
        cd = qhball.k_ball_refined(x, y, tol=args.tol)
        if args.format == "json":
            _emit(out, json.dumps(
                {"metric": metric, "lo": cd.lo, "hi": cd.hi, "method": cd.method}
            ))
        elif args.format == "csv":
            _emit(out, _csv_text(["lo", "hi", "method"], [[cd.lo, cd.hi, cd.method]]))
        else:
            _emit(out, f"{_fmt12(cd.lo)} {_fmt12(cd.hi)} {cd.method}")
        return 0
    else:  # pragma: no cover - argparse restricts choices
        raise DomainError(f"unknown metric {metric}")

    if args.format == "json":
        _emit(out, json.dumps({"metric": metric, "value": value}))
    elif args.format == "csv":
        _emit(out, _csv_text(["value"], [[float(value)]]))
    else:
        _emit(out, _fmt12(float(value)))
    return 0


def _cmd_mobius(args, out) -> int:
    a = _parse_point(args.a)
    x = _parse_point(args.x)
    kappa = None
    if args.kappa:
        vals = [float(tok) for tok in args.kappa.split(",")]
        n = a.size
        if len(vals) != n * n:
            raise DomainError(f"kappa needs {n * n} row-major entries")
        kappa = np.asarray(vals, dtype=float).reshape(n, n)
    g = mobius.BallMobius(a, kappa)
    img = g.apply(x)
    if args.format == "json":
        _emit(out, json.dumps(
            {
                "image": [float(c) for c in img],
                "bilipschitz_constant": g.bilipschitz_constant,
            }
        ))
    elif args.format == "csv":
        _emit(out, _csv_text(
            [f"x_{i+1}" for i in range(img.size)], [[float(c) for c in img]]
        ))
    else:
        _emit(out, ",".join(_fmt12(float(c)) for c in img))
    return 0


def _cmd_verify(args, out) -> int:
    results = verify.run_suites(args.suite, seed=args.seed, samples=args.samples)
    n_fail = sum(1 for c in results if not c.passed)
    if args.format == "json":
        _emit(out, json.dumps(
            [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "margin": c.margin,
                    "detail": c.detail,
                }
                for c in results
            ]
        ))
    elif args.format == "csv":
        _emit(out, _csv_text(
            ["name", "passed", "margin", "detail"],
            [[c.name, int(c.passed), c.margin, c.detail] for c in results],
        ))
    else:
        for c in results:
            state = "PASS" if c.passed else "FAIL"
            _emit(out, f"{state}  {c.name}  margin={c.margin:.3e}  {c.detail}")
        _emit(out, f"{len(results) - n_fail}/{len(results)} checks passed")
    return 1 if n_fail else 0


def _search_result_payload(res: search.SearchResult):
    return {
        "best_value": res.best_value,
        "best_args": [[float(c) for c in np.atleast_1d(arg)] for arg in res.best_args],
        "trace": [[it, val] for it, val in res.trace],
        "status": res.status,
        "n_evals": res.n_evals,
    }


def _search_csv(res: search.SearchResult) -> str:
    width = max((len(a) for a in res.trace_args), default=0)
    half = width // 2
    header = ["iteration", "best_value"]
    header += [f"x_{i+1}" for i in range(half)] + [f"y_{i+1}" for i in range(width - half)]
    rows = []
    for (it, val), cfg in zip(res.trace, res.trace_args):
        rows.append([it, float(val)] + [float(c) for c in cfg])
    return _csv_text(header, rows)


def _cmd_search(args, out) -> int:
    fmt = args.format
    if args.problem == "qk-sup":
        if args.z is None:
            raise DomainError("qk-sup needs --z")
        problem = search.chordal_qh_problem(_parse_point(args.z))
        res = search.maximize(problem, seeds=args.seeds, budget=args.budget, rng_seed=args.rng)
        if fmt == "json":
            _emit(out, json.dumps(_search_result_payload(res)))
        elif fmt == "csv":
            _emit(out, _search_csv(res))
        else:
            _emit(out, f"best_value {res.best_value!r} status {res.status} evals {res.n_evals}")
        return 0
    if args.problem == "thm13-sharpness":
        if args.a is None:
            raise DomainError("thm13-sharpness needs --a (0 < a < 1)")
        ts = [float(tok) for tok in args.ts.split(",")]
        table = search.mobius_sharpness_table(args.a, ts)
        ex_f = search.richardson_limit(ts, [r[1] for r in table])
        ex_i = search.richardson_limit(ts, [r[2] for r in table])
        if fmt == "json":
            _emit(out, json.dumps(
                {
                    "rows": [[t, f, i] for t, f, i in table],
                    "extrapolated_forward": ex_f,
                    "extrapolated_inverse": ex_i,
                }
            ))
        else:
            _emit(out, _csv_text(
                ["t", "ratio_forward", "ratio_inverse"],
                [[t, f, i] for t, f, i in table]
                + [[0.0, float(ex_f), float(ex_i)]],
            ))
        return 0
    if args.problem == "conj17":
        if args.a is None:
            raise DomainError("conj17 needs --a (0 < a < 1)")
        res = search.explore_j_quasiinvariance(args.a, budget=args.budget, rng_seed=args.rng)
        verdict = search.quasiinvariance_verdict(args.a, res.best_value)
        if fmt == "json":
            payload = _search_result_payload(res)
            payload["verdict"] = verdict
            payload["conjectured_sup"] = 1.0 + args.a
            _emit(out, json.dumps(payload))
        elif fmt == "csv":
            _emit(out, _search_csv(res))
        else:
            _emit(out, f"best_value {res.best_value!r} verdict {verdict}")
        return 0
    if args.problem == "conj28-grid":
        Ks = np.linspace(1.0, 4.0, args.knum)
        rs = np.linspace(0.01, 0.99, args.rnum)
        ok, worst, worst_pt = special.distortion_growth_check(Ks, rs)
        if fmt == "json":
            _emit(out, json.dumps(
                {
                    "holds": bool(ok),
                    "max_violation": worst,
                    "worst_point": list(worst_pt),
                        "grid": {"K": [float(v) for v in Ks], "r_count": int(args.rnum)},
                }
            ))
        else:
            _emit(out, _csv_text(
                ["holds", "max_violation", "worst_K", "worst_r"],
                [[int(ok), float(worst), float(worst_pt[0]), float(worst_pt[1])]],
            ))
        return 0
    raise DomainError(f"unknown problem {args.problem}")  # pragma: no cover


def _cmd_specfun(args, out) -> int:
    fn = args.fn
    if fn == "mu":
        _require(args.r is not None, "mu needs --r")
        value = special.grotzsch_mu(args.r)
    elif fn == "phi":
        _require(args.K is not None and args.r is not None, "phi needs --K and --r")
        value = special.phi_distortion(args.K, args.r)
    elif fn == "b":
        _require(args.K is not None, "b needs --K (and --n, default 2)")
        params = special.DistortionParams(args.n, args.K, eta1=args.eta, lambda_n=args.lam)
        value = params.b
    elif fn == "lemma22":
        _require(args.r is not None and args.t is not None, "lemma22 needs --r and --t")
        value = special.j_rho_alignment_ratio(args.r, args.t)
    elif fn == "remark":
        _require(args.a is not None and args.t is not None, "remark needs --a and --t")
        value = special.diameter_family_ratio(args.a, args.t)
    elif fn == "lemma33":
        _require(args.a is not None, "lemma33 needs --a")
        maxval, argr = special.sum_ratio_max(args.a)
        if args.format == "json":
            _emit(out, json.dumps({"max": maxval, "argmax_r": argr}))
        elif args.format == "csv":
            _emit(out, _csv_text(["max", "argmax_r"], [[maxval, argr]]))
        else:
            _emit(out, f"{_fmt12(maxval)} at r = s = {_fmt12(argr)}")
        return 0
    else:  # pragma: no cover
        raise DomainError(f"unknown function {fn}")
    if args.format == "json":
        _emit(out, json.dumps({"fn": fn, "value": value}))
    elif args.format == "csv":
        _emit(out, _csv_text(["value"], [[float(value)]]))
    else:
        _emit(out, _fmt12(float(value)))
    return 0


def _require(cond: bool, message: str):
    if not cond:
        raise DomainError(message)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qhmetrics",
        description="Hyperbolic-type metrics of the unit ball and punctured space",
    )
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", help="evaluate a metric between two points")
    d.add_argument("--metric", required=True,
                   choices=["j", "rho", "k-punctured", "k-ball", "q", "delta"])
    d.add_argument("--x", required=True, help="comma-separated coordinates (or 'inf' for q)")
    d.add_argument("--y", required=True)
    d.add_argument("--z", help="deleted point for punctured-space metrics")
    d.add_argument("--boundary", help="semicolon-separated boundary sample for delta")
    d.add_argument("--tol", type=float, default=qhball.DEFAULT_TOL,
                   help="interval width for k-ball")
    d.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    m = sub.add_parser("mobius", help="apply a ball automorphism to a point")
    m.add_argument("--a", required=True, help="preimage of the origin, |a| < 1")
    m.add_argument("--x", required=True)
    m.add_argument("--kappa", help="optional row-major orthogonal matrix entries")
    m.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    v = sub.add_parser("verify", help="run named verification suites")
    v.add_argument("--suite", required=True,
                   choices=["all"] + sorted(verify.SUITES))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    s = sub.add_parser("search", help="ratio-supremum searches and sharpness tables")
    s.add_argument("--problem", required=True,
                   choices=["qk-sup", "thm13-sharpness", "conj17", "conj28-grid"])
    s.add_argument("--z", help="deleted point for qk-sup")
    s.add_argument("--a", type=float, help="automorphism center modulus")
    s.add_argument("--ts", default="1e-2,1e-3,1e-4",
                   help="comma-separated t sequence for sharpness tables")
    s.add_argument("--seeds", type=int, default=32)
    s.add_argument("--budget", type=int, default=20000)
    s.add_argument("--rng", type=int, default=0)
    s.add_argument("--knum", type=int, default=25)
    s.add_argument("--rnum", type=int, default=50)
    s.add_argument("--format", choices=["plain", "csv", "json"], default="csv")
    s.add_argument("--out", help="write output to this file instead of stdout")

    f = sub.add_parser("specfun", help="evaluate the special functions")
    f.add_argument("--fn", required=True,
                   choices=["mu", "phi", "b", "lemma22", "remark", "lemma33"])
    f.add_argument("--r", type=float)
    f.add_argument("--K", type=float)
    f.add_argument("--t", type=float)
    f.add_argument("--a", type=float)
    f.add_argument("--n", type=int, default=2)
    f.add_argument("--eta", type=float)
    f.add_argument("--lam", type=float)
    f.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    return p


_DISPATCH = {
    "dist": _cmd_dist,
    "mobius": _cmd_mobius,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "specfun": _cmd_specfun,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    outfile = getattr(args, "out", None)
    try:
        if outfile:
            with open(outfile, "w") as fh:
                return _DISPATCH[args.command](args, fh)
        return _DISPATCH[args.command](args, sys.stdout)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
