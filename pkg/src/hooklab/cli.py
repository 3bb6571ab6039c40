"""Command-line front door.

One subcommand per operation family; every random choice flows from a
single seed (flag --seed, falling back to HOOKLAB_SEED, then 0), so equal
seeds give byte-identical JSON.  Rationals are serialized as "num/den"
strings.  Exit codes: 0 all requested checks pass, 1 a check failed,
2 invalid configuration or domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import algebra, beta, excited, hooks, schur, vertex
from .partitions import (
    contains,
    enumerate_syt,
    parse_partition,
    partitions_of,
    size,
    subdiagrams,
)

SCHEMA = "hooklab/1"
SYMBOLIC_MAX = 5


class CliError(Exception):
    pass


def _rat(v) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def _emit(payload, as_json: bool):
    if as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        return
    verdict = payload.get("verdict")
    if verdict is not None:
        print(f"verdict: {verdict}")
    for key, value in sorted(payload.get("values", {}).items()):
        print(f"{key}: {value}")
    for line in payload.get("lines", []):
        print(line)


def _instance(args, **extra):
    inst = {"seed": args.seed}
    if getattr(args, "lam", None) is not None:
        inst["lambda"] = list(args.lam)
    if getattr(args, "mu", None) is not None:
        inst["mu"] = list(args.mu)
    inst.update(extra)
    return inst


def _payload(args, verdict=None, values=None, **extra):
    out = {"schema": SCHEMA, "instance": _instance(args), "verdict": verdict}
    out["values"] = values or {}
    out.update(extra)
    return out


def _require_contained(lam, mu):
    if not contains(mu, lam):
        raise CliError(f"mu={list(mu)} is not contained in lambda={list(lam)}")


# ---------------------------------------------------------------------------
# Subcommand handlers (each returns the exit code)


def cmd_count(args) -> int:
    lam, mu = args.lam, args.mu
    _require_contained(lam, mu)
    by_enum = sum(1 for _ in enumerate_syt(lam, mu))
    by_nhlf = hooks.nhlf_count(lam, mu)
    frame = hooks.TFrame.integer(lam)
    n_boxes = size(lam) - size(mu)
    fact = 1
    for k in range(2, n_boxes + 1):
        fact *= k
    by_mhlf = hooks.mhlf_lhs(lam, mu, frame) * fact
    agree = by_enum == by_nhlf == by_mhlf
    _emit(
        _payload(
            args,
            verdict="pass" if agree else "fail",
            values={
                "enumeration": str(by_enum),
                "hook_sum": str(by_nhlf),
                "weighted_sum_t_eq_k": _rat(by_mhlf),
            },
        ),
        args.json,
    )
    return 0 if agree else 1


def _run_point_checks(check, count):
    """Run a per-seed verdict callable; returns (ok, first witness values)."""
    witness = {}
    for k in range(count):
        v = check(k)
        if not witness:
            witness = {"lhs": _rat(v.lhs), "rhs": _rat(v.rhs)}
        if not v.ok:
            witness["failed_point"] = str(k)
            return False, witness
    return True, witness


def cmd_mhlf(args) -> int:
    lam, mu = args.lam, args.mu
    _require_contained(lam, mu)
    if args.mode == "symbolic":
        if size(lam) > SYMBOLIC_MAX:
            raise CliError(f"symbolic mode supports |lambda| <= {SYMBOLIC_MAX}; got {size(lam)}")
        ok = hooks.mhlf_symbolic_check(lam, mu)
        _emit(_payload(args, verdict="pass" if ok else "fail", values={"mode": "symbolic"}), args.json)
        return 0 if ok else 1

    def check(k):
        frame = hooks.sample_t_frame(lam, args.seed + k, mu)
        lhs = hooks.mhlf_lhs(lam, mu, frame)
        rhs = hooks.mhlf_rhs(lam, mu, frame)
        return algebra.Verdict(lhs == rhs, lhs, rhs)

    ok, witness = _run_point_checks(check, args.points)
    _emit(_payload(args, verdict="pass" if ok else "fail", values=witness), args.json)
    return 0 if ok else 1


def cmd_oof(args) -> int:
    lam, mu = args.lam, args.mu
    _require_contained(lam, mu)

    def check(k):
        frame = hooks.sample_t_frame(lam, args.seed + k, mu)
        return hooks.oof_check(lam, mu, frame)

    ok, witness = _run_point_checks(check, args.points)
    _emit(_payload(args, verdict="pass" if ok else "fail", values=witness), args.json)
    return 0 if ok else 1


def cmd_excited(args) -> int:
    lam, mu = args.lam, args.mu
    diagrams = excited.enumerate_excited(lam, mu)
    entries = []
    for d in diagrams:
        entry = {"lambda": list(lam), "mu": list(mu), "boxes": [list(b) for b in sorted(d.boxes)]}
        if args.emit == "ssyt":
            tab = excited.to_flagged_ssyt(d)
            entry["ssyt"] = [[tab[(i, j)] for j in range(1, mu[i - 1] + 1)] for i in range(1, len(mu) + 1)]
        elif args.emit == "paths":
            entry["paths"] = [[list(c) for c in p] for p in excited.to_paths(d)]
        entries.append(entry)
    payload = _payload(args, verdict=None, values={"count": str(len(diagrams))})
    payload["diagrams"] = entries
    _emit(payload, args.json)
    return 0


def cmd_schur(args) -> int:
    mu, n = args.mu, args.n
    if n < len(mu):
        raise CliError(f"n={n} is smaller than the number of rows of mu={list(mu)}")
    top = (mu[0] if mu else 0) + n + 1
    vals = algebra.sample_rationals(args.seed, n + top)
    xs, avals = vals[:n], vals[n:]
    shifts = schur.seq_shifts(avals)
    algos = {
        "det": lambda: schur.factorial_schur_det(mu, n, xs, shifts),
        "residue": lambda: schur.factorial_schur_residues(mu, n, xs, shifts),
        "tableau": lambda: schur.factorial_schur_comb(mu, n, xs, shifts),
        "jt": lambda: schur.F_general_det(mu, [n] * n, n, xs, shifts),
    }
    wanted = algos if args.algo == "all" else {args.algo: algos[args.algo]}
    values = {name: _rat(fn()) for name, fn in sorted(wanted.items())}
    agree = len(set(values.values())) == 1
    _emit(_payload(args, verdict="pass" if agree else "fail", values=values), args.json)
    return 0 if agree else 1


def cmd_5v(args) -> int:
    lam, mu = args.lam, args.mu
    if args.what == "ybe":
        x, y, t = algebra.sample_rationals(args.seed, 3)
        if x == t:
            raise CliError("sampled x equals t; YBE needs x != t (pick another seed)")
        v = vertex.ybe_check(x, y, t)
        sym = vertex.ybe_check_symbolic()
        ok = v.ok and sym
        _emit(_payload(args, verdict="pass" if ok else "fail", values={"symbolic": str(sym)}), args.json)
        return 0 if ok else 1

    _require_contained(lam, mu)
    if args.what == "boundary":
        via_maya = vertex.boundary_string_maya(lam, mu)
        via_rim = vertex.boundary_string_rim_hooks(lam, mu)
        ok = via_maya == via_rim
        _emit(
            _payload(args, verdict="pass" if ok else "fail", values={"maya": via_maya, "rim_hooks": via_rim}),
            args.json,
        )
        return 0 if ok else 1

    xs, ys, t = vertex.sample_xy(lam, args.seed, with_t=True)
    if args.what == "zmu":
        value = vertex.z_mu(lam, mu, xs, ys)
        _emit(_payload(args, values={"z_mu": _rat(value)}), args.json)
        return 0
    if args.what == "pf":
        b = vertex.boundary_string_maya(lam, mu)
        zm = vertex.z_mu(lam, mu, xs, ys)
        results = {"z_mu": _rat(zm), "boundary": b}
        ok = True
        for variant in ("plain", "nw_strand", "se_strand"):
            pf = vertex.partition_function(lam, b, xs, ys, variant, t)
            results[variant] = _rat(pf.value)
            ok = ok and pf.value == zm
        _emit(_payload(args, verdict="pass" if ok else "fail", values=results), args.json)
        return 0 if ok else 1
    if args.what == "pieri":
        if mu == lam:
            raise CliError("pieri needs mu strictly inside lambda")
        v = vertex.pieri_check_5v(lam, mu, xs, ys)
        _emit(
            _payload(args, verdict="pass" if v.ok else "fail", values={"lhs": _rat(v.lhs), "rhs": _rat(v.rhs)}),
            args.json,
        )
        return 0 if v.ok else 1
    raise CliError(f"unknown 5v action {args.what!r}")


def cmd_beta(args) -> int:
    lam, mu = args.lam, args.mu
    _require_contained(lam, mu)
    b = Fraction(args.beta)
    if args.what == "ssyt-check":
        if b == 0:
            raise CliError("beta = 0 is singular for strip-chain sums")
        shifts = beta.sample_beta_shifts(lam, args.seed, b)
        v = beta.ssyt_sum_check(lam, mu, shifts)
    elif args.what == "pieri":
        n = max(len(lam), 1)
        shifts = beta.sample_beta_shifts(lam, args.seed, b)
        xs = algebra.sample_rationals(args.seed + 1, n)
        v = beta.beta_pieri_check(mu, n, xs, shifts)
    elif args.what == "vanishing":
        shifts = beta.sample_beta_shifts(lam, args.seed, b)
        v = beta.j_vanishing_check(lam, mu, shifts)
    elif args.what == "excited-check":
        if b == 0:
            raise CliError("beta = 0 is singular for strip-chain sums")
        xs, ys = vertex.sample_xy(lam, args.seed)
        v = beta.excited_vs_ssyt_check(lam, mu, xs, ys, b)
    else:
        raise CliError(f"unknown beta action {args.what!r}")
    values = {}
    if v.lhs is not None:
        values["lhs"] = _rat(v.lhs)
    if v.rhs is not None:
        values["rhs"] = _rat(v.rhs)
    _emit(_payload(args, verdict="pass" if v.ok else "fail", values=values), args.json)
    return 0 if v.ok else 1


IDENTITIES = ("mhlf", "oof", "ybe", "pieri5v", "pieriF", "strip5v", "betaPieri", "betaSSYT", "betaExcited")


def run_identity(name: str, lam, mu, seed: int):
    """Single-instance dispatch used by `check` and the batch harness."""
    if name == "mhlf":
        frame = hooks.sample_t_frame(lam, seed, mu)
        lhs, rhs = hooks.mhlf_lhs(lam, mu, frame), hooks.mhlf_rhs(lam, mu, frame)
        return algebra.Verdict(lhs == rhs, lhs, rhs)
    if name == "oof":
        return hooks.oof_check(lam, mu, hooks.sample_t_frame(lam, seed, mu))
    if name == "ybe":
        x, y, t = algebra.sample_rationals(seed, 3)
        return vertex.ybe_check(x, y, t) if x != t else algebra.Verdict(True, None, None)
    if name == "pieri5v":
        if mu == lam:
            return algebra.Verdict(True, None, None)
        xs, ys = vertex.sample_xy(lam, seed)
        return vertex.pieri_check_5v(lam, mu, xs, ys)
    if name == "pieriF":
        n = max(len(lam), 1)
        vals = algebra.sample_rationals(seed, n + (lam[0] if lam else 0) + n + 1)
        return schur.pieri_check_F(mu, n, vals[:n], schur.seq_shifts(vals[n:]))
    if name == "strip5v":
        xs, ys, t = vertex.sample_xy(lam, seed, with_t=True)
        return vertex.vertical_strip_expansion_check(lam, mu, xs, ys, t)
    if name == "betaPieri":
        n = max(len(lam), 1)
        shifts = beta.sample_beta_shifts(lam, seed, Fraction(1, 3))
        xs = algebra.sample_rationals(seed + 1, n)
        return beta.beta_pieri_check(mu, n, xs, shifts)
    if name == "betaSSYT":
        return beta.ssyt_sum_check(lam, mu, beta.sample_beta_shifts(lam, seed, Fraction(1, 3)))
    if name == "betaExcited":
        xs, ys = vertex.sample_xy(lam, seed)
        return beta.excited_vs_ssyt_check(lam, mu, xs, ys, Fraction(1, 3))
    raise CliError(f"unknown identity {name!r}")


def cmd_check(args) -> int:
    lam, mu = args.lam, args.mu
    _require_contained(lam, mu)
    if args.identity == "ybe":
        x, y, t = algebra.sample_rationals(args.seed, 3)
        if x == t:
            raise CliError("sampled x equals t; YBE needs x != t")
    ok = True
    witness = {}
    for k in range(args.points):
        v = run_identity(args.identity, lam, mu, args.seed + k)
        if not witness and v.lhs is not None:
            witness = {"lhs": _rat(v.lhs), "rhs": _rat(v.rhs)}
        if not v.ok:
            ok = False
            witness["failed_point"] = str(k)
            break
    _emit(_payload(args, verdict="pass" if ok else "fail", values=witness), args.json)
    return 0 if ok else 1


def cmd_check_all(args) -> int:
    """Batch harness over all shape pairs up to the size bound."""
    shapes = []
    for n in range(args.max_size + 1):
        shapes.extend(partitions_of(n))
    ok = True
    lines = []
    summary = {}
    for name in args.identities:
        passed = failed = 0
        for lam in shapes:
            for mu in subdiagrams(lam):
                v = run_identity(name, lam, mu, args.seed)
                if v.ok:
                    passed += 1
                else:
                    failed += 1
                    ok = False
        summary[name] = {"pass": passed, "fail": failed}
        lines.append(f"{name}: {passed} pass, {failed} fail")
    payload = _payload(args, verdict="pass" if ok else "fail", values={}, lines=lines)
    payload["summary"] = summary
    _emit(payload, args.json)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Argument parsing


def _add_common(p, mu_default=""):
    p.add_argument("--lambda", dest="lam", type=parse_partition, default=(), metavar="PARTS")
    p.add_argument("--mu", dest="mu", type=parse_partition, default=parse_partition(mu_default), metavar="PARTS")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--points", type=int, default=5, help="number of seeded evaluation points")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hooklab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="skew standard tableau counts by three methods")
    _add_common(p)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("mhlf", help="multivariate hook-length identity check")
    _add_common(p)
    p.add_argument("--mode", choices=("point", "symbolic"), default="point")
    p.set_defaults(fn=cmd_mhlf)

    p = sub.add_parser("oof", help="tableau-product variant of the identity")
    _add_common(p)
    p.set_defaults(fn=cmd_oof)

    p = sub.add_parser("excited", help="list excited diagrams with bijection images")
    _add_common(p)
    p.add_argument("--emit", choices=("diagrams", "paths", "ssyt"), default="diagrams")
    p.set_defaults(fn=cmd_excited)

    p = sub.add_parser("schur", help="factorial Schur value by one or all algorithms")
    _add_common(p)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--algo", choices=("det", "residue", "tableau", "jt", "all"), default="all")
    p.set_defaults(fn=cmd_schur)

    p = sub.add_parser("5v", help="five-vertex model computations")
    p.add_argument("what", choices=("zmu", "pf", "ybe", "pieri", "boundary"))
    _add_common(p)
    p.set_defaults(fn=cmd_5v)

    p = sub.add_parser("beta", help="deformed-family checks")
    p.add_argument("what", choices=("ssyt-check", "pieri", "vanishing", "excited-check"))
    _add_common(p)
    p.add_argument("--beta", default="1/3", help="deformation parameter as a rational")
    p.set_defaults(fn=cmd_beta)

    p = sub.add_parser("check", help="run one identity at seeded points")
    p.add_argument("identity", choices=IDENTITIES)
    _add_common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("check-all", help="batch identity harness over a size-bounded grid")
    _add_common(p)
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument(
        "--identities",
        nargs="+",
        choices=IDENTITIES,
        default=["mhlf", "oof", "pieri5v", "strip5v", "betaSSYT"],
    )
    p.set_defaults(fn=cmd_check_all)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is None:
        args.seed = int(os.environ.get("HOOKLAB_SEED", "0"))
    try:
        return args.fn(args)
    except CliError as exc:
        print(json.dumps({"schema": SCHEMA, "error": str(exc)}, sort_keys=True), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(json.dumps({"schema": SCHEMA, "error": str(exc)}, sort_keys=True), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
