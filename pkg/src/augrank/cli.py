"""Command-line front end.

Every run echoes its full configuration; JSON output is byte-stable for a
fixed configuration, so reruns can be diffed.  Exit codes: 0 success or
accepted certificate, 2 no certificate found / verification not accepted,
1 error.
"""

from __future__ import annotations

import argparse
import sys

from . import jsonio
from .action import phi_matrix
from .augment import (
    ACCEPT_TOL,
    Certificate,
    ConstructionError,
    SolveOptions,
    aug_rank,
    check_block_structure,
    construct_satellite_aug,
    full_rank_residual,
    ideal_residual,
    solve_full_rank,
)
from .braids import BraidWord, component_count, iterated_torus_braid, satellite_braid, torus_braid
from .checks import (
    check_cabled_letter_forms,
    check_chain_rule,
    check_tau_forms,
    check_transpose,
)
from .freealg import TermBudgetError
from .splitting import verify_cable_matrix_split, verify_commutes

MINIMALITY_NOTE = (
    "companion braid index not certified minimal; the output depends on the "
    "companion word as given"
)


def _emit(args, obj: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(jsonio.dumps(obj))
    else:
        print("\n".join(text_lines))


def _config(args, command: str, keys: list[str]) -> dict:
    cfg = {"command": command}
    for key in keys:
        cfg[key] = getattr(args, key.replace("-", "_"))
    return cfg


def _config_line(cfg: dict) -> str:
    return "config: " + " ".join(f"{k}={v}" for k, v in cfg.items())


def _braid_obj(braid: BraidWord) -> dict:
    return {"n": braid.n, "word": list(braid.letters)}


def cmd_phi(args) -> int:
    cfg = _config(args, "phi", ["n", "word", "side", "format"])
    braid = BraidWord.from_text(args.n, args.word)
    m = phi_matrix(braid, args.side)
    rows = m.render_entries()
    text_matrix = "[" + ", ".join("[" + ", ".join(row) + "]" for row in rows) + "]"
    _emit(args, {"config": cfg, "matrix": m.to_obj()}, [_config_line(cfg), text_matrix])
    return 0


def cmd_satellite(args) -> int:
    cfg = _config(
        args,
        "satellite",
        ["alpha", "k", "gamma", "p", "q", "iterated_torus", "format"],
    )
    if args.iterated_torus:
        ps = [int(t) for t in args.p.split(",")]
        qs = [int(t) for t in (args.q or "").split(",") if t.strip()]
        braid = iterated_torus_braid(ps, qs)
    else:
        if args.alpha is None or args.k is None or args.p is None:
            raise ValueError("satellite needs --alpha, --k and --p (or --iterated-torus)")
        alpha = BraidWord.from_text(args.k, args.alpha)
        gamma = BraidWord.from_text(int(args.p), args.gamma or "")
        braid = satellite_braid(alpha, gamma)
    obj = {
        "config": cfg,
        "braid": _braid_obj(braid),
        "components": component_count(braid),
        "note": MINIMALITY_NOTE,
    }
    _emit(
        args,
        obj,
        [
            _config_line(cfg),
            f"n: {braid.n}",
            f"word: {braid.to_text()}",
            f"components: {component_count(braid)}",
            f"note: {MINIMALITY_NOTE}",
        ],
    )
    return 0


def cmd_torus(args) -> int:
    cfg = _config(args, "torus", ["p", "q", "format"])
    braid = torus_braid(args.p, args.q)
    obj = {"config": cfg, "braid": _braid_obj(braid), "components": component_count(braid)}
    _emit(
        args,
        obj,
        [_config_line(cfg), f"n: {braid.n}", f"word: {braid.to_text()}"],
    )
    return 0


def _certificate_summary(cert: Certificate) -> list[str]:
    return [
        f"accepted certificate for closure of a {cert.braid.n}-strand word",
        f"residual_L: {cert.residual_L:.3e}  residual_R: {cert.residual_R:.3e}",
        f"ideal_residual: {cert.ideal_residual:.3e}",
        f"rank: {cert.rank}",
    ]


def cmd_ar_search(args) -> int:
    cfg = _config(args, "ar-search", ["n", "word", "seed", "restarts", "tol", "output", "format"])
    braid = BraidWord.from_text(args.n, args.word)
    options = SolveOptions(restarts=args.restarts, seed=args.seed, tol=args.tol)
    out = solve_full_rank(braid, options)
    if isinstance(out, Certificate):
        obj = {"config": cfg, "found": True, "certificate": out.to_obj()}
        if args.output:
            out.save(args.output)
        _emit(
            args,
            obj,
            [_config_line(cfg)]
            + _certificate_summary(out)
            + ([f"written: {args.output}"] if args.output else []),
        )
        return 0
    obj = {"config": cfg, **out.to_obj()}
    if args.output:
        jsonio.dump_file(args.output, obj)
    _emit(
        args,
        obj,
        [
            _config_line(cfg),
            f"no certificate found after {args.restarts} restarts",
            f"best residual: {out.best_residual:.6e}",
        ],
    )
    return 2


def cmd_construct_aug(args) -> int:
    cfg = _config(args, "construct-aug", ["alpha_cert", "gamma_cert", "tol", "output", "format"])
    cert_alpha = Certificate.load(args.alpha_cert)
    cert_gamma = Certificate.load(args.gamma_cert)
    cert = construct_satellite_aug(cert_alpha, cert_gamma, tol=args.tol)
    if args.output:
        cert.save(args.output)
    obj = {"config": cfg, "found": True, "certificate": cert.to_obj()}
    _emit(
        args,
        obj,
        [_config_line(cfg)]
        + _certificate_summary(cert)
        + ([f"written: {args.output}"] if args.output else []),
    )
    return 0


def cmd_verify(args) -> int:
    cfg = _config(args, "verify", ["cert", "format"])
    cert = Certificate.load(args.cert)
    res_l, res_r = full_rank_residual(cert.braid, cert.assignment)
    ideal = ideal_residual(cert.braid, cert.assignment)
    rank = aug_rank(cert.assignment, cert.braid.n)
    accepted = res_l <= cert.tol and res_r <= cert.tol
    obj = {
        "config": cfg,
        "stored": {
            "residual_L": cert.residual_L,
            "residual_R": cert.residual_R,
            "ideal_residual": cert.ideal_residual,
            "rank": cert.rank,
        },
        "recomputed": {
            "residual_L": res_l,
            "residual_R": res_r,
            "ideal_residual": ideal,
            "rank": rank,
        },
        "accepted": accepted,
    }
    _emit(
        args,
        obj,
        [
            _config_line(cfg),
            f"recomputed residual_L: {res_l:.3e}  residual_R: {res_r:.3e}",
            f"recomputed ideal_residual: {ideal:.3e}  rank: {rank}",
            "accepted" if accepted else "NOT accepted",
        ],
    )
    return 0 if accepted else 2


_PSI_SUITE_WORDS = [
    ("", 1),
    ("1", 2),
    ("1 1 1", 2),
    ("1 2", 3),
    ("1 -2", 3),
]


def cmd_check(args) -> int:
    cfg = _config(args, "check", ["suite", "n", "k", "p", "seed", "count", "format"])
    reports = []
    if args.suite == "chainrule":
        reports.append(check_chain_rule(args.n, count=args.count, seed=args.seed))
    elif args.suite == "transpose":
        reports.append(check_transpose(args.n, count=args.count, seed=args.seed))
    elif args.suite == "psi":
        for word, min_k in _PSI_SUITE_WORDS:
            if args.k >= min_k:
                reports.append(
                    verify_cable_matrix_split(BraidWord.from_text(args.k, word), args.p)
                )
    elif args.suite == "commutes":
        for n_gen in range(1, args.k):
            reports.append(verify_commutes(n_gen, args.k, args.p))
    elif args.suite == "sigma_n":
        reports.append(check_cabled_letter_forms(args.k, args.p))
    elif args.suite == "tau":
        reports.append(check_tau_forms(args.n))
    elif args.suite == "blocks":
        reports.append(check_block_structure(args.n, args.p))
    else:  # pragma: no cover - argparse enforces choices
        raise ValueError(f"unknown suite {args.suite!r}")
    ok = all(r.ok for r in reports)
    obj = {
        "config": cfg,
        "status": "pass" if ok else "fail",
        "reports": [r.to_obj() for r in reports],
    }
    lines = [_config_line(cfg)]
    for r in reports:
        lines.append(f"{r.status}: {r.claim} {r.parameters}")
        for diff in r.diffs[:10]:
            lines.append(f"  diff: {diff}")
    lines.append("all checks passed" if ok else "CHECK FAILURES")
    _emit(args, obj, lines)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="augrank",
        description="Braid satellites and maximal-rank augmentation certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("phi", help="print a symbolic action matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", default="")
    p.add_argument("--side", choices=["L", "R"], default="L")
    add_format(p)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("satellite", help="build a satellite or iterated torus word")
    p.add_argument("--alpha", help="companion word")
    p.add_argument("--k", type=int, help="companion strand count")
    p.add_argument("--gamma", default="", help="pattern word (empty = cable only)")
    p.add_argument("--p", help="pattern strand count, or comma list with --iterated-torus")
    p.add_argument("--q", help="comma list of torus powers (with --iterated-torus)")
    p.add_argument("--iterated-torus", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_satellite)

    p = sub.add_parser("torus", help="build a torus braid word")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("ar-search", help="search for a maximal-rank certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", default="")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=256)
    p.add_argument("--tol", type=float, default=ACCEPT_TOL)
    p.add_argument("--output")
    add_format(p)
    p.set_defaults(func=cmd_ar_search)

    p = sub.add_parser("construct-aug", help="combine two certificates into a satellite one")
    p.add_argument("--alpha-cert", required=True)
    p.add_argument("--gamma-cert", required=True)
    p.add_argument("--tol", type=float, default=ACCEPT_TOL)
    p.add_argument("--output")
    add_format(p)
    p.set_defaults(func=cmd_construct_aug)

    p = sub.add_parser("verify", help="recompute the numbers stored in a certificate")
    p.add_argument("--cert", required=True)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="run an exact identity suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=["chainrule", "transpose", "psi", "commutes", "sigma_n", "tau", "blocks"],
    )
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    add_format(p)
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TermBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ConstructionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
