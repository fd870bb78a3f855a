"""Command-line front end: thin adapters over the library modules.

Exit codes: 0 success, 1 computed answer is negative (not a winner,
rejected certificate, invalid proof, "no"), 2 usage errors, 3 resource,
bound or stream errors. Verdict-negative and could-not-compute are
distinct so shell pipelines can branch.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .config import Config, load_config
from .errors import (CacheExhausted, ExhaustedBound, MalformedProofWord,
                     NotInGamma, ParseError, PilotteryError,
                     ResourceBudgetExceeded, StreamExhausted)
from .godel import decode, encode, in_gamma, rank
from .kernel import check, load_proof_lines, reconstruct
from .lottery import (Budget, brute_force_solve, check_certificate,
                      construct_winning_k, scan_max_winner, winner_eq)
from .pidigits import build_cache, load_cache, pi_group, save_cache, t_k
from .probmodel import (product_p, sequential_experiment, simulate_winners,
                        tail_p, truncated_no_winner_probability)
from .profiles import get_profile
from .psi import EnumeratedPsi, SyntheticPsi, load_psi_cache
from .records import render_records

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _int_arg(value: str) -> int:
    """Decimal integer argument; @path reads the decimal from a file."""
    if value.startswith("@"):
        with open(value[1:], encoding="utf-8") as fh:
            value = fh.read().strip()
    return int(value)


def _resolve_cache(cfg: Config, needed: int = 0):
    if cfg.cache_path and os.path.exists(cfg.cache_path):
        return load_cache(cfg.cache_path)
    return build_cache(max(cfg.cache_digits, needed), cfg.cache_algorithm)


def _resolve_psi(cfg: Config, profile):
    if cfg.psi_backend == "synthetic":
        return SyntheticPsi(cfg.psi_seed, cfg.psi_density)
    if cfg.psi_backend == "enumerated":
        if cfg.psi_code_bound is None:
            raise PilotteryError("enumerated backend needs psi_code_bound")
        return EnumeratedPsi(profile, cfg.psi_code_bound)
    if cfg.psi_backend == "cache":
        if not cfg.psi_cache_path:
            raise PilotteryError("cache backend needs psi_cache_path")
        return load_psi_cache(cfg.psi_cache_path)
    raise PilotteryError(f"unknown psi backend {cfg.psi_backend!r}")


def _emit(args, cfg: Config, record_type: str, columns, rows,
          human_lines) -> None:
    if cfg.output_format == "records":
        sys.stdout.write(render_records(record_type, columns, rows,
                                        config_json=cfg.canonical_json()))
    else:
        for line in human_lines:
            print(line)


def _report_dir(args) -> str | None:
    out = getattr(args, "report_dir", None)
    if out:
        os.makedirs(out, exist_ok=True)
    return out


def _write_report_records(out_dir: str, cfg: Config, record_type: str,
                          columns, rows) -> None:
    path = os.path.join(out_dir, "records.tsv")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_records(record_type, columns, rows,
                                config_json=cfg.canonical_json()))


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def cmd_pi_group(args, cfg: Config) -> int:
    cache = _resolve_cache(cfg, needed=args.m + args.n - 1)
    group = pi_group(args.m, args.n, cache)
    _emit(args, cfg, "pi-group", ["m", "n", "group"],
          [[args.m, args.n, group]], [group])
    return EXIT_OK


def cmd_pi_build(args, cfg: Config) -> int:
    cache = build_cache(args.count, args.algorithm)
    out = args.out or cfg.cache_path
    if out:
        save_cache(out, cache)
        print(f"wrote {cache.count} digits ({cache.algorithm}) to {out}",
              file=sys.stderr)
    _emit(args, cfg, "pi-cache", ["count", "algorithm", "checksum"],
          [[cache.count, cache.algorithm, cache.checksum]],
          [f"{cache.count} digits, checksum {cache.checksum}"])
    return EXIT_OK


def cmd_tk(args, cfg: Config) -> int:
    shifted = t_k(args.group, args.k)
    _emit(args, cfg, "tk", ["group", "k", "shifted"],
          [[args.group, args.k, shifted]], [shifted])
    return EXIT_OK


def cmd_godel_encode(args, cfg: Config) -> int:
    code = encode(args.word)
    _emit(args, cfg, "godel-encode", ["word", "code"],
          [[args.word, code]], [str(code)])
    return EXIT_OK


def cmd_godel_decode(args, cfg: Config) -> int:
    word = decode(_int_arg(args.code))
    _emit(args, cfg, "godel-decode", ["code", "word"],
          [[args.code, word]], [word])
    return EXIT_OK


def cmd_godel_rank(args, cfg: Config) -> int:
    r = rank(_int_arg(args.code))
    _emit(args, cfg, "godel-rank", ["code", "rank"],
          [[args.code, r]], [str(r)])
    return EXIT_OK


def cmd_proof_check(args, cfg: Config) -> int:
    profile = get_profile(cfg.profile)
    with open(args.file, encoding="utf-8") as fh:
        lines = load_proof_lines(fh.read())
    proof = reconstruct(lines, profile)
    verdict = check(proof, profile)
    rows = [[args.file, profile.name, verdict.valid,
             verdict.line or "", verdict.reason or ""]]
    human = ([f"valid ({len(lines)} lines, profile {profile.name})"]
             if verdict.valid else
             [f"invalid at line {verdict.line}: {verdict.reason}"])
    _emit(args, cfg, "proof-check",
          ["file", "profile", "valid", "line", "reason"], rows, human)
    return EXIT_OK if verdict.valid else EXIT_NEGATIVE


def cmd_psi_list(args, cfg: Config) -> int:
    profile = get_profile(cfg.profile)
    src = _resolve_psi(cfg, profile)
    entries = []
    truncated = False
    for n in range(1, args.count + 1):
        try:
            entries.append(src.entry(n))
        except ExhaustedBound:
            truncated = True
            break
    rows = [[e.n, e.code, e.placement] for e in entries]
    human = [f"{e.n}\t{e.code}\t{e.placement}" for e in entries]
    if truncated:
        human.append(f"# stream exhausted after {len(entries)} entries")
    _emit(args, cfg, "psi", ["n", "code", "placement"], rows, human)
    if args.save_cache:
        from .psi import append_psi_cache
        append_psi_cache(args.save_cache, entries, src.describe,
                         getattr(src, "declared_placements", False))
    return EXIT_OK


def cmd_lottery_winner(args, cfg: Config) -> int:
    cache = _resolve_cache(cfg, needed=max(args.placement + args.n - 1,
                                           2 * args.n - 1))
    wv = winner_eq(args.n, args.placement, args.k, cache)
    rows = [[wv.k, wv.n, wv.placement, wv.lhs, wv.rhs, wv.is_winner]]
    human = [f"n={wv.n} placement={wv.placement} k={wv.k}: "
             f"t_k -> {wv.lhs} vs {wv.rhs}: "
             + ("winner" if wv.is_winner else "not a winner")]
    _emit(args, cfg, "winner", ["k", "n", "placement", "lhs", "rhs", "isWinner"],
          rows, human)
    return EXIT_OK if wv.is_winner else EXIT_NEGATIVE


def cmd_lottery_winning_k(args, cfg: Config) -> int:
    cache = _resolve_cache(cfg, needed=max(args.placement + args.n - 1,
                                           2 * args.n - 1))
    k = construct_winning_k(args.n, args.placement, cache)
    _emit(args, cfg, "winning-k", ["n", "placement", "k"],
          [[args.n, args.placement, k]], [str(k)])
    return EXIT_OK


def cmd_lottery_check_cert(args, cfg: Config) -> int:
    profile = get_profile(cfg.profile)
    cache = _resolve_cache(cfg)
    src = _resolve_psi(cfg, profile)
    result = check_certificate(_int_arg(args.g), _int_arg(args.p), args.k,
                               src, cache, profile)
    rows = [[result.verdict, result.stage or "", result.reason or "",
             result.steps_by_stage["i"], result.steps_by_stage["ii"],
             result.steps_by_stage["iii"]]]
    human = [f"{result.verdict}"
             + (f": {result.reason}" if result.reason else "")
             + f" (steps i={result.steps_by_stage['i']}"
               f" ii={result.steps_by_stage['ii']}"
               f" iii={result.steps_by_stage['iii']})"]
    _emit(args, cfg, "cert", ["verdict", "stage", "reason",
                              "steps_i", "steps_ii", "steps_iii"], rows, human)
    return EXIT_OK if result.accepted else EXIT_NEGATIVE


def cmd_lottery_scan_mw(args, cfg: Config) -> int:
    profile = get_profile(cfg.profile)
    cache = _resolve_cache(cfg)
    src = _resolve_psi(cfg, profile)
    report = scan_max_winner(args.k, args.nmax, src, cache)
    columns = ["k", "n", "placement", "lhs", "rhs", "isWinner"]
    rows = [[row.k, row.n, row.placement, row.lhs, row.rhs, row.is_winner]
            for row in report.rows]
    human = [f"winners: {list(report.winners)}",
             f"max winner within bound: {report.max_winner_within_bound}"]
    if report.truncated:
        human.append(f"truncated: {report.truncation_reason}")
    _emit(args, cfg, "mw-scan", columns, rows, human)
    out = _report_dir(args)
    if out:
        from .report import render_mw_scan
        _write_report_records(out, cfg, "mw-scan", columns, rows)
        fig = render_mw_scan(report, out)
        print(f"report written to {out} ({os.path.basename(fig)})",
              file=sys.stderr)
    return EXIT_OK


def cmd_lottery_brute(args, cfg: Config) -> int:
    profile = get_profile(cfg.profile)
    cache = _resolve_cache(cfg)
    src = _resolve_psi(cfg, profile)
    budget = Budget(cfg.budget_max_certificate_digits,
                    cfg.budget_max_candidates)
    answer = brute_force_solve(_int_arg(args.w), args.j, args.k, src, cache,
                               profile, budget)
    _emit(args, cfg, "brute", ["w_digits", "j", "k", "answer"],
          [[len(str(_int_arg(args.w))), args.j, args.k,
            "yes" if answer else "no"]],
          ["yes" if answer else "no"])
    return EXIT_OK if answer else EXIT_NEGATIVE


def cmd_prob_product(args, cfg: Config) -> int:
    pv = product_p(args.terms, args.precision)
    columns = ["terms", "value", "error_bound"]
    rows = [[pv.terms, pv.decimal(args.precision),
             repr(float(pv.error_bound))]]
    human = [f"product over {pv.terms} terms = {pv.decimal(args.precision)} "
             f"(tail bound {float(pv.error_bound):.3e})"]
    _emit(args, cfg, "product", columns, rows, human)
    out = _report_dir(args)
    if out:
        from .report import render_product_convergence
        values = [product_p(t) for t in range(1, args.terms + 1)]
        _write_report_records(out, cfg, "product", columns, rows)
        fig = render_product_convergence(values, out)
        print(f"report written to {out} ({os.path.basename(fig)})",
              file=sys.stderr)
    return EXIT_OK


def cmd_prob_tail(args, cfg: Config) -> int:
    pv = tail_p(args.n, args.terms, args.precision)
    _emit(args, cfg, "tail", ["n", "terms", "value", "error_bound"],
          [[args.n, pv.terms, pv.decimal(args.precision),
            repr(float(pv.error_bound))]],
          [f"tail after n={args.n}, {pv.terms} terms = "
           f"{pv.decimal(args.precision)}"])
    return EXIT_OK


def cmd_prob_simulate(args, cfg: Config) -> int:
    sim = simulate_winners(args.nmax, args.trials, args.seed)
    analytic = truncated_no_winner_probability(args.nmax)
    columns = ["n", "empirical", "model"]
    rows = [[n, repr(float(sim.per_n_freq[n - 1])), repr(10.0 ** -n)]
            for n in range(1, args.nmax + 1)]
    rows.append(["none", repr(float(sim.no_winner_freq)),
                 repr(float(analytic))])
    human = [f"{'n':>6} {'empirical':>12} {'model':>12}"]
    human += [f"{n:>6} {float(sim.per_n_freq[n - 1]):>12.6f} {10.0 ** -n:>12.6f}"
              for n in range(1, args.nmax + 1)]
    human.append(f"{'none':>6} {float(sim.no_winner_freq):>12.6f} "
                 f"{float(analytic):>12.6f}")
    _emit(args, cfg, "simulate", columns, rows, human)
    out = _report_dir(args)
    if out:
        from .report import render_simulation
        _write_report_records(out, cfg, "simulate", columns, rows)
        fig = render_simulation(sim, float(analytic), out)
        print(f"report written to {out} ({os.path.basename(fig)})",
              file=sys.stderr)
    return EXIT_OK


def cmd_prob_sequential(args, cfg: Config) -> int:
    rec = sequential_experiment(args.max_stages, args.seed, args.horizon)
    _emit(args, cfg, "sequential",
          ["seed", "horizon", "winners", "stopped_at_stage"],
          [[rec.seed, args.horizon,
            ",".join(map(str, rec.winners_found)) or "-",
            rec.stopped_at_stage]],
          [f"winners {list(rec.winners_found)}; "
           + (f"stopped at stage {rec.stopped_at_stage}"
              if rec.stopped_at_stage else "all stages succeeded")])
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pilottery",
        description="inconsistency-proof lottery workbench",
    )
    parser.add_argument("--config", help="path to a JSON config file")
    parser.add_argument("--format", choices=["human", "records"],
                        help="output format")
    parser.add_argument("--profile", choices=["pa-core", "mini"],
                        help="axiom profile")
    parser.add_argument("--cache", help="digit cache file")
    parser.add_argument("--cache-digits", type=int,
                        help="digits to build when no cache file is given")
    parser.add_argument("--psi-backend",
                        choices=["synthetic", "enumerated", "cache"])
    parser.add_argument("--psi-seed", type=int)
    parser.add_argument("--psi-density", type=float)
    parser.add_argument("--psi-code-bound", type=_int_arg)
    parser.add_argument("--psi-cache", dest="psi_cache_path")
    parser.add_argument("--verbose", action="store_true",
                        help="log the resolved config to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    pi = sub.add_parser("pi", help="digit cache operations")
    pi_sub = pi.add_subparsers(dest="sub", required=True)
    group = pi_sub.add_parser("group", help="digit group pi[m]_(n)")
    group.add_argument("m", type=int)
    group.add_argument("n", type=int)
    group.set_defaults(func=cmd_pi_group)
    build = pi_sub.add_parser("build", help="build a digit cache")
    build.add_argument("count", type=int)
    build.add_argument("--algorithm", default="machin",
                       choices=["spigot", "machin", "chudnovsky", "series"])
    build.add_argument("--out", help="write the cache to this file")
    build.set_defaults(func=cmd_pi_build)

    tk = sub.add_parser("tk", help="shift a digit group, t_k")
    tk.add_argument("group")
    tk.add_argument("k", type=int)
    tk.set_defaults(func=cmd_tk)

    godel = sub.add_parser("godel", help="word coding")
    godel_sub = godel.add_subparsers(dest="sub", required=True)
    enc = godel_sub.add_parser("encode")
    enc.add_argument("word")
    enc.set_defaults(func=cmd_godel_encode)
    dec = godel_sub.add_parser("decode")
    dec.add_argument("code")
    dec.set_defaults(func=cmd_godel_decode)
    rnk = godel_sub.add_parser("rank")
    rnk.add_argument("code")
    rnk.set_defaults(func=cmd_godel_rank)

    proof = sub.add_parser("proof", help="proof checking")
    proof_sub = proof.add_subparsers(dest="sub", required=True)
    pcheck = proof_sub.add_parser("check")
    pcheck.add_argument("file")
    pcheck.set_defaults(func=cmd_proof_check)

    psi = sub.add_parser("psi", help="the ordered proof-code stream")
    psi_sub = psi.add_subparsers(dest="sub", required=True)
    plist = psi_sub.add_parser("list")
    plist.add_argument("--count", type=int, required=True)
    plist.add_argument("--save-cache", help="append entries to a cache file")
    plist.set_defaults(func=cmd_psi_list)

    lottery = sub.add_parser("lottery", help="winner and certificate checks")
    lot_sub = lottery.add_subparsers(dest="sub", required=True)
    winner = lot_sub.add_parser("winner")
    winner.add_argument("n", type=int)
    winner.add_argument("placement", type=int)
    winner.add_argument("k", type=int)
    winner.set_defaults(func=cmd_lottery_winner)
    wk = lot_sub.add_parser("winning-k")
    wk.add_argument("n", type=int)
    wk.add_argument("placement", type=int)
    wk.set_defaults(func=cmd_lottery_winning_k)
    cert = lot_sub.add_parser("check-cert")
    cert.add_argument("g")
    cert.add_argument("p")
    cert.add_argument("k", type=int)
    cert.set_defaults(func=cmd_lottery_check_cert)
    mw = lot_sub.add_parser("scan-mw")
    mw.add_argument("k", type=int)
    mw.add_argument("nmax", type=int)
    mw.add_argument("--report-dir")
    mw.set_defaults(func=cmd_lottery_scan_mw)
    brute = lot_sub.add_parser("brute")
    brute.add_argument("w")
    brute.add_argument("j", type=int)
    brute.add_argument("k", type=int)
    brute.set_defaults(func=cmd_lottery_brute)

    prob = sub.add_parser("prob", help="the no-winner probability model")
    prob_sub = prob.add_subparsers(dest="sub", required=True)
    product = prob_sub.add_parser("product")
    product.add_argument("terms", type=int)
    product.add_argument("--precision", type=int, default=30)
    product.add_argument("--report-dir")
    product.set_defaults(func=cmd_prob_product)
    tail = prob_sub.add_parser("tail")
    tail.add_argument("n", type=int)
    tail.add_argument("terms", type=int)
    tail.add_argument("--precision", type=int, default=30)
    tail.set_defaults(func=cmd_prob_tail)
    simulate = prob_sub.add_parser("simulate")
    simulate.add_argument("nmax", type=int)
    simulate.add_argument("trials", type=int)
    simulate.add_argument("seed", type=int)
    simulate.add_argument("--report-dir")
    simulate.set_defaults(func=cmd_prob_simulate)
    seq = prob_sub.add_parser("sequential")
    seq.add_argument("max_stages", type=int)
    seq.add_argument("seed", type=int)
    seq.add_argument("--horizon", type=int, default=10)
    seq.set_defaults(func=cmd_prob_sequential)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(
            args.config,
            output_format=args.format,
            profile=args.profile,
            cache_path=args.cache,
            cache_digits=args.cache_digits,
            psi_backend=args.psi_backend,
            psi_seed=args.psi_seed,
            psi_density=args.psi_density,
            psi_code_bound=args.psi_code_bound,
            psi_cache_path=args.psi_cache_path,
        )
        if args.verbose:
            print(f"#config {cfg.canonical_json()}", file=sys.stderr)
        return args.func(args, cfg)
    except (CacheExhausted, ExhaustedBound, StreamExhausted,
            ResourceBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, NotInGamma, MalformedProofWord, PilotteryError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
