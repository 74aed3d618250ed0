"""Command-line front door.

Every subcommand parses flags, calls exactly one library entry point, and
prints either a human summary (3 significant figures) or, with --json, the
full-precision machine payload. No arithmetic happens here.

Exit codes: 0 success, 2 usage error, 3 domain error (the message names the
violated invariant), 4 model violation (e.g. a bridge inversion outside the
design's admissible range).

An optional --config PATH names a flat JSON object whose keys mirror flag
names (dashes or underscores); explicit flags override file values.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from .collapse import (
    AdaptiveSchedule,
    ConfoundingModel,
    Sidedness,
    SpecSearchPolicy,
    adaptive_operating_point,
    adaptive_required_n,
    adaptive_seed_n,
    discrimination_loss,
    effective_alpha,
    effective_leverage,
    effective_power,
    obs_effective_alpha,
    obs_effective_leverage,
    obs_effective_power,
    saturation_leverage,
)
from .core import OperatingPoint, StudyContext, classify, diagnose, lambda_required, ppv
from .dynamics import (
    FieldDecay,
    ProgrammeState,
    classify_programme,
    field_lifetime,
    fixed_point,
    generational_trajectory,
)
from .errors import DomainError, ModelViolationError, PpvLabError
from .heterogeneity import (
    PriorDensity,
    PriorMixture,
    expected_ppv,
    expected_ppv_density,
    heterogeneity_tax,
    jensen_gap_approx,
)
from .landscape import field_presets, grid
from .montecarlo import (
    SimConfig,
    simulate_generations,
    simulate_ppv,
    simulate_replication,
    simulate_spec_search,
)
from .replication import (
    ReplicationDesign,
    bridge_forward,
    bridge_invert,
    min_pipeline_depth,
    pipeline_leverage,
    pipeline_ppv,
)
from .report import IdentificationStatus, ReportRequest, evidential_report
from .core import pi_crit as core_pi_crit

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_MODEL = 4


def fmt(x: Any) -> str:
    """Human formatting: 3 significant figures for floats."""
    if isinstance(x, float):
        return format(x, ".3g")
    return str(x)


def emit(payload: dict, args: argparse.Namespace, human: Callable[[dict], list[str]]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        for line in human(payload):
            print(line)


def _regime_words(value: str) -> str:
    return value.replace("_", "-")


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_diagnose(args) -> int:
    d = diagnose(StudyContext(args.pi, args.tau), OperatingPoint(args.alpha, args.power))
    payload = d.to_dict()

    def human(p):
        depth = "n/a (leverage <= 1)" if p["min_pipeline_depth"] is None \
            else str(p["min_pipeline_depth"])
        return [
            f"leverage          {fmt(p['leverage'])}",
            f"ppv               {fmt(p['ppv'])}",
            f"posterior log-odds {fmt(p['log_odds_posterior'])}",
            f"ceiling           {fmt(p['ceiling'])}",
            f"required leverage {fmt(p['lambda_required'])}",
            f"psi               {fmt(p['psi'])}",
            f"critical prior    {fmt(p['pi_crit'])}",
            f"majority-false at {fmt(p['pi_half'])}",
            f"regime            {_regime_words(p['regime'])}",
            f"waste ratio       {fmt(p['waste_ratio'])}",
            f"npv               {fmt(p['npv'])}",
            f"misinfo floor     {fmt(p['misinfo_floor'])}",
            f"alpha max         {fmt(p['alpha_max'])}",
            f"min pipeline depth {depth}",
        ]

    emit(payload, args, human)
    return EXIT_OK


def cmd_bridge_predict(args) -> int:
    rate = bridge_forward(args.ppv, ReplicationDesign(args.alpha_r, args.power_r))
    emit({"rate": rate}, args, lambda p: [f"predicted replication rate {fmt(p['rate'])}"])
    return EXIT_OK


def cmd_bridge_invert(args) -> int:
    est = bridge_invert(args.rate, ReplicationDesign(args.alpha_r, args.power_r))
    emit({"ppv": est}, args, lambda p: [f"implied ppv {fmt(p['ppv'])}"])
    return EXIT_OK


def cmd_pipeline(args) -> int:
    op = OperatingPoint(args.alpha, args.power)
    k_star = min_pipeline_depth(args.tau, args.pi, op)
    top = max(k_star, args.max_depth or 0, 1)
    rows = []
    for k in range(1, top + 1):
        lam_k = pipeline_leverage(op, k)
        rows.append({"k": k, "leverage": lam_k,
                     "ppv": pipeline_ppv(args.pi, op, k),
                     "regime": classify(args.tau, args.pi, lam_k).value})
    payload = {"k_star": k_star,
               "lambda_required": lambda_required(args.tau, args.pi),
               "rows": rows}

    def human(p):
        lines = [f"k* = {p['k_star']} (required leverage {fmt(p['lambda_required'])})"]
        for r in p["rows"]:
            lines.append(f"  k={r['k']}: leverage {fmt(r['leverage'])}, "
                         f"ppv {fmt(r['ppv'])}, {_regime_words(r['regime'])}")
        return lines

    emit(payload, args, human)
    return EXIT_OK


def cmd_search(args) -> int:
    policy = SpecSearchPolicy(args.m, args.q)
    op = OperatingPoint(args.alpha, args.power)
    payload = {
        "alpha_eff": effective_alpha(args.alpha, policy),
        "power_eff": effective_power(args.power, policy),
        "leverage": op.leverage,
        "leverage_eff": effective_leverage(op, policy),
        "discrimination_loss": discrimination_loss(op, policy),
        "saturation_leverage": saturation_leverage(op, args.q) if 0 < args.q < 1 else None,
    }

    def human(p):
        lines = [
            f"effective alpha   {fmt(p['alpha_eff'])} (nominal {fmt(args.alpha)})",
            f"effective power   {fmt(p['power_eff'])} (nominal {fmt(args.power)})",
            f"effective leverage {fmt(p['leverage_eff'])} (nominal {fmt(p['leverage'])})",
            f"discrimination loss {fmt(p['discrimination_loss'])}",
        ]
        if p["saturation_leverage"] is not None:
            lines.append(f"saturation leverage {fmt(p['saturation_leverage'])}")
        return lines

    emit(payload, args, human)
    return EXIT_OK


def cmd_confound(args) -> int:
    sidedness = Sidedness.TWO_SIDED if args.two_sided else Sidedness.ONE_SIDED_POSITIVE
    cm = ConfoundingModel(bias=args.bias, sigma=args.sigma, sidedness=sidedness)
    points = []
    for n in args.n:
        lam = obs_effective_leverage(n, args.alpha, cm, args.theta1)
        points.append({"n": n,
                       "alpha_eff": obs_effective_alpha(n, args.alpha, cm),
                       "power_eff": obs_effective_power(n, args.alpha, cm, args.theta1),
                       "leverage_eff": lam, "ppv": ppv(args.pi, lam)})
    payload = {"points": points}

    def human(p):
        lines = ["      n   alpha_eff  power_eff  leverage_eff  ppv"]
        for pt in p["points"]:
            lines.append(f"{pt['n']:>7}   {fmt(pt['alpha_eff']):>9}  "
                         f"{fmt(pt['power_eff']):>9}  {fmt(pt['leverage_eff']):>12}  "
                         f"{fmt(pt['ppv'])}")
        return lines

    emit(payload, args, human)
    return EXIT_OK


def cmd_adaptive(args) -> int:
    sched = AdaptiveSchedule(c=args.c, theta1=args.theta1, sigma=args.sigma)
    if args.n is None and args.lambda_req is None:
        print("adaptive needs --n and/or --lambda-req", file=sys.stderr)
        return EXIT_USAGE
    payload: dict = {"operating_point": None, "required": None}
    if args.n is not None:
        op = adaptive_operating_point(args.n, sched)
        payload["operating_point"] = {"n": args.n, "alpha": op.alpha,
                                      "power": op.power, "leverage": op.leverage}
    if args.lambda_req is not None:
        payload["required"] = {"lambda_req": args.lambda_req,
                               "seed_estimate": adaptive_seed_n(args.lambda_req, sched),
                               "n": adaptive_required_n(args.lambda_req, sched)}

    def human(p):
        lines = []
        if p["operating_point"]:
            o = p["operating_point"]
            lines.append(f"at n={o['n']}: alpha {fmt(o['alpha'])}, power "
                         f"{fmt(o['power'])}, leverage {fmt(o['leverage'])}")
        if p["required"]:
            r = p["required"]
            lines.append(f"leverage {fmt(r['lambda_req'])} needs n = {r['n']} "
                         f"(seed estimate {fmt(r['seed_estimate'])})")
        return lines

    emit(payload, args, human)
    return EXIT_OK


def cmd_lifetime(args) -> int:
    if args.decay_rate is None:
        if args.gamma is None or args.delta is None:
            print("lifetime needs --decay-rate or both --gamma and --delta",
                  file=sys.stderr)
            return EXIT_USAGE
        rate = args.gamma + args.delta
    else:
        rate = args.decay_rate
    fd = FieldDecay(args.pi0, rate)
    op = OperatingPoint(args.alpha, args.power)
    payload = {"pi_crit": core_pi_crit(args.tau, op),
               "lifetime_years": field_lifetime(fd, args.tau, op)}
    emit(payload, args, lambda p: [
        f"critical prior {fmt(p['pi_crit'])}",
        f"lifetime       {fmt(p['lifetime_years'])} years",
    ])
    return EXIT_OK


def cmd_generations(args) -> int:
    state = ProgrammeState(args.pi_c, args.leverage, args.ppv0)
    rows = [{"k": r.k, "prior": r.prior, "ppv": r.ppv, "waste": r.waste}
            for r in generational_trajectory(state, args.k_max)]
    payload = {"classification": classify_programme(state).value,
               "progress_ratio": state.progress_ratio,
               "fixed_point": fixed_point(state),
               "rows": rows}

    def human(p):
        lines = [f"programme is {p['classification']} "
                 f"(progress ratio {fmt(p['progress_ratio'])}, "
                 f"fixed point {fmt(p['fixed_point'])})",
                 "  k   prior     ppv      waste"]
        for r in p["rows"]:
            lines.append(f"  {r['k']:<3} {fmt(r['prior']):<9} {fmt(r['ppv']):<8} "
                         f"{fmt(r['waste'])}")
        return lines

    emit(payload, args, human)
    return EXIT_OK


def _parse_component(text: str) -> tuple[float, float]:
    try:
        pi_str, w_str = text.split(":")
        return float(pi_str), float(w_str)
    except ValueError:
        raise DomainError(f"mixture component must look like PI:WEIGHT; got {text!r}")


def cmd_hetero(args) -> int:
    if args.component:
        mix = PriorMixture.normalized([_parse_component(c) for c in args.component])
        mean = mix.mean()
        payload = {"mean_prior": mean,
                   "variance": mix.variance(),
                   "expected_ppv": expected_ppv(mix, args.leverage),
                   "ppv_at_mean": ppv(mean, args.leverage),
                   "tax": heterogeneity_tax(mix, args.leverage),
                   "gap_approx": jensen_gap_approx(mean, mix.variance(), args.leverage)}
        emit(payload, args, lambda p: [
            f"mean prior    {fmt(p['mean_prior'])} (variance {fmt(p['variance'])})",
            f"expected ppv  {fmt(p['expected_ppv'])}",
            f"ppv at mean   {fmt(p['ppv_at_mean'])}",
            f"tax           {fmt(p['tax'])} (second-order estimate {fmt(p['gap_approx'])})",
        ])
        return EXIT_OK
    if args.beta_a is None or args.beta_b is None:
        print("hetero needs --component entries or --beta-a/--beta-b", file=sys.stderr)
        return EXIT_USAGE
    density = PriorDensity(args.beta_a, args.beta_b)
    payload = {"mean_prior": density.mean(),
               "expected_ppv": expected_ppv_density(density, args.leverage, tol=args.tol),
               "ppv_at_mean": ppv(density.mean(), args.leverage)}
    emit(payload, args, lambda p: [
        f"mean prior    {fmt(p['mean_prior'])}",
        f"expected ppv  {fmt(p['expected_ppv'])}",
        f"ppv at mean   {fmt(p['ppv_at_mean'])}",
    ])
    return EXIT_OK


def cmd_landscape(args) -> int:
    g = grid(args.tau, (args.lambda_min, args.lambda_max),
             (args.pi_min, args.pi_max), args.resolution,
             log_spaced=not args.linear)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fp:
            g.write_csv(fp)
    payload = {"tau": g.tau,
               "lambda_axis": list(g.lambda_axis),
               "pi_axis": list(g.pi_axis),
               "cells": [{"lambda": lam, "pi": pi_j, "ppv": p, "regime": reg.value}
                         for lam, pi_j, p, reg in g.rows()]}

    def human(p):
        lines = [f"{len(p['cells'])} cells over leverage "
                 f"[{fmt(args.lambda_min)}, {fmt(args.lambda_max)}] x prior "
                 f"[{fmt(args.pi_min)}, {fmt(args.pi_max)}]"]
        counts: dict[str, int] = {}
        for c in p["cells"]:
            counts[c["regime"]] = counts.get(c["regime"], 0) + 1
        for regime, count in sorted(counts.items()):
            lines.append(f"  {_regime_words(regime)}: {count}")
        if args.csv:
            lines.append(f"wrote {args.csv}")
        return lines

    emit(payload, args, human)
    return EXIT_OK


def cmd_presets(args) -> int:
    rows = []
    for p in field_presets():
        rows.append({"name": p.name, "alpha": p.alpha, "power": p.power, "pi": p.pi,
                     "expected_psi": p.expected_psi, "expected_ppv": p.expected_ppv,
                     "leverage": p.operating_point.leverage,
                     "psi": p.computed_psi(), "ppv": p.computed_ppv(),
                     "regime": p.computed_regime().value})
    payload = {"presets": rows}

    def human(p):
        lines = ["field                alpha     power   pi       psi      ppv     regime"]
        for r in p["presets"]:
            lines.append(f"{r['name']:<20} {fmt(r['alpha']):<9} {fmt(r['power']):<7} "
                         f"{fmt(r['pi']):<8} {fmt(r['psi']):<8} {fmt(r['ppv']):<7} "
                         f"{_regime_words(r['regime'])}")
        return lines

    emit(payload, args, human)
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.kind == "ppv":
        est = simulate_ppv(SimConfig(args.seed, args.trials), args.pi,
                           OperatingPoint(args.alpha, args.power))
        payload = {"estimate": est.estimate, "standard_error": est.standard_error,
                   "trials": est.trials}
        emit(payload, args, lambda p: [
            f"ppv estimate {fmt(p['estimate'])} +/- {fmt(p['standard_error'])} "
            f"({p['trials']} significant)"])
        return EXIT_OK
    if args.kind == "replication":
        est = simulate_replication(SimConfig(args.seed, args.trials), args.pi,
                                   OperatingPoint(args.alpha, args.power),
                                   ReplicationDesign(args.alpha_r, args.power_r))
        payload = {"estimate": est.estimate, "standard_error": est.standard_error,
                   "trials": est.trials}
        emit(payload, args, lambda p: [
            f"replication rate {fmt(p['estimate'])} +/- {fmt(p['standard_error'])} "
            f"({p['trials']} significant originals)"])
        return EXIT_OK
    if args.kind == "spec-search":
        a_est, p_est = simulate_spec_search(SimConfig(args.seed, args.trials),
                                            OperatingPoint(args.alpha, args.power),
                                            SpecSearchPolicy(args.m, args.q))
        payload = {"alpha_eff": {"estimate": a_est.estimate,
                                 "standard_error": a_est.standard_error,
                                 "trials": a_est.trials},
                   "power_eff": {"estimate": p_est.estimate,
                                 "standard_error": p_est.standard_error,
                                 "trials": p_est.trials}}
        emit(payload, args, lambda p: [
            f"alpha_eff {fmt(p['alpha_eff']['estimate'])} +/- "
            f"{fmt(p['alpha_eff']['standard_error'])}",
            f"power_eff {fmt(p['power_eff']['estimate'])} +/- "
            f"{fmt(p['power_eff']['standard_error'])}"])
        return EXIT_OK
    # generations
    ests = simulate_generations(SimConfig(args.seed, max(1, args.cohort)),
                                ProgrammeState(args.pi_c, args.leverage, args.ppv0),
                                args.cohort, args.k_max)
    payload = {"rows": [{"k": k, "estimate": e.estimate,
                         "standard_error": e.standard_error, "trials": e.trials}
                        for k, e in enumerate(ests)],
               "extinct": len(ests) < args.k_max + 1}

    def human(p):
        lines = [f"  k   ppv estimate (+/- se)        published"]
        for r in p["rows"]:
            lines.append(f"  {r['k']:<3} {fmt(r['estimate'])} +/- "
                         f"{fmt(r['standard_error'])}   {r['trials']}")
        if p["extinct"]:
            lines.append("trajectory truncated: a generation published nothing")
        return lines

    emit(payload, args, human)
    return EXIT_OK


def cmd_report(args) -> int:
    req = ReportRequest(tau=args.tau, pi_low=args.pi_low, pi_high=args.pi_high,
                        alpha=args.alpha, power=args.power, depth=args.depth,
                        identification=IdentificationStatus(
                            args.identification.replace("-", "_")))
    rep = evidential_report(req)
    payload = rep.to_dict()

    def human(p):
        lines = [
            f"target tau        {fmt(p['tau'])}",
            f"prior range       [{fmt(p['pi_low'])}, {fmt(p['pi_high'])}]",
            f"alpha / power     {fmt(p['alpha'])} / {fmt(p['power'])}",
            f"psi               {fmt(p['psi_low'])} at low, {fmt(p['psi_high'])} at high",
            f"ceiling           {fmt(p['ceiling_low'])} at low, {fmt(p['ceiling_high'])} at high",
            f"planned depth     {p['depth']} (pipeline leverage {fmt(p['pipeline_leverage'])})",
            f"pipeline ppv      {fmt(p['pipeline_ppv_low'])} at low, "
            f"{fmt(p['pipeline_ppv_high'])} at high",
            f"identification    {p['identification']}",
            f"verdict           {p['verdict'].upper()}",
        ]
        for flag in p["flags"]:
            lines.append(f"  flag: {flag}")
        return lines

    emit(payload, args, human)
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import serve

    serve(host=args.host, port=args.port)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser assembly


def _add_json_and_config(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--config", metavar="PATH",
                   help="flat JSON file of flag defaults; flags override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppvlab",
        description="Reliability diagnostics for significance-based study designs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagnose", help="full design-stage diagnostic report")
    p.add_argument("--pi", type=float, required=False)
    p.add_argument("--alpha", type=float, required=False)
    p.add_argument("--power", type=float, required=False)
    p.add_argument("--tau", type=float, required=False)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_diagnose, required_flags=["pi", "alpha", "power", "tau"])

    bridge = sub.add_parser("bridge", help="replication bridge")
    bsub = bridge.add_subparsers(dest="bridge_command", required=True)
    p = bsub.add_parser("predict", help="replication rate implied by a PPV")
    p.add_argument("--ppv", type=float, required=False)
    p.add_argument("--alpha-r", type=float, dest="alpha_r", required=False)
    p.add_argument("--power-r", type=float, dest="power_r", required=False)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_bridge_predict, required_flags=["ppv", "alpha_r", "power_r"])
    p = bsub.add_parser("invert", help="PPV implied by an observed replication rate")
    p.add_argument("--rate", type=float, required=False)
    p.add_argument("--alpha-r", type=float, dest="alpha_r", required=False)
    p.add_argument("--power-r", type=float, dest="power_r", required=False)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_bridge_invert, required_flags=["rate", "alpha_r", "power_r"])

    p = sub.add_parser("pipeline", help="minimum replication-pipeline depth")
    p.add_argument("--pi", type=float, required=False)
    p.add_argument("--alpha", type=float, required=False)
    p.add_argument("--power", type=float, required=False)
    p.add_argument("--tau", type=float, required=False)
    p.add_argument("--max-depth", type=int, dest="max_depth")
    _add_json_and_config(p)
    p.set_defaults(func=cmd_pipeline, required_flags=["pi", "alpha", "power", "tau"])

    p = sub.add_parser("search", help="effective rates under specification search")
    p.add_argument("--alpha", type=float, required=False)
    p.add_argument("--power", type=float, required=False)
    p.add_argument("--m", type=int, required=False)
    p.add_argument("--q", type=float, required=False)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_search, required_flags=["alpha", "power", "m", "q"])

    p = sub.add_parser("confound", help="effective rates under persistent confounding")
    p.add_argument("--pi", type=float, required=False)
    p.add_argument("--alpha", type=float, required=False)
    p.add_argument("--bias", type=float, required=False)
    p.add_argument("--theta1", type=float, required=False)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--two-sided", action="store_true", dest="two_sided")
    p.add_argument("--n", type=int, action="append", required=False,
                   help="sample size (repeatable)")
    _add_json_and_config(p)
    p.set_defaults(func=cmd_confound, required_flags=["pi", "alpha", "bias", "theta1", "n"])

    p = sub.add_parser("adaptive", help="vanishing-alpha threshold schedule")
    p.add_argument("--c", type=float, required=False)
    p.add_argument("--theta1", type=float, required=False)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--n", type=int)
    p.add_argument("--lambda-req", type=float, dest="lambda_req")
    _add_json_and_config(p)
    p.set_defaults(func=cmd_adaptive, required_flags=["c", "theta1"])

    p = sub.add_parser("lifetime", help="years until a decaying prior crosses critical")
    p.add_argument("--pi0", type=float, required=False)
    p.add_argument("--decay-rate", type=float, dest="decay_rate")
    p.add_argument("--gamma", type=float)
    p.add_argument("--delta", type=float)
    p.add_argument("--tau", type=float, required=False)
    p.add_argument("--alpha", type=float, required=False)
    p.add_argument("--power", type=float, required=False)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_lifetime, required_flags=["pi0", "tau", "alpha", "power"])

    p = sub.add_parser("generations", help="generational reliability trajectory")
    p.add_argument("--pi-c", type=float, dest="pi_c", required=False)
    p.add_argument("--leverage", type=float, required=False)
    p.add_argument("--ppv0", type=float, required=False)
    p.add_argument("--k-max", type=int, dest="k_max", required=False)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_generations, required_flags=["pi_c", "leverage", "ppv0", "k_max"])

    p = sub.add_parser("hetero", help="reliability cost of prior heterogeneity")
    p.add_argument("--leverage", type=float, required=False)
    p.add_argument("--component", action="append", metavar="PI:WEIGHT",
                   help="mixture component (repeatable); weights are normalized")
    p.add_argument("--beta-a", type=float, dest="beta_a")
    p.add_argument("--beta-b", type=float, dest="beta_b")
    p.add_argument("--tol", type=float, default=1e-8)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_hetero, required_flags=["leverage"])

    p = sub.add_parser("landscape", help="regime grid over (leverage, prior)")
    p.add_argument("--tau", type=float, required=False)
    p.add_argument("--lambda-min", type=float, dest="lambda_min", required=False)
    p.add_argument("--lambda-max", type=float, dest="lambda_max", required=False)
    p.add_argument("--pi-min", type=float, dest="pi_min", required=False)
    p.add_argument("--pi-max", type=float, dest="pi_max", required=False)
    p.add_argument("--resolution", type=int, required=False)
    p.add_argument("--linear", action="store_true", help="linear axes instead of log")
    p.add_argument("--csv", metavar="PATH", help="write the grid in long CSV format")
    _add_json_and_config(p)
    p.set_defaults(func=cmd_landscape,
                   required_flags=["tau", "lambda_min", "lambda_max",
                                   "pi_min", "pi_max", "resolution"])

    p = sub.add_parser("presets", help="reference field calibrations")
    _add_json_and_config(p)
    p.set_defaults(func=cmd_presets, required_flags=[])

    sim = sub.add_parser("simulate", help="seeded Monte Carlo oracles")
    ssub = sim.add_subparsers(dest="kind", required=True)
    p = ssub.add_parser("ppv")
    p.add_argument("--seed", type=int, required=False)
    p.add_argument("--trials", type=int, required=False)
    p.add_argument("--pi", type=float, required=False)
    p.add_argument("--alpha", type=float, required=False)
    p.add_argument("--power", type=float, required=False)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_simulate, required_flags=["seed", "trials", "pi", "alpha", "power"])
    p = ssub.add_parser("replication")
    p.add_argument("--seed", type=int, required=False)
    p.add_argument("--trials", type=int, required=False)
    p.add_argument("--pi", type=float, required=False)
    p.add_argument("--alpha", type=float, required=False)
    p.add_argument("--power", type=float, required=False)
    p.add_argument("--alpha-r", type=float, dest="alpha_r", required=False)
    p.add_argument("--power-r", type=float, dest="power_r", required=False)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_simulate,
                   required_flags=["seed", "trials", "pi", "alpha", "power",
                                   "alpha_r", "power_r"])
    p = ssub.add_parser("spec-search")
    p.add_argument("--seed", type=int, required=False)
    p.add_argument("--trials", type=int, required=False)
    p.add_argument("--alpha", type=float, required=False)
    p.add_argument("--power", type=float, required=False)
    p.add_argument("--m", type=int, required=False)
    p.add_argument("--q", type=float, required=False)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_simulate,
                   required_flags=["seed", "trials", "alpha", "power", "m", "q"])
    p = ssub.add_parser("generations")
    p.add_argument("--seed", type=int, required=False)
    p.add_argument("--cohort", type=int, required=False)
    p.add_argument("--k-max", type=int, dest="k_max", required=False)
    p.add_argument("--pi-c", type=float, dest="pi_c", required=False)
    p.add_argument("--leverage", type=float, required=False)
    p.add_argument("--ppv0", type=float, required=False)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_simulate,
                   required_flags=["seed", "cohort", "k_max", "pi_c", "leverage", "ppv0"])

    p = sub.add_parser("report", help="evidential status report for a planned design")
    p.add_argument("--tau", type=float, required=False)
    p.add_argument("--pi-low", type=float, dest="pi_low", required=False)
    p.add_argument("--pi-high", type=float, dest="pi_high", required=False)
    p.add_argument("--alpha", type=float, required=False)
    p.add_argument("--power", type=float, required=False)
    p.add_argument("--depth", type=int, required=False)
    p.add_argument("--identification",
                   choices=["randomized", "quasi-experimental", "observational-adjusted",
                            "quasi_experimental", "observational_adjusted"],
                   required=False)
    _add_json_and_config(p)
    p.set_defaults(func=cmd_report,
                   required_flags=["tau", "pi_low", "pi_high", "alpha", "power",
                                   "depth", "identification"])

    p = sub.add_parser("serve", help="run the JSON service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8383)
    p.set_defaults(func=cmd_serve, required_flags=[])

    return parser


def _apply_config(args: argparse.Namespace, argv: list[str]) -> None:
    """Fill unset flags from the --config JSON file; flags always win."""
    path = getattr(args, "config", None)
    if not path:
        return
    with open(path, encoding="utf-8") as fp:
        values = json.load(fp)
    if not isinstance(values, dict):
        raise DomainError(f"config file must hold a flat JSON object; got {type(values).__name__}")
    explicit = {token.split("=")[0].lstrip("-").replace("-", "_")
                for token in argv if token.startswith("--")}
    for key, value in values.items():
        attr = key.replace("-", "_")
        if attr in explicit or not hasattr(args, attr):
            continue
        if getattr(args, attr) is None or getattr(args, attr) is False:
            setattr(args, attr, value)


def _missing_flags(args: argparse.Namespace) -> list[str]:
    return [name for name in getattr(args, "required_flags", [])
            if getattr(args, name, None) is None]


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, argv)
        missing = _missing_flags(args)
        if missing:
            flags = ", ".join("--" + name.replace("_", "-") for name in missing)
            print(f"missing required flags: {flags}", file=sys.stderr)
            return EXIT_USAGE
        return args.func(args)
    except ModelViolationError as exc:
        print(f"model violation: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PpvLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
