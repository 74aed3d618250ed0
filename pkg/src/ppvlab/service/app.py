"""Stateless JSON facade over the library.

Every handler is a pure function of its request body: parse, call the
library, wrap in the envelope {"ok": true, "result": ...}. Errors become
{"ok": false, "error": {"code", "message"}} with HTTP 400 for domain
violations (including malformed bodies) and 422 for in-domain requests the
model cannot answer (non-discriminating inversion, out-of-range rates,
leverage <= 1 pipelines). Responses carry full float precision; rounding is
the client's job.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .. import __version__
from ..collapse import (
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
from ..core import OperatingPoint, StudyContext, classify, diagnose, lambda_required, ppv
from ..dynamics import (
    FieldDecay,
    ProgrammeState,
    classify_programme,
    field_lifetime,
    fixed_point,
    generational_trajectory,
    prior_at,
)
from ..errors import DomainError, PpvLabError
from ..heterogeneity import (
    PriorDensity,
    PriorMixture,
    expected_ppv,
    expected_ppv_density,
    heterogeneity_tax,
    jensen_gap_approx,
)
from ..landscape import (
    feasibility_boundary_pi,
    field_presets,
    grid,
    majority_false_boundary_pi,
    ppv_contour_pi,
)
from ..montecarlo import (
    SimConfig,
    simulate_generations,
    simulate_ppv,
    simulate_replication,
    simulate_spec_search,
)
from ..replication import (
    ReplicationDesign,
    bridge_forward,
    bridge_invert,
    min_pipeline_depth,
    pipeline_leverage,
    pipeline_ppv,
)
from ..report import IdentificationStatus, ReportRequest, evidential_report
from ..core import pi_crit as core_pi_crit
from . import schemas


def _ok(result) -> JSONResponse:
    return JSONResponse({"ok": True, "result": result})


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse({"ok": False, "error": {"code": code, "message": message}},
                        status_code=status)


def _estimate_dict(est) -> dict:
    return {"estimate": est.estimate, "standard_error": est.standard_error,
            "trials": est.trials}


def _log_spaced(lo: float, hi: float, n: int) -> list[float]:
    llo, lhi = math.log(lo), math.log(hi)
    return [math.exp(llo + (lhi - llo) * i / (n - 1)) for i in range(n)]


def _require(body: schemas.SimulateRequest, names: list[str]) -> dict:
    values = {}
    for name in names:
        value = getattr(body, name)
        if value is None:
            raise DomainError(f"simulate kind {body.kind!r} requires field {name!r}")
        values[name] = value
    return values


def create_app() -> FastAPI:
    app = FastAPI(title="ppvlab", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"^https?://(localhost|127\.0\.0\.1)(:\d+)?$",
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def on_invalid_request(request: Request, exc: RequestValidationError):
        return _error_response(400, "invalid_request", str(exc.errors()))

    @app.exception_handler(DomainError)
    async def on_domain_error(request: Request, exc: DomainError):
        return _error_response(400, "domain_error", str(exc))

    @app.exception_handler(PpvLabError)
    async def on_model_violation(request: Request, exc: PpvLabError):
        return _error_response(422, "model_violation", str(exc))

    @app.get("/healthz")
    async def healthz():
        return JSONResponse({"ok": True})

    @app.post("/v1/diagnose")
    async def v1_diagnose(body: schemas.DiagnoseRequest):
        d = diagnose(StudyContext(body.pi, body.tau), OperatingPoint(body.alpha, body.power))
        return _ok(d.to_dict())

    @app.post("/v1/bridge/predict")
    async def v1_bridge_predict(body: schemas.BridgePredictRequest):
        rate = bridge_forward(body.ppv, ReplicationDesign(body.alpha_r, body.power_r))
        return _ok({"rate": rate})

    @app.post("/v1/bridge/invert")
    async def v1_bridge_invert(body: schemas.BridgeInvertRequest):
        est = bridge_invert(body.rate, ReplicationDesign(body.alpha_r, body.power_r))
        return _ok({"ppv": est})

    @app.post("/v1/pipeline")
    async def v1_pipeline(body: schemas.PipelineRequest):
        op = OperatingPoint(body.alpha, body.power)
        k_star = min_pipeline_depth(body.tau, body.pi, op)
        top = max(k_star, body.max_depth or 0, 1)
        rows = []
        for k in range(1, top + 1):
            lam_k = pipeline_leverage(op, k)
            rows.append({
                "k": k,
                "leverage": lam_k,
                "ppv": pipeline_ppv(body.pi, op, k),
                "regime": classify(body.tau, body.pi, lam_k).value,
            })
        return _ok({
            "k_star": k_star,
            "lambda_required": lambda_required(body.tau, body.pi),
            "rows": rows,
        })

    @app.post("/v1/search")
    async def v1_search(body: schemas.SearchRequest):
        policy = SpecSearchPolicy(body.m, body.q)
        op = OperatingPoint(body.alpha, body.power)
        result = {
            "alpha_eff": effective_alpha(body.alpha, policy),
            "power_eff": effective_power(body.power, policy),
            "leverage": op.leverage,
            "leverage_eff": effective_leverage(op, policy),
            "discrimination_loss": discrimination_loss(op, policy),
            "saturation_leverage":
                saturation_leverage(op, body.q) if 0.0 < body.q < 1.0 else None,
        }
        return _ok(result)

    @app.post("/v1/confound")
    async def v1_confound(body: schemas.ConfoundRequest):
        try:
            sidedness = Sidedness(body.sidedness)
        except ValueError:
            raise DomainError(
                f"sidedness must be 'one_sided_positive' or 'two_sided'; "
                f"got {body.sidedness!r}")
        cm = ConfoundingModel(bias=body.bias, sigma=body.sigma, sidedness=sidedness)
        points = []
        for n in body.ns:
            lam = obs_effective_leverage(n, body.alpha, cm, body.theta1)
            points.append({
                "n": n,
                "alpha_eff": obs_effective_alpha(n, body.alpha, cm),
                "power_eff": obs_effective_power(n, body.alpha, cm, body.theta1),
                "leverage_eff": lam,
                "ppv": ppv(body.pi, lam),
            })
        return _ok({"points": points})

    @app.post("/v1/adaptive")
    async def v1_adaptive(body: schemas.AdaptiveRequest):
        sched = AdaptiveSchedule(c=body.c, theta1=body.theta1, sigma=body.sigma)
        if body.n is None and body.lambda_req is None:
            raise DomainError("adaptive request needs at least one of 'n', 'lambda_req'")
        result: dict = {"operating_point": None, "required": None}
        if body.n is not None:
            op = adaptive_operating_point(body.n, sched)
            result["operating_point"] = {
                "n": body.n, "alpha": op.alpha, "power": op.power,
                "leverage": op.leverage,
            }
        if body.lambda_req is not None:
            result["required"] = {
                "lambda_req": body.lambda_req,
                "seed_estimate": adaptive_seed_n(body.lambda_req, sched),
                "n": adaptive_required_n(body.lambda_req, sched),
            }
        return _ok(result)

    @app.post("/v1/lifetime")
    async def v1_lifetime(body: schemas.LifetimeRequest):
        fd = FieldDecay(body.pi0, body.decay_rate)
        op = OperatingPoint(body.alpha, body.power)
        lifetime = field_lifetime(fd, body.tau, op)
        result = {
            "pi_crit": core_pi_crit(body.tau, op),
            "lifetime_years": lifetime,
        }
        if body.curve_points:
            n = max(2, body.curve_points)
            horizon = lifetime * 1.5 if lifetime > 0 else 10.0 / body.decay_rate
            result["curve"] = [
                {"t": t, "prior": prior_at(fd, t)}
                for t in (horizon * i / (n - 1) for i in range(n))
            ]
        return _ok(result)

    @app.post("/v1/generations")
    async def v1_generations(body: schemas.GenerationsRequest):
        state = ProgrammeState(body.pi_c, body.leverage, body.ppv0)
        rows = [
            {"k": r.k, "prior": r.prior, "ppv": r.ppv, "waste": r.waste}
            for r in generational_trajectory(state, body.k_max)
        ]
        return _ok({
            "classification": classify_programme(state).value,
            "progress_ratio": state.progress_ratio,
            "fixed_point": fixed_point(state),
            "rows": rows,
        })

    @app.post("/v1/hetero")
    async def v1_hetero(body: schemas.HeteroRequest):
        if (body.components is None) == (body.density is None):
            raise DomainError("hetero request needs exactly one of 'components', 'density'")
        if body.components is not None:
            mix = PriorMixture(tuple((c.pi, c.weight) for c in body.components))
            mean = mix.mean()
            return _ok({
                "mean_prior": mean,
                "variance": mix.variance(),
                "expected_ppv": expected_ppv(mix, body.leverage),
                "ppv_at_mean": ppv(mean, body.leverage),
                "tax": heterogeneity_tax(mix, body.leverage),
                "gap_approx": jensen_gap_approx(mean, mix.variance(), body.leverage),
            })
        density = PriorDensity(body.density.shape_a, body.density.shape_b)
        mean = density.mean()
        return _ok({
            "mean_prior": mean,
            "expected_ppv": expected_ppv_density(density, body.leverage, tol=body.tol),
            "ppv_at_mean": ppv(mean, body.leverage),
        })

    @app.post("/v1/landscape")
    async def v1_landscape(body: schemas.LandscapeRequest):
        g = grid(body.tau, (body.lambda_min, body.lambda_max),
                 (body.pi_min, body.pi_max), body.resolution, body.log_spaced)
        cells = [
            {"lambda": lam, "pi": pi_j, "ppv": p, "regime": reg.value}
            for lam, pi_j, p, reg in g.rows()
        ]
        return _ok({
            "tau": g.tau,
            "lambda_axis": list(g.lambda_axis),
            "pi_axis": list(g.pi_axis),
            "cells": cells,
        })

    @app.post("/v1/boundaries")
    async def v1_boundaries(body: schemas.BoundariesRequest):
        if body.points < 2:
            raise DomainError(f"points must be >= 2; got {body.points}")
        if not 0.0 < body.lambda_min < body.lambda_max:
            raise DomainError(
                f"need 0 < lambda_min < lambda_max; got "
                f"[{body.lambda_min!r}, {body.lambda_max!r}]")
        axis = _log_spaced(body.lambda_min, body.lambda_max, body.points)
        contours = {
            str(level): [ppv_contour_pi(lam, level) for lam in axis]
            for level in body.levels
        }
        return _ok({
            "lambda_axis": axis,
            "feasibility_pi": [feasibility_boundary_pi(lam, body.tau) for lam in axis],
            "majority_false_pi": [majority_false_boundary_pi(lam) for lam in axis],
            "contours": contours,
        })

    @app.post("/v1/curve")
    async def v1_curve(body: schemas.CurveRequest):
        if body.pis is not None:
            pis = list(body.pis)
        else:
            if body.pi_min is None or body.pi_max is None:
                raise DomainError("curve request needs 'pis' or both 'pi_min' and 'pi_max'")
            if body.points < 2:
                raise DomainError(f"points must be >= 2; got {body.points}")
            pis = _log_spaced(body.pi_min, body.pi_max, body.points)
        samples = [
            {"pi": pi_i, "ppv": ppv(pi_i, body.leverage),
             "regime": classify(body.tau, pi_i, body.leverage).value}
            for pi_i in pis
        ]
        return _ok({"leverage": body.leverage, "points": samples})

    @app.post("/v1/simulate")
    async def v1_simulate(body: schemas.SimulateRequest):
        if body.kind == "ppv":
            p = _require(body, ["trials", "pi", "alpha", "power"])
            est = simulate_ppv(SimConfig(body.seed, p["trials"]), p["pi"],
                               OperatingPoint(p["alpha"], p["power"]))
            return _ok(_estimate_dict(est))
        if body.kind == "replication":
            p = _require(body, ["trials", "pi", "alpha", "power", "alpha_r", "power_r"])
            est = simulate_replication(
                SimConfig(body.seed, p["trials"]), p["pi"],
                OperatingPoint(p["alpha"], p["power"]),
                ReplicationDesign(p["alpha_r"], p["power_r"]))
            return _ok(_estimate_dict(est))
        if body.kind == "spec_search":
            p = _require(body, ["trials", "alpha", "power", "m", "q"])
            a_est, p_est = simulate_spec_search(
                SimConfig(body.seed, p["trials"]),
                OperatingPoint(p["alpha"], p["power"]),
                SpecSearchPolicy(p["m"], p["q"]))
            return _ok({"alpha_eff": _estimate_dict(a_est),
                        "power_eff": _estimate_dict(p_est)})
        if body.kind == "generations":
            p = _require(body, ["cohort", "k_max", "pi_c", "leverage", "ppv0"])
            ests = simulate_generations(
                SimConfig(body.seed, max(1, p["cohort"])),
                ProgrammeState(p["pi_c"], p["leverage"], p["ppv0"]),
                p["cohort"], p["k_max"])
            return _ok({
                "rows": [dict(k=k, **_estimate_dict(e)) for k, e in enumerate(ests)],
                "extinct": len(ests) < p["k_max"] + 1,
            })
        raise DomainError(
            f"unknown simulate kind {body.kind!r}; expected one of "
            f"'ppv', 'replication', 'spec_search', 'generations'")

    @app.get("/v1/presets")
    async def v1_presets():
        rows = []
        for p in field_presets():
            rows.append({
                "name": p.name,
                "alpha": p.alpha,
                "power": p.power,
                "pi": p.pi,
                "expected_psi": p.expected_psi,
                "expected_ppv": p.expected_ppv,
                "leverage": p.operating_point.leverage,
                "psi": p.computed_psi(),
                "ppv": p.computed_ppv(),
                "regime": p.computed_regime().value,
            })
        return _ok({"presets": rows})

    @app.post("/v1/report")
    async def v1_report(body: schemas.ReportApiRequest):
        try:
            status = IdentificationStatus(body.identification)
        except ValueError:
            raise DomainError(
                f"identification must be one of 'randomized', "
                f"'quasi_experimental', 'observational_adjusted'; "
                f"got {body.identification!r}")
        req = ReportRequest(
            tau=body.tau, pi_low=body.pi_low, pi_high=body.pi_high,
            alpha=body.alpha, power=body.power, depth=body.depth,
            identification=status)
        return _ok(evidential_report(req).to_dict())

    return app


def serve(host: str = "127.0.0.1", port: int = 8383) -> None:
    """Run the service until interrupted (used by the CLI serve command)."""
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port, log_level="info")
