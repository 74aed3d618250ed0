"""Seeded simulation oracles for every closed form in the package.

These brute-force the same quantities the analytic modules compute, so any
formula drift shows up as a statistical discrepancy. Determinism matters
more than raw speed, so the generator is pinned down completely rather than
delegated to a platform RNG:

Generator specification
-----------------------
* Core generator: xoshiro256** (64-bit shift-register family). One step on
  state (s0, s1, s2, s3), all arithmetic mod 2^64:

      out = rotl(s1 * 5, 7) * 9
      t = s1 << 17
      s2 ^= s0;  s3 ^= s1;  s1 ^= s2;  s0 ^= s3;  s2 ^= t;  s3 = rotl(s3, 45)

  A uniform draw in [0, 1) is (out >> 11) * 2**-53.

* Seeding: fin(z) is the splitmix64 mixing finalizer

      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   (mod 2^64)
      z = (z ^ (z >> 27)) * 0x94D049BB133111EB   (mod 2^64)
      z = z ^ (z >> 31)

  with GOLDEN = 0x9E3779B97F4A7C15. Each simulation kind owns a stream tag;
  the stream base is base(seed, tag) = fin(seed + (tag + 1) * GOLDEN), and
  lane i's state words are fin(base + (4*i + j + 1) * GOLDEN), j = 0..3.
  Every trial (or cohort member) is one lane, so draws vectorize across
  lanes while the sequence each lane consumes is fixed by (seed, tag, lane)
  alone. Nearby seeds land in unrelated states, so seed and seed + 1 give
  statistically independent runs.

Stream tags: 0 for single-test and replication trials, 1 and 2 for the
null/alternative batteries of the specification-search protocol, 16 + g for
generation g of the generational simulation.

Draw schedule per lane: simulate_ppv uses (hypothesis, test); likewise
simulate_replication adds a third draw for the replication test.
simulate_spec_search consumes (test, publish-null) per attempt, always both,
whether or not the attempt happens. simulate_generations uses (hypothesis,
test) at generation 0 and (parent-pick, hypothesis, test) afterwards.

``reference_uniforms`` is the normative scalar implementation; the
vectorized path is tested against it bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._checks import check_int_at_least
from .core import OperatingPoint, ppv
from .collapse import SpecSearchPolicy
from .dynamics import ProgrammeState, prior_from_ppv
from .errors import DomainError, InsufficientSampleError
from .replication import ReplicationDesign

_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_MASK = (1 << 64) - 1
_U53 = 2.0 ** -53

TAG_TRIALS = 0
TAG_SEARCH_NULL = 1
TAG_SEARCH_ALT = 2
TAG_GENERATION = 16


@dataclass(frozen=True)
class SimConfig:
    """Seed and trial count; identical configs give bit-identical results."""

    seed: int
    trials: int

    def __post_init__(self):
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise DomainError(f"seed must be an integer; got {self.seed!r}")
        if not (0 <= self.seed < (1 << 64)):
            raise DomainError(f"seed must fit in 64 bits; got {self.seed!r}")
        check_int_at_least("trials", self.trials, 1)


@dataclass(frozen=True)
class SimEstimate:
    """A proportion estimate with its binomial standard error.

    ``trials`` is the count in the denominator of the estimate (the
    conditioning count for conditional proportions such as PPV).
    """

    estimate: float
    standard_error: float
    trials: int


def _fin(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return (z ^ (z >> 31)) & _MASK


def _stream_base(seed: int, tag: int) -> int:
    return _fin((seed + (tag + 1) * _GOLDEN) & _MASK)


def reference_uniforms(seed: int, tag: int, lane: int, count: int) -> list[float]:
    """Scalar reference stream: the first ``count`` uniforms of one lane."""
    base = _stream_base(seed, tag)
    s = [_fin((base + (4 * lane + j + 1) * _GOLDEN) & _MASK) for j in range(4)]
    out = []
    for _ in range(count):
        x = (s[1] * 5) & _MASK
        word = ((((x << 7) | (x >> 57)) & _MASK) * 9) & _MASK
        t = (s[1] << 17) & _MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = ((s[3] << 45) | (s[3] >> 19)) & _MASK
        out.append((word >> 11) * _U53)
    return out


class _Lanes:
    """Vectorized lane bundle: one xoshiro256** stream per lane."""

    def __init__(self, seed: int, tag: int, n: int):
        base = np.uint64(_stream_base(seed, tag))
        idx = np.arange(n, dtype=np.uint64)
        words = []
        for j in range(4):
            z = base + (idx * np.uint64(4) + np.uint64(j + 1)) * np.uint64(_GOLDEN)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
            words.append(z ^ (z >> np.uint64(31)))
        self._s = words

    def uniform(self) -> np.ndarray:
        """Advance every lane once; uniforms in [0, 1)."""
        s0, s1, s2, s3 = self._s
        x = s1 * np.uint64(5)
        out = ((x << np.uint64(7)) | (x >> np.uint64(57))) * np.uint64(9)
        t = s1 << np.uint64(17)
        s2 = s2 ^ s0
        s3 = s3 ^ s1
        s1 = s1 ^ s2
        s0 = s0 ^ s3
        s2 = s2 ^ t
        s3 = (s3 << np.uint64(45)) | (s3 >> np.uint64(19))
        self._s = [s0, s1, s2, s3]
        return (out >> np.uint64(11)).astype(np.float64) * _U53


def _proportion(hits: int, n: int) -> SimEstimate:
    p = hits / n
    return SimEstimate(estimate=p,
                       standard_error=math.sqrt(p * (1.0 - p) / n),
                       trials=n)


def simulate_ppv(cfg: SimConfig, pi: float, op: OperatingPoint) -> SimEstimate:
    """Empirical P(true | significant) from cfg.trials simulated studies."""
    if not (0.0 < pi < 1.0):
        raise DomainError(f"pi must lie strictly inside (0, 1); got {pi!r}")
    lanes = _Lanes(cfg.seed, TAG_TRIALS, cfg.trials)
    true_h = lanes.uniform() < pi
    u_test = lanes.uniform()
    significant = np.where(true_h, u_test < op.power, u_test < op.alpha)
    n_sig = int(significant.sum())
    if n_sig == 0:
        raise InsufficientSampleError(
            f"no significant results in {cfg.trials} trials; cannot estimate PPV")
    return _proportion(int((true_h & significant).sum()), n_sig)


def simulate_replication(cfg: SimConfig, pi: float, op: OperatingPoint,
                         design: ReplicationDesign) -> SimEstimate:
    """Empirical P(replication significant | original significant)."""
    if not (0.0 < pi < 1.0):
        raise DomainError(f"pi must lie strictly inside (0, 1); got {pi!r}")
    lanes = _Lanes(cfg.seed, TAG_TRIALS, cfg.trials)
    true_h = lanes.uniform() < pi
    u_orig = lanes.uniform()
    sig_orig = np.where(true_h, u_orig < op.power, u_orig < op.alpha)
    n_orig = int(sig_orig.sum())
    if n_orig == 0:
        raise InsufficientSampleError(
            f"no significant originals in {cfg.trials} trials")
    u_rep = lanes.uniform()
    sig_rep = np.where(true_h, u_rep < design.power_r, u_rep < design.alpha_r)
    return _proportion(int((sig_orig & sig_rep).sum()), n_orig)


def _search_battery(seed: int, tag: int, trials: int, rate: float,
                    policy: SpecSearchPolicy) -> SimEstimate:
    lanes = _Lanes(seed, tag, trials)
    alive = np.ones(trials, dtype=bool)
    published_sig = np.zeros(trials, dtype=bool)
    for _ in range(policy.m):
        u_test = lanes.uniform()
        u_pub = lanes.uniform()
        sig = u_test < rate
        published_sig |= alive & sig
        stop_on_null = (~sig) & (u_pub < policy.q)
        alive &= ~(sig | stop_on_null)
    return _proportion(int(published_sig.sum()), trials)


def simulate_spec_search(cfg: SimConfig, op: OperatingPoint,
                         policy: SpecSearchPolicy) -> tuple[SimEstimate, SimEstimate]:
    """Published-significant rates under the sequential-search protocol.

    Simulates the protocol literally (stop on the first significant
    specification, publish a null with probability q, at most m attempts)
    under a true null and under a true effect; returns (alpha_eff, power_eff)
    estimates.
    """
    alpha_est = _search_battery(cfg.seed, TAG_SEARCH_NULL, cfg.trials, op.alpha, policy)
    power_est = _search_battery(cfg.seed, TAG_SEARCH_ALT, cfg.trials, op.power, policy)
    return alpha_est, power_est


def simulate_generations(cfg: SimConfig, state: ProgrammeState, cohort: int,
                         k_max: int) -> list[SimEstimate]:
    """Population simulation of generational reliability.

    Each generation runs ``cohort`` studies (cfg.trials is unused here; the
    seed alone comes from cfg). Generation 0 draws hypotheses at the prior
    recovered from state.ppv0; each later study picks a published parent
    finding uniformly from the previous generation and spawns a true
    hypothesis with probability pi_c only if the parent was true. The test
    splits the leverage canonically as alpha = 1/(leverage + 1),
    power = leverage/(leverage + 1), which leaves every PPV unchanged.

    Returns one estimate per generation, 0..k_max; the list is truncated
    early if a generation publishes nothing (extinction).
    """
    check_int_at_least("cohort", cohort, 1)
    check_int_at_least("k_max", k_max, 0)
    alpha = 1.0 / (state.leverage + 1.0)
    power = state.leverage / (state.leverage + 1.0)
    pi0 = prior_from_ppv(state.ppv0, state.leverage)

    results: list[SimEstimate] = []
    lanes = _Lanes(cfg.seed, TAG_GENERATION, cohort)
    true_h = lanes.uniform() < pi0
    u_test = lanes.uniform()
    significant = np.where(true_h, u_test < power, u_test < alpha)
    pool = true_h[significant]
    if pool.size == 0:
        return results
    results.append(_proportion(int(pool.sum()), int(pool.size)))

    for g in range(1, k_max + 1):
        lanes = _Lanes(cfg.seed, TAG_GENERATION + g, cohort)
        pick = (lanes.uniform() * pool.size).astype(np.int64)
        parent_true = pool[pick]
        true_h = parent_true & (lanes.uniform() < state.pi_c)
        u_test = lanes.uniform()
        significant = np.where(true_h, u_test < power, u_test < alpha)
        pool = true_h[significant]
        if pool.size == 0:
            return results
        results.append(_proportion(int(pool.sum()), int(pool.size)))
    return results


def closed_form_ppv(pi: float, op: OperatingPoint) -> float:
    """Convenience: the analytic value simulate_ppv estimates."""
    return ppv(pi, op.leverage)
