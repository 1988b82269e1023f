"""Performance analysis: exact failure probabilities, Monte Carlo
simulation of the binary erasure channel, and the benchmark-table check.

Simulation randomness is counter-based (Philox-4x64-10 keyed by the
seed): trials are grouped in fixed blocks of 4096 and block b draws from
counter (0, 0, b, 0), with trial t consuming rows t mod 4096 of its
block.  Every trial's erasure pattern is therefore a pure function of
(seed, trial index), independent of how the work is partitioned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.random import Generator, Philox

from .codes import Enumerator, LinearCode, catalog, rm_8_4_4
from .decoder import is_parity_check_of
from .gf2 import BitMatrix
from .stopsets import (
    batch_peel_residuals,
    incorrigible_enumerator,
    is_incorrigible,
    optimal_enumerators,
    profile,
)

_TRIAL_BLOCK = 4096  # part of the stream definition; do not change casually
_Z99 = 2.5758293035489004  # two-sided 99% normal quantile


@dataclass(frozen=True)
class ChannelConfig:
    """Binary erasure channel simulation parameters."""

    epsilon: float
    trials: int
    seed: int

    def __post_init__(self) -> None:
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"epsilon must be in (0,1), got {self.epsilon}")
        if self.trials < 1:
            raise ValueError("trials must be positive")


def analytic_pud(e: Enumerator, epsilon: float, n: Optional[int] = None) -> float:
    """Exact failure probability sum_i E_i eps^i (1-eps)^(n-i).

    Works for any set-size enumerator: the incorrigible enumerator gives
    the optimal decoder's failure probability, a dead-end enumerator the
    iterative decoder's.
    """
    if n is None:
        n = e.n
    if e.n != n:
        raise ValueError(f"enumerator has {e.n + 1} coefficients, expected {n + 1}")
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must be in (0,1), got {epsilon}")
    return float(sum(c * epsilon**i * (1.0 - epsilon) ** (n - i) for i, c in enumerate(e.coefficients)))


@dataclass(frozen=True)
class PerformanceReport:
    """Analytic and empirical failure rates for one (code, matrix, channel)."""

    n: int
    epsilon: float
    trials: int
    seed: int
    analytic_opt: float
    analytic_it: float
    empirical_opt: float
    empirical_it: float
    ci99_opt: float
    ci99_it: float
    opt_failures: int
    it_failures: int
    it_only_failures: int
    dominant_opt: float  # A_d eps^d
    dominant_it: float  # S_s eps^s

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "epsilon": self.epsilon,
            "trials": self.trials,
            "seed": self.seed,
            "analytic": {"optimal": self.analytic_opt, "iterative": self.analytic_it},
            "empirical": {
                "optimal": {"rate": self.empirical_opt, "ci99_halfwidth": self.ci99_opt},
                "iterative": {"rate": self.empirical_it, "ci99_halfwidth": self.ci99_it},
            },
            "failures": {
                "optimal": self.opt_failures,
                "iterative": self.it_failures,
                "iterative_only": self.it_only_failures,
            },
            "dominant_terms": {"optimal": self.dominant_opt, "iterative": self.dominant_it},
        }


def _erasure_masks(seed: int, start: int, stop: int, n: int, epsilon: float) -> np.ndarray:
    """Erasure masks for trials [start, stop), per the pinned stream."""
    out = np.empty(stop - start, dtype=np.uint64)
    filled = 0
    first_block = start // _TRIAL_BLOCK
    last_block = (stop - 1) // _TRIAL_BLOCK
    weights = (np.uint64(1) << np.arange(n, dtype=np.uint64))
    for b in range(first_block, last_block + 1):
        rng = Generator(Philox(key=seed, counter=[0, 0, b, 0]))
        u = rng.random((_TRIAL_BLOCK, n))
        lo = max(start, b * _TRIAL_BLOCK) - b * _TRIAL_BLOCK
        hi = min(stop, (b + 1) * _TRIAL_BLOCK) - b * _TRIAL_BLOCK
        erased = u[lo:hi] < epsilon
        masks = (erased * weights).sum(axis=1, dtype=np.uint64)
        out[filled : filled + hi - lo] = masks
        filled += hi - lo
    return out


def monte_carlo(code: LinearCode, h: BitMatrix, cfg: ChannelConfig) -> PerformanceReport:
    """Simulate both decoders on the erasure channel.

    Transmits the zero codeword: by linearity the failure events depend
    only on the erasure set, never on the transmitted word.  Iterative
    failure means the peeling fixpoint is nonempty; optimal failure
    means the erasure set is incorrigible.
    """
    if not is_parity_check_of(h, code):
        raise ValueError("matrix is not a parity-check matrix of the code")
    n = code.n

    it_failures = 0
    opt_failures = 0
    it_only = 0
    chunk = 1 << 16
    incorrigible_cache: dict[int, bool] = {}
    for start in range(0, cfg.trials, chunk):
        stop = min(start + chunk, cfg.trials)
        masks = _erasure_masks(cfg.seed, start, stop, n, cfg.epsilon)
        it_fail = batch_peel_residuals(h, masks) != 0
        uniq, inverse = np.unique(masks, return_inverse=True)
        uniq_fail = np.empty(uniq.shape, dtype=bool)
        for i, m in enumerate(uniq):
            m = int(m)
            if m not in incorrigible_cache:
                incorrigible_cache[m] = is_incorrigible(code, m)
            uniq_fail[i] = incorrigible_cache[m]
        opt_fail = uniq_fail[inverse]
        it_failures += int(it_fail.sum())
        opt_failures += int(opt_fail.sum())
        it_only += int((it_fail & ~opt_fail).sum())

    i_poly = incorrigible_enumerator(code)
    h_profile = profile(h)
    a_poly = code.weight_enumerator
    analytic_opt = analytic_pud(i_poly, cfg.epsilon, n)
    analytic_it = analytic_pud(h_profile.dead_end, cfg.epsilon, n)
    d = code.minimum_distance
    s = h_profile.stopping_distance
    dominant_opt = 0.0 if code.k == 0 else a_poly[int(d)] * cfg.epsilon ** int(d)
    dominant_it = 0.0 if s > n else h_profile.stopping[s] * cfg.epsilon**s

    def halfwidth(fails: int) -> float:
        p = fails / cfg.trials
        return _Z99 * (p * (1.0 - p) / cfg.trials) ** 0.5

    return PerformanceReport(
        n=n,
        epsilon=cfg.epsilon,
        trials=cfg.trials,
        seed=cfg.seed,
        analytic_opt=analytic_opt,
        analytic_it=analytic_it,
        empirical_opt=opt_failures / cfg.trials,
        empirical_it=it_failures / cfg.trials,
        ci99_opt=halfwidth(opt_failures),
        ci99_it=halfwidth(it_failures),
        opt_failures=opt_failures,
        it_failures=it_failures,
        it_only_failures=it_only,
        dominant_opt=dominant_opt,
        dominant_it=dominant_it,
    )


# ---------------------------------------------------------------------------
# benchmark table

# Published reference enumerators for the [8,4,4] Reed-Muller code and
# its standard parity-check matrices; exact integer coefficients.
_TABLE1_A = (1, 0, 0, 0, 14, 0, 0, 0, 1)
_TABLE1_I = (0, 0, 0, 0, 14, 56, 28, 8, 1)
_TABLE1_SD = {
    "H_4": ((1, 0, 0, 2, 24, 40, 28, 8, 1), (0, 0, 0, 2, 32, 56, 28, 8, 1)),
    "H_5": ((1, 0, 0, 0, 18, 36, 28, 8, 1), (0, 0, 0, 0, 18, 56, 28, 8, 1)),
    "H_8": ((1, 0, 0, 0, 14, 24, 28, 8, 1), (0, 0, 0, 0, 14, 56, 28, 8, 1)),
    "H_14": ((1, 0, 0, 0, 14, 0, 28, 8, 1), (0, 0, 0, 0, 14, 56, 28, 8, 1)),
    "H*": ((1, 0, 0, 0, 14, 0, 28, 8, 1), (0, 0, 0, 0, 14, 56, 28, 8, 1)),
}


@dataclass(frozen=True)
class Table1Entry:
    label: str
    expected: Enumerator
    computed: Enumerator

    @property
    def match(self) -> bool:
        return self.expected == self.computed

    def to_json_obj(self) -> dict:
        return {
            "label": self.label,
            "expected": self.expected.poly_str(),
            "computed": self.computed.poly_str(),
            "match": self.match,
        }


@dataclass(frozen=True)
class Table1Report:
    entries: tuple[Table1Entry, ...]
    flags: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(e.match for e in self.entries)

    def to_json_obj(self) -> dict:
        return {
            "ok": self.ok,
            "entries": [e.to_json_obj() for e in self.entries],
            "flags": dict(self.flags),
        }

    def render_pretty(self) -> str:
        width = max(len(e.label) for e in self.entries) + 2
        lines = []
        for e in self.entries:
            status = "ok " if e.match else "MISMATCH"
            lines.append(f"{e.label:<{width}} {status:<9} {e.computed.poly_str()}")
            if not e.match:
                lines.append(f"{'':<{width}} expected  {e.expected.poly_str()}")
        for name, value in self.flags:
            lines.append(f"flag: {name} = {value}")
        return "\n".join(lines)


def table1_report() -> Table1Report:
    """Recompute every enumerator in the benchmark table and diff it
    against the published values."""
    rm = rm_8_4_4()
    entries = [
        Table1Entry("A(x)", Enumerator(_TABLE1_A), rm.weight_enumerator),
        Table1Entry("I(x)", Enumerator(_TABLE1_I), incorrigible_enumerator(rm)),
    ]
    computed: dict[str, tuple[Enumerator, Enumerator]] = {}
    for name in ("H_4", "H_5", "H_8", "H_14"):
        p = profile(catalog(name))
        computed[name] = (p.stopping, p.dead_end)
    star = optimal_enumerators(rm)
    computed["H*"] = (star.stopping, star.dead_end)
    for name, (exp_s, exp_d) in _TABLE1_SD.items():
        s_poly, d_poly = computed[name]
        entries.append(Table1Entry(f"S(x) {name}", Enumerator(exp_s), s_poly))
        entries.append(Table1Entry(f"D(x) {name}", Enumerator(exp_d), d_poly))

    i_poly = incorrigible_enumerator(rm)
    flags = (
        ("h14_stopping_enumerator_is_optimal", computed["H_14"][0] == star.stopping),
        ("h8_dead_end_is_incorrigible", computed["H_8"][1] == i_poly),
        ("h14_dead_end_is_incorrigible", computed["H_14"][1] == i_poly),
        ("star_dead_end_is_incorrigible", computed["H*"][1] == i_poly),
    )
    return Table1Report(tuple(entries), flags)
