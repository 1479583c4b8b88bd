"""End-to-end acceptance checks over seeded random samples.

One test per criterion (the float audit is split into its three claims),
each printing a PASS line with the measured numbers when it holds. The
samples are drawn once with a fixed seed, so every run sees the same
configs. No hypothesis here: failures must be reproducible verbatim.

Known red: the compensated-summation error bound of 3*2^-53 cannot hold
across unrestricted speed ratios, because the terms being summed are
produced by iterated multiplication and carry a relative drift of about
2^-52 * r/(1-r), which dwarfs the summation's own error as r -> 1. The
test asserts the stated bound anyway and fails with the measured excess.
The bound does hold comfortably for r <= 1/2 and for the reference
configs, which the same test reports before reaching the assertion.
"""

import random
import subprocess
import sys
from fractions import Fraction

import pytest

from cli_cases import CASES, golden_path
from zenoseq.errors import DivergenceError
from zenoseq.floatsum import error_sweep, sum_compensated, sum_naive
from zenoseq.processes import (
    DichotomyConfig,
    GeometricEventProcess,
    accumulation_point,
    dichotomy_process,
    race_as_process,
)
from zenoseq.race import (
    CatchUp,
    RaceConfig,
    catch_up,
    gap_at_step,
    position_at,
    step_sequence,
    steps_to_within,
    t_n_closed,
    verify_speed_identities,
    x_n_closed,
)

F = Fraction
SEED = 20260817
ULP_HALF = F(1, 2**53)  # unit roundoff of binary64
SWEEP_NS = [0, 1, 2, 5, 10, 31, 100, 316, 1000, 3162, 10000]


def small_rational(rng: random.Random) -> Fraction:
    return F(rng.randint(1, 1000), rng.randint(1, 1000))


def sample_configs(count: int = 200) -> list[RaceConfig]:
    """Randomized configs with numerators/denominators <= 1000 and r != 1."""
    rng = random.Random(SEED)
    configs = []
    while len(configs) < count:
        x0 = small_rational(rng)
        sa = small_rational(rng)
        st = F(0) if rng.random() < 0.05 else small_rational(rng)
        config = RaceConfig(x0, sa, st)
        if config.ratio != 1:
            configs.append(config)
    return configs


def sample_chasing_configs(count: int = 50) -> list[RaceConfig]:
    """Configs with 0 < r < 1 (a strictly slower but moving leader)."""
    rng = random.Random(SEED + 1)
    configs = []
    for _ in range(count):
        q = rng.randint(2, 1000)
        r = F(rng.randint(1, q - 1), q)
        sa = small_rational(rng)
        configs.append(RaceConfig(small_rational(rng), sa, sa * r))
    return configs


def sample_divergent_configs(count: int = 20) -> list[RaceConfig]:
    rng = random.Random(SEED + 2)
    configs = []
    for i in range(count):
        r = F(1) if i < 5 else F(rng.randint(1000, 3000), 1000)
        sa = small_rational(rng)
        configs.append(RaceConfig(small_rational(rng), sa, sa * r))
    return configs


CONFIGS = sample_configs()
CONVERGENT = [c for c in CONFIGS if c.ratio < 1]
CHASING = sample_chasing_configs()
DIVERGENT = sample_divergent_configs()


def test_criterion_1_reference_catch_up_table():
    expected = {
        2: CatchUp(F(1), F(2)),
        3: CatchUp(F(1, 2), F(3, 2)),
        5: CatchUp(F(1, 4), F(5, 4)),
        10: CatchUp(F(1, 9), F(10, 9)),
    }
    for sa, want in expected.items():
        assert catch_up(RaceConfig(1, sa, 1)) == want
    print("1 PASS: catch-up table exact for pursuer speeds 2, 3, 5, 10 (zero tolerance)")


def test_criterion_2_closed_forms_equal_recurrence():
    assert len(CONFIGS) == 200
    for config in CONFIGS:
        events = step_sequence(config, 65)
        for event in events:
            assert event.t == t_n_closed(config, event.n), (config, event.n)
            assert event.x == x_n_closed(config, event.n), (config, event.n)
    print("2 PASS: closed forms equal the recurrence exactly, 200 configs x n <= 64")


def test_criterion_3_speed_identities():
    for config in CONFIGS:
        assert verify_speed_identities(config, 64), config
    print("3 PASS: speed identities hold exactly, 200 configs x 64 steps")


def test_criterion_4_behind_at_steps_ahead_after_limit():
    assert len(CHASING) == 50
    deltas = (F(1, 1000), F(1), F(1000))
    for config in CHASING:
        for n in range(65):
            assert gap_at_step(config, n) > 0, (config, n)
        t_inf = catch_up(config).t_inf
        at_limit = position_at(config, t_inf)
        assert at_limit.xa == at_limit.xt, config
        for delta in deltas:
            later = position_at(config, t_inf + delta)
            assert later.xa > later.xt, (config, delta)
    print("4 PASS: positive gap at every step, equality at t_inf, strictly ahead at t_inf + delta")


def test_criterion_5_residual_law_and_threshold_inversion():
    for config in CONVERGENT:
        r = config.ratio
        t_inf = catch_up(config).t_inf
        scale = (config.x0 / config.sa) / (1 - r)
        for n in range(65):
            assert t_inf - t_n_closed(config, n) == scale * r ** (n + 1), (config, n)

    rng = random.Random(SEED + 3)
    pairs = []
    for i in range(50):
        config = CHASING[i % len(CHASING)]
        r = config.ratio
        target = rng.randint(0, 48)
        residual = (config.x0 / config.sa) * r ** (target + 1) / (1 - r)
        if i % 5 == 0:
            eps = residual  # exact tie: the strict inequality must step past it
        else:
            eps = residual * (1 + F(rng.randint(1, 99), 100))
        pairs.append((config, eps))

    for config, eps in pairs:
        t_inf = catch_up(config).t_inf
        expected = 0
        while t_inf - t_n_closed(config, expected) >= eps:
            expected += 1
        assert steps_to_within(config, eps) == expected, (config, eps)
    print("5 PASS: residual law exact on the convergent sample; threshold inversion matches brute-force scan on 50 pairs")


def test_criterion_6_process_unification():
    for config in CONVERGENT + CHASING:
        assert accumulation_point(race_as_process(config)) == catch_up(config).t_inf, config

    rng = random.Random(SEED + 4)
    for _ in range(50):
        config = DichotomyConfig(small_rational(rng), small_rational(rng))
        total = accumulation_point(dichotomy_process(config))
        assert total == config.length / config.speed, config
    print("6 PASS: race-as-process accumulation equals catch-up time; dichotomy total equals length/speed")


def test_criterion_7a_naive_error_bound():
    worst = F(0)
    for config in CONVERGENT:
        for n in (0, 1, 5, 31, 316):
            report = sum_naive(config, n)
            bound = (n + 1) * F(1, 2**52)
            assert report.rel_error <= bound, (config, n)
            worst = max(worst, report.rel_error / bound)
    for config in CONVERGENT[:40]:
        for n in (1000, 3162, 10000):
            report = sum_naive(config, n)
            bound = (n + 1) * F(1, 2**52)
            assert report.rel_error <= bound, (config, n)
            worst = max(worst, report.rel_error / bound)
    print(f"7a PASS: naive rel_error <= (n+1)*2^-52 across the sample, worst at {float(worst):.3f} of bound")


def test_criterion_7b_compensated_error_bound():
    bound = 3 * ULP_HALF

    reference = [RaceConfig(1, 2, 1), RaceConfig(1, 10, 1), RaceConfig(1, 3, 1)]
    worst_reference = F(0)
    for config in reference:
        for n in SWEEP_NS:
            worst_reference = max(worst_reference, sum_compensated(config, n).rel_error)
    assert worst_reference <= bound
    print(f"7b reference configs: worst {float(worst_reference / bound):.3f} of 3*2^-53")

    halved = [c for c in CONVERGENT if c.ratio <= F(1, 2)]
    worst_halved = F(0)
    for config in halved:
        for n in SWEEP_NS:
            worst_halved = max(worst_halved, sum_compensated(config, n).rel_error)
    assert worst_halved <= bound
    print(f"7b ratios <= 1/2 ({len(halved)} configs): worst {float(worst_halved / bound):.3f} of 3*2^-53")

    worst = F(0)
    worst_at = None
    for config in CONVERGENT:
        for n in SWEEP_NS:
            rel = sum_compensated(config, n).rel_error
            if rel > worst:
                worst, worst_at = rel, (config, n)
    within_bound = worst <= bound
    if within_bound:
        print("7b PASS: compensated rel_error <= 3*2^-53 across the full sample")
    assert within_bound, (
        f"compensated rel_error exceeds 3*2^-53 by {float(worst / bound):.1f}x at "
        f"r={float(worst_at[0].ratio):.4f}, n={worst_at[1]}; iterated-multiplication "
        f"term drift ~2^-52*r/(1-r) is not covered by the summation bound"
    )


def test_criterion_7c_power_of_two_exactness():
    rng = random.Random(SEED + 5)
    checked = 0
    for _ in range(20):
        a = rng.randint(-10, 10)
        b = rng.randint(-10, 10)
        config = RaceConfig(F(2) ** a, F(2) ** b, F(2) ** (b - 1))
        for naive, comp in error_sweep(config, 50):
            assert naive.abs_error == 0, (config, naive.n)
            assert comp.abs_error == 0, (config, comp.n)
            checked += 1
    print(f"7c PASS: power-of-two configs sum exactly for n <= 50 ({checked} reports, both methods)")


def test_criterion_8_divergent_configs_error_but_still_step():
    assert len(DIVERGENT) == 20
    for config in DIVERGENT:
        assert config.ratio >= 1
        with pytest.raises(DivergenceError):
            catch_up(config)
        with pytest.raises(DivergenceError):
            race_as_process(config)
        with pytest.raises(DivergenceError):
            accumulation_point(
                GeometricEventProcess(config.x0 / config.sa, config.ratio)
            )
        events = step_sequence(config, 32)
        assert len(events) == 32
        assert all(e.t > 0 and e.x > 0 for e in events)
    print("8 PASS: 20 configs with r >= 1 raise on limits while step tables still emit")


def test_criterion_9_cli_golden_files():
    for case in CASES:
        proc = subprocess.run(
            [sys.executable, "-m", "zenoseq", *case.argv], capture_output=True, timeout=60
        )
        assert proc.returncode == case.exit_code, (case.name, proc.stderr.decode())
        assert proc.stdout == golden_path(case.name).read_bytes(), case.name
        if case.stderr_contains:
            assert case.stderr_contains in proc.stderr.decode(), case.name
    print(f"9 PASS: {len(CASES)} CLI cases byte-identical to committed goldens with contract exit codes")
