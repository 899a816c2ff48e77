"""Acceptance gate: one test per release criterion, each printing a
PASS/FAIL line (run with ``pytest tests/test_acceptance.py -v -s``).

Every tolerance is fixed here, not calibrated.  Oracles are independent
of the code paths they check: numpy normal equations for the regression,
closed-form curve evaluation for the fits, the pinned seeded generator
for reproducibility.
"""

from __future__ import annotations

import json
import math
import re
import time

from conftest import FIXTURES, ols_normal_equations, rel_err, sample_series
from techevo import (
    LogisticParams,
    SplitMix64,
    SyntheticSpec,
    align,
    check_relation,
    classify_pathway,
    early_phase_pair,
    emit_table,
    estimate_evolution,
    evolution_fit_from_summary,
    f_sf,
    fit_logistic,
    generate_pair,
    logistic_value,
    ols_simple,
    parse_fmt_csv,
    relation_constant,
    solve_time,
    t_quantile,
    t_two_sided_p,
)
from techevo.cli import EXIT_OK, main
from test_report import stub_report

SYNTH_HOST = FIXTURES / "synth_host.csv"
SYNTH_SUB = FIXTURES / "synth_sub.csv"

# Digest of the committed synthetic fixtures under the default report
# config, frozen after one reviewed run.
GOLDEN_DIGEST = "sha256:402218f41ccdd170a9c45bfc0929ecc2dae81f52a0d0ea5dad604b04eb506c6a"


def _verdict(num: int, description: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[criterion {num}] {status} — {description}{suffix}")
    assert ok, f"criterion {num}: {description}{suffix}"


def test_criterion_1_logistic_recovery():
    truth = LogisticParams(a=4.0, b=0.3, k=100.0)
    series = sample_series(truth, [i * 2.0 for i in range(21)])
    start = time.perf_counter()
    fit = fit_logistic(series)
    elapsed = time.perf_counter() - start
    worst = max(
        rel_err(fit.params.a, truth.a),
        rel_err(fit.params.b, truth.b),
        rel_err(fit.params.k, truth.k),
    )
    _verdict(
        1,
        "noise-free logistic recovery within 1e-6 in < 1 s",
        worst < 1e-6 and elapsed < 1.0,
        f"worst rel err {worst:.2e}, {elapsed * 1e3:.0f} ms",
    )


def _seeded_datasets(count: int):
    for i in range(count):
        rng = SplitMix64(10_000 + i)
        n = 3 + rng.next_u64() % 48
        x = [j * (8.0 / max(n - 1, 1)) + 2.0 * rng.uniform() for j in range(n)]
        sign_b = -1.0 if rng.uniform() < 0.5 else 1.0
        sign_a = -1.0 if rng.uniform() < 0.5 else 1.0
        slope = sign_b * (0.2 + 1.8 * rng.uniform())
        intercept = sign_a * (0.3 + 2.7 * rng.uniform())
        sigma = 0.05 + 0.45 * rng.uniform()
        y = [intercept + slope * xj + sigma * rng.normal() for xj in x]
        yield x, y


def test_criterion_2_ols_oracle_equivalence():
    worst = 0.0
    for x, y in _seeded_datasets(1000):
        mine = ols_simple(x, y)
        ref = ols_normal_equations(x, y)
        worst = max(
            worst,
            rel_err(mine.slope, ref["slope"]),
            rel_err(mine.intercept, ref["intercept"]),
            rel_err(mine.se_slope, ref["se_slope"]),
            rel_err(mine.se_intercept, ref["se_intercept"]),
        )
    _verdict(
        2,
        "1000 seeded datasets match normal-equations oracle to 1e-10",
        worst < 1e-10,
        f"worst rel err {worst:.2e}",
    )


def test_criterion_3_single_regressor_identity():
    worst_f = 0.0
    worst_p = 0.0
    for x, y in _seeded_datasets(1000):
        c = ols_simple(x, y)
        worst_f = max(worst_f, rel_err(c.f_stat, c.t_slope**2))
        p_f = f_sf(c.f_stat, 1, c.df)
        p_b = t_two_sided_p(c.t_slope, c.df)
        worst_p = max(worst_p, abs(p_f - p_b))
    _verdict(
        3,
        "F = t^2 to 1e-8 and p_F = p_B to 1e-9 on all oracle datasets",
        worst_f < 1e-8 and worst_p < 1e-9,
        f"worst F rel {worst_f:.2e}, worst p abs {worst_p:.2e}",
    )


def test_criterion_4_coupling_identity():
    # Random parameter pairs; the sub curve's intercept is drawn so that a
    # common pre-saturation window exists (values in [1%, 99%] of k for
    # both series), then the identity must hold pointwise on the noise-free
    # generated pair.
    rng = SplitMix64(444)
    worst_ratio = 0.0
    for _ in range(50):
        hp = LogisticParams(
            a=6.0 * rng.uniform(), b=0.2 + 1.8 * rng.uniform(), k=10 + 490 * rng.uniform()
        )
        lo1 = solve_time(hp, 0.01 * hp.k)
        hi1 = solve_time(hp, 0.99 * hp.k)
        b2 = 0.2 + 1.8 * rng.uniform()
        sp = LogisticParams(
            a=b2 * 0.5 * (lo1 + hi1), b=b2, k=10 + 490 * rng.uniform()
        )
        t_lo = max(lo1, solve_time(sp, 0.01 * sp.k))
        t_hi = min(hi1, solve_time(sp, 0.99 * sp.k))
        spec = SyntheticSpec(
            host_params=hp, sub_params=sp, t_start=t_lo, t_end=t_hi, n_points=20
        )
        pair = generate_pair(spec)
        rc = relation_constant(hp, sp)
        residual = check_relation(pair, rc, hp.k, sp.k)
        scale = max(h / (hp.k - h) for h in pair.host_values)
        worst_ratio = max(worst_ratio, residual / (1e-9 * scale))
    _verdict(
        4,
        "odds-coupling identity residual < 1e-9 * scale on 50 random pairs",
        worst_ratio < 1.0,
        f"worst residual at {worst_ratio:.2e} of the allowance",
    )


def test_criterion_5_early_phase_consistency():
    # Both curves capped at 5% of saturation; the log-log slope must be the
    # growth-rate ratio b2/b1 within 2% over 20 random draws.
    rng = SplitMix64(555)
    cap = 0.05
    worst = 0.0
    for _ in range(20):
        b1 = 0.3 + 0.9 * rng.uniform()
        ratio = 0.4 + 2.1 * rng.uniform()
        b2 = b1 * ratio
        hp = LogisticParams(a=2 + 4 * rng.uniform(), b=b1, k=10 + 490 * rng.uniform())
        t_cap = solve_time(hp, cap * hp.k)
        sp = LogisticParams(
            a=b2 * t_cap + math.log(1 / cap - 1), b=b2, k=10 + 490 * rng.uniform()
        )
        t_lo = max(solve_time(hp, 0.001 * hp.k), solve_time(sp, 0.001 * sp.k))
        spec = SyntheticSpec(
            host_params=hp, sub_params=sp, t_start=t_lo, t_end=t_cap, n_points=40
        )
        fit = estimate_evolution(early_phase_pair(spec, cap))
        worst = max(worst, rel_err(fit.b, b2 / b1))
    _verdict(
        5,
        "early-phase slope within 2% of b2/b1 over 20 random draws",
        worst < 0.02,
        f"worst rel deviation {worst:.4f}",
    )


def test_criterion_6_reported_table_reproduction():
    fit = evolution_fit_from_summary(
        b=0.35, se_b=0.02, n=51, log_a=-2.93, se_log_a=0.02,
        r2_adj=0.81, see=0.14, f_stat=213.63,
    )
    verdict = classify_pathway(fit, alpha=0.01)
    table = emit_table(stub_report(fit))
    ok = (
        verdict.label == "Underdevelopment"
        and "0.35*** (0.02)" in table
        and "0.81 (0.14)" in table
    )
    _verdict(
        6,
        "published-table values classify as Underdevelopment and render",
        ok,
        f"label={verdict.label}",
    )


def test_criterion_7_scale_invariance():
    host = parse_fmt_csv(SYNTH_HOST.read_text(), "host")
    sub = parse_fmt_csv(SYNTH_SUB.read_text(), "sub")
    base_fit = estimate_evolution(align(host, sub))
    base_label = classify_pathway(base_fit, 0.01).label
    worst = 0.0
    ok = True
    for c in (1e-3, 7.0, 1e3):
        for scaled_pair in (
            align(host.scaled(c), sub),
            align(host, sub.scaled(c)),
        ):
            fit = estimate_evolution(scaled_pair)
            worst = max(worst, abs(fit.b - base_fit.b))
            ok = ok and classify_pathway(fit, 0.01).label == base_label
    _verdict(
        7,
        "rescaling either series leaves B (1e-10) and the verdict unchanged",
        ok and worst < 1e-10,
        f"max |delta B| {worst:.2e}",
    )


def test_criterion_8_report_determinism(tmp_path):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    plots1, plots2 = tmp_path / "p1", tmp_path / "p2"
    args = ["report", "--host", str(SYNTH_HOST), "--sub", str(SYNTH_SUB)]
    assert main([*args, "--out", str(out1), "--plot", str(plots1)]) == EXIT_OK
    assert main([*args, "--out", str(out2), "--plot", str(plots2)]) == EXIT_OK

    blank = lambda s: re.sub(r'"timestamp": "[^"]*"', '"timestamp": null', s)
    json_identical = blank(out1.read_text()) == blank(out2.read_text())
    svg_identical = all(
        (plots1 / name).read_bytes() == (plots2 / name).read_bytes()
        for name in ("host.svg", "sub.svg")
    )
    digest = json.loads(out1.read_text())["digest"]
    _verdict(
        8,
        "repeat runs byte-identical (modulo timestamp) with the frozen digest",
        json_identical and svg_identical and digest == GOLDEN_DIGEST,
        f"digest {digest}",
    )


def test_criterion_9_monte_carlo_coverage():
    true_b, true_a, sigma, n = 0.35, 2.5, 0.1, 50
    host_params = LogisticParams(a=3.0, b=0.25, k=50.0)
    ts = [40.0 * i / (n - 1) for i in range(n)]
    host_vals = [logistic_value(host_params, t) for t in ts]
    hits = 0
    for seed in range(100):
        rng = SplitMix64(90_000 + seed)
        sub_vals = [
            true_a * h**true_b * math.exp(sigma * rng.normal()) for h in host_vals
        ]
        x = [math.log(h) for h in host_vals]
        y = [math.log(p) for p in sub_vals]
        c = ols_simple(x, y)
        half = t_quantile(0.995, c.df) * c.se_slope
        if c.slope - half <= true_b <= c.slope + half:
            hits += 1
    _verdict(
        9,
        "99% CI covers the true B in at least 95 of 100 replications",
        hits >= 95,
        f"{hits}/100 covered",
    )
