#!/usr/bin/env python3
"""Regenerates the frozen fixtures and reference values under tests/data.

The references come from independent implementations (numpy FFT and
interpolation, scipy statistics, statsmodels ADF) rather than from the C++
code under test. Run from the repository root:

    python3 tests/oracle/make_reference_data.py
"""
import json
import math
import pathlib

import numpy as np
from scipy import stats
from statsmodels.tsa.stattools import adfuller

DATA = pathlib.Path(__file__).resolve().parents[1] / "data"
WORDS = ("the of and to in a is that for it as was with be by on not he i this "
         "are or his from at which but have an they you were her she there one "
         "all we their been has when who will more no if out so said what up").split()


def series(rng, n, tone, noise):
    t = np.arange(n)
    e = np.zeros(n)
    z = rng.standard_normal(n) * noise
    e[0] = z[0]
    for i in range(1, n):
        e[i] = 0.3 * e[i - 1] + z[i]
    x = 3.0 + tone * np.cos(2 * np.pi * 0.12 * t) + e
    return np.maximum(x, 0.0)


def tokens_for(rng, n_ce):
    # Zipf-ish draws so repetition and the Zipf fit have something to measure.
    ranks = np.minimum(rng.zipf(1.3, size=n_ce + 1), len(WORDS)) - 1
    return [WORDS[r] for r in ranks]


def write_jsonl(path, records):
    with open(path, "w", newline="\n") as f:
        for r in records:
            f.write(json.dumps(r) + "\n")


def make_corpora():
    rng = np.random.default_rng(20240601)
    human, model = [], []
    for i in range(30):
        n = int(rng.integers(40, 300))
        human.append({"id": f"h{i}", "source": "human", "model": None,
                      "prompt_id": f"p{i}", "tokens": tokens_for(rng, n),
                      "ce": series(rng, n, 0.8, 1.0).tolist()})
        m = int(rng.integers(40, 300))
        model.append({"id": f"m{i}", "source": "model", "model": "toy-lm",
                      "prompt_id": f"p{i}", "tokens": tokens_for(rng, m),
                      "ce": series(rng, m, 0.3, 1.4).tolist()})
    write_jsonl(DATA / "human.jsonl", human)
    write_jsonl(DATA / "model.jsonl", model)
    return human, model


def make_fixture100():
    rng = np.random.default_rng(100)
    recs = []
    for i in range(100):
        n = int(rng.integers(2, 60))
        recs.append({"id": f"r{i:03d}", "source": "human" if i % 2 else "model",
                     "model": None if i % 2 else "toy", "prompt_id": None,
                     "tokens": None, "ce": np.abs(rng.normal(3, 2, n)).tolist()})
    write_jsonl(DATA / "fixture100.jsonl", recs)
    # Checksums from the raw text lines, independent of any record decoder.
    with open(DATA / "fixture100.jsonl") as f, \
            open(DATA / "fixture100_sums.txt", "w", newline="\n") as out:
        for line in f:
            obj = json.loads(line)
            out.write(f"{obj['id']} {math.fsum(obj['ce'])!r}\n")


def one_sided_real(x):
    n = len(x)
    k = np.arange(n // 2 + 1)
    # Direct summation, not np.fft, so the FFT path is checked independently.
    mags = np.array([np.sum(x * np.cos(2 * np.pi * kk * np.arange(n) / n)) for kk in k])
    return k / n, mags


def face_scores(x1, x2):
    f1, m1 = one_sided_real(np.asarray(x1))
    f2, m2 = one_sided_real(np.asarray(x2))
    n_c = max(len(m1), len(m2))
    grid = np.linspace(0.0, 0.5, n_c)
    a = np.interp(grid, f1, m1)
    b = np.interp(grid, f2, m2)
    lo, hi = np.minimum(abs(a), abs(b)), np.maximum(abs(a), abs(b))
    trapezoid = getattr(np, "trapezoid", None) or np.trapz
    so = trapezoid(lo, grid) / trapezoid(hi, grid)
    sam = math.acos(np.clip(a @ b / (np.linalg.norm(a) * np.linalg.norm(b)), -1, 1))
    corr = stats.pearsonr(a, b)[0]
    spear = stats.spearmanr(a, b)[0]
    return {"n_c": n_c, "so": so, "corr": corr, "sam": sam, "spear": spear}


def make_golden_pair(human, model):
    out = []
    for i in range(3):
        s = face_scores(human[i]["ce"], model[i]["ce"])
        s.update({"human_id": human[i]["id"], "model_id": model[i]["id"]})
        out.append(s)
    (DATA / "golden_pairs.json").write_text(json.dumps(out, indent=2) + "\n")


def make_adf_reference():
    rng = np.random.default_rng(7)
    recs = []
    for i in range(12):
        n = [50, 100, 300, 1024][i % 4]
        z = rng.standard_normal(n)
        if i % 3 == 0:
            x = np.cumsum(z)
        elif i % 3 == 1:
            x = z
        else:
            x = np.convolve(z, [1, 0.6, 0.3], "same")
        x = x - x.min() + 0.5
        max_lag = min(int(math.floor(12 * (n / 100) ** 0.25)), n // 2 - 2)
        stat, p, lag, nobs, _, _ = adfuller(x, maxlag=max_lag, autolag="AIC",
                                            regression="c")
        fixed = adfuller(x, maxlag=max_lag, autolag=None, regression="c")
        recs.append({"id": f"s{i}", "values": x.tolist(), "max_lag": max_lag,
                     "statistic": stat, "p_value": p, "lag": lag, "nobs": nobs,
                     "fixed_statistic": fixed[0], "fixed_p_value": fixed[1]})
    write_jsonl(DATA / "adf_reference.jsonl", recs)


def make_welch_reference():
    rng = np.random.default_rng(11)
    cases = []
    for i in range(6):
        a = rng.normal(0, 1 + i * 0.3, 5 + 3 * i)
        b = rng.normal(0.4 * i, 1.5, 8 + 2 * i)
        r = stats.ttest_ind(a, b, equal_var=False)
        va, vb = a.var(ddof=1) / len(a), b.var(ddof=1) / len(b)
        df = (va + vb) ** 2 / (va ** 2 / (len(a) - 1) + vb ** 2 / (len(b) - 1))
        cases.append({"a": a.tolist(), "b": b.tolist(), "t": r.statistic,
                      "p": r.pvalue, "df": df})
    (DATA / "welch_reference.json").write_text(json.dumps(cases, indent=2) + "\n")


if __name__ == "__main__":
    DATA.mkdir(exist_ok=True)
    human, model = make_corpora()
    make_fixture100()
    make_golden_pair(human, model)
    make_adf_reference()
    make_welch_reference()
