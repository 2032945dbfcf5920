"""Acceptance suite: every top-level criterion, one pass/fail line each.

Each criterion collects all of its mismatches before failing, so a red run
shows the complete discrepancy list.  Criterion 3 is red by design: two of
its recorded expectations for (q=3, m=4, delta=2) are not reproduced by the
computation (recorded bound 22 vs computed 14; recorded dual distance 23 vs
computed exact 22, achieved by a verified weight-22 codeword).  The values
computed here are the authoritative ones; the recorded claims are kept so
the disagreement stays loud.
"""

import json
import subprocess
import sys

from bchlab import closed_forms as cf
from bchlab import code_core as cc
from bchlab import examples
from bchlab import oracle as orc
from bchlab import poly_linalg as pl
from bchlab.cyclotomic import CYCLIC, NEGACYCLIC

import grid_utils


def finish(num, desc, errors):
    if errors:
        print(f"CRITERION {num} FAIL: {desc} -- {len(errors)} mismatch(es)")
        raise AssertionError(
            f"criterion {num} ({desc}): " + "; ".join(errors))
    print(f"CRITERION {num} PASS: {desc}")


def check(errors, tag, got, want):
    if got != want:
        errors.append(f"{tag}: expected {want}, computed {got}")


def dual_distance(q, m, family, delta):
    return examples.dual_distance(cc.CodeSpec(q, m, family, delta))


def test_criterion_1_cyclic_bound_examples():
    errors = []
    for q, m, delta, bound, dist in [(3, 2, 2, 4, 4), (3, 2, 3, 2, 2),
                                     (5, 2, 2, 16, 16), (5, 2, 8, 4, 4)]:
        check(errors, f"bound({q},{m},delta={delta})",
              cf.dual_bound_cyclic(q, m, delta).lower_bound, bound)
        check(errors, f"dual-distance({q},{m},delta={delta})",
              dual_distance(q, m, CYCLIC, delta), dist)
    finish(1, "cyclic dual bounds and exact dual distances", errors)


def test_criterion_2_cyclic_dually_ranges():
    errors = []
    cases = [(5, 2, 13, {2} | set(range(8, 14))),
             (3, 3, 14, set(range(8, 15)))]
    for q, m, hi, truth in cases:
        deltas = list(range(2, hi + 1))
        formula = [cf.dually_bch_even_like(q, m, d) for d in deltas]
        sweep = orc.dually_sweep(q, m, CYCLIC, deltas, even_like=True)
        for d, f, s in zip(deltas, formula, sweep):
            check(errors, f"formula({q},{m},delta={d})", f, d in truth)
            check(errors, f"oracle({q},{m},delta={d})", s, d in truth)
    finish(2, "cyclic even-like dually-BCH ranges, formula == oracle", errors)


def test_criterion_3_negacyclic_bound_examples():
    errors = []
    rows = [(3, 3, 2, 5, 6), (3, 3, 4, 2, 2),
            (3, 4, 2, 22, 23), (3, 4, 7, 4, 5),
            (7, 2, 2, 18, 19), (7, 2, 6, 4, 6),
            (7, 3, 2, 123, 138)]
    for q, m, delta, bound, dist in rows:
        check(errors, f"bound({q},{m},delta={delta})",
              cf.dual_bound_negacyclic(q, m, delta).lower_bound, bound)
        check(errors, f"dual-distance({q},{m},delta={delta})",
              dual_distance(q, m, NEGACYCLIC, delta), dist)
    finish(3, "negacyclic dual bounds and exact dual distances", errors)


def test_criterion_4_negacyclic_dually_ranges():
    errors = []
    full_cases = [
        (3, 3, 4, set(range(2, 5))),
        (3, 5, 31, {2, 3} | set(range(25, 32))),
        (7, 2, 13, {2} | set(range(10, 14))),
        (7, 3, 65, set(range(63, 66))),
    ]
    for q, m, hi, truth in full_cases:
        deltas = list(range(2, hi + 1))
        formula = [cf.dually_bch_negacyclic(q, m, d) for d in deltas]
        sweep = orc.dually_sweep(q, m, NEGACYCLIC, deltas)
        for d, f, s in zip(deltas, formula, sweep):
            check(errors, f"formula({q},{m},delta={d})", f, d in truth)
            check(errors, f"oracle({q},{m},delta={d})", s, d in truth)
    # (7,4): spot-checked at the range edges plus a spread of 20 points
    truth = set(range(430, 602))
    picks = {429, 430, 601}
    picks.update(range(2, 602, 30))
    deltas = sorted(picks)
    formula = [cf.dually_bch_negacyclic(7, 4, d) for d in deltas]
    sweep = orc.dually_sweep(7, 4, NEGACYCLIC, deltas)
    for d, f, s in zip(deltas, formula, sweep):
        check(errors, f"formula(7,4,delta={d})", f, d in truth)
        check(errors, f"oracle(7,4,delta={d})", s, d in truth)
    finish(4, "negacyclic dually-BCH ranges, formula == oracle", errors)


def test_criterion_5_formula_vs_oracle_grids():
    errors = []
    errors += [f"leaders: {s}" for s in grid_utils.leader_discrepancies()]
    errors += [f"cyclic-gap: {s}"
               for s in grid_utils.cyclic_gap_discrepancies()]
    errors += [f"neg-gap: {s}" for s in grid_utils.neg_gap_discrepancies()]
    errors += [f"dually: {s}" for s in grid_utils.dually_discrepancies()]
    finish(5, "formula-vs-oracle grids on {3,5,7,9,11} x {2,3,4,5}", errors)


def _dot(row, col, ctx):
    acc = 0
    for x, y in zip(row, col):
        acc = ctx.add(acc, ctx.mul(int(x), int(y)))
    return acc


def test_criterion_6_structural_invariants():
    errors = []
    for q, m, family, delta in grid_utils.STRUCTURAL_INSTANCES:
        tag = f"({q},{m},{family},delta={delta})"
        inst = grid_utils.realized(q, m, family, delta)
        gen = cc.generator_matrix(inst)
        dual = cc.dual_code(inst)
        dual_gen = cc.generator_matrix(dual)
        if len(inst.gen_poly) - 1 + inst.dim != inst.n:
            errors.append(f"{tag}: deg(g) + k != n")
        lam = 1 if family == CYCLIC else inst.field.neg(1)
        xn = pl.x_pow_minus(inst.n, lam, inst.field)
        if pl.pdivmod(xn, inst.gen_poly, inst.field)[1]:
            errors.append(f"{tag}: g does not divide x^n - lambda")
        ok = all(
            not any(_dot(row, col, inst.field) for col in dual_gen)
            for row in gen)
        if not ok:
            errors.append(f"{tag}: G . dual(G)^T != 0")
        dist = grid_utils.true_distance(q, m, family, delta)
        bound = cc.bch_bound(inst.t)
        if not bound <= dist:
            errors.append(f"{tag}: bch_bound {bound} > true distance {dist}")
        if not cc.is_lcd(inst):
            errors.append(f"{tag}: not LCD")
    finish(6, "structural invariants on all realized instances", errors)


def test_criterion_7_determinism():
    base = [sys.executable, "-m", "bchlab.cli", "verify", "--all"]
    first = subprocess.run(base, capture_output=True, text=True)
    second = subprocess.run(base, capture_output=True, text=True)
    third = subprocess.run(base + ["--workers", "2"],
                           capture_output=True, text=True)
    errors = []
    if first.stdout != second.stdout:
        errors.append("two identical runs differ")
    if first.stdout != third.stdout:
        errors.append("run with --workers 2 differs")
    if not (first.returncode == second.returncode == third.returncode):
        errors.append("exit codes differ between runs")
    payload = json.loads(first.stdout)
    if "passed" not in payload:
        errors.append("verify --all payload missing 'passed'")
    finish(7, "verify --all is byte-identical across runs and workers",
           errors)
