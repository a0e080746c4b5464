"""Acceptance suite: one PASS/FAIL line per criterion, printed in the terminal summary."""
import random
import time
from fractions import Fraction
from itertools import combinations

import pytest

from conftest import ACCEPTANCE_LINES
from xratio.dual import embed, plane_for, triple_intersection_type, verify_planes_lemma
from xratio.energy import cauchy_schwarz_report, energy_direct, energy_dual
from xratio.exact import INF
from xratio.expander import image, naive_image
from xratio.experiments import fit_exponent, floor_check, scan
from xratio.families import FamilySpec
from xratio.projective import (
    Mobius,
    cross_ratio,
    quadruple_related,
    quadruple_related_by_cross_ratio,
    solve_triple,
)

F = Fraction
BASE = (0, 1, 2, 4, 7, 11, 16)
G_SIZES = (16, 24, 32, 48, 64)
F_SIZES = (16, 32, 64, 128, 256)
H_SIZES = (8, 12, 16, 24, 32)
EXPONENT_RANGE = (2.6, 3.2)
NO_CAP = 10**9


def report(number, ok, elapsed, limit, detail):
    within = elapsed < limit
    verdict = "PASS" if ok and within else "FAIL"
    ACCEPTANCE_LINES.append(
        f"CRITERION {number}: {verdict}  {detail}  [{elapsed:.2f}s, limit {limit:g}s]"
    )
    return ok and within


def rand_rational(rng, bound=60, max_den=9):
    return F(rng.randint(-bound, bound), rng.randint(1, max_den))


def rand_distinct(rng, k):
    out = set()
    while len(out) < k:
        out.add(rand_rational(rng))
    return list(out)


def rand_mobius(rng, bound=15):
    while True:
        m = [rng.randint(-bound, bound) for _ in range(4)]
        if m[0] * m[3] != m[1] * m[2]:
            return Mobius(*m)


def subsets(base, min_size, sizes=None):
    for k in range(min_size, len(base) + 1):
        if sizes is None or k in sizes:
            yield from combinations(base, k)


# reused by the growth, floor and Cauchy-Schwarz criteria
@pytest.fixture(scope="module")
def ap_scans():
    t0 = time.perf_counter()
    g_recs, _ = scan("g", FamilySpec("ap", 1), G_SIZES)
    f_recs, _ = scan("f", FamilySpec("ap", 1), F_SIZES)
    return {"g": g_recs, "f": f_recs, "elapsed": time.perf_counter() - t0}


@pytest.fixture(scope="module")
def dual_sets():
    orders_12 = [(o, A) for o in (1, 2) for A in subsets(BASE, 4)]
    no_zero = [(1, A) for A in subsets(BASE[1:], 4)]
    order_3 = [(3, A) for A in subsets(BASE, 5, sizes={5, 6})]
    return orders_12 + no_zero + order_3


def test_criterion_1_invariance():
    rng = random.Random(20240601)
    t0 = time.perf_counter()
    bad_invariance = 0
    done = 0
    while done < 1000:
        a = rand_distinct(rng, 4)
        t = rand_mobius(rng)
        b = [t(x) for x in a]
        if INF in b:
            continue
        done += 1
        if cross_ratio(*a) != cross_ratio(*b):
            bad_invariance += 1
    disagree = related = 0
    for i in range(1000):
        a = rand_distinct(rng, 4)
        if i % 2 == 0:
            t = rand_mobius(rng)
            b = [t(x) for x in a]
            if INF in b:
                b = rand_distinct(rng, 4)
        else:
            b = rand_distinct(rng, 4)
        via_solve = quadruple_related(a, b)
        related += via_solve
        if via_solve != quadruple_related_by_cross_ratio(a, b):
            disagree += 1
    elapsed = time.perf_counter() - t0
    ok = bad_invariance == 0 and disagree == 0
    assert report(1, ok, elapsed, 10,
                  f"invariance failures {bad_invariance}/1000, related-check disagreements "
                  f"{disagree}/1000 ({related} related)")


def test_criterion_2_dual_equivalence(dual_sets, request):
    t0 = time.perf_counter()
    mismatches = []
    for order, A in dual_sets:
        d, u = energy_direct(order, A), energy_dual(order, A)
        if d != u:
            mismatches.append((order, A, d, u))
    elapsed = time.perf_counter() - t0
    assert report(2, not mismatches, elapsed, 120,
                  f"{len(dual_sets)} (order, set) cases, {len(mismatches)} mismatches"), mismatches[:3]


def test_criterion_3_planes_lemma():
    t0 = time.perf_counter()
    reports = [verify_planes_lemma(A) for A in ((0, 1, 2, 3, 4), (-2, -1, 0, 1, 3))]
    elapsed = time.perf_counter() - t0
    keys = ("property_1_triples_meet_in_point", "property_2_labels_injective",
            "property_3_pair_lines_distinct", "property_4_at_most_n_incidences")
    parts = []
    for rep in reports:
        fails = "/".join(f"{rep[k]['failures']}" for k in keys)
        parts.append(f"A={{{','.join(rep['A'])}}} failures per property {fails}")
    ok = all(rep["passed"] for rep in reports)
    assert report(3, ok, elapsed, 60, "; ".join(parts)), [
        {k: rep[k]["holds"] for k in keys} | {"diagnosis": rep["diagnosis"]} for rep in reports
    ]


def test_criterion_4_witness_equality():
    rng = random.Random(4242)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(500):
        src, dst = rand_distinct(rng, 3), rand_distinct(rng, 3)
        pis = [plane_for(x, y) for x, y in zip(src, dst)]
        res = triple_intersection_type(*pis)
        if res.kind != "point" or res.point != embed(solve_triple(src, dst)):
            bad += 1
    elapsed = time.perf_counter() - t0
    assert report(4, bad == 0, elapsed, 30, f"{bad}/500 witness mismatches")


def test_criterion_5_growth_exponent(ap_scans):
    lo, hi = EXPONENT_RANGE
    fits = {fn: fit_exponent(ap_scans[fn], "power_over_log") for fn in ("g", "f")}
    ok = all(lo <= fit.exponent <= hi for fit in fits.values())
    detail = ", ".join(
        f"{fn}: 1+delta={fit.exponent:.3f} (counts {[r.image_count for r in ap_scans[fn]]})"
        for fn, fit in fits.items()
    )
    assert report(5, ok, ap_scans["elapsed"], 300, f"power_over_log over AP, want [{lo}, {hi}]; {detail}")


def test_criterion_6_floors(ap_scans):
    t0 = time.perf_counter()
    h_recs, _ = scan("h", FamilySpec("ap", 1), H_SIZES)
    rand = FamilySpec("random_int", 1, bound=10**6, seed=2024)
    rf, _ = scan("f", rand, F_SIZES)
    rg, _ = scan("g", rand, G_SIZES)
    rh, _ = scan("h", rand, H_SIZES)
    elapsed = ap_scans["elapsed"] + time.perf_counter() - t0
    groups = {"ap f": ap_scans["f"], "ap g": ap_scans["g"], "ap h": h_recs,
              "random f": rf, "random g": rg, "random h": rh}
    checks = {name: floor_check(recs) for name, recs in groups.items()}
    ok = all(c["holds"] for c in checks.values())
    detail = ", ".join(f"{name} min/first={c['minimum'] / c['first']:.2f}" for name, c in checks.items())
    assert report(6, ok, elapsed, 300, detail)


def test_criterion_7_small_cases():
    t0 = time.perf_counter()
    want_f = {F(1, 3), F(-1, 4), F(-4, 3), F(-4), F(-3, 4), F(3)}
    fA = image("f", (1, 2, 3))
    gA = image("g", (0, 1, 2, 3))
    ok = (fA.count == 6 and set(fA.values) == want_f == naive_image("f", (1, 2, 3))
          and gA.count == 6 and set(gA.values) == naive_image("g", (0, 1, 2, 3)))
    elapsed = time.perf_counter() - t0
    assert report(7, ok, elapsed, 1, f"|f({{1,2,3}})|={fA.count}, |g({{0,1,2,3}})|={gA.count}")


def test_criterion_8_cauchy_schwarz(dual_sets):
    t0 = time.perf_counter()
    cases = [(order, A) for order, A in dual_sets]
    cases += [(2, tuple(range(1, n + 1))) for n in G_SIZES]
    cases += [(1, tuple(range(1, n + 1))) for n in F_SIZES]
    failures = []
    for order, A in cases:
        rec = cauchy_schwarz_report(order, A, cap=NO_CAP)
        if not rec.holds:
            failures.append(rec.to_dict())
    elapsed = time.perf_counter() - t0
    # amortized into criteria 2 and 5, so the limit is their combined budget
    assert report(8, not failures, elapsed, 420,
                  f"{len(cases)} sets, {len(failures)} bound violations"), failures[:3]
