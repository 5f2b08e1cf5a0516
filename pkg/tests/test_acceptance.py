"""One test per acceptance criterion; each records a single pass/fail line,
printed in the terminal summary and echoed to stdout."""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction

from conftest import ACCEPTANCE

from amenalab import finite
from amenalab.actions import acts_injectively, fibers, injective_partition
from amenalab.convolution import FinFunc, ast_invariance_check, bounded_indicator_verdict, convolve
from amenalab.derived import AdjoinZero, Product
from amenalab.families import Bicyclic, FreeCommutative, FreeMonogenicInverse, NatMul
from amenalab.folner import folner_sweep, symdiff_count
from amenalab.measures import (INVOLUTION, PRODUCT, RESTRICT, WeightVector, extreme_solutions, fair_check_finite,
                               solve_fair_classes, transfer_check)
from amenalab.paradox import paradox_certificate
from amenalab.registry import resolve
from amenalab.table1 import build_rows

THRESHOLD = Fraction(1, 20)
SIDES = ("left", "right")


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    ACCEPTANCE.append(line)
    print(line)


def test_criterion_1_bicyclic_counts():
    B = Bicyclic()
    start = time.perf_counter()
    bad = []
    for n in range(2, 201):
        window = B.window_set(n)
        q_count = symdiff_count(B, B.Q, n=n, exact=True)
        p_count = symdiff_count(B, B.P, n=n, exact=True)
        p_image = len({B.mul(B.P, x) for x in window})
        if (q_count, p_count, p_image) != (2 * n, n + 1, (n - 1) * n + 1):
            bad.append(n)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10
    record(1, "bicyclic counts n = 2..200", ok,
           f"mismatches at {bad[:5]}, {elapsed:.1f}s (limit 10s)")
    assert not bad
    assert elapsed < 10


def test_criterion_2_folner_decay():
    start = time.perf_counter()
    B = Bicyclic()
    q_series = folner_sweep(B, B.Q, n_range=range(2, 201))
    q_ok = q_series.ratios == [Fraction(2, n) for n in range(2, 201)]

    N2 = FreeCommutative(2)
    comm = {N2.format(g): folner_sweep(N2, g, n_range=[200]).ratios[-1] for g in N2.generators}
    comm_ok = all(r <= THRESHOLD for r in comm.values())

    N = NatMul()
    nat = {N.format(g): folner_sweep(N, g, n_range=[8]).ratios[-1] for g in N.generators}
    nat_ok = all(r <= THRESHOLD for r in nat.values())
    elapsed = time.perf_counter() - start

    ok = q_ok and comm_ok and nat_ok and elapsed < 60
    worst_nat = max(nat.values())
    record(2, "Følner decay", ok,
           f"bicyclic q = 2/n: {q_ok}; free commutative k=2 max ratio at n=200 = {max(comm.values())} "
           f"({'ok' if comm_ok else 'above 1/20'}); (N,·) max ratio at n=8 = {worst_nat} "
           f"({'ok' if nat_ok else 'above 1/20: the prime-box ratio is exactly 2/(n+1)'}); {elapsed:.1f}s")
    assert q_ok and comm_ok
    assert elapsed < 60
    # every generator's ratio on the prime box is exactly 2/(n+1) = 2/9 at n = 8
    assert set(nat.values()) == {Fraction(2, 9)}
    assert nat_ok, "(N,·) prime-box ratios at n = 8 are 2/9, above 1/20"


def _munn_brute(n: int) -> int:
    count = 0
    for p, q, r in itertools.product(range(-n, n + 1), repeat=3):
        if p >= 0 and r >= 0 and p + q >= 0 and q + r >= 0 and max(p, q, r) <= n:
            count += 1
    return count


def test_criterion_3_house_numbers():
    M = FreeMonogenicInverse()
    sizes = [len(M.window(n)) for n in range(31)]
    formula = [(n + 1) ** 3 + n * (n + 1) * (2 * n + 1) // 6 for n in range(31)]
    brute = _munn_brute(1)
    ok = sizes == formula and brute == 9 == sizes[1]
    record(3, "house numbers n = 0..30", ok, f"window sizes match formula: {sizes == formula}; "
           f"brute-force n=1 count {brute}")
    assert ok


def test_criterion_4_obstruction_certificates():
    results = {}
    for name, radius in (("fs2", 12), ("p2", 8)):
        start = time.perf_counter()
        cert = paradox_certificate(name, radius)
        results[name] = (cert, time.perf_counter() - start)
    ok = all(c.verified and all(c.checks.values()) and c.report().rstrip().endswith("1 ≥ 2") and t < 30
             for c, t in results.values())
    record(4, "obstruction certificates", ok,
           "; ".join(f"{n} radius {c.radius}: {'verified' if c.verified else c.witness} in {t:.2f}s"
                     for n, (c, t) in results.items()))
    assert ok


def test_criterion_5_finite_fair_invariance():
    def uniform_ok(S):
        w = WeightVector.uniform(S)
        return all(fair_check_finite(S, w, side).passed for side in SIDES)

    catalog_ok = all(uniform_ok(S) for S in finite.catalog())
    rng = random.Random(20240601)
    sampled, draws = finite.sample_associative_tables(3, 500, rng)
    sampled_ok = all(uniform_ok(finite.from_cayley_table(t)) for t in sampled)
    every = list(finite.all_associative_tables(3))
    every_ok = len(every) == 113 and all(uniform_ok(finite.from_cayley_table(t)) for t in every)
    classes_ok = all(len(solve_fair_classes(finite.left_zero(k), "left")) == 1
                     and len(solve_fair_classes(finite.left_zero(k), "right")) == k for k in range(1, 7))
    zeros = [AdjoinZero(S) for S in finite.catalog()]
    dirac_ok = all(not fair_check_finite(Z, WeightVector.dirac(Z, Z.zero), side).passed
                   for Z in zeros for side in SIDES)
    ok = catalog_ok and sampled_ok and every_ok and classes_ok and dirac_ok
    record(5, "finite fair invariance", ok,
           f"catalog {catalog_ok}; {len(sampled)} sampled tables ({draws} draws) {sampled_ok}; "
           f"all {len(every)} associative 3x3 tables {every_ok}; left-zero classes {classes_ok}; "
           f"Dirac at zero fails on {len(zeros)} S^0 {dirac_ok}")
    assert ok


def _candidate_weights(S, rng):
    elems = list(S.elements())
    out = [WeightVector.uniform(S)]
    out += [WeightVector.dirac(S, x) for x in elems]
    for side in SIDES:
        out += extreme_solutions(S, side)
    for _ in range(6):
        raw = [rng.randint(0, 3) for _ in elems]
        raw[0] += 1
        out.append(WeightVector.from_dict(S, {x: Fraction(m, sum(raw)) for x, m in zip(elems, raw)}))
    return out


def test_criterion_6_main_theorem_finite():
    rng = random.Random(6)
    checked, mismatches = 0, []
    small = [S for S in finite.catalog() if S.order() <= 5]
    for S in small:
        elems = list(S.elements())
        for w in _candidate_weights(S, rng):
            for side in SIDES:
                fair = fair_check_finite(S, w, side).passed
                ast = all(ast_invariance_check(S, w, FinFunc.delta(S, a), s, side).equal
                          for s in elems for a in elems)
                checked += 1
                if fair != ast:
                    mismatches.append((S.name, side))
    ok = not mismatches
    record(6, "fair invariance <=> ast-invariance (|S| <= 5)", ok,
           f"{checked} (semigroup, weights, side) cases over {len(small)} semigroups, "
           f"{len(mismatches)} disagreements")
    assert ok


def test_criterion_7_triple_equivalence():
    rng = random.Random(7)
    families = [resolve(s) for s in ("bicyclic", "polycyclic", "munn", "free:2", "freecomm:2",
                                     "natmul", "zmin", "cyclic:3^0", "brandt:2", "T:2", "I:2",
                                     "left-zero:4", "bicyclic^0", "left-zero:2*bicyclic")]
    disagreements, max_seen = [], 0
    for i in range(1000):
        S = rng.choice(families)
        pool = list(S.window(rng.randint(2, 4)))
        A = rng.sample(pool, rng.randint(1, min(64, len(pool))))
        s = rng.choice(pool)
        side = rng.choice(SIDES)
        k = fibers(S, s, A, side).max_fiber                        # (i) largest fiber
        parts = injective_partition(S, s, A, side)                 # (ii) partition into injective parts
        part_ok = len(parts) == k and all(acts_injectively(S, s, p, side)[0] for p in parts) \
            and sorted(map(S.key, itertools.chain(*parts))) == sorted(map(S.key, A))
        chi = FinFunc.indicator(S, A)                               # (iii) s * chi_A is simple
        direct = convolve(S, FinFunc.delta(S, s), chi) if side == "left" \
            else convolve(S, chi, FinFunc.delta(S, s))
        layered = sum((FinFunc.indicator(S, (S.act(s, a, side) for a in p)) for p in parts),
                      FinFunc.from_dict(S, {}))
        simple_ok = direct == layered and max(v for _, v in direct.values) == k
        verdict = bounded_indicator_verdict(S, s, A, side)
        max_seen = max(max_seen, k)
        if not (part_ok and simple_ok and verdict.consistent and verdict.max_fiber == k):
            disagreements.append((i, S.name))
    ok = not disagreements
    record(7, "fiber / partition / simplicity equivalence", ok,
           f"1000 random (s, A) pairs over {len(families)} families, |A| <= 64, largest fiber {max_seen}, "
           f"{len(disagreements)} disagreements")
    assert ok


def test_criterion_8_transfers():
    cat = finite.catalog()
    inv_cases = inv_fail = 0
    for S in cat:
        if not S.has_involution:
            continue
        for side in SIDES:
            for w in extreme_solutions(S, side) + [WeightVector.uniform(S)]:
                r = transfer_check(S, w, INVOLUTION, side)
                inv_cases += 1
                inv_fail += not (r.verdict.passed and r.verdict.side.value != side)

    prod_cases = prod_fail = 0
    for S, T in itertools.product(cat, repeat=2):
        if S.order() * T.order() > 64:
            continue
        for side in SIDES:
            for w, v in itertools.product(extreme_solutions(S, side)[:2] + [WeightVector.uniform(S)],
                                          extreme_solutions(T, side)[:2] + [WeightVector.uniform(T)]):
                r = transfer_check(S, w, PRODUCT, side, other=T, other_weights=v)
                prod_cases += 1
                prod_fail += not r.verdict.passed

    res_cases = res_fail = 0
    for S in cat:
        elems = list(S.elements())
        subs = [c for k in range(1, len(elems) + 1) for c in itertools.combinations(elems, k)
                if all(S.mul(a, b) in c for a in c for b in c)] if len(elems) <= 7 else []
        for side in SIDES:
            for w in extreme_solutions(S, side) + [WeightVector.uniform(S)]:
                for T in subs:
                    if w.mass(T) == 0:
                        continue
                    res_cases += 1
                    res_fail += not transfer_check(S, w, RESTRICT, side, subset=T).verdict.passed
    ok = inv_fail == prod_fail == res_fail == 0 and min(inv_cases, prod_cases, res_cases) > 0
    record(8, "transfers", ok,
           f"involution {inv_cases - inv_fail}/{inv_cases}; products with |SxT| <= 64 "
           f"{prod_cases - prod_fail}/{prod_cases}; restrictions to positive-mass subsemigroups "
           f"{res_cases - res_fail}/{res_cases}")
    assert ok


def test_criterion_9_exclusions():
    import amenalab
    import pkgutil
    rows = {r.kind: r for r in build_rows()}
    skipped = {k for k, r in rows.items() if r.status == "skipped"}
    free_group_rows = {"Left/right group"} <= skipped and "free group" in rows["Left/right group"].skipped
    names = {m.name for m in pkgutil.iter_modules(amenalab.__path__)} - {"__main__"}
    attrs = set()
    for mod in names:
        attrs |= set(dir(__import__(f"amenalab.{mod}", fromlist=["_"])))
    no_claims = not any(w in a.lower() for a in attrs for w in ("ultra", "directed_union", "freegroup"))
    summary = folner_sweep(Bicyclic(), Bicyclic().Q, n_range=range(2, 10)).summary()
    estimates_only = "liminf_estimate" in summary and "limsup_estimate" in summary
    ok = free_group_rows and no_claims and estimates_only and "Baer-Levi" in skipped
    record(9, "non-reproducible content excluded", ok,
           f"skipped rows {sorted(skipped)}; no ultralimit / directed-union / free-group API: {no_claims}; "
           f"limits reported as finite-tail estimates: {estimates_only}")
    assert ok
