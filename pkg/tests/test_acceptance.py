"""Acceptance criteria, one test each, all at exact equality.

Every test prints a single PASS/FAIL line to the terminal, also when output
capture is on.
"""
import random
from itertools import product

import pytest

from cyclomahonian.bijection import (
    check_properties,
    pair_to_word,
    swap_invariant_holds,
    trace,
    word_to_pair,
)
from cyclomahonian.cyclotomic import CycElem, poly_mul, specialize_p
from cyclomahonian.identities import (
    SUITES,
    build_sides,
    compare,
    perturb,
    run_case,
    run_matrix,
    suite_params,
    verify_carlitz,
    verify_main,
    verify_util,
)
from cyclomahonian.polyring import q_multinomial


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        return ok
    return emit


def failures(reports):
    return [r for r in reports if not r.passed]


def test_criterion_1_main_theorem(report):
    reports = [verify_main(n, m, 12) for n in range(9) for m in range(1, 7)]
    bad = failures(reports)
    assert report(1, not bad, f"main theorem, n <= 8, m in 1..6, L = 12: "
                              f"{len(reports) - len(bad)}/{len(reports)} pass")


def test_criterion_2_des_maj_series(report):
    reports = [verify_carlitz(n, 12) for n in range(9)]
    bad = failures(reports)
    assert report(2, not bad, f"des-maj series identity, n <= 8, L = 12: "
                              f"{len(reports) - len(bad)}/{len(reports)} pass")


def test_criterion_3_coefficient_formula(report):
    reports = [verify_util(n, ell) for n in range(7) for ell in range(5)]
    bad = failures(reports)
    assert report(3, not bad, f"coefficient formula with symbolic p, n <= 6, l <= 4: "
                              f"{len(reports) - len(bad)}/{len(reports)} pass")


def _criterion_4_cases(printed):
    """Parameter sets for criterion 4; ``printed`` selects the verbatim q = 1 third lines."""
    L = 12
    cases = [("wachs", {"k": k}) for k in range(5)]
    cases += [("gessel_simion", {"n": n}) for n in range(9)]
    cases += [("adin_gr", {"n": n, "m": m, "k": n // m, "i": n % m})
              for n in range(9) for m in range(1, 7)]
    cases += [(s, {"k": k}) for s in ("df_even", "df_odd") for k in range(4)]
    cases += [("case_I", {"k": k}) for k in range(3)]
    cases += [("missing_odd", {"k": k, "L": L}) for k in range(1, 4)]
    for m in range(1, 9):
        cases += [("case_i0", {"m": m, "k": k}) for k in range(8 // m + 1)]
        if m >= 2:
            cases += [("case_i1", {"m": m, "k": k, "L": L}) for k in range(7 // m + 1)]
        if m >= 3:
            cases += [("case_i2", {"m": m, "k": k, "L": L}) for k in range(6 // m + 1)]
    for suite, ms in (("q1_triple", range(1, 9)), ("m4_eulerian", [4])):
        for m in ms:
            for line in range(min(3, m)):
                for k in range(9):
                    if m * k + line > 8:
                        break
                    p = {"k": k, "line": line}
                    if suite == "q1_triple":
                        p["m"] = m
                    if line == 2:
                        p.update({"erratum": 1} if printed else {"erratum": 0, "L": L})
                    cases.append((suite, p))
    return cases


@pytest.mark.xfail(strict=True, reason="the third line of the q = 1 Eulerian triple, as "
                                       "printed, is false for every k and m >= 3")
def test_criterion_4_specializations_as_printed(report):
    reports = [run_case(s, p) for s, p in _criterion_4_cases(printed=True)]
    bad = failures(reports)
    detail = (f"classical specializations and corollaries, formulas as printed: "
              f"{len(reports) - len(bad)}/{len(reports)} pass")
    if bad:
        names = sorted({(r.suite, r.params.get("m", 4), r.params["k"]) for r in bad})
        detail += f"; failing: {len(bad)} printed third lines of the q = 1 triple " \
                  f"(suite, m, k) = {names[:4]}..."
    assert report(4, not bad, detail)


def test_criterion_4_specializations_index_corrected(report):
    reports = [run_case(s, p) for s, p in _criterion_4_cases(printed=False)]
    bad = failures(reports)
    assert report("4 (index-corrected q = 1 third line)", not bad,
                  f"{len(reports) - len(bad)}/{len(reports)} pass, "
                  f"prefactor ((l+2) + l*xi)/2 kept inside the sum over l")


def test_criterion_5_m4_mahonian(report):
    reports = run_matrix(["m4_mahonian"], n_max=8)
    plain = [r for r in reports if r.params["line"] != 2]
    printed = [r for r in reports if r.params.get("erratum")]
    agr = [r for r in reports if r.params["line"] == 2 and not r.params.get("erratum")]
    ok = bool(printed) and bool(agr) and all(r.passed for r in plain + agr)
    if all(r.passed for r in printed):
        matches = "printed [4k+3]! matches"
    elif not any(r.passed for r in printed):
        matches = "printed [4k+3]! does not match"
    else:
        matches = f"printed [4k+3]! matches for {sum(r.passed for r in printed)}/{len(printed)}"
    assert report(5, ok, f"m = 4 Mahonian lines 4k, 4k+1, 4k+3: {len(plain)} pass; "
                         f"line 4k+2: {matches}, cleared-denominator right side "
                         f"matches for {sum(r.passed for r in agr)}/{len(agr)}")


def test_criterion_6_multinomials_at_roots(report):
    reports = []
    for m in (2, 3, 4):
        for length in range(1, 4):
            for parts in product(range(9), repeat=length):
                if sum(parts) > 8:
                    continue
                p = {"m": m, "len": length, **{f"n{j}": x for j, x in enumerate(parts)}}
                reports.append(run_case("qlucas", p))
                if sum(x % m for x in parts) >= m:
                    reports.append(run_case("qlucas", {**p, "vanish": 1}))
    vanishing = sum(1 for r in reports if r.params.get("vanish"))
    bad = failures(reports)
    assert report(6, not bad and vanishing > 0,
                  f"multinomials at roots of unity, m in 2..4, tuples of length <= 3 and total <= 8: "
                  f"{len(reports) - len(bad)}/{len(reports)} pass "
                  f"({vanishing} vanishing cases)")


def test_criterion_7_lemma(report):
    pochhammer_ok = []
    for m in range(1, 13):
        f = (1,)
        for j in range(1, m):
            f = poly_mul(f, (1,) + (0,) * (j - 1) + (-1,))
        pochhammer_ok.append(specialize_p(f, m) == CycElem.integer(m, m))
    vanish_ok = []
    for m in range(1, 9):
        for i, j in product(range(m), repeat=2):
            if i + j >= m:
                vanish_ok.append(specialize_p(q_multinomial((i, j)).int_coeffs(), m).is_zero())
    ok = all(pochhammer_ok) and all(vanish_ok)
    assert report(7, ok, f"(p;p)_(m-1) = m at xi_m for m <= 12: {sum(pochhammer_ok)}/12; "
                         f"multinomial vanishing for m <= 8: "
                         f"{sum(vanish_ok)}/{len(vanish_ok)}")


def test_criterion_8_bijection(report):
    seen = set()
    exhaustive_ok = True
    for w in product(range(6), repeat=4):
        pair = word_to_pair(w)
        exhaustive_ok &= pair not in seen and pair_to_word(*pair) == w and all(check_properties(w))
        seen.add(pair)
    rng = random.Random(12345)
    random_ok = True
    for _ in range(10_000):
        w = tuple(rng.randint(0, 20) for _ in range(rng.randint(0, 8)))
        random_ok &= all(check_properties(w)) and pair_to_word(*word_to_pair(w)) == w
    tr = trace((4, 5, 4, 1, 2, 2, 2, 5))
    example_ok = tr.sigma == (2, 8, 1, 3, 5, 6, 7, 4) and tr.lam == (8, 4, 4)
    swap_ok = all(swap_invariant_holds(tuple(rng.randint(0, 9) for _ in range(rng.randint(0, 8))))
                  for _ in range(1_000))
    ok = exhaustive_ok and random_ok and example_ok and swap_ok
    assert report(8, ok, f"bijection: 1296 words exhaustive {exhaustive_ok}, 10000 random "
                         f"{random_ok}, worked example {example_ok}, swap invariance {swap_ok}")


def test_criterion_9_mutation(report):
    rng = random.Random(99)
    caught = []
    for suite in SUITES:
        grid = [p for p in suite_params(suite) if not p.get("erratum")]
        params = rng.choice(grid)
        lhs, rhs = build_sides(suite, params)
        keys = [k for k, _ in lhs.terms] or [(0, 0)]
        key = rng.choice(keys)
        r = compare(suite, params, perturb(lhs, key), rhs)
        caught.append(r.status == "fail" and tuple(r.first_mismatch[:2]) == key)
    assert report(9, all(caught), f"single-coefficient mutation caught at the right place "
                                  f"in {sum(caught)}/{len(caught)} suites")


def test_criterion_10_determinism(report):
    one = "\n".join(r.to_json() for r in run_matrix(SUITES, jobs=1))
    two = "\n".join(r.to_json() for r in run_matrix(SUITES, jobs=2))
    assert report(10, one == two, f"default matrix JSON identical for 1 and 2 workers "
                                  f"({len(one.splitlines())} reports)")
