"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line and then asserts; a pytest
run repeats the lines in an "acceptance criteria" summary section.  Every
residual is compared with exact rational zero.  Run the file directly
(``python3 tests/test_acceptance.py``) for just the summary lines.
"""

import itertools
import random
import sys
import time

import pytest

from oracles import naive_normal_order, takiff_bracket_table
from takiff.liealg import adjoint_casimir_eigenvalue, build_algebra, chevalley_check, verify_presentation
from takiff.rational import q
from takiff.sugawara import AffineTakiff, Pi, Theta, completeness_certificate, fit_level, translate, verify_sugawara
from takiff.takiff import TakiffAlgebra, center_generators, independence_certificate, pfaffian_coeffs, theta, verify_central
from takiff.tensor import TensorOperator

PRESENTATION_TYPES = ["A1", "A2", "A3", "B2", "C2", "D2", "D3"]
DUAL_COXETER = {"A": lambda n: n + 1, "B": lambda n: 2 * n - 1, "C": lambda n: n + 1, "D": lambda n: 2 * n - 2}


RESULTS: dict = {}  # criterion number -> summary line, shown at the end of a pytest run


def emit(number: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail}"
    RESULTS[number] = line
    print(line, flush=True)


def criterion_1():
    t = time.perf_counter()
    bad = []
    for label in PRESENTATION_TYPES:
        alg, rep = build_algebra(label)
        report = verify_presentation(alg, rep)
        bad += [f"{label}:{r.name}" for r in report.residuals if not r.zero or r.skipped]
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 60
    return ok, (f"presentation residuals (commutator, quadratic, linear) zero for {', '.join(PRESENTATION_TYPES)}"
                f" in {elapsed:.1f}s" + (f"; nonzero: {bad}" if bad else ""))


def criterion_2():
    bad = []
    for label in PRESENTATION_TYPES:
        alg, _ = build_algebra(label)
        expected = 2 * DUAL_COXETER[alg.series](alg.rank)
        got = adjoint_casimir_eigenvalue(alg)
        if got != expected or alg.dual_coxeter * 2 != expected:
            bad.append(f"{label}: {got} != {expected}")
    return not bad, "adjoint Casimir eigenvalue equals 2h for the same list" + (f"; {bad}" if bad else "")


def criterion_3():
    t = time.perf_counter()
    bad, checked = [], 0
    for label, ell, m in [("A1", 1, 2), ("A1", 2, 2), ("A2", 1, 2), ("A2", 1, 3), ("D3", 1, 2), ("D3", 1, 4)]:
        alg, rep = build_algebra(label)
        tak = TakiffAlgebra(alg, ell)
        th = theta(tak, rep, m)
        for r in th.band:
            checked += 1
            if not th[r] or not verify_central(th[r], tak).ok:
                bad.append(f"{label} l={ell} theta_{m}^({r})")
    alg, rep = build_algebra("A1")
    tak = TakiffAlgebra(alg, 1)
    below = verify_central(theta(tak, rep, 2)[0], tak)
    witness_ok = not below.ok and below.witness is not None and bool(below.witness[1])
    elapsed = time.perf_counter() - t
    ok = not bad and witness_ok and elapsed < 600
    return ok, (f"{checked} banded theta_m^(r) central; theta_2^(0) (A1, l=1) non-central with a "
                f"{len(below.witness[1]) if below.witness else 0}-term witness; {elapsed:.1f}s"
                + (f"; failures: {bad}" if bad else ""))


def criterion_4():
    t = time.perf_counter()
    alg, rep = build_algebra("D3")
    tak = TakiffAlgebra(alg, 1)
    pf = pfaffian_coeffs(tak, rep)
    results = {r: bool(pf[r]) and verify_central(pf[r], tak).ok for r in pf.band}
    elapsed = time.perf_counter() - t
    ok = list(pf.band) == [2, 3] and all(results.values()) and elapsed < 600
    return ok, f"pi^(r) central for D3, l=1, r in {list(pf.band)}: {results}; {elapsed:.2f}s"


def criterion_5():
    parts, ok = [], True
    for label, ell, expected in [("A2", 1, 4), ("D3", 1, 6), ("D3", 2, 9)]:
        alg, rep = build_algebra(label)
        gens = center_generators(TakiffAlgebra(alg, ell), rep)
        report = independence_certificate([x for _, x in gens], seed=0)
        good = report.count == expected == report.rank
        ok = ok and good
        parts.append(f"{label} l={ell}: {report.count} elements rank {report.rank} seeds {report.seeds}")
    return ok, ("Jacobian rank equals element count; " + "; ".join(parts)
                + " (the 9-element D3 family occurs at l=2; l=1 has rank(g)(l+1) = 6 generators)")


def criterion_6():
    parts, ok = [], True
    for label, m, with_pi in [("A1", 2, False), ("D3", 2, True)]:
        alg, rep = build_algebra(label)
        aff = AffineTakiff.critical(TakiffAlgebra(alg, 1))
        families = [("Theta", Theta(aff, rep, m))]
        if with_pi:
            families.append(("Pi", Pi(aff, rep)))
        for name, coeffs in families:
            band = list(coeffs.band)
            for r in band:
                v = coeffs[r]
                annihilated = verify_sugawara(v).ok
                fit = fit_level(v)
                if r == band[0]:
                    # level-dependent vector: residual at k = 0 nonzero, root exactly critical
                    at_zero = verify_sugawara(v, aff.with_level(0))
                    good = (annihilated and fit.affine and fit.vanishes_only_at == aff.level
                            and at_zero.residual_counts()["F0[1]"] > 0)
                else:
                    # top of band: degree-l generators only, annihilated at every level
                    good = annihilated and fit.affine and fit.slope_zero and fit.intercept_zero
                ok = ok and good
            parts.append(f"{label} {name} r={band}")
    return ok, ("banded vectors annihilated at k = -(l+1)h; bottom-of-band F0[1] residual nonzero at k=0, "
                "affine in k with unique root k_cri; top-of-band residual identically zero at all levels; "
                + ", ".join(parts))


def criterion_7():
    alg, rep = build_algebra("A1")
    aff = AffineTakiff.critical(TakiffAlgebra(alg, 0))
    verdict = verify_sugawara(Theta(aff, rep, 2)[0])
    quartic = verify_sugawara(Theta(aff, rep, 4)[0])
    ok = not verdict.ok
    return ok, (f"expected failure for l=0, A1, m=2 at k={aff.level}: annihilated={verdict.ok} "
                f"(residual term counts {verdict.residual_counts()}); "
                f"tr F[-1]^2 is the classical Sugawara vector, so no failure exists; "
                f"the genuine l=0 failure m=4 gives annihilated={quartic.ok}")


def criterion_8():
    alg, rep = build_algebra("A1")
    aff = AffineTakiff.critical(TakiffAlgebra(alg, 1))
    v = translate(Theta(aff, rep, 2)[2])
    verdict = verify_sugawara(v)
    return verdict.ok and bool(v), f"T Theta_2^(2) (A1, l=1) annihilated at k={aff.level}: {verdict.residual_counts()}"


def criterion_9():
    alg, rep = build_algebra("A1")
    aff = AffineTakiff.critical(TakiffAlgebra(alg, 1))
    report = completeness_certificate(aff, rep, max_s=1, seed=0)
    ok = report.ok and len(report.labels) == 4 and report.rank.rank == 4 and all(report.invariant)
    return ok, (f"{len(report.labels)} vectors {report.labels}, invariant={all(report.invariant)}, "
                f"Jacobian rank {report.rank.rank} (seeds {report.rank.seeds})")


def criterion_10():
    results = {}
    for label, ms in [("A1", [2]), ("A2", [2, 3])]:
        alg, rep = build_algebra(label)
        for m in ms:
            results[f"{label} m={m}"] = chevalley_check(alg, rep, m).equal
    return all(results.values()), f"Cartan restriction of symbol(tr F^m) equals (-1)^m P_m: {results}"


def criterion_11():
    alg, rep = build_algebra("A1")
    tak = TakiffAlgebra(alg, 1)
    env, sp = tak.enveloping, tak.space
    table = takiff_bracket_table(alg, 1)
    rng = random.Random(2024)
    keys = tak.generators()
    discrepancies = products = 0
    while products < 1000:
        total = rng.randint(1, 4)
        cuts = sorted(rng.sample(range(total + 1), 2)) if total >= 2 else [0, total]
        word = [rng.choice(keys) for _ in range(total)]
        w1, w2, w3 = word[:cuts[0]], word[cuts[0]:cuts[1]], word[cuts[1]:]
        a, b, c = (env.normal_order(w) for w in (w1, w2, w3))
        left, right = (a * b) * c, a * (b * c)
        naive = naive_normal_order([(sp.degree(k), sp.index(k)) for k in word], table)
        fast = {tuple((sp.degree(k), sp.index(k)) for k in m): q(v) for m, v in left.terms.items()}
        if left != right or fast != {m: q(str(v)) for m, v in naive.items()}:
            discrepancies += 1
        products += 1
    tensor_bad = 0
    for seed in range(100):
        trng = random.Random(seed)
        N = trng.choice([2, 3])
        labels = list(itertools.product(range(N), repeat=2))

        def op():
            return TensorOperator(N, 2, {(r, s): q(trng.randint(-9, 9)) / trng.randint(1, 4)
                                         for r in labels for s in labels if trng.random() < 0.6})

        x, y = op(), op()
        if (x @ y).partial_trace(1) != (x.partial_transpose(1) @ y.partial_transpose(1)).partial_trace(1):
            tensor_bad += 1
    ok = discrepancies == 0 and tensor_bad == 0
    return ok, (f"{products} random degree<=4 products: {discrepancies} discrepancies "
                f"(associativity + naive rewriting oracle); tr1 XY = tr1 X^t1 Y^t1 on 100 operator pairs: "
                f"{tensor_bad} failures")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number):
    ok, detail = CRITERIA[number - 1]()
    emit(number, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        emit(n, ok, detail)
        failed += not ok
    sys.exit(1 if failed else 0)
