"""Acceptance gate: eight criteria, one printed pass/fail line each.

Criterion 1 compares the regenerated tables against the published
reference values embedded in legseq.tables; all other criteria exercise
engine equivalences, algebraic identities and determinism contracts.
"""

import json

import numpy as np
import pytest

from legseq.bounds import (bound_C, bound_theorem3, bound_theoremA_C, bound_W)
from legseq.cli import main
from legseq.conditions import (check_correlation_order,
                               check_divisibility_condition,
                               check_squarefree_triple, check_theorem2_sets)
from legseq.constructions import (BinarySequence, PolyTriple,
                                  build_theorem2_polys, closed_form_element,
                                  construct_combined, construct_single,
                                  construct_triple)
from legseq.ff import Poly, QnrSet, is_prime, legendre
from legseq.measures import (correlation, cross_correlation,
                             oracle_correlation, oracle_well_distribution,
                             well_distribution)
from legseq.tables import COLUMNS, EXAMPLES, PRIMES, compute_row, \
    example_triple

SMALL_PRIMES = [p for p in range(11, 500) if is_prime(p)]


def verdict(number, title, ok):
    print(f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'}",
          flush=True)
    return ok


@pytest.fixture(scope="session")
def computed_tables():
    """All twenty regenerated table rows, keyed by (example, p)."""
    return {(ex, p): compute_row(ex, p)
            for ex in sorted(EXAMPLES) for p in PRIMES}


def rand_seq(rng, n):
    return BinarySequence(tuple(int(v) for v in rng.choice((-1, 1), size=n)))


def rand_poly(rng, p, deg):
    return Poly.make([int(c) for c in rng.integers(0, p, deg)] + [1], p)


def test_criterion_1_table_reproduction(computed_tables):
    mismatches = []
    for (ex, p), computed in sorted(computed_tables.items()):
        expected = EXAMPLES[ex].expected[p]
        for col, want, got in zip(COLUMNS, expected, computed):
            if want != got:
                mismatches.append((ex, p, col, want, got))
    ok = verdict(1, "table reproduction, 160 cells exact", not mismatches)
    assert ok, (
        f"{len(mismatches)}/160 cells differ from the published values; "
        f"first few: {mismatches[:5]}. The measure engines agree with the "
        "brute-force definitional oracles (criterion 2), and the published "
        "rows both exceed and fall short of the true exact maxima in "
        "different cells, so the published values cannot come from these "
        "sequence definitions; see the repository notes for the analysis."
    )


def test_criterion_2_oracle_equivalence():
    rng = np.random.default_rng(2024)
    checked = 0
    ok = True
    for _ in range(200):
        N = int(rng.integers(8, 61))
        E = rand_seq(rng, N)
        ok &= well_distribution(E).value == oracle_well_distribution(E).value
        ok &= correlation(E, 2).value == oracle_correlation(E, 2).value
        if N <= 28:
            ok &= correlation(E, 3).value == oracle_correlation(E, 3).value
        checked += 1
        if not ok:
            break
    assert verdict(2, f"oracle equivalence on {checked} random sequences", ok)


def test_criterion_3_bound_compliance(computed_tables):
    ok = True
    for (ex, p), row in sorted(computed_tables.items()):
        t = example_triple(ex, p)
        k = t.max_degree
        # filtered-triple bounds
        ok &= row[3] <= bound_W(k, p)
        ok &= row[7] <= bound_C(2, k, p)
        # single-polynomial bounds, per-polynomial degree
        for i, poly in enumerate((t.f, t.g, t.h)):
            ok &= row[i] <= bound_W(poly.degree, p)
            ok &= row[4 + i] <= bound_theoremA_C(2, poly.degree, p)
        # the conditions module must report the hypotheses for every
        # triple; certification itself is prime-dependent (shifts of g, h
        # can cover every factor of f for some p), so only the reports
        # and the bound inequalities are required
        sf = check_squarefree_triple(t)
        ok &= {c.id for c in sf.checks} \
            == {"squarefree_f", "squarefree_g", "squarefree_h"}
        ok &= sf.overall  # the published polynomials are all squarefree
        dv = check_divisibility_condition(t)
        ok &= {c.id for c in dv.checks} \
            == {"f_not_divides_gh_shifts", "g_not_divides_h_shifts"}
        ok &= all(c.detail for c in dv.checks)
        corder = check_correlation_order(2, k, p)
        ok &= corder.overall and "i_order_two" in corder.satisfied
    assert verdict(3, "bound compliance and condition certification", ok)


def test_criterion_4_empirical_observation():
    # asserted over the embedded published rows
    ok = True
    for ex, spec in EXAMPLES.items():
        for p, row in spec.expected.items():
            ok &= row[3] <= 2 * max(row[0], row[1], row[2])
            ok &= row[7] <= 2 * max(row[4], row[5], row[6])
    assert verdict(4, "combined measure within twice the singles", ok)


def test_criterion_5_algebraic_identities():
    rng = np.random.default_rng(55)
    ok = True
    # (a) f = g collapses the filtered construction to the single one
    for _ in range(20):
        p = int(rng.choice(SMALL_PRIMES))
        f = rand_poly(rng, p, int(rng.integers(1, 5)))
        h = rand_poly(rng, p, int(rng.integers(1, 5)))
        ok &= construct_triple(PolyTriple(f, f, h)).values \
            == construct_single(f).values
    # (b) f = h and g = n*h with n a non-residue gives all ones
    done = 0
    while done < 10:
        p = int(rng.choice(SMALL_PRIMES))
        n = int(rng.integers(2, p))
        if legendre(n, p) != -1:
            continue
        h = rand_poly(rng, p, int(rng.integers(1, 4)))
        seq = construct_triple(PolyTriple(h, h.scale(n), h))
        ok &= set(seq.values) == {1}
        done += 1
    # (c) the closed-form selector matches the case definition everywhere
    # it is defined, exhaustively over n
    for _ in range(10):
        p = int(rng.choice(SMALL_PRIMES))
        t = PolyTriple(rand_poly(rng, p, 2), rand_poly(rng, p, 3),
                       rand_poly(rng, p, 2))
        seq = construct_triple(t)
        for n in range(1, p + 1):
            if t.f(n) == 0 or t.g(n) == 0 or t.h(n) == 0:
                continue
            ok &= closed_form_element(t, n) == seq[n - 1]
    # (d) even-polynomial sequences are symmetric: e_n = e_{p-n}
    for _ in range(10):
        p = int(rng.choice(SMALL_PRIMES))
        qnrs = [n for n in range(2, p) if legendre(n, p) == -1]
        rng.shuffle(qnrs)
        A = QnrSet.make(qnrs[:2], p)
        B = QnrSet.make(qnrs[2:3], p)
        C = QnrSet.make(qnrs[3:4], p)
        seq = construct_triple(build_theorem2_polys(A, B, C))
        ok &= all(seq[n - 1] == seq[p - n - 1] for n in range(1, p))
    assert verdict(5, "algebraic identities (a)-(d)", ok)


def test_criterion_6_condition_checker_soundness():
    rng = np.random.default_rng(66)
    primes = [p for p in SMALL_PRIMES if p <= 101]
    ok = True
    done = 0
    while done < 50:
        p = int(rng.choice(primes))
        qnrs = [n for n in range(2, p) if legendre(n, p) == -1]
        if len(qnrs) < 4:
            continue
        rng.shuffle(qnrs)
        na, nb, nc = (int(rng.integers(1, 3)) for _ in range(3))
        if na + nb + nc > len(qnrs):
            continue
        A = QnrSet.make(qnrs[:na], p)
        B = QnrSet.make(qnrs[na:na + nb], p)
        C = QnrSet.make(qnrs[na + nb:na + nb + nc], p)
        if not check_theorem2_sets(A, B, C).overall:
            continue
        t = build_theorem2_polys(A, B, C)
        ok &= check_squarefree_triple(t).overall
        ok &= check_divisibility_condition(t).overall
        done += 1
    # adversarial f = h must fail, naming the t = p shift
    p = 13
    h = Poly.make((3, 1, 1), p)  # irreducible: disc is a non-residue
    g = Poly.make((1, 0, 1), p)
    rep = check_divisibility_condition(PolyTriple(h, g, h))
    bad = rep.check("f_not_divides_gh_shifts")
    ok &= not bad.passed and "t=p" in bad.detail
    assert verdict(6, "condition checker soundness on 50 admissible triples",
                   ok)


def test_criterion_7_combiner_inequality():
    rng = np.random.default_rng(77)
    ok = True
    done = 0
    while done < 100:
        N = int(rng.integers(8, 13))
        fam = [rand_seq(rng, N) for _ in range(3)]
        if len({s.values for s in fam}) != 3:
            continue
        phi = {k: cross_correlation(fam, k).value for k in (2, 3, 4)}
        combined = construct_combined(*fam)
        c2 = correlation(combined, 2).value
        ok &= c2 <= bound_theorem3(2, phi)
        done += 1
    assert verdict(7, "combined C2 within the cross-correlation bound "
                      "on 100 families", ok)


def test_criterion_8_determinism(capsys):
    def run(argv):
        code = main(argv)
        out = capsys.readouterr().out
        rep = json.loads(out)
        del rep["timing_ms"]
        return code, json.dumps(rep, sort_keys=True)

    ok = True
    base = ["measure", "--p", "499", "--f", "x^2+1", "--g", "x^2+3x+1",
            "--h", "x^3-1", "--orders", "2,3"]
    runs = [run(base + ["--threads", t]) for t in ("1", "2", "4", "1")]
    ok &= all(r == runs[0] for r in runs[1:])
    sampled = ["measure", "--p", "997", "--f", "x^3+x+1", "--method",
               "sampled", "--samples", "50", "--seed", "123", "--orders",
               "2,3,4"]
    ok &= run(sampled) == run(sampled)
    assert verdict(8, "byte-identical reports across runs and thread counts",
                   ok)
