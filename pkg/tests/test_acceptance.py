"""End-to-end acceptance suite.

Exhaustive bijection/weight/product/sign checks over every family member of
bounded weight, the seven rewritten affine identities, their one- and
two-parameter hook-length deformations, all fourteen specializations, the
character cross-checks, and the classical series facts -- all in exact
arithmetic, with wall-clock budgets asserted where stated.
"""

import json
import time
from fractions import Fraction

from maclab import (
    FamilyTag,
    TauFn,
    check_weight_identity,
    compose,
    core_weight,
    decode_word,
    decompose,
    encode_word,
    enumerate_family,
    euler_products,
    family_weight,
    from_family_vector,
    char_lemma_stats,
    partition_numbers,
    phi,
    phi_inverse,
    qtno_matches_qno_a,
    raw_lattice_check,
    sign_stats,
    to_family_vector,
    vcoding,
    verify_macdonald,
    verify_no,
    verify_qno,
    verify_qtno,
    MACDONALD,
    NO_IDS,
    QNO_IDS,
)
from maclab.cli import main
from maclab.hookprods import hook_product_counters, member_from_vcoding

from conftest import character_tags


def test_criterion_1_bijections_round_trip(corpus40, members40):
    start = time.monotonic()
    for lam in corpus40:
        assert decode_word(encode_word(lam)) == lam
    for t in range(2, 7):
        for lam in corpus40:
            assert compose(decompose(lam, t)) == lam
    for t in range(2, 7):
        for core in members40[FamilyTag("P", t)]:
            assert phi_inverse(phi(core, t)) == core
    for tag, members in members40.items():
        for lam in members:
            assert from_family_vector(tag, to_family_vector(lam, tag)) == lam
            vc = vcoding(lam, tag.g, tag.rank)
            assert member_from_vcoding(vc, tag) == lam
    assert time.monotonic() - start < 60.0


def test_criterion_2_weight_formulas(members40):
    for t in range(2, 7):
        for core in members40[FamilyTag("P", t)]:
            assert core_weight(phi(core, t)) == core.weight
    for tag, members in members40.items():
        for lam in members:
            assert check_weight_identity(lam, tag), (tag, lam)
            assert family_weight(tag, to_family_vector(lam, tag)) == lam.weight


def test_criterion_3_hook_product_theorems(members40):
    start = time.monotonic()
    taus = [TauFn.identity(), TauFn.geometric(2), TauFn.qbracket()]
    jobs = [(tag, "minus") for tag in members40]
    jobs += [
        (tag, "plus")
        for tag in members40
        if tag.kind == "DD" and tag.g % 2 == 0
    ]
    for tag, variant in jobs:
        for lam in members40[tag]:
            lhs, rhs = hook_product_counters(lam, tag, variant)
            # multiset equality proves the identity for every function tau
            assert lhs == rhs, (tag, variant, lam)
            if lhs.get(0):
                continue  # both sides carry the same vanishing factor
            for tau in taus:
                a, b = tau.product(lhs), tau.product(rhs)
                if tau.symbolic:
                    assert a.num == b.num and a.den == b.den, \
                        (tag, variant, lam, tau)
                else:
                    assert a == b, (tag, variant, lam, tau)
    assert time.monotonic() - start < 300.0


def test_criterion_4_sign_congruences(members40):
    for tag, members in members40.items():
        for lam in members:
            rep = sign_stats(lam, tag)
            assert rep["agree"], rep


def test_criterion_5_rewritten_affine_identities():
    start = time.monotonic()
    jobs = [
        ("A", 3, 6, "symbolic"),
        ("C", 2, 6, "specialized"),
        ("B", 3, 4, "specialized"),
        ("BV", 3, 4, "specialized"),
        ("CV", 2, 4, "specialized"),
        ("BC", 2, 4, "specialized"),
        ("D", 4, 3, "specialized"),
    ]
    assert sorted(i for i, *_ in jobs) == sorted(MACDONALD)
    for ident, t, order, mode in jobs:
        rep = verify_macdonald(ident, t, order, mode=mode)
        assert rep.ok, (ident, rep.first_mismatch)
    assert time.monotonic() - start < 600.0


def test_criterion_6_raw_lattice_cross_check():
    for ident, t in (("A", 3), ("C", 2)):
        rep = raw_lattice_check(ident, t, 4)
        assert rep.ok, (ident, rep.first_mismatch)


def test_criterion_7_deformed_identities_symbolic():
    for ident in QNO_IDS:
        rep = verify_qno(ident, 5)
        assert rep.ok, (ident, rep.first_mismatch)


def test_criterion_7_mutation_locates_mismatch(capsys):
    rc = main(["verify", "--id", "QNO_A", "--order", "3", "--mutate",
               "--format", "json"])
    out = capsys.readouterr().out
    assert rc == 1
    payload = json.loads(out)
    mism = payload["first_mismatch"]
    assert mism is not None
    assert isinstance(mism["power"], int)
    assert mism["sum_side"] != mism["product_side"]


def test_criterion_8_specializations():
    start = time.monotonic()
    samples = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2),
               Fraction(-2), Fraction(1, 2), Fraction(5, 2)]
    for ident in NO_IDS:
        rep = verify_no(ident, 8)
        assert rep.ok, (ident, rep.first_mismatch)
        rep = verify_no(ident, 10, z_mode="samples", z_samples=samples)
        assert rep.ok, (ident, rep.first_mismatch)
    assert time.monotonic() - start < 300.0


def test_criterion_9_two_parameter_deformation():
    rep = verify_qtno(3, 6)
    assert rep.ok, rep.first_mismatch
    assert qtno_matches_qno_a(3, 6)


def test_criterion_10_character_cross_checks():
    kinds_seen = set()
    for tag in character_tags():
        kinds_seen.add((tag.kind, tag.g % 2))
        for lam in enumerate_family(tag, 24):
            rep = char_lemma_stats(lam, tag)
            assert rep["agree"], rep
    # all six specialization lemmas are exercised
    assert kinds_seen == {
        ("DD", 0), ("DD", 1), ("SC", 0),
        ("DDp1", 0), ("DDp1", 1), ("DDp2", 0),
    }


def test_criterion_11_series_facts():
    assert partition_numbers(10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    ser = euler_products(50)
    expect = {0: 1}
    k = 1
    while k * (3 * k - 1) // 2 <= 50:
        expect[k * (3 * k - 1) // 2] = (-1) ** k
        if k * (3 * k + 1) // 2 <= 50:
            expect[k * (3 * k + 1) // 2] = (-1) ** k
        k += 1
    for n in range(51):
        assert ser.coeff(n) == expect.get(n, 0)
