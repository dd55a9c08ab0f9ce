"""Claim validation, the verifiers, the dissection, and the scanner."""

import pytest

from overpart import (CongruenceClaim, EXACT, TruncatedSeries, mod2_ring,
                      scan_congruences)
from overpart import theta
from overpart.congruence import (COUNTEREXAMPLE, REGRESSION_CLAIMS, SKIPPED,
                                 VERIFIED, combined_family_claims,
                                 dissection_rhs_mod16, known_claims,
                                 mod8_family_claims, run_known_table,
                                 verify_4n_relations, verify_combined_families,
                                 verify_dissection_mod16, verify_ell_family,
                                 verify_mod8_families, verify_mod8_nonsquare,
                                 verify_progression)
from overpart.overpartitions import by_inversion


# -- claims ----------------------------------------------------------------

def test_claim_validation():
    CongruenceClaim(16, 14, 16)
    CongruenceClaim(1, 0, 2)
    for a, b, m in [(0, 0, 8), (-4, 0, 8), (4, -1, 8), (4, 4, 8), (4, 5, 8),
                    (4, 3, 12), (4, 3, 1), (4, 3, 0)]:
        with pytest.raises(ValueError):
            CongruenceClaim(a, b, m)


def test_claims_order_and_hash():
    a, b = CongruenceClaim(4, 3, 8), CongruenceClaim(5, 2, 4)
    assert a < b
    assert len({a, b, CongruenceClaim(4, 3, 8)}) == 2


# -- verify_progression ------------------------------------------------------

def test_progression_verified(pbar_mod32_20k):
    rep = verify_progression(pbar_mod32_20k, CongruenceClaim(16, 14, 16), 2000)
    assert rep.status == VERIFIED
    assert rep.ok
    assert rep.range_checked == 2000
    assert rep.witness is None
    assert rep.source == "invert"


def test_progression_counterexample(pbar_mod32_20k):
    # pbar(0) = 1 refutes any B = 0 claim immediately
    rep = verify_progression(pbar_mod32_20k, CongruenceClaim(2, 0, 4), 100)
    assert rep.status == COUNTEREXAMPLE
    assert not rep.ok
    assert rep.witness == (0, 1)


def test_progression_witness_indexing(pbar_mod32_20k):
    # pbar(5n+2) == 0 (mod 8) fails at n = 0 already: pbar(2) = 4
    rep = verify_progression(pbar_mod32_20k, CongruenceClaim(5, 2, 8), 100)
    assert rep.status == COUNTEREXAMPLE
    assert rep.witness == (0, 4)


def test_progression_skipped_when_offset_past_window():
    small = by_inversion(3, mod2_ring(8))
    rep = verify_progression(small, CongruenceClaim(8, 5, 8))
    assert rep.status == SKIPPED
    assert rep.ok
    assert rep.witness is None


def test_window_validation(pbar_mod32_20k):
    small = by_inversion(10, mod2_ring(8))
    with pytest.raises(ValueError):
        verify_progression(small, CongruenceClaim(4, 3, 8), 11)
    with pytest.raises(ValueError):
        verify_progression(small, CongruenceClaim(4, 3, 8), -1)


def test_ring_capacity_check():
    narrow = by_inversion(50, mod2_ring(2))
    with pytest.raises(ValueError):
        verify_progression(narrow, CongruenceClaim(16, 14, 16), 50)
    # mod 4 still fits in two bits
    assert verify_progression(narrow, CongruenceClaim(5, 2, 4), 50).ok


def test_report_json_shape(pbar_mod32_20k):
    rep = verify_progression(pbar_mod32_20k, CongruenceClaim(16, 14, 16), 500)
    doc = rep.as_json_dict()
    assert doc == {"claim": {"A": 16, "B": 14, "M": 16}, "status": "Verified",
                   "range": 500, "source": "invert"}
    bad = verify_progression(pbar_mod32_20k, CongruenceClaim(2, 0, 4), 100)
    assert bad.as_json_dict()["witness"] == {"n": 0, "value": 1}


# -- theorem families ---------------------------------------------------------

def test_ell_family_seven(pbar_mod32_20k):
    reports = verify_ell_family(pbar_mod32_20k, 7, 16, 2000)
    assert len(reports) == 6
    assert all(r.status == VERIFIED for r in reports)
    assert sorted(r.subject.B for r in reports) == [7, 14, 21, 28, 35, 42]
    assert {r.subject.A for r in reports} == {49}


def test_ell_family_preconditions(pbar_mod32_20k):
    with pytest.raises(ValueError):
        verify_ell_family(pbar_mod32_20k, 5, 16, 100)    # 5 != 7 (mod 8)
    with pytest.raises(ValueError):
        verify_ell_family(pbar_mod32_20k, 9, 8, 100)     # composite
    with pytest.raises(ValueError):
        verify_ell_family(pbar_mod32_20k, 15, 16, 100)   # 7 (mod 8) but composite
    with pytest.raises(ValueError):
        verify_ell_family(pbar_mod32_20k, 2, 8, 100)     # even
    with pytest.raises(ValueError):
        verify_ell_family(pbar_mod32_20k, 7, 32, 100)    # unsupported modulus
    assert all(r.ok for r in verify_ell_family(pbar_mod32_20k, 5, 8, 2000))


def test_mod8_family_claims_small_primes():
    assert [(c.A, c.B, c.M) for c in mod8_family_claims(3)] == [
        (3, 2, 4), (6, 5, 8), (9, 3, 8), (9, 6, 8)]
    assert [(c.A, c.B, c.M) for c in mod8_family_claims(5)] == [
        (5, 2, 4), (5, 3, 4), (10, 3, 8), (10, 7, 8), (15, 7, 8),
        (15, 11, 8), (15, 13, 8), (15, 14, 8), (25, 5, 8), (25, 10, 8),
        (25, 15, 8), (25, 20, 8)]
    with pytest.raises(ValueError):
        mod8_family_claims(4)


def test_mod8_family_claims_dichotomy():
    # mod 8 for ell == +-1 (mod 8), mod 4 for ell == +-3 (mod 8)
    assert {c.M for c in mod8_family_claims(7) if c.A == 7} == {8}
    assert {c.M for c in mod8_family_claims(17) if c.A == 17} == {8}
    assert {c.M for c in mod8_family_claims(11) if c.A == 11} == {4}
    # the 3*ell family only exists for ell == +-3 (mod 8)
    assert not any(c.A == 21 for c in mod8_family_claims(7))
    assert any(c.A == 33 for c in mod8_family_claims(11))


def test_mod8_families_verify(pbar_mod32_20k):
    for ell in (3, 5, 7):
        reports = verify_mod8_families(pbar_mod32_20k, ell, 2000)
        assert all(r.status == VERIFIED for r in reports)


def test_mod8_nonsquare(pbar_mod32_20k):
    rep = verify_mod8_nonsquare(pbar_mod32_20k, 3000)
    assert rep.subject == "mod8-nonsquare"
    assert rep.status == VERIFIED


def test_mod8_nonsquare_counterexample_detection():
    # constant-1 coefficients: n = 3 is the first value that is neither a
    # square nor twice one, and 1 != 0 (mod 8)
    fake = TruncatedSeries(mod2_ring(32), [1] * 10)
    rep = verify_mod8_nonsquare(fake)
    assert rep.status == COUNTEREXAMPLE
    assert rep.witness == (3, 1)


# -- the 4n tiers --------------------------------------------------------------

def test_4n_tiers_verify(pbar_mod32_20k):
    for modulus in (4, 8, 16, 32, 64, 128):
        rep = verify_4n_relations(pbar_mod32_20k, modulus, 5000)
        assert rep.status == VERIFIED, modulus
        assert rep.subject == f"4n-vs-n-mod{modulus}"


def test_4n_tier_filters_are_necessary(pbar_mod32_20k):
    co = pbar_mod32_20k.coeffs

    def fails(n, modulus):
        expect = -co[n] if n & 1 else co[n]
        return (co[4 * n] - expect) % modulus != 0

    # mod 32 needs the odd-square exclusion: already n = 1 fails
    assert (co[4] + co[1]) % 32 == 16
    assert any(fails(n * n, 32) for n in range(1, 40, 2))
    # mod 64 needs n != 1, 2, 5 (mod 8)
    assert any(fails(n, 64) for n in range(200) if n % 8 in (1, 2, 5))
    # mod 128 needs n == 0 (mod 4)
    assert any(fails(n, 128) for n in range(200) if n % 4 != 0)


def test_4n_tier_validation(pbar_mod32_20k):
    with pytest.raises(ValueError):
        verify_4n_relations(pbar_mod32_20k, 256, 100)
    small = by_inversion(100, mod2_ring(8))
    with pytest.raises(ValueError):
        verify_4n_relations(small, 4, 26)  # needs coefficients to 104
    assert verify_4n_relations(small, 4).range_checked == 25  # order // 4


# -- the 16-dissection -----------------------------------------------------------

def test_dissection_verifies():
    rep = verify_dissection_mod16(512)
    assert rep.status == VERIFIED
    assert rep.subject == "dissection-mod16"


def test_dissection_accepts_supplied_series(pbar_mod32_20k):
    rep = verify_dissection_mod16(512, pbar_mod32_20k)
    assert rep.status == VERIFIED


def test_dissection_rhs_vanishing_columns():
    rhs = dissection_rhs_mod16(1024)
    for r in (7, 14, 15):
        assert rhs.dissect(16, r).is_zero()
    for r in (0, 6, 13):
        assert not rhs.dissect(16, r).is_zero()


def test_dissection_rhs_order_check():
    with pytest.raises(ValueError):
        dissection_rhs_mod16(15)


def test_dissection_qq4_slot_regression():
    # the q^4 slot of the bracket is 2 phi(q^16) (4 psi(q^16)^2
    # + 3 phi(q^16) psi(q^32)); with psi(q^32)^2 in place of psi(q^16)^2
    # the rebuilt series drifts from pbar mod 16 first at q^36, by 8.
    # Only this slot is that fragile: its prefactor 2 keeps three bits of
    # the inner sum visible, and f(q)^2 == f(q^2) (mod 2) makes the two
    # variants agree mod 2 but not mod 8.
    order = 128
    ring = mod2_ring(4)
    A = theta.phi(order, ring).substitute_power(16)
    P = theta.psi(order, ring).substitute_power(32)
    W = theta.psi(order, ring).substitute_power(16)
    D = theta.phi_neg(order, ring).substitute_power(16)
    swap = (A ** 12) * (D.invert() ** 16) * (
        (2 * (A * (4 * (P * P) + 3 * (A * P)))).shift(4)
        - (2 * (A * (4 * (W * W) + 3 * (A * P)))).shift(4))
    wrong = dissection_rhs_mod16(order) + swap
    true16 = by_inversion(order, ring)
    mismatches = [(n, (wrong[n] - true16[n]) % 16)
                  for n in range(order + 1) if wrong[n] != true16[n]]
    assert mismatches[0] == (36, 8)
    assert all(n % 16 == 4 for n, _ in mismatches)


def test_dissection_counterexample_path():
    # a depth-1 two-adic series only carries pbar mod 4; comparing it
    # against the dissection mod 16 must fail, first at pbar(2) = 4
    from overpart.overpartitions import two_adic
    shallow = two_adic(64, 1, mod2_ring(32))
    rep = verify_dissection_mod16(64, shallow, source="2adic:1")
    assert rep.status == COUNTEREXAMPLE
    assert rep.witness == (2, 4)
    assert rep.source == "2adic:1"


# -- combined families and the known table ----------------------------------------

def test_combined_family_claims():
    assert [(c.A, c.B, c.M) for c in combined_family_claims(0)] == [
        (8, 7, 64), (16, 14, 16), (72, 69, 32)]
    claims = combined_family_claims(2)
    assert len(claims) == 9
    assert CongruenceClaim(16 * 16, 14 * 16, 16) in claims
    assert CongruenceClaim(72 * 16, 69 * 16, 32) in claims
    with pytest.raises(ValueError):
        combined_family_claims(-1)


def test_combined_families_verify(pbar_mod32_20k):
    reports = verify_combined_families(pbar_mod32_20k, 2, 5000)
    assert len(reports) == 9
    assert all(r.status == VERIFIED for r in reports)


def test_combined_families_skip_out_of_window(pbar_mod32_20k):
    reports = verify_combined_families(pbar_mod32_20k, 2, 100)
    by_claim = {(r.subject.A, r.subject.B): r.status for r in reports}
    assert by_claim[(8, 7)] == VERIFIED
    assert by_claim[(128, 112)] == SKIPPED
    assert by_claim[(1152, 1104)] == SKIPPED


def test_regression_claims_pinned():
    assert [(c.A, c.B, c.M) for c in REGRESSION_CLAIMS] == [
        (4, 3, 8), (5, 2, 4), (8, 5, 8), (8, 6, 8), (8, 7, 64), (12, 10, 8),
        (16, 10, 8), (20, 6, 8), (20, 14, 8), (24, 17, 16), (48, 26, 8),
        (72, 69, 32)]


def test_known_table_composition(pbar_mod32_20k):
    reports = run_known_table(pbar_mod32_20k, 2000)
    # 12 regression claims + Kim's mod-8 statement + the three mod-8
    # families at ell = 3, 5, 7, 11, 13 (4 + 12 + 12 + 30 + 36 claims)
    assert len(reports) == 107
    assert all(r.status == VERIFIED for r in reports)


def test_known_claims_registry():
    known = known_claims()
    assert CongruenceClaim(16, 14, 16) in known
    assert CongruenceClaim(49, 7, 16) in known
    assert CongruenceClaim(529, 23 * 22, 16) in known
    assert CongruenceClaim(4, 3, 8) in known
    assert CongruenceClaim(3, 2, 4) in known
    assert CongruenceClaim(7, 3, 8) in known
    assert CongruenceClaim(2, 1, 8) not in known


# -- the scanner --------------------------------------------------------------------

def test_scan_finds_known_claims(pbar_mod32_20k):
    hits = scan_congruences(pbar_mod32_20k, 8, (8, 64), 3000)
    flags = {(h.claim.A, h.claim.B, h.claim.M): h.known for h in hits}
    assert flags[(4, 3, 8)] is True
    assert flags[(8, 7, 64)] is True
    # true subprogressions of known claims surface as candidates
    assert flags[(8, 3, 8)] is False
    assert flags[(8, 7, 8)] is False


def test_scan_output_is_sorted_and_consistent(pbar_mod32_20k):
    hits = scan_congruences(pbar_mod32_20k, 8, (8, 64), 3000)
    keys = [(h.claim.A, h.claim.B, h.claim.M) for h in hits]
    assert keys == sorted(keys)
    known = known_claims()
    for h in hits:
        assert h.known == (h.claim in known)
        assert verify_progression(pbar_mod32_20k, h.claim, 3000).status == VERIFIED


def test_scan_never_reports_b_zero(pbar_mod32_20k):
    hits = scan_congruences(pbar_mod32_20k, 6, (4,), 2000)
    assert all(h.claim.B != 0 for h in hits)


def test_scan_check_counts(pbar_mod32_20k):
    hits = scan_congruences(pbar_mod32_20k, 8, (8,), 3000)
    for h in hits:
        assert h.checks == (3000 - h.claim.B) // h.claim.A + 1


def test_scan_min_checks_suppression(pbar_mod32_20k):
    assert scan_congruences(pbar_mod32_20k, 8, (8,), 3000, min_checks=3001) == []
    thin = scan_congruences(pbar_mod32_20k, 8, (8,), 100, min_checks=13)
    assert all(h.checks >= 13 for h in thin)


def test_scan_json_shape(pbar_mod32_20k):
    hits = scan_congruences(pbar_mod32_20k, 4, (8,), 2000)
    doc = hits[0].as_json_dict()
    assert set(doc) == {"claim", "checks", "label"}
    assert doc["label"] in ("KNOWN", "CANDIDATE")


def test_scan_validation(pbar_mod32_20k):
    with pytest.raises(ValueError):
        scan_congruences(pbar_mod32_20k, 8, (3,), 1000)
    with pytest.raises(ValueError):
        scan_congruences(pbar_mod32_20k, 8, (256,), 1000)
    with pytest.raises(ValueError):
        scan_congruences(pbar_mod32_20k, 0, (8,), 1000)
    with pytest.raises(ValueError):
        scan_congruences(pbar_mod32_20k, 8, (8,), 1000, min_checks=0)
