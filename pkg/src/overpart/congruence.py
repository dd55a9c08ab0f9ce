"""Congruence claims, finite-range verifiers, and the candidate scanner.

A claim (A, B, M) asserts pbar(A*n + B) == 0 (mod M) for every n >= 0.
Verifiers check claims (and coefficientwise identities) against a supplied
pbar series over an explicit window and report Verified, Counterexample,
or Skipped -- never anything probabilistic.  Passing a window is evidence,
not proof; the scanner labels fresh finds CANDIDATE accordingly.

All verifiers read the pbar series through its public coefficients only,
so any construction of the series (product, inversion, 2-adic to adequate
depth) yields identical reports.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import overpartitions, theta
from .numtheory import is_prime, is_qnr, jacobi
from .series import TruncatedSeries, mod2_ring
from .squares import square_predicates

VERIFIED = "Verified"
COUNTEREXAMPLE = "Counterexample"
SKIPPED = "Skipped"

_SCAN_MODULI = (4, 8, 16, 32, 64, 128)


@dataclass(frozen=True, order=True)
class CongruenceClaim:
    """pbar(A*n + B) == 0 (mod M) for all n >= 0."""

    A: int
    B: int
    M: int

    def __post_init__(self):
        if self.A < 1:
            raise ValueError(f"progression step must be >= 1, got A={self.A}")
        if not 0 <= self.B < self.A:
            raise ValueError(f"offset must satisfy 0 <= B < A, got B={self.B} A={self.A}")
        if self.M < 2 or self.M & (self.M - 1):
            raise ValueError(f"modulus must be a power of two >= 2, got M={self.M}")


@dataclass
class VerificationReport:
    """Outcome of one claim or identity check over a finite window.

    subject is a CongruenceClaim or a string identity id; range_checked is
    the window bound the check ran against; witness is (n, residue) for
    the first failure, None otherwise.
    """

    subject: CongruenceClaim | str
    status: str
    range_checked: int
    witness: tuple[int, int] | None
    elapsed: float
    source: str

    @property
    def ok(self) -> bool:
        return self.status != COUNTEREXAMPLE

    def as_json_dict(self) -> dict:
        if isinstance(self.subject, CongruenceClaim):
            claim = {"A": self.subject.A, "B": self.subject.B, "M": self.subject.M}
        else:
            claim = self.subject
        out = {"claim": claim, "status": self.status, "range": self.range_checked}
        if self.witness is not None:
            out["witness"] = {"n": self.witness[0], "value": self.witness[1]}
        out["source"] = self.source
        return out


@dataclass
class ScanHit:
    """A progression the scanner could not refute within its window."""

    claim: CongruenceClaim
    checks: int
    known: bool

    def as_json_dict(self) -> dict:
        return {
            "claim": {"A": self.claim.A, "B": self.claim.B, "M": self.claim.M},
            "checks": self.checks,
            "label": "KNOWN" if self.known else "CANDIDATE",
        }


def _window(pbar: TruncatedSeries, limit: int | None) -> int:
    if limit is None:
        return pbar.order
    if limit < 0:
        raise ValueError(f"window bound must be >= 0, got {limit}")
    if limit > pbar.order:
        raise ValueError(
            f"window {limit} exceeds series truncation order {pbar.order}")
    return limit


def _require_capacity(pbar: TruncatedSeries, modulus: int):
    bits = pbar.ring.bits
    if bits is not None and (1 << bits) < modulus:
        raise ValueError(
            f"series ring {pbar.ring} cannot resolve residues mod {modulus}")


def verify_progression(pbar: TruncatedSeries, claim: CongruenceClaim,
                       limit: int | None = None,
                       source: str = overpartitions.INVERSION) -> VerificationReport:
    """Check one claim for every n with A*n + B <= limit."""
    t0 = time.perf_counter()
    limit = _window(pbar, limit)
    _require_capacity(pbar, claim.M)
    status, witness = VERIFIED, None
    if claim.B > limit:
        status = SKIPPED
    else:
        for n, v in enumerate(pbar.coeffs[claim.B:limit + 1:claim.A]):
            r = v % claim.M
            if r:
                status, witness = COUNTEREXAMPLE, (n, r)
                break
    return VerificationReport(claim, status, limit, witness,
                              time.perf_counter() - t0, source)


def verify_ell_family(pbar: TruncatedSeries, ell: int, modulus: int = 16,
                      limit: int | None = None,
                      source: str = overpartitions.INVERSION) -> list[VerificationReport]:
    """Claims pbar(ell^2*n + r*ell) == 0 (mod modulus) for r = 1..ell-1.

    modulus 16 requires ell == 7 (mod 8); modulus 8 holds for every odd
    prime ell.  (r beyond ell-1 or divisible by ell adds nothing: the
    progression only depends on r mod ell, and ell | r collapses it.)
    """
    if modulus not in (8, 16):
        raise ValueError(f"family verified mod 8 or mod 16 only, got {modulus}")
    if ell == 2 or not is_prime(ell):
        raise ValueError(f"need an odd prime, got ell={ell}")
    if modulus == 16 and ell % 8 != 7:
        raise ValueError(
            f"mod-16 family needs ell == 7 (mod 8); ell={ell} is {ell % 8} (mod 8)")
    return [
        verify_progression(pbar, CongruenceClaim(ell * ell, r * ell, modulus),
                           limit, source)
        for r in range(1, ell)
    ]


def mod8_family_claims(ell: int) -> list[CongruenceClaim]:
    """The mod-8 claim families attached to an odd prime ell.

    ell^2*n + r*ell (mod 8) for every ell; 2*ell*n + r (mod 8) for odd
    nonresidues r; 3*ell*n + r (mod 8) for ell == +-3 (mod 8) and Jacobi
    (r/3ell) = -1; and ell*n + r for nonresidues r, mod 8 when
    ell == +-1 (mod 8), dropping to mod 4 when ell == +-3 (mod 8).
    """
    if ell == 2 or not is_prime(ell):
        raise ValueError(f"need an odd prime, got ell={ell}")
    claims = [CongruenceClaim(ell * ell, r * ell, 8) for r in range(1, ell)]
    claims += [
        CongruenceClaim(2 * ell, r, 8)
        for r in range(1, 2 * ell, 2) if jacobi(r, ell) == -1
    ]
    if ell % 8 in (3, 5):
        claims += [
            CongruenceClaim(3 * ell, r, 8)
            for r in range(1, 3 * ell) if jacobi(r, 3 * ell) == -1
        ]
    dichotomy_mod = 8 if ell % 8 in (1, 7) else 4
    claims += [
        CongruenceClaim(ell, r, dichotomy_mod)
        for r in range(1, ell) if is_qnr(r, ell)
    ]
    return sorted(claims)


def verify_mod8_families(pbar: TruncatedSeries, ell: int,
                         limit: int | None = None,
                         source: str = overpartitions.INVERSION) -> list[VerificationReport]:
    return [verify_progression(pbar, c, limit, source) for c in mod8_family_claims(ell)]


def verify_mod8_nonsquare(pbar: TruncatedSeries, limit: int | None = None,
                          source: str = overpartitions.INVERSION) -> VerificationReport:
    """pbar(n) == 0 (mod 8) whenever n is neither a square nor twice one."""
    t0 = time.perf_counter()
    limit = _window(pbar, limit)
    _require_capacity(pbar, 8)
    status, witness = VERIFIED, None
    for n, v in enumerate(pbar.coeffs[:limit + 1]):
        kind = square_predicates(n)
        if kind.is_square or kind.is_twice_square:
            continue
        r = v % 8
        if r:
            status, witness = COUNTEREXAMPLE, (n, r)
            break
    return VerificationReport("mod8-nonsquare", status, limit, witness,
                              time.perf_counter() - t0, source)


# tier -> (uses (-1)^n sign, filter on n)
_4N_TIERS = {
    4: (False, None),
    8: (True, None),
    16: (True, None),
    32: (True, "not-odd-square"),
    64: (True, "mod8-not-125"),
    128: (True, "mod4-zero"),
}


def _tier_keeps(tier_filter: str | None, n: int) -> bool:
    if tier_filter is None:
        return True
    if tier_filter == "not-odd-square":
        return not square_predicates(n).is_odd_square
    if tier_filter == "mod8-not-125":
        return n % 8 not in (1, 2, 5)
    return n % 4 == 0


def verify_4n_relations(pbar: TruncatedSeries, modulus: int,
                        limit: int | None = None,
                        source: str = overpartitions.INVERSION) -> VerificationReport:
    """pbar(4n) == (-1)^n * pbar(n) (mod modulus) on the tier's n-set.

    Tiers: mod 4 (plus sign, all n), mod 8 and mod 16 (all n), mod 32
    (n not an odd square), mod 64 (n != 1, 2, 5 mod 8), mod 128
    (n == 0 mod 4).  Needs the series out to 4*limit.
    """
    if modulus not in _4N_TIERS:
        raise ValueError(f"no tier mod {modulus}; tiers: {sorted(_4N_TIERS)}")
    t0 = time.perf_counter()
    if limit is None:
        limit = pbar.order // 4
    if limit < 0 or 4 * limit > pbar.order:
        raise ValueError(
            f"tier needs coefficients to 4*{limit}, series stops at {pbar.order}")
    _require_capacity(pbar, modulus)
    signed, tier_filter = _4N_TIERS[modulus]
    co = pbar.coeffs
    status, witness = VERIFIED, None
    for n in range(limit + 1):
        if not _tier_keeps(tier_filter, n):
            continue
        expect = -co[n] if signed and n & 1 else co[n]
        r = (co[4 * n] - expect) % modulus
        if r:
            status, witness = COUNTEREXAMPLE, (n, r)
            break
    return VerificationReport(f"4n-vs-n-mod{modulus}", status, limit, witness,
                              time.perf_counter() - t0, source)


def dissection_rhs_mod16(order: int) -> TruncatedSeries:
    """The 16-dissection of the pbar series, assembled from theta pieces,
    as a series mod 16.

    With A = phi(q^16), P = psi(q^32), P1 = psi1(q^16), P2 = psi2(q^16),
    D = phi(-q^16), the series equals A^12 / D^16 times a bracket whose
    q^j slots (j = 0..13, skipping 7) are polynomials in the pieces; the
    missing slots 7, 14, 15 are what make the mod-16 progressions at
    16n + 7, 14, 15 visible by construction.
    """
    if order < 16:
        raise ValueError(f"dissection needs order >= 16, got {order}")
    ring = mod2_ring(4)
    A = theta.phi(order, ring).substitute_power(16)
    P = theta.psi(order, ring).substitute_power(32)
    P1 = theta.psi1(order, ring).substitute_power(16)
    P2 = theta.psi2(order, ring).substitute_power(16)
    D = theta.phi_neg(order, ring).substitute_power(16)
    q16 = TruncatedSeries.monomial(ring, order, 16)
    # the q^4 slot carries psi(q^16)^2, the one piece not expressible in
    # the q^16/q^32 pieces above; with psi(q^32)^2 in its place the q^36
    # coefficient comes out wrong (the two differ by 8*q^4*A^5*(...),
    # visible mod 16 because this slot's prefactor is 2, not 8)
    W = theta.psi(order, ring).substitute_power(16)

    combo = q16 * P2 * P2 + P1 * P1  # q^16 psi2^2 + psi1^2, shows up four times
    Asq = A * A
    Psq = P * P
    slots = [
        (0, A * Asq),
        (1, -2 * (4 * q16 * Psq * P2 + 7 * Asq * P1)),
        (2, 4 * (A * combo)),
        (3, 8 * (P1 * combo)),
        (4, 2 * (A * (4 * (W * W) + 3 * (A * P)))),
        (5, 8 * (A * P * P1)),
        (6, 8 * (P * combo)),
        (8, 4 * (A * Psq)),
        (9, -2 * (7 * Asq * P2 + 4 * Psq * P1)),
        (10, 8 * (A * P1 * P2)),
        (11, 8 * (P2 * combo)),
        (12, 8 * (Psq * P)),
        (13, 8 * (A * P * P2)),
    ]
    bracket = TruncatedSeries.zero(ring, order)
    for j, s in slots:
        bracket = bracket + s.shift(j)
    # invert D before powering: phi(-q^16) is square-sparse, D^16 is not
    return (A ** 12) * (D.invert() ** 16) * bracket


def verify_dissection_mod16(limit: int, pbar: TruncatedSeries | None = None,
                            source: str = overpartitions.INVERSION) -> VerificationReport:
    """Rebuild the pbar series mod 16 from the theta-piece dissection and
    compare coefficientwise; also require the q^(16n+7), q^(16n+14) and
    q^(16n+15) columns of the rebuilt series to vanish identically."""
    t0 = time.perf_counter()
    if pbar is None:
        pbar = overpartitions.by_inversion(limit, mod2_ring(4))
    limit = _window(pbar, limit)
    _require_capacity(pbar, 16)
    rhs = dissection_rhs_mod16(limit)
    lhs = pbar.reduce_mod(4)
    status, witness = VERIFIED, None
    for n in range(limit + 1):
        if rhs[n] != lhs[n]:
            status, witness = COUNTEREXAMPLE, (n, (rhs[n] - lhs[n]) % 16)
            break
    if status == VERIFIED:
        for r in (7, 14, 15):
            column = rhs.dissect(16, r)
            for n, v in enumerate(column.coeffs):
                if v:
                    status, witness = COUNTEREXAMPLE, (16 * n + r, v)
                    break
            if witness:
                break
    return VerificationReport("dissection-mod16", status, limit, witness,
                              time.perf_counter() - t0, source)


def combined_family_claims(kmax: int) -> list[CongruenceClaim]:
    """(16n+14 mod 16), (72n+69 mod 32), (8n+7 mod 64), each lifted by 4^k."""
    if kmax < 0:
        raise ValueError(f"kmax must be >= 0, got {kmax}")
    claims = []
    for k in range(kmax + 1):
        f = 4 ** k
        claims += [
            CongruenceClaim(16 * f, 14 * f, 16),
            CongruenceClaim(72 * f, 69 * f, 32),
            CongruenceClaim(8 * f, 7 * f, 64),
        ]
    return sorted(claims)


def verify_combined_families(pbar: TruncatedSeries, kmax: int = 2,
                             limit: int | None = None,
                             source: str = overpartitions.INVERSION) -> list[VerificationReport]:
    return [verify_progression(pbar, c, limit, source)
            for c in combined_family_claims(kmax)]


# fixed single-progression congruences used as a regression anchor:
# six published singles and six published mod-8 progressions
REGRESSION_CLAIMS = (
    CongruenceClaim(4, 3, 8),
    CongruenceClaim(5, 2, 4),
    CongruenceClaim(8, 5, 8),
    CongruenceClaim(8, 6, 8),
    CongruenceClaim(8, 7, 64),
    CongruenceClaim(12, 10, 8),
    CongruenceClaim(16, 10, 8),
    CongruenceClaim(20, 6, 8),
    CongruenceClaim(20, 14, 8),
    CongruenceClaim(24, 17, 16),
    CongruenceClaim(48, 26, 8),
    CongruenceClaim(72, 69, 32),
)

_FAMILY_PRIMES = (3, 5, 7, 11, 13)


def run_known_table(pbar: TruncatedSeries, limit: int | None = None,
                    source: str = overpartitions.INVERSION) -> list[VerificationReport]:
    """Everything with a fixed published form: the regression claims, the
    mod-8 statement away from squares, and the mod-8 families at small
    primes."""
    reports = [verify_progression(pbar, c, limit, source) for c in REGRESSION_CLAIMS]
    reports.append(verify_mod8_nonsquare(pbar, limit, source))
    for ell in _FAMILY_PRIMES:
        reports += verify_mod8_families(pbar, ell, limit, source)
    return reports


def known_claims() -> frozenset:
    """Every (A, B, M) the built-in suites assert, for flagging scan hits."""
    claims = set(REGRESSION_CLAIMS)
    claims.update(combined_family_claims(2))
    for ell in _FAMILY_PRIMES:
        claims.update(mod8_family_claims(ell))
    for ell in (7, 23):
        claims.update(CongruenceClaim(ell * ell, r * ell, 16) for r in range(1, ell))
    return frozenset(claims)


def scan_congruences(pbar: TruncatedSeries, amax: int, mods,
                     limit: int | None = None,
                     min_checks: int = 50) -> list[ScanHit]:
    """Every (A <= amax, 0 <= B < A, M in mods) with no counterexample in
    the window and at least min_checks tested points.

    Finite evidence only.  B = 0 rows include n = 0, where pbar(0) = 1
    kills the claim immediately; that is intentional (a congruence that
    fails at zero is not a congruence).  Progressions with fewer than
    min_checks points in the window are suppressed rather than reported
    on thin evidence.
    """
    mods = sorted(set(mods))
    for m in mods:
        if m not in _SCAN_MODULI:
            raise ValueError(f"scan moduli limited to {_SCAN_MODULI}, got {m}")
    if amax < 1:
        raise ValueError(f"amax must be >= 1, got {amax}")
    if min_checks < 1:
        raise ValueError(f"min_checks must be >= 1, got {min_checks}")
    limit = _window(pbar, limit)
    _require_capacity(pbar, max(mods, default=2))
    known = known_claims()
    co = pbar.coeffs
    hits = []
    for A in range(1, amax + 1):
        for B in range(A):
            if B > limit:
                continue
            row = co[B:limit + 1:A]
            if len(row) < min_checks:
                continue
            for M in mods:
                if any(v % M for v in row):
                    continue
                claim = CongruenceClaim(A, B, M)
                hits.append(ScanHit(claim, len(row), claim in known))
    return hits
