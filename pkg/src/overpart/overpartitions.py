"""The overpartition generating function, built three independent ways.

An overpartition of n is a partition in which the first occurrence of each
distinct part size may be overlined; pbar(n) counts them, so each ordinary
partition contributes 2^(number of distinct part sizes).  The series starts

    1 + 2q + 4q^2 + 8q^3 + 14q^4 + 24q^5 + ...

Constructions:

  by_product    (-q; q)_inf / (q; q)_inf
  by_inversion  1 / phi(-q)
  two_adic      1 + sum_{k=1..K} 2^k sum_n (-1)^(n+k) c_k(n) q^n

The first two agree exactly at every order.  The truncated 2-adic sum at
depth K agrees with pbar only modulo 2^(K+1); that is its contract, and
the tests exercise exactly that.

count_by_enumeration recounts pbar(n) from the definition, touching no
series code, and anchors everything else.
"""

from __future__ import annotations

from . import theta
from .series import DEFAULT_RING, EXACT, CoeffRing, TruncatedSeries
from .squares import ck_table

PRODUCT = "product"
INVERSION = "invert"
TWO_ADIC = "2adic"


def by_product(order: int, ring: CoeffRing = EXACT) -> TruncatedSeries:
    """(-q; q)_inf times the inverse of (q; q)_inf."""
    return theta.pochhammer_negqq(order, ring) * theta.pochhammer_qq(order, ring).invert()


def by_inversion(order: int, ring: CoeffRing = EXACT) -> TruncatedSeries:
    """1 / phi(-q); the workhorse construction (phi(-q) is square-sparse)."""
    return theta.phi_neg(order, ring).invert()


def two_adic(order: int, depth: int, ring: CoeffRing = EXACT) -> TruncatedSeries:
    """Partial 2-adic expansion through the 2^depth term.

    Congruent to pbar coefficientwise mod 2^(depth+1).  A modular ring must
    be at least depth+1 bits wide or the leading term would not even be
    representable.
    """
    if depth < 1:
        raise ValueError(f"2-adic depth must be >= 1, got {depth}")
    if ring.bits is not None and ring.bits < depth + 1:
        raise ValueError(
            f"ring {ring} too narrow for the 2^{depth} term; need >= {depth + 1} bits")
    table = ck_table(depth, order)
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(1, order + 1):
        v = 0
        for k in range(1, depth + 1):
            term = table.count(k, n) << k
            v += -term if (n + k) & 1 else term
        c[n] = v
    return TruncatedSeries(ring, c)


def count_by_enumeration(n: int) -> int:
    """pbar(n) straight from the definition: sum over partitions of
    2^(distinct part sizes).  Enumeration, so small n only."""
    if not 0 <= n <= 60:
        raise ValueError(f"enumeration supports 0 <= n <= 60, got {n}")

    def walk(remaining, largest_allowed):
        # choose the largest part value and its multiplicity, recurse on
        # strictly smaller values; the chosen value is one distinct size
        if remaining == 0:
            return 1
        total = 0
        for v in range(min(remaining, largest_allowed), 0, -1):
            picked = v
            while picked <= remaining:
                total += 2 * walk(remaining - picked, v - 1)
                picked += v
        return total

    return walk(n, n)


def generating_series(order: int, ring: CoeffRing | None = None,
                      source: str = INVERSION) -> TruncatedSeries:
    """Build the pbar series from a named source.

    source is "invert", "product", or "2adic:K" (truncated expansion,
    valid mod 2^(K+1) only).  ring defaults to Z/2^32, the verification
    workhorse; pass EXACT for true coefficients.
    """
    if ring is None:
        ring = DEFAULT_RING
    if source == INVERSION:
        return by_inversion(order, ring)
    if source == PRODUCT:
        return by_product(order, ring)
    if source.startswith(TWO_ADIC + ":"):
        try:
            depth = int(source.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad 2-adic source {source!r}; expected 2adic:K")
        return two_adic(order, depth, ring)
    raise ValueError(
        f"unknown source {source!r}; expected {INVERSION!r}, {PRODUCT!r}, or '2adic:K'")
