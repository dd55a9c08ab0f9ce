"""Truncated power series over exact integers or integers mod 2**m.

A TruncatedSeries holds coefficients of q^0 .. q^order and nothing else.
Reading past the truncation order is a hard error, never a silent zero:
every coefficient an operation reports is one it actually knows.

Binary operations require the two operands to share a ring and truncate
the result to the shorter operand's order.  All series are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class CoeffRing:
    """Coefficient ring: exact integers when bits is None, else Z/2**bits.

    Modular coefficients are stored reduced into [0, 2**bits).  bits is
    capped at 64; larger two-power moduli are outside the contract and
    exact arithmetic covers them anyway.
    """

    bits: int | None = None

    def __post_init__(self):
        if self.bits is not None and not 1 <= self.bits <= 64:
            raise ValueError(f"modulus width must be 1..64 bits, got {self.bits}")

    @property
    def is_exact(self) -> bool:
        return self.bits is None

    @property
    def mask(self) -> int | None:
        return None if self.bits is None else (1 << self.bits) - 1

    def normalize(self, x: int) -> int:
        # & on a negative int reduces into [0, 2**bits) like a true mod
        return x if self.bits is None else x & self.mask

    def is_unit(self, x: int) -> bool:
        if self.bits is None:
            return x in (1, -1)
        return x & 1 == 1

    def invert_unit(self, x: int) -> int:
        if not self.is_unit(x):
            raise ValueError(f"constant term {x} is not a unit in {self}")
        if self.bits is None:
            return x  # 1 or -1, self-inverse
        return pow(x, -1, 1 << self.bits)

    def __str__(self):
        return "Z" if self.bits is None else f"Z/2^{self.bits}"


EXACT = CoeffRing()


def mod2_ring(bits: int) -> CoeffRing:
    """The ring Z/2**bits, 1 <= bits <= 64."""
    return CoeffRing(bits)


# Verification work defaults to 32 bits: wide enough for every modulus
# in scope (<= 2^7) with room for the 2-adic construction at any K <= 31.
DEFAULT_RING = mod2_ring(32)


def _pack(vals: Sequence[int], sb: int) -> int:
    """Pack signed slot values into one integer, sb bytes per slot."""
    pos = bytearray(len(vals) * sb)
    neg = bytearray(len(vals) * sb)
    for i, c in enumerate(vals):
        if c > 0:
            pos[i * sb:(i + 1) * sb] = c.to_bytes(sb, "little")
        elif c < 0:
            neg[i * sb:(i + 1) * sb] = (-c).to_bytes(sb, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _convolve(a: Sequence[int], b: Sequence[int], outlen: int) -> list[int]:
    """First outlen coefficients of the product, by Kronecker substitution.

    Both operands are packed into big integers with a fixed slot width
    chosen so no convolution sum can reach a neighboring slot; one native
    multiply then performs the whole convolution exactly.  Slots are
    signed, so the product is re-biased by half a slot before unpacking.
    """
    a = a[:outlen]
    b = b[:outlen]
    amax = max(map(abs, a))
    bmax = max(map(abs, b))
    if amax == 0 or bmax == 0:
        return [0] * outlen
    # |sum| <= amax*bmax*min(len), two spare bits keep it under half a slot
    slot_bits = (amax * bmax * min(len(a), len(b))).bit_length() + 2
    sb = (slot_bits + 7) // 8
    slot_bits = sb * 8
    prod = _pack(a, sb) * _pack(b, sb)
    half = 1 << (slot_bits - 1)
    bias = int.from_bytes(half.to_bytes(sb, "little") * outlen, "little")
    low = (prod + bias) & ((1 << (outlen * slot_bits)) - 1)
    data = low.to_bytes(outlen * sb, "little")
    return [
        int.from_bytes(data[i * sb:(i + 1) * sb], "little") - half
        for i in range(outlen)
    ]


class TruncatedSeries:
    """Power series known exactly up to q^order."""

    __slots__ = ("ring", "_coeffs")

    def __init__(self, ring: CoeffRing, coeffs: Iterable[int]):
        coeffs = tuple(map(ring.normalize, coeffs))
        if not coeffs:
            raise ValueError("a series needs at least the q^0 coefficient")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- construction helpers ------------------------------------------

    @classmethod
    def zero(cls, ring: CoeffRing, order: int) -> "TruncatedSeries":
        return cls(ring, [0] * (order + 1))

    @classmethod
    def one(cls, ring: CoeffRing, order: int) -> "TruncatedSeries":
        return cls(ring, [1] + [0] * order)

    @classmethod
    def monomial(cls, ring: CoeffRing, order: int, exponent: int,
                 coeff: int = 1) -> "TruncatedSeries":
        if not 0 <= exponent <= order:
            raise ValueError(f"monomial exponent {exponent} outside 0..{order}")
        c = [0] * (order + 1)
        c[exponent] = coeff
        return cls(ring, c)

    # -- inspection ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, n: int) -> int:
        """Coefficient of q^n.  n past the truncation order is an error."""
        if not 0 <= n <= self.order:
            raise IndexError(
                f"coefficient of q^{n} requested, series only known to q^{self.order}")
        return self._coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.ring, self._coeffs))

    def __repr__(self):
        terms = []
        for n, c in enumerate(self._coeffs):
            if c:
                terms.append(f"{c}" if n == 0 else f"{c}*q^{n}")
            if len(terms) == 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"<series {body} (order {self.order}, {self.ring})>"

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    # -- arithmetic ----------------------------------------------------

    def _common(self, other) -> int:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._common(other)
        norm = self.ring.normalize
        return TruncatedSeries(
            self.ring, [norm(x + y) for x, y in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._common(other)
        norm = self.ring.normalize
        return TruncatedSeries(
            self.ring, [norm(x - y) for x, y in zip(self._coeffs, other._coeffs)])

    def __neg__(self):
        norm = self.ring.normalize
        return TruncatedSeries(self.ring, [norm(-x) for x in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            norm = self.ring.normalize
            return TruncatedSeries(self.ring, [norm(other * x) for x in self._coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        outlen = self._common(other) + 1
        prod = _convolve(self._coeffs, other._coeffs, outlen)
        return TruncatedSeries(self.ring, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"series exponent must be a nonnegative int, got {e}")
        result = TruncatedSeries.one(self.ring, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse to the same order.

        Linear recurrence b(n) = -a(0)^-1 * sum_{i>=1} a(i) b(n-i); the sum
        skips zero coefficients of a, which is what makes inverting sparse
        series (theta functions, Pochhammer products) cheap.  The constant
        term must be a unit: +-1 exactly, or odd mod 2**m.
        """
        a = self._coeffs
        ring = self.ring
        inv0 = ring.invert_unit(a[0])
        support = [i for i in range(1, len(a)) if a[i]]
        b = [0] * len(a)
        b[0] = inv0
        norm = ring.normalize
        for n in range(1, len(a)):
            s = 0
            for i in support:
                if i > n:
                    break
                s += a[i] * b[n - i]
            b[n] = norm(-inv0 * s)
        return TruncatedSeries(ring, b)

    # -- reindexing ----------------------------------------------------

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q^k: coefficients move up, the tail truncates away."""
        if k < 0:
            raise ValueError(f"shift must be nonnegative, got {k}")
        if k > self.order:
            return TruncatedSeries.zero(self.ring, self.order)
        return TruncatedSeries(
            self.ring, (0,) * k + self._coeffs[:len(self._coeffs) - k])

    def substitute_power(self, t: int) -> "TruncatedSeries":
        """q -> q^t.  Result keeps this order, reading source up to order//t."""
        if t < 1:
            raise ValueError(f"substitution power must be >= 1, got {t}")
        out = [0] * len(self._coeffs)
        for i in range(self.order // t + 1):
            out[i * t] = self._coeffs[i]
        return TruncatedSeries(self.ring, out)

    def dissect(self, t: int, r: int) -> "TruncatedSeries":
        """Arithmetic-progression slice: result(n) = self(t*n + r).

        Requires 0 <= r < t and r <= order (the slice's constant term must
        be a known coefficient; fabricating it would break the truncation
        contract).  Result order is (order - r) // t.
        """
        if t < 1 or not 0 <= r < t:
            raise ValueError(f"dissection needs t >= 1 and 0 <= r < t, got t={t} r={r}")
        if r > self.order:
            raise ValueError(
                f"dissection residue {r} past truncation order {self.order}")
        return TruncatedSeries(self.ring, self._coeffs[r::t])

    def reduce_mod(self, j: int) -> "TruncatedSeries":
        """Reduce every coefficient into [0, 2**j); ring becomes Z/2**j.

        j may not exceed the current ring width: widening would fabricate
        bits the series does not carry.
        """
        ring = mod2_ring(j)
        if self.ring.bits is not None and j > self.ring.bits:
            raise ValueError(
                f"cannot widen {self.ring} to {ring}; bits above {self.ring.bits} are unknown")
        m = ring.mask
        return TruncatedSeries(ring, [c & m for c in self._coeffs])
