"""Exact arithmetic foundation: projective rationals, sign-tracking coprime
pairs, Farey-edge predicates and real quadratic surds.

Everything is immutable and built on unbounded Python integers, so all
downstream combinatorics in the package is exact.  The projective line is
represented by coprime pairs (num, den) with den >= 0 and infinity pinned
to 1/0; the twofold cover keeps the sign (SignedPair distinguishes r/s
from -r/-s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import BothZero, NotIrrational


@dataclass(frozen=True)
class ProjRational:
    """A point of the rational projective line, canonically normalized.

    Invariants: gcd(num, den) = 1, den >= 0, and infinity is (1, 0).
    Order: usual rational order with 1/0 treated as +infinity.
    """

    num: int
    den: int

    def __post_init__(self):
        num, den = self.num, self.den
        if num == 0 and den == 0:
            raise BothZero("0/0 is not a projective point")
        if den == 0:
            num = 1
        else:
            g = math.gcd(num, den)
            num //= g
            den //= g
            if den < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    def __str__(self):
        return f"{self.num}/{self.den}"

    def _cmp(self, other: "ProjRational") -> int:
        if self.is_infinity:
            return 0 if other.is_infinity else 1
        if other.is_infinity:
            return -1
        lhs = self.num * other.den
        rhs = other.num * self.den
        return (lhs > rhs) - (lhs < rhs)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


@dataclass(frozen=True)
class SignedPair:
    """A coprime integer pair with the sign *not* normalized.

    Points of the twofold cover of the projective line: (r, s) and
    (-r, -s) are distinct values with the same reduction.
    """

    num: int
    den: int

    def __post_init__(self):
        if self.num == 0 and self.den == 0:
            raise BothZero("(0, 0) is not a point of the cover")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError(f"pair {(self.num, self.den)} is not coprime")

    def __neg__(self):
        return SignedPair(-self.num, -self.den)

    def reduce(self) -> ProjRational:
        return ProjRational(self.num, self.den)

    def __str__(self):
        return f"{self.num}/{self.den}"


INFINITY = ProjRational(1, 0)
ZERO = ProjRational(0, 1)


def normalize(num: int, den: int) -> ProjRational:
    """Reduce (num, den) to the canonical projective representative."""
    return ProjRational(num, den)


def mediant(x: ProjRational, y: ProjRational) -> ProjRational:
    """Farey sum (r' + r'')/(s' + s'')."""
    return ProjRational(x.num + y.num, x.den + y.den)


def cross_det(p: SignedPair, q: SignedPair) -> int:
    """Determinant r s'' - r'' s of the pair of columns (p, q)."""
    return p.num * q.den - q.num * p.den


def is_farey_edge(x: ProjRational, y: ProjRational) -> bool:
    """Whether x and y are joined by an edge of the Farey graph."""
    return abs(x.num * y.den - y.num * x.den) == 1


def stern_brocot_triangles(x: ProjRational) -> Iterator[tuple[ProjRational, ProjRational, ProjRational]]:
    """Yield the Farey-tessellation triangles (lo, hi, mediant) met on the
    mediant descent from the base interval (0/1, 1/0) down to x.

    The last yielded triangle has x as its mediant.  Requires 0 < x < oo.
    """
    if x <= ZERO or x.is_infinity:
        raise ValueError(f"{x} is not strictly between 0/1 and 1/0")
    lo, hi = ZERO, INFINITY
    while True:
        mid = mediant(lo, hi)
        yield lo, hi, mid
        if mid == x:
            return
        if x > mid:
            lo = mid
        else:
            hi = mid


def stern_brocot_parents(x: ProjRational) -> tuple[ProjRational, ProjRational]:
    """The two Stern-Brocot parents of x; their mediant is x."""
    for lo, hi, _mid in stern_brocot_triangles(x):
        last = (lo, hi)
    return last


def parse_rational(text: str) -> ProjRational:
    """Parse "r/s" (or a bare integer) with optional leading minus sign."""
    t = text.strip().replace("−", "-")
    if "/" in t:
        num_s, den_s = t.split("/", 1)
        return ProjRational(int(num_s), int(den_s))
    return ProjRational(int(t), 1)


class QuadSurd:
    """The real quadratic irrational (p + sqrt(d))/q in canonical form.

    Canonical form requires q | (d - p^2); constructor inputs that violate
    it are rescaled by |q| (value preserved).  The divisibility invariant
    keeps the state space of the ceiling-step recursion finite, so period
    detection terminates.
    """

    __slots__ = ("p", "q", "d")

    def __init__(self, p: int, q: int, d: int):
        if q == 0:
            raise ZeroDivisionError("surd denominator must be nonzero")
        if d <= 0 or math.isqrt(d) ** 2 == d:
            raise NotIrrational(f"discriminant {d} is a perfect square")
        if (d - p * p) % q != 0:
            scale = abs(q)
            p, d, q = p * scale, d * scale * scale, q * scale
        self.p = p
        self.q = q
        self.d = d

    def __eq__(self, other):
        return (
            isinstance(other, QuadSurd)
            and (self.p, self.q, self.d) == (other.p, other.q, other.d)
        )

    def __hash__(self):
        return hash((self.p, self.q, self.d))

    def __repr__(self):
        return f"QuadSurd(({self.p} + sqrt({self.d}))/{self.q})"

    def __float__(self):
        return (self.p + math.sqrt(self.d)) / self.q

    def floor(self) -> int:
        """Exact floor via integer square root bounds."""
        s = math.isqrt(self.d)
        if self.q > 0:
            return (self.p + s) // self.q
        # floor(-u) = -ceil(u) and sqrt(d) is irrational, so
        # floor((p + sqrt(d))/q) = floor((-p - s - 1)/(-q)) for q < 0.
        return (-self.p - s - 1) // (-self.q)

    def ceil(self) -> int:
        return self.floor() + 1


def surd_ceil_step(x: QuadSurd) -> tuple[int, QuadSurd]:
    """One step of the negative continued fraction of a surd.

    Returns (c, next) with c = ceil(x) and next = 1/(c - x), again in
    canonical form; x = c - 1/next holds exactly.
    """
    c = x.ceil()
    p1 = c * x.q - x.p
    q1 = (p1 * p1 - x.d) // x.q
    return c, QuadSurd(p1, q1, x.d)
