"""2x2 unimodular integer matrices and generator words for SL(2,Z)/PSL(2,Z).

Matrices always carry an SL(2,Z) representative (det = 1); equality up to
sign is a comparison mode (psl_eq), not a separate type, so exact sign
bookkeeping stays available.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .errors import OddLength
from .cfrac import Word


@dataclass(frozen=True)
class Mat2:
    """Row-major [[a, b], [c, d]] with ad - bc = 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.entries()} is not 1")

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def psl_key(self) -> tuple[int, int, int, int]:
        """Canonical sign representative, usable as a PSL(2,Z) dict key."""
        e = self.entries()
        ne = tuple(-x for x in e)
        return max(e, ne)

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


IDENTITY = Mat2(1, 0, 0, 1)
R = Mat2(1, 1, 0, 1)
L = Mat2(1, 0, 1, 1)
S = Mat2(0, -1, 1, 0)


def psl_eq(x: Mat2, y: Mat2) -> bool:
    """Equality in PSL(2,Z): x = y or x = -y."""
    return x == y or x == -y


def m_word(word: Word) -> Mat2:
    """Product of the factors (c_i, -1; 1, 0); the negative-CF matrix."""
    a, b, c, d = 1, 0, 0, 1
    for w in word:
        a, b, c, d = a * w + b, -a, c * w + d, -c
    return Mat2(a, b, c, d)


def m_plus_word(word: Word) -> Mat2:
    """Product of the factors (a_i, 1; 1, 0); the regular-CF matrix."""
    a, b, c, d = 1, 0, 0, 1
    for w in word:
        a, b, c, d = a * w + b, a, c * w + d, c
    return Mat2(a, b, c, d)


class IdClass(enum.Enum):
    MINUS_ID = "-Id"
    PLUS_ID = "+Id"
    NEITHER = "Neither"

    def __str__(self):
        return self.value


def classify_id(word: Word) -> IdClass:
    """Whether the word multiplies out to -Id, +Id or something else."""
    m = m_word(word)
    if m == IDENTITY:
        return IdClass.PLUS_ID
    if m == -IDENTITY:
        return IdClass.MINUS_ID
    return IdClass.NEITHER


def is_in_gamma(m: Mat2) -> bool:
    """Membership in the regular-CF semigroup: a >= b >= d > 0, a >= c >= d > 0."""
    a, b, c, d = m.entries()
    return a >= b >= d > 0 and a >= c >= d > 0


# --- generator words -------------------------------------------------------

@dataclass(frozen=True)
class GenWord:
    """Word in the generators R, L, S; tokens are (letter, exponent).

    S always has exponent 1; R and L may carry any nonzero integer power.
    """

    tokens: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for letter, k in self.tokens:
            if letter == "S":
                if k != 1:
                    raise ValueError("S tokens carry exponent 1")
            elif letter in ("R", "L"):
                if k == 0:
                    raise ValueError("zero exponent token")
            else:
                raise ValueError(f"unknown generator {letter!r}")

    def normalize(self) -> "GenWord":
        """Merge adjacent same-letter powers and cancel S pairs.

        Cancelling S S changes the SL sign (S^2 = -Id); the result is
        equal in PSL(2,Z) only.
        """
        out: list[tuple[str, int]] = []
        for tok in self.tokens:
            out.append(tok)
            while len(out) >= 2 and out[-1][0] == out[-2][0]:
                letter = out[-1][0]
                if letter == "S":
                    out.pop()
                    out.pop()
                else:
                    k = out.pop()[1] + out.pop()[1]
                    if k:
                        out.append((letter, k))
        return GenWord(tuple(out))

    def __str__(self):
        parts = []
        for letter, k in self.tokens:
            parts.append(letter if k == 1 else f"{letter}^{k}")
        return " ".join(parts)


def _power(base_r: bool, k: int) -> Mat2:
    return Mat2(1, k, 0, 1) if base_r else Mat2(1, 0, k, 1)


def eval_genword(g: GenWord) -> Mat2:
    """Exact SL(2,Z) product of the generator tokens."""
    m = IDENTITY
    for letter, k in g.tokens:
        if letter == "S":
            m = m * S
        else:
            m = m * _power(letter == "R", k)
    return m


def to_rs_word(word: Word) -> GenWord:
    """R^{c_1} S R^{c_2} S ... R^{c_k} S, equal to m_word(word) exactly."""
    tokens: list[tuple[str, int]] = []
    for c in word:
        tokens.append(("R", c))
        tokens.append(("S", 1))
    return GenWord(tuple(tokens))


def to_rl_word(word: Word) -> GenWord:
    """R^{a_1} L^{a_2} R^{a_3} ..., equal to m_plus_word(word) exactly."""
    if len(word) % 2:
        raise OddLength(f"regular word {word} has odd length")
    tokens = []
    for i, a in enumerate(word):
        tokens.append(("R" if i % 2 == 0 else "L", a))
    return GenWord(tuple(tokens))


# --- text syntax -----------------------------------------------------------

def parse_mat2(text: str) -> Mat2:
    """Parse "[[a,b],[c,d]]" or space-separated row-major "a b c d"."""
    t = text.strip().replace("−", "-")
    if t.startswith("["):
        rows = json.loads(t)
        (a, b), (c, d) = rows
    else:
        a, b, c, d = (int(x) for x in t.split())
    return Mat2(a, b, c, d)
