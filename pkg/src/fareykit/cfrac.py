"""Negative ("reversal") and regular continued fractions.

Words are plain tuples of positive integers.  Evaluation goes through
continuants so it stays defined (as a signed pair) even when the naive
fraction would divide by zero, e.g. on runs of 1's.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import EntryBelowTwo, NotIrrational, OddLength, OutOfRange
from .numcore import ProjRational, QuadSurd, SignedPair, surd_ceil_step

Word = tuple[int, ...]


class CFKind(enum.Enum):
    NEGATIVE = "negative"
    REGULAR = "regular"


def _check_entries(word, minimum, exc):
    for c in word:
        if c < minimum:
            raise exc(f"entry {c} below {minimum} in {word}")


def continuant(word: Word) -> int:
    """Tridiagonal determinant K_n(c_1, ..., c_n).

    Computed by K_i = c_i K_{i-1} - K_{i-2} with K_0 = 1, K_{-1} = 0;
    this is the numerator of the negative continued fraction.
    """
    km1, k = 0, 1
    for c in word:
        km1, k = k, c * k - km1
    return k


def eval_negative(word: Word) -> SignedPair:
    """Value of the negative continued fraction as an unreduced signed pair.

    Returns (K_n(c_1..c_n), K_{n-1}(c_2..c_n)); the sign and possible zero
    denominator are meaningful, so no projective reduction is applied.
    """
    if not word:
        return SignedPair(1, 0)
    return SignedPair(continuant(word), continuant(word[1:]))


def eval_regular(word: Word) -> ProjRational:
    """Value of the regular continued fraction [a_1, ..., a_l]."""
    if not word:
        raise OutOfRange("empty regular continued fraction")
    _check_entries(word, 1, OutOfRange)
    num, num_prev = word[0], 1
    den, den_prev = 1, 0
    for a in word[1:]:
        num, num_prev = a * num + num_prev, num
        den, den_prev = a * den + den_prev, den
    return ProjRational(num, den)


def expand_negative(x: ProjRational) -> Word:
    """The unique expansion of r/s > 1 with all coefficients >= 2."""
    r, s = x.num, x.den
    if s < 1 or r <= s:
        raise OutOfRange(f"{x} is not a rational > 1")
    word = []
    while s:
        c = -(-r // s)  # ceil(r/s)
        word.append(c)
        r, s = s, c * s - r
    return tuple(word)


def expand_regular(x: ProjRational) -> Word:
    """Even-length regular expansion of r/s > 1 (entries >= 1).

    Odd floor expansions are padded via [.., a+1] = [.., a, 1].
    """
    r, s = x.num, x.den
    if s < 1 or r <= s:
        raise OutOfRange(f"{x} is not a rational > 1")
    word = []
    while s:
        a, rem = divmod(r, s)
        word.append(a)
        r, s = s, rem
    if len(word) % 2:
        word[-1] -= 1
        word.append(1)
    return tuple(word)


def regular_to_negative(a: Word) -> Word:
    """Coefficient conversion [a_1..a_2m] -> [[c_1..c_k]].

    The rule is (a_1+1, 2 repeated a_2-1 times, a_3+2, 2 repeated a_4-1
    times, ...); both words expand the same rational.
    """
    if len(a) % 2:
        raise OddLength(f"regular word {a} has odd length")
    _check_entries(a, 1, OutOfRange)
    out: list[int] = []
    for i in range(0, len(a), 2):
        out.append(a[i] + (1 if i == 0 else 2))
        out.extend([2] * (a[i + 1] - 1))
    return tuple(out)


def negative_to_regular(c: Word) -> Word:
    """Inverse conversion; requires all entries >= 2, returns even length."""
    _check_entries(c, 2, EntryBelowTwo)
    if not c:
        return ()
    out: list[int] = []
    i = 0
    k = len(c)
    while True:
        out.append(c[i] - (1 if i == 0 else 2))
        i += 1
        run = 0
        while i < k and c[i] == 2:
            run += 1
            i += 1
        out.append(run + 1)
        if i == k:
            return tuple(out)
        # an entry >= 3 always terminates a run of 2's


def convergents(word: Word, kind: CFKind) -> tuple[SignedPair, ...]:
    """Signed convergent pairs (r_i, s_i) for i = 1..len(word)."""
    out = []
    if kind is CFKind.NEGATIVE:
        r, rp = 1, 0
        s, sp = 0, -1
        for c in word:
            r, rp = c * r - rp, r
            s, sp = c * s - sp, s
            out.append(SignedPair(r, s))
    else:
        _check_entries(word, 1, OutOfRange)
        r, rp = 1, 0
        s, sp = 0, 1
        for a in word:
            r, rp = a * r + rp, r
            s, sp = a * s + sp, s
            out.append(SignedPair(r, s))
    return tuple(out)


@dataclass(frozen=True)
class PeriodicWord:
    """Eventually periodic negative continued fraction coefficients."""

    prefix: Word
    period: Word

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")
        object.__setattr__(self, "period", _minimal_period(self.period))

    def __str__(self):
        pre = ",".join(map(str, self.prefix))
        per = ",".join(map(str, self.period))
        return f"[[{pre};{per}]]"


def _minimal_period(period: Word) -> Word:
    n = len(period)
    for length in range(1, n + 1):
        if n % length == 0 and period[:length] * (n // length) == period:
            return period[:length]
    return period


def surd_negative_cf(x: QuadSurd, max_steps: int = 1_000_000) -> PeriodicWord:
    """Negative continued fraction of a quadratic surd.

    The canonical-form states recur, so the expansion is eventually
    periodic; the first repeated state marks off prefix and minimal period.
    """
    seen: dict[QuadSurd, int] = {}
    coeffs: list[int] = []
    state = x
    for _ in range(max_steps):
        if state in seen:
            start = seen[state]
            return PeriodicWord(tuple(coeffs[:start]), tuple(coeffs[start:]))
        seen[state] = len(coeffs)
        c, state = surd_ceil_step(state)
        coeffs.append(c)
    raise NotIrrational(f"no period within {max_steps} steps for {x!r}")


# --- text syntax -----------------------------------------------------------

def parse_word(text: str) -> Word:
    """Comma-separated positive integers, e.g. "2,2,3"."""
    items = [t for t in text.replace(" ", "").split(",") if t]
    return tuple(int(t) for t in items)


def render_negative(word: Word) -> str:
    return "[[" + ",".join(map(str, word)) + "]]"


def render_regular(word: Word) -> str:
    return "[" + ",".join(map(str, word)) + "]"


def parse_cf(text: str) -> tuple[CFKind, Word] | PeriodicWord:
    """Parse "[[2,2,3]]", "[1,2,1,1]" or periodic "[[4;2,2,5]]"."""
    t = text.replace(" ", "")
    if t.startswith("[[") and t.endswith("]]"):
        body = t[2:-2]
        if ";" in body:
            pre, per = body.split(";", 1)
            return PeriodicWord(parse_word(pre), parse_word(per))
        return CFKind.NEGATIVE, parse_word(body)
    if t.startswith("[") and t.endswith("]"):
        return CFKind.REGULAR, parse_word(t[1:-1])
    raise OutOfRange(f"unrecognized continued fraction syntax: {text!r}")
