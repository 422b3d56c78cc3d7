"""Exact arithmetic on finite 0-1 words and eventually periodic sequences.

Words are plain strings over the alphabet {'0', '1'}.  An infinite,
eventually periodic sequence pre . per . per . per ... is held as an
:class:`EPSeq` in canonical form: the period block is primitive (not a
proper power) and the preperiod is as short as possible.  Canonical form
makes value equality coincide with structural equality, so EPSeq objects
can be dict keys and golden-test fixtures.

Lexicographic comparison conventions follow the usual symbolic-dynamics
ones: sequences compare digit by digit; a finite word c compares to a
word d as c 1^inf vs d 0^inf, and to a sequence x as c 1^inf vs x.

The numeric kernel is exact rational arithmetic (fractions.Fraction).
A base beta is carried as a rational interval enclosure, and pi_beta
maps an EPSeq to a rational interval using monotonicity in beta.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError


def check_word(w: str, allow_empty: bool = True) -> str:
    if not allow_empty and not w:
        raise PreconditionError("empty word not allowed here")
    if any(c not in "01" for c in w):
        raise PreconditionError("word must consist of digits 0/1: %r" % (w,))
    return w


def plus(w: str) -> str:
    """Replace the final digit 0 of w by 1."""
    if not w or w[-1] != "0":
        raise PreconditionError("plus() needs a word ending in 0: %r" % (w,))
    return w[:-1] + "1"


def minus(w: str) -> str:
    """Replace the final digit 1 of w by 0."""
    if not w or w[-1] != "1":
        raise PreconditionError("minus() needs a word ending in 1: %r" % (w,))
    return w[:-1] + "0"


def primitive_root(w: str) -> str:
    """Shortest u with w = u^k."""
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w == w[:d] * (n // d):
            return w[:d]
    return w


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class EPSeq:
    """Eventually periodic 0-1 sequence pre.per^inf, canonical.

    Canonical means: per is primitive, and pre cannot be shortened by
    rotating per (the last digit of pre never equals the last digit of
    per).  Two EPSeq values denote the same infinite sequence iff they
    are equal as (pre, per) pairs.
    """

    pre: str
    per: str

    def __post_init__(self):
        check_word(self.pre)
        check_word(self.per, allow_empty=False)
        per = primitive_root(self.per)
        pre = self.pre
        while pre and pre[-1] == per[-1]:
            per = per[-1] + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    def digit(self, i: int) -> str:
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, n: int) -> str:
        p, q = self.pre, self.per
        if n <= len(p):
            return p[:n]
        k = n - len(p)
        reps = k // len(q) + 1
        return p + (q * reps)[:k]

    def __str__(self):
        return "%s(%s)" % (self.pre, self.per)

    @staticmethod
    def parse(text: str) -> "EPSeq":
        """Parse the text grammar PRE(PER), e.g. '111(001)' or '(10)'."""
        text = text.strip()
        if not text.endswith(")") or "(" not in text:
            raise PreconditionError("EPSeq text must look like PRE(PER): %r" % (text,))
        pre, per = text[:-1].split("(", 1)
        if ")" in per or "(" in per:
            raise PreconditionError("malformed EPSeq text: %r" % (text,))
        if not per:
            raise PreconditionError("empty period in %r" % (text,))
        return EPSeq(check_word(pre), check_word(per))


def eps(pre: str, per: str) -> EPSeq:
    return EPSeq(pre, per)


def periodic(word: str) -> EPSeq:
    """word^inf."""
    return EPSeq("", check_word(word, allow_empty=False))


def word_zeros(word: str) -> EPSeq:
    """word 0^inf."""
    return EPSeq(word, "0")


ZERO = EPSeq("", "0")
ONE = EPSeq("", "1")


def canonicalize(pre: str, per: str) -> EPSeq:
    """Canonical form of pre.per^inf; idempotent."""
    return EPSeq(pre, per)


def lex_cmp(x: EPSeq, y: EPSeq) -> Ordering:
    """Exact lexicographic comparison of two sequences.

    A decision is always reached within max(|pre|) + lcm(|per|) digits:
    if two eventually periodic sequences agree that far, their tails are
    periodic with the common period and they agree forever.
    """
    if x == y:
        return Ordering.EQUAL
    bound = max(len(x.pre), len(y.pre)) + math.lcm(len(x.per), len(y.per))
    for i in range(bound):
        dx, dy = x.digit(i), y.digit(i)
        if dx != dy:
            return Ordering.LESS if dx < dy else Ordering.GREATER
    raise AssertionError("distinct canonical EPSeqs agree beyond the decision bound")


def seq_lt(x: EPSeq, y: EPSeq) -> bool:
    return lex_cmp(x, y) is Ordering.LESS


def seq_le(x: EPSeq, y: EPSeq) -> bool:
    return lex_cmp(x, y) is not Ordering.GREATER


def seq_gt(x: EPSeq, y: EPSeq) -> bool:
    return lex_cmp(x, y) is Ordering.GREATER


def seq_ge(x: EPSeq, y: EPSeq) -> bool:
    return lex_cmp(x, y) is not Ordering.LESS


def cmp_words(c: str, d: str) -> Ordering:
    """Word comparison c < d iff c 1^inf < d 0^inf."""
    return lex_cmp(EPSeq(c, "1"), EPSeq(d, "0"))


def cmp_word_seq(c: str, d: EPSeq) -> Ordering:
    """Mixed comparison c < d iff c 1^inf < d."""
    return lex_cmp(EPSeq(c, "1"), d)


def shift(x: EPSeq, n: int) -> EPSeq:
    """The shifted sequence sigma^n(x), canonical."""
    if n < 0:
        raise PreconditionError("shift count must be >= 0")
    if n <= len(x.pre):
        return EPSeq(x.pre[n:], x.per)
    k = (n - len(x.pre)) % len(x.per)
    return EPSeq("", x.per[k:] + x.per[:k])


def n_tails(x: EPSeq) -> int:
    """Number of shifts after which the tails of x start repeating."""
    return len(x.pre) + len(x.per)


def tails(x: EPSeq):
    """All distinct tails sigma^n(x), n = 0 .. |pre|+|per|-1 (may repeat)."""
    return [shift(x, n) for n in range(n_tails(x))]


def is_shift_maximal(x: EPSeq) -> bool:
    """sigma^n(x) <= x for all n >= 1."""
    return all(seq_le(shift(x, n), x) for n in range(1, n_tails(x) + 1))


def is_shift_minimal(x: EPSeq) -> bool:
    """sigma^n(x) >= x for all n >= 1."""
    return all(seq_ge(shift(x, n), x) for n in range(1, n_tails(x) + 1))


# ---------------------------------------------------------------------------
# rational interval enclosures


@dataclass(frozen=True)
class RatInterval:
    """Closed rational interval [lo, hi]; the exact value lies inside."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise PreconditionError("interval endpoints out of order")

    @staticmethod
    def point(v) -> "RatInterval":
        f = Fraction(v)
        return RatInterval(f, f)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, v) -> bool:
        return self.lo <= v <= self.hi

    def __add__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo - other.hi, self.hi - other.lo)

    def union(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def max(self, other: "RatInterval") -> "RatInterval":
        """Enclosure of max(a, b) for a in self, b in other."""
        return RatInterval(max(self.lo, other.lo), max(self.hi, other.hi))

    def divide(self, other: "RatInterval") -> "RatInterval":
        """Self / other for other strictly positive."""
        if other.lo <= 0:
            raise PreconditionError("interval division needs a positive divisor")
        if self.lo < 0:
            raise PreconditionError("interval division implemented for nonnegative numerators")
        return RatInterval(self.lo / other.hi, self.hi / other.lo)

    def separated_below(self, other: "RatInterval") -> bool:
        """True when every value of self is < every value of other."""
        return self.hi < other.lo


# enclosure of log on (0, 4]: series ln x = 2 atanh((x-1)/(x+1)), with an
# explicit tail bound so both endpoints are certified
_LOG_ERR = Fraction(1, 10**32)


def _log_point(x: Fraction, err: Fraction) -> RatInterval:
    if x <= 0:
        raise PreconditionError("log of a nonpositive number")
    if x == 1:
        return RatInterval(Fraction(0), Fraction(0))
    if x < 1:
        inner = _log_point(1 / x, err)
        return RatInterval(-inner.hi, -inner.lo)
    # halve until x <= 2 so the series argument stays small
    halvings = 0
    ln2 = None
    while x > 2:
        x = x / 2
        halvings += 1
    if halvings:
        ln2 = _log_point(Fraction(2), err / (2 * halvings))
    z = (x - 1) / (x + 1)
    z2 = z * z
    total = Fraction(0)
    term = z
    k = 0
    while True:
        total += term / (2 * k + 1)
        term *= z2
        k += 1
        # remaining tail < term / ((2k+1) (1 - z^2))
        tail = term / ((2 * k + 1) * (1 - z2))
        if 2 * tail < err:
            break
    lo, hi = 2 * total, 2 * total + 2 * tail
    if halvings:
        lo += halvings * ln2.lo
        hi += halvings * ln2.hi
    return RatInterval(lo, hi)


def log_interval(x: RatInterval, err: Fraction = _LOG_ERR) -> RatInterval:
    """Certified enclosure of {log v : v in x}."""
    lo = _log_point(x.lo, err)
    hi = lo if x.hi == x.lo else _log_point(x.hi, err)
    return RatInterval(lo.lo, hi.hi)


def format_interval(x: RatInterval, places: int = 15):
    """Outward-rounded decimal strings (lo, hi); deterministic."""
    scale = 10**places
    lo_i = math.floor(x.lo * scale)
    hi_i = math.ceil(x.hi * scale)

    def render(v: int) -> str:
        sign = "-" if v < 0 else ""
        v = abs(v)
        whole, frac = divmod(v, scale)
        return "%s%d.%0*d" % (sign, whole, places, frac)

    return render(lo_i), render(hi_i)


# ---------------------------------------------------------------------------
# evaluation of pi_beta


def pi_beta_at(x: EPSeq, beta: Fraction) -> Fraction:
    """Exact value sum d_i beta^-i at a rational beta > 1."""
    if beta <= 1:
        raise PreconditionError("pi_beta needs beta > 1")
    t = 1 / Fraction(beta)
    p, q = x.pre, x.per
    head = Fraction(0)
    for c in reversed(p):
        head = (head + int(c)) * t
    body = Fraction(0)
    for c in reversed(q):
        body = (body + int(c)) * t
    return head + t ** len(p) * body / (1 - t ** len(q))


def pi_beta(x: EPSeq, beta) -> RatInterval:
    """Enclosure of pi_beta(x) over a rational beta enclosure.

    For fixed x the map beta -> pi_beta(x) is nonincreasing (digits are
    nonnegative), so the enclosure is [value at hi, value at lo].
    """
    if isinstance(beta, RatInterval):
        return RatInterval(pi_beta_at(x, beta.hi), pi_beta_at(x, beta.lo))
    return RatInterval.point(pi_beta_at(x, Fraction(beta)))
