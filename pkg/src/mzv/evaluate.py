"""Arbitrary-precision numerical evaluation of multiple zeta values.

The evaluator computes the iterated integral of an admissible word by
splitting every integration variable's range at 1/2 (the Hoelder
convolution): for w = x1...xl,

    zeta(w) = sum_{j=0}^{l}  Li(x_{j+1}...x_l; 1/2) * Li(tau(x_j)...tau(x_1); 1/2),

where tau swaps the letters and the empty factor is 1.  Each factor is
a power series sum_{m>=1} c_m 2^(-m) whose coefficients obey a short
recursion (prepending A divides c_m by m, prepending B averages the
previous coefficients), with |c_m| <= 1 throughout.  Truncating after N
terms therefore leaves a tail below 2^(-N), so a couple of hundred
digits cost only a few thousand terms per suffix.

Precision handling is explicit: every public operation takes a
PrecisionContext and returns a RealValue that records the digits it was
computed at.  Internally a word of weight w is evaluated with
target + 20 + w working digits, which over-provisions for the l+1
products and O(N*l) series operations.  Identity checks return the
absolute residual as a number; deciding pass/fail is the caller's job.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from mpmath import mp, mpf

from .words import AdmissibilityError, B, Composition, Word, _letters_of

_LOG2_10 = math.log2(10)


class PrecisionContext:
    """Requested decimal precision: target digits plus guard digits."""

    __slots__ = ("target_digits", "working_digits")

    def __init__(self, target_digits: int, working_digits: int | None = None):
        target = int(target_digits)
        if target < 1:
            raise ValueError("target_digits must be positive")
        working = target + 20 if working_digits is None else int(working_digits)
        if working < target + 20:
            raise ValueError("working_digits must leave at least 20 guard digits")
        self.target_digits = target
        self.working_digits = working

    def working_for(self, weight: int) -> int:
        """Working digits for a word of the given weight; the guard grows with weight."""
        return max(self.working_digits, self.target_digits + 20 + weight)

    def __repr__(self) -> str:
        return f"PrecisionContext(target_digits={self.target_digits}, working_digits={self.working_digits})"


@dataclass(frozen=True, eq=False)
class RealValue:
    """An arbitrary-precision real together with the digits it was computed at.

    Two RealValues are never compared with ==; any comparison must go
    through an explicit tolerance on the difference of .value.
    """

    value: mpf
    digits: int

    def __float__(self) -> float:
        return float(self.value)

    def to_str(self, digits: int | None = None) -> str:
        n = self.digits if digits is None else digits
        with mp.workdps(max(self.digits, 15)):
            return mp.nstr(self.value, n, strip_zeros=False)

    def __repr__(self) -> str:
        with mp.workdps(max(self.digits, 15)):
            head = mp.nstr(self.value, 12)
        return f"RealValue({head}..., digits={self.digits})"


@dataclass(frozen=True)
class InsertionVector:
    """Odd-length tuple (m_0, ..., m_{2n}) of 2-insertion counts.

    Encodes the composition obtained from the string {3,1}^n by
    inserting m_j twos after its j-th element (m_0 of them in front),
    so the value has weight 4n + 2*sum(m) and depth 2n + sum(m).
    """

    slots: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        t = tuple(int(e) for e in entries)
        if len(t) % 2 == 0 or not t:
            raise ValueError(f"insertion vectors have odd length >= 1, got {t}")
        if any(e < 0 for e in t):
            raise ValueError(f"insertion counts must be non-negative, got {t}")
        object.__setattr__(self, "slots", t)

    @property
    def n(self) -> int:
        return (len(self.slots) - 1) // 2

    @property
    def total(self) -> int:
        return sum(self.slots)

    @property
    def weight(self) -> int:
        return 4 * self.n + 2 * self.total

    @property
    def depth(self) -> int:
        return 2 * self.n + self.total

    def rotated(self, j: int) -> "InsertionVector":
        """Cyclic shift moving the last j entries to the front."""
        k = j % len(self.slots)
        return InsertionVector(self.slots[-k:] + self.slots[:-k]) if k else self

    def dual(self) -> "InsertionVector":
        """Slot reversal; the value is invariant under it by zeta duality."""
        return InsertionVector(self.slots[::-1])

    def composition_parts(self) -> tuple[int, ...]:
        parts: list[int] = [2] * self.slots[0]
        for i in range(self.n):
            parts += [3] + [2] * self.slots[2 * i + 1] + [1] + [2] * self.slots[2 * i + 2]
        return tuple(parts)

    def composition(self) -> Composition | None:
        """The encoded composition, or None for the empty one (n = 0, m_0 = 0)."""
        parts = self.composition_parts()
        return Composition(parts) if parts else None

    def __len__(self) -> int:
        return len(self.slots)

    def __iter__(self) -> Iterator[int]:
        return iter(self.slots)

    def __lt__(self, other: "InsertionVector") -> bool:
        return self.slots < other.slots

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.slots)


def insertion_vectors(n: int, total: int) -> Iterator[InsertionVector]:
    """All insertion vectors of length 2n+1 summing to `total`, lexicographically."""
    if n < 0 or total < 0:
        raise ValueError("n and total must be non-negative")

    def gen(slots: int, left: int):
        if slots == 1:
            yield (left,)
            return
        for first in range(left + 1):
            for rest in gen(slots - 1, left - first):
                yield (first,) + rest

    for t in gen(2 * n + 1, total):
        yield InsertionVector(t)


def _num_terms(working_digits: int) -> int:
    # tail <= 2^-N below the working resolution
    return math.ceil((working_digits + 5) * _LOG2_10)


def _half_series_values(letters: str, nterms: int) -> list[mpf]:
    """Values at 1/2 of the iterated-integral series of every suffix of `letters`.

    Returns vals with vals[k] = Li(last k letters; 1/2) and vals[0] = 1
    (empty product).  `letters` must end with B, which every processed
    suffix then shares, so each series converges geometrically.
    """
    one = mpf(1)
    zero = mpf(0)
    half = mpf("0.5")
    inv = [one] * (nterms + 1)
    for m in range(2, nterms + 1):
        inv[m] = one / m
    c = [zero] * (nterms + 1)
    c[0] = one
    vals = [one]
    for x in reversed(letters):
        if x == B:
            # c_m <- (c_0 + ... + c_{m-1}) / m
            acc = c[0]
            for m in range(1, nterms + 1):
                old = c[m]
                c[m] = acc * inv[m]
                acc += old
        else:
            # c_m <- c_m / m
            for m in range(1, nterms + 1):
                c[m] *= inv[m]
        c[0] = zero
        s = zero
        for m in range(nterms, 0, -1):
            s = (s + c[m]) * half
        vals.append(s)
    return vals


def li_half(w, ctx: PrecisionContext) -> RealValue:
    """Iterated integral of the word over [0, 1/2].

    The word must be nonempty and end with B; otherwise the innermost
    integral already diverges and the series is meaningless.  Absolute
    error is below the working resolution (tail 2^-N plus rounding).
    """
    letters = _letters_of(w)
    if not letters or letters[-1] != B:
        raise AdmissibilityError(
            f"series for {letters!r} at 1/2 diverges: the word must be nonempty and end with B"
        )
    working = ctx.working_digits
    with mp.workdps(working):
        value = _half_series_values(letters, _num_terms(working))[-1]
    return RealValue(value, working)


@lru_cache(maxsize=None)
def _holder_value(letters: str, working_digits: int) -> mpf:
    # pure function of its arguments; cached because identity sweeps
    # revisit the same words many times
    with mp.workdps(working_digits):
        nterms = _num_terms(working_digits)
        tails = _half_series_values(letters, nterms)
        swapped = Word(letters).reverse().tau().letters
        heads = _half_series_values(swapped, nterms)
        l = len(letters)
        value = mp.fsum(tails[l - j] * heads[j] for j in range(l + 1))
    return value


def zeta_word(w, ctx: PrecisionContext) -> RealValue:
    """Zeta value of an admissible word, via the split at 1/2.

    Every suffix of w ends with B and every reversed, letter-swapped
    prefix ends with tau(A) = B, so all factors satisfy li_half's
    precondition.  Absolute error is below 10^-target_digits.
    """
    word = w if isinstance(w, Word) else Word(w)
    if not word.is_admissible:
        raise AdmissibilityError(
            f"zeta of {word.letters!r} diverges: the word must start with A and end with B"
        )
    working = ctx.working_for(len(word))
    return RealValue(_holder_value(word.letters, working), working)


def zeta(s, ctx: PrecisionContext) -> RealValue:
    """Multiple zeta value of an admissible composition."""
    comp = s if isinstance(s, Composition) else Composition(s)
    return zeta_word(comp.to_word(), ctx)


def zeta_two_power(r: int, ctx: PrecisionContext) -> RealValue:
    """Closed form zeta({2}^r) = pi^(2r) / (2r+1)!; returns 1 for r = 0."""
    if r < 0:
        raise ValueError("r must be non-negative")
    working = ctx.working_digits
    with mp.workdps(working):
        value = mp.pi ** (2 * r) / math.factorial(2 * r + 1)
    return RealValue(value, working)


def zeta_insertion(v, ctx: PrecisionContext) -> RealValue:
    """Value of the composition encoded by an insertion vector.

    The leading argument is 2 or 3, so the value always converges; the
    degenerate empty composition (n = 0, m_0 = 0) is the empty product 1.
    """
    vec = v if isinstance(v, InsertionVector) else InsertionVector(v)
    parts = vec.composition_parts()
    if not parts:
        return RealValue(mpf(1), ctx.working_digits)
    return zeta(Composition(parts), ctx)


def zagier_residual(n: int, ctx: PrecisionContext) -> RealValue:
    """|zeta({3,1}^n) - 2 pi^(4n) / (4n+2)!|."""
    if n < 1:
        raise ValueError("n must be positive")
    working = ctx.working_for(4 * n)
    lhs = zeta(Composition((3, 1) * n), ctx)
    with mp.workdps(working):
        rhs = 2 * mp.pi ** (4 * n) / math.factorial(4 * n + 2)
        res = abs(lhs.value - rhs)
    return RealValue(res, working)


def dressed_residual(n: int, ctx: PrecisionContext) -> RealValue:
    """|sum over single-2 insertions into {3,1}^n of zeta - pi^(4n+2)/(4n+3)!|.

    The 2n+1 insertion positions are exactly the weight-1 insertion
    vectors of length 2n+1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    slots = 2 * n + 1
    working = ctx.working_for(4 * n + 2)
    values = [
        zeta_insertion(InsertionVector(tuple(int(i == k) for i in range(slots))), ctx)
        for k in range(slots)
    ]
    with mp.workdps(working):
        total = mp.fsum(v.value for v in values)
        rhs = mp.pi ** (4 * n + 2) / math.factorial(4 * n + 3)
        res = abs(total - rhs)
    return RealValue(res, working)


def cyclic_sum_residual(v, ctx: PrecisionContext) -> RealValue:
    """Residual of the cyclic-insertion identity for one insertion vector.

    |sum_{j=0}^{2n} zeta_insertion(rotated by j) - pi^w / (w+1)!| with
    w = 4n + 2*sum(m).  Small (below roughly 10^-(target-5)) exactly
    when the conjectured identity holds at this precision.
    """
    vec = v if isinstance(v, InsertionVector) else InsertionVector(v)
    working = ctx.working_for(vec.weight)
    values = [zeta_insertion(vec.rotated(j), ctx) for j in range(len(vec))]
    with mp.workdps(working):
        total = mp.fsum(val.value for val in values)
        rhs = mp.pi ** vec.weight / math.factorial(vec.weight + 1)
        res = abs(total - rhs)
    return RealValue(res, working)


def insertion_swap_residual(
    a1: int, a2: int, a3: int, b1: int, b2: int, ctx: PrecisionContext
) -> RealValue:
    """Residual of the conjectured swap identity on 5-slot insertion vectors.

    The sum of zeta_insertion over the three cyclic rotations of the
    a-entries of (a1, b1, a2, b2, a3) is conjectured to be invariant
    under exchanging b1 and b2; returns |lhs - rhs|.
    """
    for e in (a1, a2, a3, b1, b2):
        if e < 0:
            raise ValueError("all insertion counts must be non-negative")
    weight = 8 + 2 * (a1 + a2 + a3 + b1 + b2)
    working = ctx.working_for(weight)

    def triple(x, y, z, u, v):
        return [
            zeta_insertion(InsertionVector((x, u, y, v, z)), ctx),
            zeta_insertion(InsertionVector((y, u, z, v, x)), ctx),
            zeta_insertion(InsertionVector((z, u, x, v, y)), ctx),
        ]

    lhs = triple(a1, a2, a3, b1, b2)
    rhs = triple(a1, a2, a3, b2, b1)
    with mp.workdps(working):
        res = abs(mp.fsum(v.value for v in lhs) - mp.fsum(v.value for v in rhs))
    return RealValue(res, working)
