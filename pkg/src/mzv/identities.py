"""Exact identities in the {A, B} shuffle algebra and related counts.

The centrepiece is the closed form for shuffles of AB-powers: every
word occurring in (AB)^p sh (AB)^q splits into p+q consecutive blocks
of length two, and its multiplicity depends only on how many blocks
carry a doubled letter.  Alternating combinations of those closed
forms collapse, via three factorial identities, to the single words
behind the zeta({3,1}^n) evaluation and its dressed-with-2 variant.
All arithmetic is exact (integers and `Fraction`).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, factorial, gcd

from .words import Composition, Word, WordPolynomial, shuffle_words

_AB = Word("AB")
_AABB = Word("AABB")
_AABABB = Word("AABABB")


def _sign(r: int) -> int:
    return -1 if r % 2 else 1


def aa_word_set(blocks: int, doubles: int) -> frozenset[Word]:
    """Words from shuffles of AB-powers containing the factor AA exactly `doubles` times.

    Any such word of length 2*blocks splits into consecutive length-2
    blocks; the `doubles` AA blocks are interlaced with as many BB
    blocks, and choosing the positions of those 2*doubles blocks fixes
    the rest (AB outside an AA..BB span, BA inside).  Hence the set has
    binomial(blocks, 2*doubles) elements; it is empty for
    doubles > blocks/2.
    """
    if blocks < 0 or doubles < 0:
        raise ValueError("blocks and doubles must be non-negative")
    words = []
    for chosen in combinations(range(blocks), 2 * doubles):
        picked = set(chosen)
        inside = False
        pieces = []
        for b in range(blocks):
            if b in picked:
                pieces.append("AA" if not inside else "BB")
                inside = not inside
            else:
                pieces.append("BA" if inside else "AB")
        words.append(Word("".join(pieces)))
    return frozenset(words)


def aa_word_sum(blocks: int, doubles: int) -> WordPolynomial:
    """Coefficient-1 sum of aa_word_set(blocks, doubles)."""
    return WordPolynomial((w, 1) for w in aa_word_set(blocks, doubles))


def ab_power_shuffle(p: int, q: int) -> WordPolynomial:
    """Closed form of (AB)^p sh (AB)^q.

    Equals sum over j of 4^j * binomial(p+q-2j, p-j) * aa_word_sum(p+q, j):
    each word with j doubled-A blocks arises from 2^j * 2^j colourings of
    its AA/BB blocks and binomial(p+q-2j, p-j) colourings of its single
    A's.
    """
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")
    total = WordPolynomial()
    for j in range(min(p, q) + 1):
        total = total + (4**j * comb(p + q - 2 * j, p - j)) * aa_word_sum(p + q, j)
    return total


def zagier_factorial_identity(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_{r=-n}^{n} (-1)^r / ((2n+2r+1)!(2n-2r+1)!) = 2^(2n+1)/(4n+2)!."""
    if n < 0:
        raise ValueError("n must be non-negative")
    lhs = sum(
        Fraction(_sign(r), factorial(2 * n + 2 * r + 1) * factorial(2 * n - 2 * r + 1))
        for r in range(-n, n + 1)
    )
    rhs = Fraction(2 ** (2 * n + 1), factorial(4 * n + 2))
    return lhs, rhs


def dressed_factorial_identity(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_{r=0}^{n} (-1)^r (2r+1) / ((2n+1-2r)!(2n+3+2r)!) = 4^n/(4n+3)!."""
    if n < 0:
        raise ValueError("n must be non-negative")
    lhs = sum(
        Fraction(
            _sign(r) * (2 * r + 1),
            factorial(2 * n + 1 - 2 * r) * factorial(2 * n + 3 + 2 * r),
        )
        for r in range(n + 1)
    )
    rhs = Fraction(4**n, factorial(4 * n + 3))
    return lhs, rhs


def signed_binomial_sum(n: int) -> int:
    """sum_{r=0}^{n} (-1)^r (2r+1) binomial(2n+1, n-r); equals 1 for n = 0, else 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum(_sign(r) * (2 * r + 1) * comb(2 * n + 1, n - r) for r in range(n + 1))


def zagier_shuffle_identity(n: int) -> tuple[WordPolynomial, WordPolynomial]:
    """Both sides of sum_{r=-n}^{n} (-1)^r (AB)^(n-r) sh (AB)^(n+r) = 4^n (AABB)^n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    lhs = WordPolynomial()
    for r in range(-n, n + 1):
        lhs = lhs + _sign(r) * shuffle_words(_AB ** (n - r), _AB ** (n + r))
    rhs = 4**n * WordPolynomial({_AABB ** n: 1})
    return lhs, rhs


def dressed_shuffle_identity(n: int) -> tuple[WordPolynomial, WordPolynomial]:
    """Both sides of the alternating odd-weighted shuffle identity.

    lhs = sum_{r=0}^{n} (-1)^r (2r+1) (AB)^(n-r) sh (AB)^(n+1+r); the
    right-hand side is 4^n times the sum of all words made of n AABB
    blocks with one extra AB inserted at a block boundary or (as
    AABABB) inside a block.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    lhs = WordPolynomial()
    for r in range(n + 1):
        lhs = lhs + (_sign(r) * (2 * r + 1)) * shuffle_words(
            _AB ** (n - r), _AB ** (n + 1 + r)
        )
    terms = [(_AABB ** r) + _AB + (_AABB ** (n - r)) for r in range(n + 1)]
    terms += [(_AABB ** (r - 1)) + _AABABB + (_AABB ** (n - r)) for r in range(1, n + 1)]
    rhs = 4**n * WordPolynomial((w, 1) for w in terms)
    return lhs, rhs


def euler_decomposition(s: int, t: int) -> list[tuple[int, Composition]]:
    """Euler's decomposition of zeta(s)zeta(t) into depth-2 values (s, t >= 2).

    Returns the merged list of (multiplicity, (s+t-j, j)) terms

        sum_{j=1}^{s} C(s+t-j-1, s-j) zeta(s+t-j, j)
      + sum_{j=1}^{t} C(s+t-j-1, t-j) zeta(s+t-j, j)

    ordered like the corresponding integral words, so the list compares
    directly against the shuffle expansion of A^(s-1)B sh A^(t-1)B.
    """
    if s < 2 or t < 2:
        raise ValueError("the decomposition requires s >= 2 and t >= 2")
    acc: dict[Composition, int] = {}
    for top, j_max in ((s, s), (t, t)):
        for j in range(1, j_max + 1):
            comp = Composition((s + t - j, j))
            acc[comp] = acc.get(comp, 0) + comb(s + t - j - 1, top - j)
    return [(c, comp) for comp, c in sorted(acc.items(), key=lambda kv: kv[0].to_word())]


def _compositions_into(total: int, parts: int) -> int:
    """Number of ways to write total as an ordered sum of `parts` non-negatives."""
    if parts < 1:
        return 1 if total == 0 else 0
    return comb(total + parts - 1, parts - 1)


def orbit_count(n: int, total: int) -> int:
    """Orbits of the dihedral group on (2n+1)-slot compositions of `total`.

    Burnside average over the 2(2n+1) symmetries of the odd cycle: a
    rotation by d fixes the compositions that are constant on its
    gcd(d, 2n+1) cycles, and each reflection of an odd cycle fixes one
    slot and pairs the rest, so its fixed compositions are counted by
    summing over the parity-compatible value of the fixed slot.
    """
    if n < 0 or total < 0:
        raise ValueError("n and total must be non-negative")
    slots = 2 * n + 1
    fixed = 0
    for d in range(slots):
        g = gcd(d, slots)
        cycle_len = slots // g
        if total % cycle_len == 0:
            fixed += _compositions_into(total // cycle_len, g)
    reflection_fixed = sum(_compositions_into(k, n) for k in range(total // 2 + 1))
    fixed += slots * reflection_fixed
    assert fixed % (2 * slots) == 0
    return fixed // (2 * slots)
