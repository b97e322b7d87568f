"""Exact shuffle algebra on the two-letter alphabet {A, B}.

Words over {A, B} encode products of the differential forms dx/x
(letter A) and dx/(1-x) (letter B).  The iterated integral over [0, 1]
of the word

    A^(s1-1) B  A^(s2-1) B  ...  A^(sk-1) B

is the multiple zeta value zeta(s1, ..., sk), so identities in the
shuffle algebra of words translate verbatim into identities between
zeta values.  Everything in this module is exact: coefficients are
`fractions.Fraction`, words are immutable strings, and no floating
point is involved.

A word is *admissible* when it is nonempty, starts with A and ends
with B; equivalently its composition (s1, ..., sk) has s1 >= 2, which
is what makes the nested sum converge.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, Mapping

A = "A"
B = "B"

_LETTERS = frozenset((A, B))
_SWAP = str.maketrans(A + B, B + A)


class AdmissibilityError(ValueError):
    """The word or composition corresponds to a divergent zeta value."""


def _letters_of(w) -> str:
    if isinstance(w, Word):
        return w.letters
    return Word(w).letters


@total_ordering
class Word:
    """Immutable word over {A, B}, ordered lexicographically with A < B."""

    __slots__ = ("_letters",)

    def __init__(self, letters: str | Iterable[str] = ""):
        s = "".join(letters)
        if not _LETTERS.issuperset(s):
            bad = sorted(set(s) - _LETTERS)
            raise ValueError(f"invalid letters {bad}: words are built from 'A' and 'B' only")
        self._letters = s

    @property
    def letters(self) -> str:
        return self._letters

    @property
    def is_admissible(self) -> bool:
        s = self._letters
        return bool(s) and s[0] == A and s[-1] == B

    def reverse(self) -> "Word":
        return Word(self._letters[::-1])

    def tau(self) -> "Word":
        """Swap every A for B and vice versa (an involution)."""
        return Word(self._letters.translate(_SWAP))

    def repeat(self, k: int) -> "Word":
        """Concatenation of k copies; repeat(0) is the empty word."""
        if k < 0:
            raise ValueError("repeat count must be non-negative")
        return Word(self._letters * k)

    def to_composition(self) -> "Composition":
        """Exact inverse of Composition.to_word (admissible words only)."""
        if not self.is_admissible:
            raise AdmissibilityError(
                f"word {self._letters!r} is not admissible: it must start with A and end with B"
            )
        blocks = self._letters.split(B)[:-1]
        return Composition(len(block) + 1 for block in blocks)

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self._letters)

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self._letters + other._letters)

    def __pow__(self, k: int) -> "Word":
        return self.repeat(k)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self._letters == other._letters

    def __lt__(self, other: "Word") -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._letters < other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def __str__(self) -> str:
        return self._letters

    def __repr__(self) -> str:
        return f"Word({self._letters!r})"


@total_ordering
class Composition:
    """Argument string (s1, ..., sk) of a nested zeta sum.

    Each part is a positive integer; the composition is admissible
    (its zeta value converges) when s1 >= 2.  weight is the sum of the
    parts, depth their number.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int]):
        t = tuple(int(p) for p in parts)
        if not t:
            raise ValueError("a composition needs at least one part")
        if any(p < 1 for p in t):
            raise ValueError(f"composition parts must be positive, got {t}")
        self._parts = t

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def depth(self) -> int:
        return len(self._parts)

    @property
    def weight(self) -> int:
        return sum(self._parts)

    @property
    def is_admissible(self) -> bool:
        return self._parts[0] >= 2

    def to_word(self) -> Word:
        """The integral word A^(s1-1) B A^(s2-1) B ... A^(sk-1) B."""
        if not self.is_admissible:
            raise AdmissibilityError(
                f"zeta({self}) diverges: the leading argument must be at least 2"
            )
        return Word("".join(A * (p - 1) + B for p in self._parts))

    def dual(self) -> "Composition":
        """Reverse the integral word and swap letters; zeta is invariant under this."""
        return self.to_word().reverse().tau().to_composition()

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Composition) and self._parts == other._parts

    def __lt__(self, other: "Composition") -> bool:
        if not isinstance(other, Composition):
            return NotImplemented
        return self._parts < other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self._parts)

    def __repr__(self) -> str:
        return f"Composition({', '.join(str(p) for p in self._parts)})"


def _format_coeff(c: Fraction) -> str:
    return str(c)  # Fraction renders as "p" or "p/q", lowest terms, sign first


class WordPolynomial:
    """Finite rational linear combination of words, kept in canonical form.

    Canonical form means no zero coefficient is ever stored and all
    coefficients are `Fraction` in lowest terms; two polynomials are
    equal exactly when their term maps are.  The `*` operator is the
    shuffle product for two polynomials and plain scaling for a
    rational scalar.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[Word, Fraction] = {}
        for word, coeff in items:
            if not isinstance(word, Word):
                word = Word(word)
            c = data.get(word, 0) + Fraction(coeff)
            if c:
                data[word] = c
            else:
                data.pop(word, None)
        self._terms = data

    def items(self) -> list[tuple[Word, Fraction]]:
        """Terms as (word, coefficient) pairs in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def coefficient(self, word) -> Fraction:
        if not isinstance(word, Word):
            word = Word(word)
        return self._terms.get(word, Fraction(0))

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def as_zeta_combination(self) -> list[tuple[Fraction, "Composition"]]:
        """Translate each word into its composition, keeping coefficients.

        Requires every word to be admissible; the offending word is
        named otherwise.  Order follows the canonical word order.
        """
        out = []
        for word, coeff in self.items():
            if not word.is_admissible:
                raise AdmissibilityError(
                    f"term {word.letters!r} is not admissible; "
                    "the polynomial has no zeta interpretation"
                )
            out.append((coeff, word.to_composition()))
        return out

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, WordPolynomial) and self._terms == other._terms

    def __add__(self, other: "WordPolynomial") -> "WordPolynomial":
        if not isinstance(other, WordPolynomial):
            return NotImplemented
        data = dict(self._terms)
        for word, coeff in other._terms.items():
            c = data.get(word, 0) + coeff
            if c:
                data[word] = c
            else:
                data.pop(word, None)
        out = WordPolynomial()
        out._terms = data
        return out

    def __sub__(self, other: "WordPolynomial") -> "WordPolynomial":
        return self + (-1) * other

    def __neg__(self) -> "WordPolynomial":
        return (-1) * self

    def __mul__(self, other):
        if isinstance(other, WordPolynomial):
            return shuffle_poly(self, other)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            out = WordPolynomial()
            if c:
                out._terms = {w: c * v for w, v in self._terms.items()}
            return out
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for word, coeff in self.items():
            body = _format_coeff(abs(coeff))
            if len(word):
                body += f"*{word.letters}"
            if not pieces:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"WordPolynomial<{self}>"

    def to_json(self) -> list[dict]:
        """JSON form: one {"word", "num", "den"} object per term, canonical order."""
        return [
            {"word": w.letters, "num": str(c.numerator), "den": str(c.denominator)}
            for w, c in self.items()
        ]

    @classmethod
    def from_json(cls, terms: Iterable[Mapping]) -> "WordPolynomial":
        return cls(
            (Word(t["word"]), Fraction(int(t["num"]), int(t["den"]))) for t in terms
        )


def shuffle_words(u, v) -> WordPolynomial:
    """Shuffle product of two words: all order-preserving interleavings.

    The total coefficient mass is binomial(|u|+|v|, |u|) and every term
    has length |u|+|v|.  Computed with the suffix recursion

        xu' sh yv' = x (u' sh yv') + y (xu' sh v')

    memoised on suffix pairs, which is equivalent to summing over the
    interleaving permutations without enumerating them one by one.
    """
    a, b = _letters_of(u), _letters_of(v)
    memo: dict[tuple[int, int], dict[str, int]] = {}

    def rec(i: int, j: int) -> dict[str, int]:
        if i == len(a):
            return {b[j:]: 1}
        if j == len(b):
            return {a[i:]: 1}
        key = (i, j)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out: dict[str, int] = {}
        for w, c in rec(i + 1, j).items():
            w = a[i] + w
            out[w] = out.get(w, 0) + c
        for w, c in rec(i, j + 1).items():
            w = b[j] + w
            out[w] = out.get(w, 0) + c
        memo[key] = out
        return out

    return WordPolynomial((Word(w), Fraction(c)) for w, c in rec(0, 0).items())


def shuffle_poly(p: WordPolynomial, q: WordPolynomial) -> WordPolynomial:
    """Bilinear extension of the shuffle product to polynomials."""
    acc: dict[Word, Fraction] = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            scale = c1 * c2
            for w, m in shuffle_words(w1, w2)._terms.items():
                c = acc.get(w, 0) + scale * m
                if c:
                    acc[w] = c
                else:
                    acc.pop(w, None)
    out = WordPolynomial()
    out._terms = acc
    return out


def admissible_compositions(weight: int) -> Iterator[Composition]:
    """All admissible compositions of the given weight, in lexicographic order."""
    if weight < 2:
        return
    def rest(total):
        if total == 0:
            yield ()
            return
        for part in range(1, total + 1):
            for tail in rest(total - part):
                yield (part,) + tail
    for first in range(2, weight + 1):
        for tail in rest(weight - first):
            yield Composition((first,) + tail)
