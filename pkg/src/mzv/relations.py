"""Integer-relation detection and the insertion-vector relation scan.

find_relation implements PSLQ (Ferguson-Bailey-Arno, with the classical
gamma = 2/sqrt(3)) on mpmath reals.  Unlike a bare library call, it
reports an exclusion bound when no relation is found: the PSLQ
invariant guarantees every integer relation has 2-norm at least
1/max_j |H_jj|, which divided by sqrt(n) bounds the max-norm, so the
search can certify "no relation with coefficients up to max_norm".

The relation scan evaluates the vector of insertion zeta values of a
given shape (deduplicated under duality, with zeta({2}^(2n+M))
appended), then counts linearly independent relations by deflation:
find one, drop the entry carrying its largest coefficient, repeat.
Found relations are re-verified at doubled precision; an unstable one
raises PrecisionError instead of being counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from mpmath import mp, mpf, mpmathify

from .evaluate import (
    InsertionVector,
    PrecisionContext,
    RealValue,
    insertion_vectors,
    zeta_insertion,
    zeta_two_power,
)

DEFAULT_MAX_NORM = 10**6


class PrecisionError(ArithmeticError):
    """The working precision cannot support the requested detection."""


@dataclass(frozen=True)
class RelationSearch:
    """Outcome of one PSLQ run.

    relation is None when no acceptable relation was found; bound then
    certifies that any integer relation has some |a_i| > bound.  When a
    relation is returned it is canonical (gcd 1, first nonzero entry
    positive) and satisfies the residual contract it was checked
    against.
    """

    relation: tuple[int, ...] | None
    bound: float
    steps: int


def canonical_relation(coeffs) -> tuple[int, ...]:
    """Scale to gcd 1 and make the first nonzero coefficient positive."""
    t = tuple(int(c) for c in coeffs)
    g = 0
    for c in t:
        g = gcd(g, abs(c))
    if g == 0:
        raise ValueError("a relation needs at least one nonzero coefficient")
    t = tuple(c // g for c in t)
    lead = next(c for c in t if c)
    return t if lead > 0 else tuple(-c for c in t)


def _as_mpf_values(values, min_digits: int) -> list[mpf]:
    out = []
    for v in values:
        if isinstance(v, RealValue):
            if v.digits < min_digits:
                raise PrecisionError(
                    f"value carries {v.digits} digits but the context requires {min_digits}"
                )
            out.append(v.value)
        else:
            out.append(mpmathify(v))
    return out


def find_relation(
    values,
    max_norm: int,
    ctx: PrecisionContext,
    max_steps: int | None = None,
) -> RelationSearch:
    """PSLQ search for an integer relation among `values`.

    Accepts RealValues (which must carry at least ctx.working_digits)
    or plain numbers (treated as exact).  A returned relation a has
    max|a_i| <= max_norm and |sum a_i z_i| < 10^-(target-10) * max|z_i|.
    Otherwise relation is None and bound certifies the absence of any
    relation with all |a_i| <= bound; the loop runs until that bound
    clears max_norm.
    """
    if len(values) < 2:
        raise ValueError("need at least two values to search for a relation")
    if max_norm < 1:
        raise ValueError("max_norm must be positive")
    working = ctx.working_digits
    x = _as_mpf_values(values, working)
    n = len(x)
    if max_steps is None:
        max_steps = 10000 + 500 * n
    # extra digits cover drift in H and y over thousands of iterations
    with mp.workdps(working + 15):
        if min(abs(xi) for xi in x) == 0:
            raise ValueError("PSLQ requires nonzero values")
        threshold = mpf(10) ** (-(ctx.target_digits - 10)) * max(abs(xi) for xi in x)
        return _pslq(x, max_norm, threshold, max_steps)


def _pslq(x: list[mpf], max_norm: int, res_threshold: mpf, max_steps: int) -> RelationSearch:
    n = len(x)
    gamma = mp.sqrt(mpf(4) / 3)
    root_n = mp.sqrt(n)

    # partial norms s_k = sqrt(sum_{j>=k} x_j^2), then normalise by s_0
    s = [mp.zero] * n
    acc = mp.zero
    for k in range(n - 1, -1, -1):
        acc += x[k] ** 2
        s[k] = mp.sqrt(acc)
    big = s[0]
    y = [xi / big for xi in x]
    s = [sk / big for sk in s]
    y_tol = res_threshold / big  # |y_i| * big is the residual of column i

    H = [[mp.zero] * (n - 1) for _ in range(n)]
    for i in range(n):
        if i < n - 1:
            H[i][i] = s[i + 1] / s[i]
        for j in range(i):
            H[i][j] = -y[i] * y[j] / (s[j] * s[j + 1])

    # B accumulates the unimodular column operations exactly
    Bm = [[int(i == j) for j in range(n)] for i in range(n)]

    def reduce_row(i: int, j_top: int) -> None:
        for j in range(j_top, -1, -1):
            hjj = H[j][j]
            if not hjj:
                continue
            t = int(mp.nint(H[i][j] / hjj))
            if not t:
                continue
            y[j] += t * y[i]
            for k in range(j + 1):
                H[i][k] -= t * H[j][k]
            for k in range(n):
                Bm[k][j] += t * Bm[k][i]

    for i in range(1, n):
        reduce_row(i, i - 1)

    bound_inf = 1.0
    for step in range(1, max_steps + 1):
        # pivot row maximising gamma^i |H_ii|
        m = 0
        best = mp.zero
        g = mpf(1)
        for i in range(n - 1):
            g *= gamma
            size = g * abs(H[i][i])
            if size > best:
                best = size
                m = i

        y[m], y[m + 1] = y[m + 1], y[m]
        H[m], H[m + 1] = H[m + 1], H[m]
        for row in Bm:
            row[m], row[m + 1] = row[m + 1], row[m]

        if m < n - 2:
            t0 = mp.hypot(H[m][m], H[m][m + 1])
            if not t0:
                raise PrecisionError("PSLQ pivot collapsed; increase the working precision")
            t1 = H[m][m] / t0
            t2 = H[m][m + 1] / t0
            for i in range(m, n):
                h1, h2 = H[i][m], H[i][m + 1]
                H[i][m] = t1 * h1 + t2 * h2
                H[i][m + 1] = -t2 * h1 + t1 * h2

        for i in range(m + 1, n):
            reduce_row(i, min(i - 1, m + 1))

        # detection: a column whose y entry is below the residual tolerance
        i_min = min(range(n), key=lambda i: abs(y[i]))
        if abs(y[i_min]) < y_tol:
            vec = [Bm[k][i_min] for k in range(n)]
            if any(vec) and max(abs(c) for c in vec) <= max_norm:
                residual = abs(mp.fsum(c * xi for c, xi in zip(vec, x)))
                if residual < res_threshold:
                    return RelationSearch(canonical_relation(vec), bound_inf, step)
            # tiny y with oversized or failing coefficients: keep iterating

        h_max = max(abs(H[j][j]) for j in range(n - 1))
        if not h_max:
            raise PrecisionError("PSLQ exhausted the working precision")
        bound_inf = float(1 / (h_max * root_n))
        if bound_inf > max_norm:
            return RelationSearch(None, bound_inf, step)

    raise PrecisionError(
        f"PSLQ reached {max_steps} steps without a conclusion; "
        "increase the precision or max_steps"
    )


@dataclass(frozen=True)
class ZetaFamily:
    """The candidate vector scanned for relations at a given shape (n, total).

    insertions lists the length-(2n+1) insertion vectors summing to
    `total`, in lexicographic order, keeping exactly one of each dual
    pair (the lexicographically smaller); the final slot is the value
    zeta({2}^(2n+total)), identified by tail_label.
    """

    n: int
    total: int
    insertions: tuple[InsertionVector, ...]
    tail_label: str

    def labels(self) -> list[str]:
        return [str(v) for v in self.insertions] + [self.tail_label]

    def __len__(self) -> int:
        return len(self.insertions) + 1


def build_family(n: int, total: int) -> ZetaFamily:
    """Duality-deduplicated insertion vectors of shape (n, total) plus the tail value."""
    if n < 1:
        raise ValueError("n must be positive")
    if total < 0:
        raise ValueError("total must be non-negative")
    kept = tuple(
        v for v in insertion_vectors(n, total) if v.slots <= v.slots[::-1]
    )
    return ZetaFamily(n, total, kept, f"zeta2^{2 * n + total}")


def evaluate_family(family: ZetaFamily, ctx: PrecisionContext) -> list[RealValue]:
    """Numerical values of every family entry, the appended tail last."""
    values = [zeta_insertion(v, ctx) for v in family.insertions]
    values.append(zeta_two_power(2 * family.n + family.total, ctx))
    return values


def deflate_relations(
    values, max_norm: int, ctx: PrecisionContext
) -> list[tuple[int, ...]]:
    """All linearly independent relations among `values`, by deflation.

    After each find the entry with the largest absolute coefficient is
    eliminated (its value is pinned by the relation), so successive
    finds are independent.  Returned relations are re-embedded on the
    full index set, in the order found.
    """
    active = list(range(len(values)))
    relations: list[tuple[int, ...]] = []
    while len(active) >= 2:
        found = find_relation([values[i] for i in active], max_norm, ctx)
        if found.relation is None:
            break
        rel = found.relation
        full = [0] * len(values)
        for pos, idx in enumerate(active):
            full[idx] = rel[pos]
        relations.append(tuple(full))
        drop = max(range(len(rel)), key=lambda pos: abs(rel[pos]))
        del active[drop]
    return relations


def default_scan_context(vector_length: int) -> PrecisionContext:
    """Precision policy for relation scans: 20 digits per entry, at least 300."""
    return PrecisionContext(max(300, 20 * vector_length))


@dataclass(frozen=True)
class RelationScan:
    family: ZetaFamily
    relations: tuple[tuple[int, ...], ...]
    digits: int
    max_norm: int

    @property
    def count(self) -> int:
        return len(self.relations)

    def to_json_dict(self) -> dict:
        return {
            "n": self.family.n,
            "M": self.family.total,
            "entries": self.family.labels(),
            "relations": [list(r) for r in self.relations],
            "digits": self.digits,
            "max_norm": self.max_norm,
        }


def relation_scan(
    n: int,
    total: int,
    ctx: PrecisionContext | None = None,
    max_norm: int = DEFAULT_MAX_NORM,
    check_stability: bool = True,
) -> RelationScan:
    """Find all independent relations for the (n, total) family.

    With check_stability, every found relation is re-verified on values
    recomputed at doubled target precision; a relation whose residual
    then exceeds the original tolerance is a precision artifact and
    raises PrecisionError (advising a higher-precision rerun).
    """
    family = build_family(n, total)
    if ctx is None:
        ctx = default_scan_context(len(family))
    values = evaluate_family(family, ctx)
    relations = deflate_relations(values, max_norm, ctx)
    if check_stability and relations:
        double = PrecisionContext(2 * ctx.target_digits)
        revalues = evaluate_family(family, double)
        with mp.workdps(double.working_digits):
            limit = mpf(10) ** (-(ctx.target_digits - 10)) * max(
                abs(v.value) for v in revalues
            )
            for rel in relations:
                residual = abs(mp.fsum(c * v.value for c, v in zip(rel, revalues)))
                if residual >= limit:
                    raise PrecisionError(
                        f"relation {rel} is unstable under precision doubling "
                        f"(residual {mp.nstr(residual, 3)}); rerun with more digits"
                    )
    return RelationScan(family, tuple(relations), ctx.target_digits, max_norm)


def relation_count(
    n: int,
    total: int,
    ctx: PrecisionContext | None = None,
    max_norm: int = DEFAULT_MAX_NORM,
) -> int:
    """Number of linearly independent integer relations for the (n, total) family."""
    return relation_scan(n, total, ctx, max_norm).count
