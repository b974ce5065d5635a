"""Partitions, compositions, tableaux and permutations.

Everything here is immutable and built on plain tuples so that values can be
used directly as dictionary keys in the algebra code.  A permutation of
``{1..i}`` is the tuple of its images ``(w(1), ..., w(i))`` and products are
function composition: ``compose(u, v)(x) == u(v(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itperms
from itertools import product as _itproduct
from math import factorial, prod

Tableau = tuple[tuple[int, ...], ...]
Permutation = tuple[int, ...]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty partition plays the role of the index-0 element of the poset.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[j] < parts[j + 1] for j in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def index(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return "Partition(" + ",".join(map(str, self)) + ")"


EMPTY_PARTITION = Partition(())


class Composition(tuple):
    """A tuple of non-negative integers; zero parts are allowed."""

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"composition parts must be non-negative: {parts}")
        return super().__new__(cls, parts)

    @property
    def total(self) -> int:
        return sum(self)

    @property
    def n(self) -> int:
        return len(self)

    def blocks(self) -> list[tuple[int, ...]]:
        """Consecutive blocks ``b_1, b_2, ...`` of ``{1..total}``."""
        out, start = [], 1
        for part in self:
            out.append(tuple(range(start, start + part)))
            start += part
        return out

    def block_of(self) -> dict[int, int]:
        """Map each point to the (1-based) number of the block containing it."""
        return {x: j for j, blk in enumerate(self.blocks(), start=1) for x in blk}

    def __repr__(self) -> str:
        return "Composition(" + ",".join(map(str, self)) + ")"


# -- partitions ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _partitions(i: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if i == 0:
        return ((),)
    out = []
    for first in range(min(i, largest), 0, -1):
        for rest in _partitions(i - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(i: int) -> list[Partition]:
    """All partitions of ``i`` in reverse-lexicographic order; ``0`` gives ``[()]``."""
    if i < 0:
        raise ValueError("i must be non-negative")
    return [Partition(p) for p in _partitions(i, i)]


def compositions_of(r: int, n: int) -> list[Composition]:
    """All compositions of ``r`` with exactly ``n`` (possibly zero) parts."""
    if n == 0:
        return [Composition(())] if r == 0 else []

    def rec(remaining: int, slots: int):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    return [Composition(c) for c in rec(r, n)]


def dominance_geq(lam: Partition, mu: Partition) -> bool:
    """``lam`` dominates ``mu`` (both partitions of the same integer)."""
    if lam.index != mu.index:
        raise ValueError(f"dominance needs equal sizes: {lam} vs {mu}")
    a = b = 0
    for j in range(max(len(lam), len(mu))):
        a += lam[j] if j < len(lam) else 0
        b += mu[j] if j < len(mu) else 0
        if a < b:
            return False
    return True


def lambda_geq(lam: Partition, mu: Partition) -> bool:
    """Poset order on partitions of all sizes: smaller size is higher."""
    if lam.index != mu.index:
        return lam.index < mu.index
    return dominance_geq(lam, mu)


def lambda_gt(lam: Partition, mu: Partition) -> bool:
    return lam != mu and lambda_geq(lam, mu)


# -- tableaux -----------------------------------------------------------------


def canonical_tableau(shape: Partition) -> Tableau:
    """Row-by-row filling of ``shape`` with ``1..|shape|``."""
    rows, nxt = [], 1
    for part in shape:
        rows.append(tuple(range(nxt, nxt + part)))
        nxt += part
    return tuple(rows)


def reading_word(tab: Tableau) -> tuple[int, ...]:
    return tuple(x for row in tab for x in row)


def tableau_shape(tab: Tableau) -> Partition:
    return Partition(len(row) for row in tab)


@lru_cache(maxsize=None)
def _standard_tableaux(shape: tuple[int, ...]) -> tuple[Tableau, ...]:
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []
    # remove the box holding n: it must sit at the end of a row that is a corner
    for j, part in enumerate(shape):
        below = shape[j + 1] if j + 1 < len(shape) else 0
        if part > below:
            smaller = list(shape)
            smaller[j] -= 1
            smaller_t = tuple(x for x in smaller if x > 0)
            for tab in _standard_tableaux(smaller_t):
                rows = [list(row) for row in tab]
                if j < len(rows):
                    rows[j].append(n)
                else:
                    rows.append([n])
                out.append(tuple(tuple(row) for row in rows))
    out.sort(key=reading_word)
    return tuple(out)


def standard_tableaux(shape: Partition) -> list[Tableau]:
    """Standard tableaux of ``shape``, ordered by row-reading word."""
    return list(_standard_tableaux(tuple(shape)))


@lru_cache(maxsize=None)
def _semistandard(shape: tuple[int, ...], content: tuple[int, ...]) -> tuple[Tableau, ...]:
    # place the largest label last: its boxes form a horizontal strip at the rim
    labels = [j for j, c in enumerate(content, start=1) if c > 0]
    if not labels:
        return ((),) if sum(shape) == 0 else ()
    top = labels[-1]
    count = content[top - 1]
    reduced = list(content)
    reduced[top - 1] = 0
    reduced_t = tuple(reduced)
    out = []

    def strips(j: int, left: int, current: list[int]):
        if j == len(shape):
            if left == 0:
                yield tuple(current)
            return
        below = shape[j + 1] if j + 1 < len(shape) else 0
        # boxes removable from row j: bounded by the row below (strip condition)
        cap = min(left, shape[j] - below)
        for take in range(cap, -1, -1):
            current.append(take)
            yield from strips(j + 1, left - take, current)
            current.pop()

    for takes in strips(0, count, []):
        inner = tuple(x - t for x, t in zip(shape, takes))
        if any(inner[j] < inner[j + 1] for j in range(len(inner) - 1)):
            continue
        inner_t = tuple(x for x in inner if x > 0)
        for tab in _semistandard(inner_t, reduced_t):
            rows = [list(row) for row in tab]
            for j, take in enumerate(takes):
                if take:
                    while len(rows) <= j:
                        rows.append([])
                    rows[j].extend([top] * take)
            out.append(tuple(tuple(row) for row in rows))
    out.sort(key=reading_word)
    return tuple(out)


def semistandard_tableaux(shape: Partition, content) -> list[Tableau]:
    """Semistandard tableaux of ``shape`` in which label ``j`` appears ``content[j-1]`` times."""
    content = Composition(content)
    if content.total != sum(shape):
        raise ValueError(f"type {content} has weight {content.total}, shape {shape} has {sum(shape)}")
    return list(_semistandard(tuple(shape), tuple(content)))


def is_standard(tab: Tableau) -> bool:
    entries = sorted(reading_word(tab))
    if entries != list(range(1, len(entries) + 1)):
        return False
    return _rows_cols_ok(tab, strict_rows=True)


def is_semistandard(tab: Tableau) -> bool:
    return _rows_cols_ok(tab, strict_rows=False)


def _rows_cols_ok(tab: Tableau, strict_rows: bool) -> bool:
    for row in tab:
        for a, b in zip(row, row[1:]):
            if a > b or (strict_rows and a == b):
                return False
    for upper, lower in zip(tab, tab[1:]):
        if len(lower) > len(upper):
            return False
        if any(upper[c] >= lower[c] for c in range(len(lower))):
            return False
    return True


def weight_tableau(tab: Tableau, comp) -> Tableau:
    """Replace every entry ``x`` by the number of the ``comp``-block containing it."""
    where = Composition(comp).block_of()
    return tuple(tuple(where[x] for x in row) for row in tab)


# -- permutations -------------------------------------------------------------


def identity_perm(i: int) -> Permutation:
    return tuple(range(1, i + 1))


def compose(u, v) -> tuple[int, ...]:
    """``u o v`` for maps stored as image tuples; 0 is a fixed absorbing point."""
    return tuple(u[y - 1] if y else 0 for y in v)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for x, y in enumerate(w, start=1):
        out[y - 1] = x
    return tuple(out)


def all_permutations(i: int) -> list[Permutation]:
    return [tuple(p) for p in _itperms(range(1, i + 1))]


def is_permutation(w) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


@lru_cache(maxsize=None)
def _young_subgroup(comp: tuple[int, ...]) -> tuple[Permutation, ...]:
    blocks = Composition(comp).blocks()
    total = sum(comp)
    out = []
    for images in _itproduct(*[_itperms(blk) for blk in blocks]):
        w = [0] * total
        for blk, img in zip(blocks, images):
            for x, y in zip(blk, img):
                w[x - 1] = y
        out.append(tuple(w))
    out.sort()
    return tuple(out)


def young_subgroup(comp) -> list[Permutation]:
    """All permutations of ``{1..total}`` preserving each block of ``comp``."""
    return list(_young_subgroup(tuple(Composition(comp))))


def young_generators(comp) -> list[Permutation]:
    """Adjacent transpositions inside the blocks of ``comp``."""
    comp = Composition(comp)
    total = comp.total
    gens = []
    for blk in comp.blocks():
        for x in blk[:-1]:
            w = list(range(1, total + 1))
            w[x - 1], w[x] = x + 1, x
            gens.append(tuple(w))
    return gens


def young_order(comp) -> int:
    return prod(factorial(x) for x in comp)


def tableau_perm(tab: Tableau) -> Permutation:
    """The permutation sending each entry of the canonical tableau to the entry of ``tab``
    in the same box."""
    canon = canonical_tableau(tableau_shape(tab))
    w = [0] * sum(len(row) for row in tab)
    for crow, trow in zip(canon, tab):
        for a, b in zip(crow, trow):
            w[a - 1] = b
    return tuple(w)


# -- p-adic decomposition -----------------------------------------------------


def p_valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def k_p(lam: Partition, p: int) -> int:
    """Largest ``k`` with ``p**k`` dividing every part of ``lam``."""
    if len(lam) == 0:
        raise ValueError("k_p is undefined for the empty partition")
    return min(p_valuation(x, p) for x in lam)


def is_p_restricted(lam, p: int) -> bool:
    parts = tuple(lam) + (0,)
    return all(parts[j] - parts[j + 1] < p for j in range(len(parts) - 1))


def restricted_partitions(n: int, p: int) -> list[Partition]:
    return [lam for lam in partitions_of(n) if is_p_restricted(lam, p)]


@dataclass(frozen=True)
class PAdicDecomposition:
    """``n = sum(s_levels[j] * p**(m + j))`` with one p-restricted partition per level."""

    p: int
    m: int
    M: int
    s_levels: tuple[int, ...]
    restricted_parts: tuple[Partition, ...]

    @property
    def n(self) -> int:
        return sum(s * self.p ** (self.m + j) for j, s in enumerate(self.s_levels))


def _rows_from_column_counts(counts: list[int]) -> tuple[int, ...]:
    # counts[h-1] columns of height h  ->  row lengths
    rows = [sum(counts[h:]) for h in range(len(counts))]
    while rows and rows[-1] == 0:
        rows.pop()
    return tuple(rows)


def p_adic_decompose(lam: Partition, p: int) -> PAdicDecomposition:
    """Split ``lam`` level by level into p-restricted pieces scaled by powers of ``p``."""
    if len(lam) == 0:
        raise ValueError("cannot decompose the empty partition")
    levels: dict[int, Partition] = {}
    current = tuple(lam)
    while current:
        parts = current + (0,)
        deltas = [parts[j] - parts[j + 1] for j in range(len(current))]
        e = 0
        while p ** (e + 1) <= max(deltas):
            e += 1
        q = [d // p**e for d in deltas]
        rem = [d % p**e for d in deltas]
        levels[e] = Partition(_rows_from_column_counts(q))
        current = _rows_from_column_counts(rem)
    m, M = min(levels), max(levels)
    parts = tuple(levels.get(e, EMPTY_PARTITION) for e in range(m, M + 1))
    return PAdicDecomposition(
        p=p, m=m, M=M, s_levels=tuple(x.index for x in parts), restricted_parts=parts
    )


def p_adic_reconstruct(dec: PAdicDecomposition) -> Partition:
    """Inverse of :func:`p_adic_decompose`."""
    if not dec.s_levels or dec.s_levels[0] <= 0:
        raise ValueError("lowest level must be non-empty")
    rows: list[int] = []
    for j, (s, part) in enumerate(zip(dec.s_levels, dec.restricted_parts)):
        if part.index != s:
            raise ValueError(f"level {dec.m + j}: partition {part} is not of {s}")
        if not is_p_restricted(part, dec.p):
            raise ValueError(f"level {dec.m + j}: {part} is not {dec.p}-restricted")
        scale = dec.p ** (dec.m + j)
        for row, x in enumerate(part):
            if row == len(rows):
                rows.append(0)
            rows[row] += x * scale
    return Partition(rows)


def set_partitions(items) -> list[list[tuple[int, ...]]]:
    """All set partitions of ``items`` (blocks as sorted tuples)."""
    items = list(items)
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    out = []
    for smaller in set_partitions(rest):
        out.append([(first,)] + smaller)
        for j in range(len(smaller)):
            merged = tuple(sorted((first,) + smaller[j]))
            out.append(smaller[:j] + [merged] + smaller[j + 1 :])
    return out
