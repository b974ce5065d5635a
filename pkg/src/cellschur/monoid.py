"""Partial transformation monoids and the factorization ``alpha = phi_C o sigma o psi_D``.

A partial map of ``{1..r}`` is stored as the tuple ``(alpha(1), ..., alpha(r))``
with ``0`` marking an undefined point.  Subsets of ``{1..r}`` are sorted tuples,
an index set ``C`` is such a tuple and a block family ``D`` is a tuple of
subsets listed in increasing order for the active :class:`SubsetOrdering`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product

from .combinatorics import Composition, Permutation, compose, is_permutation

PartialMap = tuple[int, ...]
Subset = tuple[int, ...]
BlockFamily = tuple[Subset, ...]

KINDS = ("full", "rook", "partial")
MAX_RANK = 5


class BoundError(ValueError):
    """Requested size exceeds the configured enumeration bound."""


def identity_map(r: int) -> PartialMap:
    return tuple(range(1, r + 1))


def zero_map(r: int) -> PartialMap:
    return (0,) * r


def compose_maps(alpha: PartialMap, beta: PartialMap) -> PartialMap:
    """``alpha o beta``; both maps must act on the same ``{1..r}``."""
    if len(alpha) != len(beta):
        raise ValueError(f"rank mismatch: {len(alpha)} vs {len(beta)}")
    return compose(alpha, beta)


def index_of(alpha: PartialMap) -> int:
    """Number of non-zero image points."""
    return len(set(alpha) - {0})


def in_kind(alpha: PartialMap, kind: str) -> bool:
    if kind == "full":
        return 0 not in alpha
    if kind == "rook":
        images = [y for y in alpha if y]
        return len(images) == len(set(images))
    if kind == "partial":
        return True
    raise ValueError(f"unknown monoid kind {kind!r}")


@dataclass(frozen=True)
class MonoidSpec:
    kind: str
    r: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown monoid kind {self.kind!r}")
        if self.r < 1:
            raise ValueError("rank must be positive")

    @property
    def contains_zero(self) -> bool:
        return self.kind in ("rook", "partial")


_ENUM_CACHE: dict[MonoidSpec, tuple[PartialMap, ...]] = {}


def enumerate_monoid(spec: MonoidSpec, bound: int = MAX_RANK) -> list[PartialMap]:
    """All members of the monoid, sorted by image tuple."""
    if spec.r > bound:
        raise BoundError(f"rank {spec.r} exceeds the enumeration bound {bound}")
    if spec not in _ENUM_CACHE:
        maps = (m for m in product(range(spec.r + 1), repeat=spec.r) if in_kind(m, spec.kind))
        _ENUM_CACHE[spec] = tuple(sorted(maps))
    return list(_ENUM_CACHE[spec])


def realized_indices(spec: MonoidSpec) -> list[int]:
    """``I(M)``: the indices of members of the monoid."""
    return sorted({index_of(a) for a in enumerate_monoid(spec)})


# -- subset orderings ---------------------------------------------------------


@dataclass(frozen=True)
class SubsetOrdering:
    """Total order on the subsets of ``{1..r}`` compatible with the orbits of ``S_nu``.

    ``rule="paper"`` orders orbits by the zero-padded block string and breaks
    ties by the element string.  ``rule="alternate"`` reverses both comparisons;
    it is a second orbit-compatible choice used to test ordering independence.
    """

    r: int
    nu: Composition | None = None
    rule: str = "paper"
    _blocks: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        nu = Composition((1,) * self.r) if self.nu is None else Composition(self.nu)
        if nu.total != self.r:
            raise ValueError(f"ordering composition {nu} is not a composition of {self.r}")
        if self.rule not in ("paper", "alternate"):
            raise ValueError(f"unknown ordering rule {self.rule!r}")
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "_blocks", nu.block_of())

    def block_string(self, d: Subset) -> tuple[int, ...]:
        """The orbit string: block numbers of the elements, zero padded to length r."""
        s = sorted(self._blocks[x] for x in d)
        return tuple(s) + (0,) * (self.r - len(s))

    def key(self, d) -> tuple:
        d = tuple(sorted(d))
        if self.rule == "paper":
            return (self.block_string(d), d)
        return (tuple(-x for x in self.block_string(d)), tuple(-x for x in d))

    def sort(self, family) -> BlockFamily:
        return tuple(sorted((tuple(sorted(d)) for d in family), key=self.key))

    @cached_property
    def orbit_labels(self) -> list[tuple[int, ...]]:
        """Orbit strings of all subsets, in increasing orbit order."""
        strings = {self.block_string(d) for d in all_subsets(self.r)}
        if self.rule == "paper":
            return sorted(strings)
        return sorted(strings, key=lambda s: tuple(-x for x in s))

    @cached_property
    def orbit_slot(self) -> dict[tuple[int, ...], int]:
        return {s: j for j, s in enumerate(self.orbit_labels, start=1)}

    def slot_of(self, d: Subset) -> int:
        """1-based position of the orbit of ``d`` in the orbit order."""
        return self.orbit_slot[self.block_string(d)]


def subset_key(d, ordering: SubsetOrdering):
    return ordering.key(d)


def default_ordering(r: int) -> SubsetOrdering:
    return SubsetOrdering(r)


def all_subsets(r: int) -> list[Subset]:
    return [c for i in range(r + 1) for c in combinations(range(1, r + 1), i)]


# -- phi, psi and factorization -----------------------------------------------


def phi_map(C: Subset) -> tuple[int, ...]:
    """``phi_C`` as an image tuple on ``{1..i}``: ``j -> c_j``."""
    return tuple(C)


def psi_map(D: BlockFamily, r: int, ordering: SubsetOrdering | None = None) -> tuple[int, ...]:
    """``psi_D`` as an image tuple on ``{1..r}``: ``x -> position of the block holding x``."""
    if ordering is not None and ordering.sort(D) != tuple(D):
        raise ValueError(f"block family {D} is not sorted under {ordering}")
    out = [0] * r
    for j, blk in enumerate(D, start=1):
        for x in blk:
            if out[x - 1]:
                raise ValueError(f"blocks of {D} are not disjoint")
            out[x - 1] = j
    return tuple(out)


@dataclass(frozen=True)
class Factorization:
    sigma: Permutation
    C: Subset
    D: BlockFamily

    @property
    def index(self) -> int:
        return len(self.C)


def assemble(sigma: Permutation, C: Subset, D: BlockFamily, r: int) -> PartialMap:
    """``phi_C o sigma o psi_D``."""
    if not (len(sigma) == len(C) == len(D)):
        raise ValueError("sigma, C and D must have the same size")
    return compose(phi_map(C), compose(sigma, psi_map(D, r)))


def factorize(alpha: PartialMap, ordering: SubsetOrdering) -> Factorization:
    C = tuple(sorted(set(alpha) - {0}))
    fibres: dict[int, list[int]] = {c: [] for c in C}
    for x, y in enumerate(alpha, start=1):
        if y:
            fibres[y].append(x)
    D = ordering.sort(fibres.values())
    pos = {c: j for j, c in enumerate(C, start=1)}
    sigma = tuple(pos[alpha[blk[0] - 1]] for blk in D)
    return Factorization(sigma=sigma, C=C, D=D)


def reachable_block_families(spec: MonoidSpec, i: int, ordering: SubsetOrdering) -> list[BlockFamily]:
    """``D(M,i,r)``: block families of index-``i`` members, in sorted order."""
    fams = {factorize(a, ordering).D for a in enumerate_monoid(spec) if index_of(a) == i}
    if not fams:
        raise ValueError(f"index {i} is not realized in {spec}")
    return sorted(fams, key=lambda D: [ordering.key(d) for d in D])


def index_subsets(i: int, r: int) -> list[Subset]:
    """``C(i,r)``."""
    return list(combinations(range(1, r + 1), i))


def is_bijective_on(rho: tuple[int, ...]) -> bool:
    return 0 not in rho and is_permutation(rho)
