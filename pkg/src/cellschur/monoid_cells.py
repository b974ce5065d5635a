"""Murphy basis of Z[S_i] and the induced cell basis of the monoid algebra R[M].

Permutations multiply by function composition.  With ``d(u)`` the permutation
taking each entry of the row-reading canonical tableau to the entry of ``u``
in the same box, the Murphy element is ``m_st = d(s) o x_lam o d(t)^-1`` where
``x_lam`` is the sum over the row stabilizer of the canonical tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cells import CellStructure, clean, full_poset, gram_matrix
from .combinatorics import (
    EMPTY_PARTITION,
    Partition,
    Tableau,
    all_permutations,
    compose,
    identity_perm,
    inverse,
    partitions_of,
    standard_tableaux,
    tableau_perm,
    young_subgroup,
)
from .linalg import ZZ, RingSpec, inverse_integer
from .monoid import (
    MAX_RANK,
    BoundError,
    MonoidSpec,
    SubsetOrdering,
    assemble,
    compose_maps,
    enumerate_monoid,
    factorize,
    identity_map,
    index_subsets,
    reachable_block_families,
    realized_indices,
    zero_map,
)


@dataclass(frozen=True)
class MurphyElement:
    shape: Partition
    s: Tableau
    t: Tableau
    expansion: dict  # permutation -> coefficient


def murphy_element(shape: Partition, s: Tableau, t: Tableau) -> MurphyElement:
    ds, dt_inv = tableau_perm(s), inverse(tableau_perm(t))
    exp = {compose(ds, compose(w, dt_inv)): 1 for w in young_subgroup(shape)}
    return MurphyElement(Partition(shape), s, t, exp)


@lru_cache(maxsize=None)
def _murphy_data(i: int):
    elements = [
        murphy_element(lam, s, t)
        for lam in partitions_of(i)
        for s in standard_tableaux(lam)
        for t in standard_tableaux(lam)
    ]
    perms = all_permutations(i)
    col = {w: j for j, w in enumerate(perms)}
    forward = [[0] * len(perms) for _ in elements]
    for k, el in enumerate(elements):
        for w, c in el.expansion.items():
            forward[k][col[w]] = c
    inv = inverse_integer(forward)  # raises if the change of basis is not unimodular
    # coords(x) = x_vec @ inv, stored sparsely per permutation
    rows = {w: {k: v for k, v in enumerate(inv[col[w]]) if v} for w in perms}
    keys = [(el.shape, el.s, el.t) for el in elements]
    return tuple(elements), keys, rows, forward


def murphy_basis(i: int, bound: int = MAX_RANK) -> list[MurphyElement]:
    """All ``i!`` Murphy elements, grouped by shape (most dominant first)."""
    if i > bound:
        raise BoundError(f"symmetric group degree {i} exceeds the bound {bound}")
    return list(_murphy_data(i)[0])


def murphy_change_of_basis(i: int) -> list[list[int]]:
    """Rows: Murphy elements; columns: permutations in lexicographic order."""
    return [list(row) for row in _murphy_data(i)[3]]


def murphy_coords(x: dict, i: int) -> dict:
    """Coordinates of ``x`` in Z[S_i] with respect to the Murphy basis, keyed ``(lam, s, t)``."""
    _, keys, rows, _ = _murphy_data(i)
    acc: dict = {}
    for w, c in x.items():
        for k, v in rows[w].items():
            acc[keys[k]] = acc.get(keys[k], 0) + c * v
    return clean(acc)


def perm_product(x: dict, y: dict) -> dict:
    acc: dict = {}
    for u, a in x.items():
        for v, b in y.items():
            w = compose(u, v)
            acc[w] = acc.get(w, 0) + a * b
    return clean(acc)


class SymmetricGroupCells(CellStructure):
    """``Z[S_i]`` with the Murphy cell basis."""

    def __init__(self, i: int, ring: RingSpec = ZZ):
        if i > MAX_RANK:
            raise BoundError(f"symmetric group degree {i} exceeds the bound {MAX_RANK}")
        self.i, self.ring = i, ring
        self.poset = partitions_of(i)
        self._elements = {(el.shape, el.s, el.t): el.expansion for el in murphy_basis(i)}

    def left_index(self, lam):
        return standard_tableaux(lam)

    right_index = left_index

    def cell_element(self, lam, s, t):
        return dict(self._elements[(lam, s, t)])

    def natural_basis(self):
        return all_permutations(self.i)

    def product(self, x, y):
        return perm_product(x, y)

    def to_cell_coords(self, x):
        return murphy_coords(x, self.i)

    def identity(self):
        return {identity_perm(self.i): 1}


# -- transfer to the monoid algebra -------------------------------------------


def h_cd(C, D, x: dict, r: int) -> dict:
    """Linear extension of ``sigma -> phi_C o sigma o psi_D``."""
    if len(C) != len(D):
        raise ValueError(f"|C| = {len(C)} but D has {len(D)} blocks")
    out: dict = {}
    for sigma, c in x.items():
        if len(sigma) != len(C):
            raise ValueError("permutation size does not match C and D")
        alpha = assemble(sigma, C, D, r)
        out[alpha] = out.get(alpha, 0) + c
    return clean(out)


def monoid_product(x: dict, y: dict) -> dict:
    acc: dict = {}
    for u, a in x.items():
        for v, b in y.items():
            w = compose_maps(u, v)
            acc[w] = acc.get(w, 0) + a * b
    return clean(acc)


class MonoidCells(CellStructure):
    """Cell structure on ``R[M]`` built from Murphy bases via ``H_{C,D}``."""

    def __init__(self, spec: MonoidSpec, ring: RingSpec = ZZ, ordering: SubsetOrdering | None = None):
        self.spec, self.ring = spec, ring
        self.r = spec.r
        self.ordering = ordering or SubsetOrdering(spec.r)
        if self.ordering.r != spec.r:
            raise ValueError("ordering rank does not match the monoid")
        self.members = enumerate_monoid(spec)
        self.indices = realized_indices(spec)
        self.poset = full_poset(self.indices)
        self._fact = {a: factorize(a, self.ordering) for a in self.members}
        self._C = {i: index_subsets(i, self.r) for i in self.indices if i > 0}
        self._D = {i: reachable_block_families(spec, i, self.ordering) for i in self.indices if i > 0}

    def left_index(self, lam):
        if lam.index == 0:
            return [((), ())]
        return [(C, s) for C in self._C[lam.index] for s in standard_tableaux(lam)]

    def right_index(self, lam):
        if lam.index == 0:
            return [((), ())]
        return [(D, t) for D in self._D[lam.index] for t in standard_tableaux(lam)]

    def cell_element(self, lam, s, t):
        if lam.index == 0:
            return {zero_map(self.r): 1}
        (C, ss), (D, tt) = s, t
        return h_cd(C, D, murphy_element(lam, ss, tt).expansion, self.r)

    def natural_basis(self):
        return list(self.members)

    def product(self, x, y):
        return monoid_product(x, y)

    def identity(self):
        return {identity_map(self.r): 1}

    def to_cell_coords(self, x):
        # group by the (C, D) summand, convert the S_i part, then relabel
        pieces: dict = {}
        out: dict = {}
        for alpha, c in x.items():
            if not c:
                continue
            f = self._fact.get(alpha)
            if f is None:
                raise ValueError(f"{alpha} is not a member of {self.spec}")
            if f.index == 0:
                key = (EMPTY_PARTITION, ((), ()), ((), ()))
                out[key] = out.get(key, 0) + c
                continue
            bucket = pieces.setdefault((f.C, f.D), {})
            bucket[f.sigma] = bucket.get(f.sigma, 0) + c
        for (C, D), perm_part in pieces.items():
            for (lam, s, t), v in murphy_coords(perm_part, len(C)).items():
                key = (lam, (C, s), (D, t))
                out[key] = out.get(key, 0) + v
        return clean(out)


def monoid_cell_structure(
    spec: MonoidSpec, ring: RingSpec = ZZ, ordering: SubsetOrdering | None = None
) -> MonoidCells:
    return MonoidCells(spec, ring, ordering)


@dataclass(frozen=True)
class RadicalComparison:
    lam: Partition
    monoid_zero: bool
    symmetric_zero: bool

    @property
    def equivalent(self) -> bool:
        return self.monoid_zero == self.symmetric_zero


def radical_equivalence_check(spec: MonoidSpec, field: RingSpec, lam: Partition, cs: MonoidCells | None = None):
    """Compare vanishing of the bracket at ``lam`` in ``R[M]`` and in ``R[S_i]``."""
    i = lam.index
    if i < 1:
        raise ValueError("the comparison needs a partition of positive index")
    cs = cs or MonoidCells(spec, ZZ)
    if i not in cs.indices:
        raise ValueError(f"index {i} is not realized in {spec}")
    mono = gram_matrix(lam, cs).is_zero(field)
    sym = gram_matrix(lam, _symmetric_cells(i)).is_zero(field)
    return RadicalComparison(lam, mono, sym)


@lru_cache(maxsize=None)
def _symmetric_cells(i: int) -> SymmetricGroupCells:
    return SymmetricGroupCells(i)


def predicted_monoid_lambda0(spec: MonoidSpec, field: RingSpec) -> list[Partition]:
    """``Lambda_0`` of ``R[M]`` read off from the symmetric group Gram matrices."""
    out = []
    for i in realized_indices(spec):
        if i == 0:
            out.append(EMPTY_PARTITION)
            continue
        sym = _symmetric_cells(i)
        out.extend(lam for lam in partitions_of(i) if not gram_matrix(lam, sym).is_zero(field))
    return out
