"""Generic cell-algebra machinery: axiom checks, brackets, Gram matrices and Lambda_0.

A concrete algebra subclasses :class:`CellStructure`.  Algebra elements are
plain ``dict`` objects mapping natural-basis keys to integer coefficients; cell
coordinates are dicts keyed by ``(lam, s, t)``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable

from .combinatorics import Partition, lambda_geq, partitions_of
from .linalg import ZZ, RingSpec, rank_over

Element = dict
CellKey = tuple  # (lam, s, t)


class CellStructureError(RuntimeError):
    """A computed quantity contradicts the cell-algebra axioms."""


def clean(x: dict) -> dict:
    return {k: v for k, v in x.items() if v}


def add_into(acc: dict, x: dict, scale: int = 1) -> dict:
    for k, v in x.items():
        acc[k] = acc.get(k, 0) + scale * v
    return acc


def linear_combination(terms: Iterable[tuple[Any, dict]]) -> dict:
    acc: dict = {}
    for c, x in terms:
        if c:
            add_into(acc, x, c)
    return clean(acc)


class CellStructure:
    """Base class: a free algebra with a declared cell datum.

    Subclasses fill in :attr:`poset` and implement the index sets, the cell
    elements, the product and the conversion to cell coordinates.
    """

    ring: RingSpec = ZZ
    poset: list[Partition]

    def left_index(self, lam: Partition) -> list:
        raise NotImplementedError

    def right_index(self, lam: Partition) -> list:
        raise NotImplementedError

    def cell_element(self, lam: Partition, s, t) -> Element:
        raise NotImplementedError

    def natural_basis(self) -> list:
        raise NotImplementedError

    def basis_element(self, key) -> Element:
        return {key: 1}

    def product(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def to_cell_coords(self, x: Element) -> dict[CellKey, int]:
        raise NotImplementedError

    def identity(self) -> Element:
        raise NotImplementedError

    # -- derived helpers ------------------------------------------------------

    def cell_keys(self) -> list[CellKey]:
        return [
            (lam, s, t) for lam in self.poset for s in self.left_index(lam) for t in self.right_index(lam)
        ]

    @property
    def dimension(self) -> int:
        return len(self.natural_basis())

    def from_cell_coords(self, coords: dict) -> Element:
        return linear_combination((c, self.cell_element(*key)) for key, c in coords.items())

    def lambda_geq(self, lam: Partition, mu: Partition) -> bool:
        return lambda_geq(lam, mu)

    def gram_cache(self) -> dict:
        if not hasattr(self, "_gram_cache"):
            self._gram_cache = {}
        return self._gram_cache


def full_poset(indices: Iterable[int]) -> list[Partition]:
    """``Lambda``: all partitions of every realized index, highest layers first."""
    return [lam for i in sorted(indices) for lam in partitions_of(i)]


# -- layer reduction and axioms -----------------------------------------------


def layer_coefficients(x: Element, lam: Partition, cs: CellStructure, coords: dict | None = None) -> dict:
    """Coordinates of ``x`` at layer ``lam`` modulo the higher ideal, keyed ``(s, t)``."""
    if coords is None:
        coords = cs.to_cell_coords(x)
    return {(s, t): c for (mu, s, t), c in coords.items() if mu == lam and c}


def _ideal_violation(coords: dict, lam: Partition, cs: CellStructure):
    for (mu, s, t), c in coords.items():
        if c and not cs.lambda_geq(mu, lam):
            return (mu, s, t), c
    return None


@dataclass
class AxiomReport:
    passed: bool
    checked: int = 0
    counterexample: dict | None = None


def verify_cell_axioms(cs: CellStructure, basis: Iterable | None = None) -> AxiomReport:
    """Check both one-sided multiplication rules against every natural-basis element.

    For each ``a``, each ``lam`` and each fixed ``s`` the products ``a * C[lam,s,t]``
    reduced modulo the higher ideal must lie in column ``t`` with a coefficient
    vector that does not depend on ``t``; dually on the right.
    """
    basis = list(cs.natural_basis() if basis is None else basis)
    checked = 0
    for key in basis:
        a = cs.basis_element(key)
        for lam in cs.poset:
            L, R = cs.left_index(lam), cs.right_index(lam)
            for side, fixed_list, moving_list in (("left", L, R), ("right", R, L)):
                for fixed in fixed_list:
                    reference = None
                    for moving in moving_list:
                        s, t = (fixed, moving) if side == "left" else (moving, fixed)
                        elt = cs.cell_element(lam, s, t)
                        prod = cs.product(a, elt) if side == "left" else cs.product(elt, a)
                        coords = cs.to_cell_coords(prod)
                        checked += 1
                        bad = _ideal_violation(coords, lam, cs)
                        if bad is not None:
                            return AxiomReport(False, checked, _cx(side, key, lam, s, t, "outside ideal", bad))
                        layer = layer_coefficients(prod, lam, cs, coords)
                        vec = {}
                        for (s2, t2), c in layer.items():
                            if side == "left":
                                if t2 != t:
                                    return AxiomReport(False, checked, _cx(side, key, lam, s, t, "wrong column", (s2, t2)))
                                vec[s2] = c
                            else:
                                if s2 != s:
                                    return AxiomReport(False, checked, _cx(side, key, lam, s, t, "wrong row", (s2, t2)))
                                vec[t2] = c
                        if reference is None:
                            reference = vec
                        elif vec != reference:
                            return AxiomReport(
                                False, checked, _cx(side, key, lam, s, t, "coefficients depend on index", (reference, vec))
                            )
    return AxiomReport(True, checked)


def _cx(side, key, lam, s, t, reason, data) -> dict:
    return {"side": side, "basis": key, "lambda": lam, "s": s, "t": t, "reason": reason, "data": data}


def verify_ideals(cs: CellStructure, basis: Iterable | None = None) -> bool:
    """``A^lam`` is a two-sided ideal: products with layer >= lam stay at layers >= lam."""
    basis = list(cs.natural_basis() if basis is None else basis)
    for key in basis:
        a = cs.basis_element(key)
        for lam in cs.poset:
            for mu in cs.poset:
                if not cs.lambda_geq(mu, lam):
                    continue
                for s in cs.left_index(mu):
                    for t in cs.right_index(mu):
                        elt = cs.cell_element(mu, s, t)
                        for prod in (cs.product(a, elt), cs.product(elt, a)):
                            if _ideal_violation(cs.to_cell_coords(prod), lam, cs) is not None:
                                return False
    return True


# -- brackets -----------------------------------------------------------------


def r_st(lam: Partition, s, t, cs: CellStructure, aux_s=None, aux_t=None) -> int:
    """Scalar with ``C[lam,s',t] * C[lam,s,t'] == r * C[lam,s',t'] (mod higher ideal)``."""
    aux_s = s if aux_s is None else aux_s
    aux_t = t if aux_t is None else aux_t
    prod = cs.product(cs.cell_element(lam, aux_s, t), cs.cell_element(lam, s, aux_t))
    coords = cs.to_cell_coords(prod)
    bad = _ideal_violation(coords, lam, cs)
    if bad is not None:
        raise CellStructureError(f"product leaves the ideal at {lam}: {bad}")
    layer = layer_coefficients(prod, lam, cs, coords)
    value = layer.pop((aux_s, aux_t), 0)
    if layer:
        raise CellStructureError(f"reduced product at {lam} is not a multiple of the target cell element")
    return value


@dataclass
class GramReport:
    lam: Partition
    rows: list  # right indices t
    cols: list  # left indices s
    matrix: list[list[int]]
    ranks: dict[str, int] = field(default_factory=dict)

    def reduced(self, ring: RingSpec) -> list[list[int]]:
        return [[ring.reduce(x) for x in row] for row in self.matrix]

    def rank(self, ring: RingSpec) -> int:
        label = ring.label()
        if label not in self.ranks:
            self.ranks[label] = rank_over(self.matrix, ring) if self.matrix and self.matrix[0] else 0
        return self.ranks[label]

    def is_zero(self, ring: RingSpec) -> bool:
        return all(ring.reduce(x) == 0 for row in self.matrix for x in row)

    def member_of_lambda0(self, ring: RingSpec) -> bool:
        return not self.is_zero(ring)

    def to_json(self, fields: Iterable[RingSpec] = ()) -> dict:
        return {
            "lambda": [str(x) for x in self.lam],
            "rows": str(len(self.rows)),
            "cols": str(len(self.cols)),
            "entries": [[str(x) for x in row] for row in self.matrix],
            "rank_by_field": {f.label(): str(self.rank(f)) for f in fields},
        }


def gram_matrix(lam: Partition, cs: CellStructure) -> GramReport:
    """Integer bracket matrix at ``lam``; row ``t`` and column ``s`` hold ``r_st``."""
    cache = cs.gram_cache()
    if lam not in cache:
        R, L = cs.right_index(lam), cs.left_index(lam)
        matrix = [[_bracket(cs, lam, s, t) for s in L] for t in R]
        cache[lam] = GramReport(lam, R, L, matrix)
    return cache[lam]


def _bracket(cs: CellStructure, lam, s, t) -> int:
    hook = getattr(cs, "bracket", None)
    if hook is not None:
        return hook(lam, s, t)
    return r_st(lam, s, t, cs)


_WORKER_CS: CellStructure | None = None


def _gram_worker(lam):
    rep = gram_matrix(lam, _WORKER_CS)
    return lam, rep.matrix


def all_gram_reports(cs: CellStructure, jobs: int = 1) -> dict[Partition, GramReport]:
    """Gram reports for every layer; with ``jobs > 1`` layers run in forked workers."""
    cache = cs.gram_cache()
    todo = [lam for lam in cs.poset if lam not in cache]
    if jobs > 1 and len(todo) > 1 and hasattr(os, "fork"):
        global _WORKER_CS
        _WORKER_CS = cs
        import multiprocessing

        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as pool:
            for lam, matrix in pool.map(_gram_worker, todo):
                cache[lam] = GramReport(lam, cs.right_index(lam), cs.left_index(lam), matrix)
        _WORKER_CS = None
    return {lam: gram_matrix(lam, cs) for lam in cs.poset}


def lambda_zero(cs: CellStructure, field: RingSpec, jobs: int = 1) -> list[Partition]:
    if not field.is_field:
        raise ValueError("Lambda_0 needs a field")
    reports = all_gram_reports(cs, jobs)
    return [lam for lam in cs.poset if reports[lam].member_of_lambda0(field)]


def irreducible_dims(cs: CellStructure, field: RingSpec, jobs: int = 1) -> dict[Partition, int]:
    """``lam -> dim D^lam`` (the rank of the Gram matrix), omitting zero ranks."""
    if not field.is_field:
        raise ValueError("irreducible dimensions need a field")
    reports = all_gram_reports(cs, jobs)
    dims = {lam: reports[lam].rank(field) for lam in cs.poset}
    return {lam: d for lam, d in dims.items() if d > 0}


def quasi_hereditary_sufficient(cs: CellStructure, field: RingSpec, jobs: int = 1) -> bool:
    return len(lambda_zero(cs, field, jobs)) == len(cs.poset)


def action_matrix(a: Element, lam: Partition, side: str, cs: CellStructure) -> list[list[int]]:
    """Matrix of ``a`` on the left (column convention) or right (row convention) cell module."""
    L, R = cs.left_index(lam), cs.right_index(lam)
    if side == "left":
        t = R[0]
        pos = {s: j for j, s in enumerate(L)}
        out = [[0] * len(L) for _ in L]
        for j, s in enumerate(L):
            prod = cs.product(a, cs.cell_element(lam, s, t))
            for (s2, t2), c in layer_coefficients(prod, lam, cs).items():
                if t2 != t:
                    raise CellStructureError("left action leaves the column")
                out[pos[s2]][j] = c
        return out
    if side == "right":
        s = L[0]
        pos = {t: j for j, t in enumerate(R)}
        out = [[0] * len(R) for _ in R]
        for j, t in enumerate(R):
            prod = cs.product(cs.cell_element(lam, s, t), a)
            for (s2, t2), c in layer_coefficients(prod, lam, cs).items():
                if s2 != s:
                    raise CellStructureError("right action leaves the row")
                out[j][pos[t2]] = c
        return out
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


class RelabeledCells(CellStructure):
    """Wraps a structure and swaps the poset labels of two layers.

    Used as a negative control: the swapped datum is generally not a cell datum.
    """

    def __init__(self, inner: CellStructure, lam: Partition, mu: Partition):
        self.inner, self.swap = inner, {lam: mu, mu: lam}
        self.ring = inner.ring
        self.poset = list(inner.poset)

    def _orig(self, lam):
        return self.swap.get(lam, lam)

    def left_index(self, lam):
        return self.inner.left_index(self._orig(lam))

    def right_index(self, lam):
        return self.inner.right_index(self._orig(lam))

    def cell_element(self, lam, s, t):
        return self.inner.cell_element(self._orig(lam), s, t)

    def natural_basis(self):
        return self.inner.natural_basis()

    def product(self, x, y):
        return self.inner.product(x, y)

    def identity(self):
        return self.inner.identity()

    def to_cell_coords(self, x):
        return {(self._orig(lam), s, t): c for (lam, s, t), c in self.inner.to_cell_coords(x).items()}
