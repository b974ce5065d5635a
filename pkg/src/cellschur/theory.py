"""Predicted Lambda_0 sets, explicit bracket witnesses and the irreducible-data count."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .cells import r_st
from .combinatorics import (
    EMPTY_PARTITION,
    Composition,
    Partition,
    PAdicDecomposition,
    canonical_tableau,
    is_semistandard,
    k_p,
    p_adic_reconstruct,
    partitions_of,
    restricted_partitions,
    standard_tableaux,
    weight_tableau,
)
from .linalg import QQ, GF, RingSpec, is_prime
from .monoid import MonoidSpec, SubsetOrdering
from .schur import SchurCells, orbit_of_C, orbit_of_D

WITNESS_KINDS = ("char0-full", "right-p", "left-top", "left-p", "rook")


class InadmissibleError(ValueError):
    """The witness construction does not apply to the requested partition."""


def _check_prime(p: int):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def full_lambda(kind: str, r: int) -> list[Partition]:
    """``Lambda`` for the monoid: indices ``1..r``, plus ``0`` when the zero map is present."""
    lowest = 0 if MonoidSpec(kind, r).contains_zero else 1
    return [lam for i in range(lowest, r + 1) for lam in partitions_of(i)]


def lambda_p_set(r: int, p: int) -> list[Partition]:
    _check_prime(p)
    return [lam for lam in full_lambda("full", r) if (r - lam.index) % p ** k_p(lam, p) == 0]


def lambda_Lp_set(r: int, p: int) -> list[Partition]:
    _check_prime(p)
    return [lam for lam in full_lambda("full", r) if lam.index == r or any(x % p for x in lam)]


@dataclass(frozen=True)
class Prediction:
    kind: str
    side: str
    characteristic: int
    predicted: tuple
    applicable: bool

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "side": self.side,
            "characteristic": str(self.characteristic),
            "applicable": self.applicable,
            "predicted": [[str(x) for x in lam] for lam in self.predicted],
        }


def predicted_lambda0(kind: str, side: str, characteristic: int, r: int) -> Prediction:
    """What the classification theorems say about ``Lambda_0`` of ``S_side(M, k)``."""
    if kind in ("rook", "partial"):
        pred = full_lambda(kind, r)
    elif kind == "full" and characteristic == 0:
        pred = full_lambda(kind, r)
    elif kind == "full" and side == "right":
        pred = lambda_p_set(r, characteristic)
    elif kind == "full" and side == "left":
        pred = lambda_Lp_set(r, characteristic)
    else:
        return Prediction(kind, side, characteristic, (), False)
    return Prediction(kind, side, characteristic, tuple(pred), True)


# -- witnesses -----------------------------------------------------------------


@dataclass
class WitnessResult:
    kind: str
    lam: Partition
    side: str
    mu: Composition
    C: tuple
    D: tuple
    S: tuple
    T: tuple
    expected: int
    computed: int
    field: RingSpec
    extra: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.field.reduce(self.expected) == self.field.reduce(self.computed)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "lambda": [str(x) for x in self.lam],
            "side": self.side,
            "mu": [str(x) for x in self.mu],
            "C": [str(x) for x in self.C],
            "D": [[str(x) for x in d] for d in self.D],
            "expected": str(self.expected),
            "computed": str(self.computed),
            "field": self.field.label(),
            "agree": self.agree,
        }


def _char0_full(lam, r, p, force=False):
    i = lam.index
    # at i == r all the D_a coincide, so the orbit collapses; see witness_bracket(force=True)
    if not 1 <= i < r and not (force and i == r):
        raise InadmissibleError("needs 1 <= index < r")
    k = len(lam)
    mu = Composition(tuple(lam) + (1,) * (r - i))
    D = tuple((j,) for j in range(1, i)) + (tuple(range(i, r + 1)),)
    return mu, tuple(range(1, i + 1)), D, lam[k - 1], "full"


def _right_p(lam, r, p):
    i = lam.index
    if i < 1 or (r - i) % p ** k_p(lam, p):
        raise InadmissibleError("needs lam in Lambda_p")
    pk = p ** k_p(lam, p)
    q = (r - i) // pk
    m = len(lam)
    a = max(j for j in range(1, m + 1) if lam[j - 1] % (pk * p))
    mu = Composition(tuple(lam[: a - 1]) + (lam[a - 1] - pk, pk) + tuple(lam[a:]) + (pk,) * q)
    blocks = mu.blocks()
    singles = [(x,) for j, blk in enumerate(blocks, start=1) if j <= m + 1 and j != a + 1 for x in blk]
    tails = blocks[m + 1 :]
    spread = [tuple(sorted((blocks[a][j],) + tuple(t[j] for t in tails))) for j in range(pk)]
    return mu, tuple(range(1, i + 1)), tuple(singles + spread), comb(lam[a - 1], pk), "full"


def _left_top(lam, r, p):
    if lam.index != r:
        raise InadmissibleError("needs index r")
    return Composition(lam), tuple(range(1, r + 1)), tuple((j,) for j in range(1, r + 1)), 1, "full"


def _left_p(lam, r, p):
    i = lam.index
    if not 1 <= i < r or all(x % p == 0 for x in lam):
        raise InadmissibleError("needs index < r and a part prime to p")
    a = max(j for j in range(1, len(lam) + 1) if lam[j - 1] % p)
    mu = Composition(tuple(lam[: a - 1]) + (lam[a - 1] - 1, 1) + tuple(lam[a:]) + (1,) * (r - i))
    x = sum(lam[:a])
    D = tuple((l,) for l in range(1, i + 1) if l != x) + ((x,) + tuple(range(i + 1, r + 1)),)
    return mu, tuple(range(1, i + 1)), D, lam[a - 1], "full"


def _rook(lam, r, p):
    i = lam.index
    if i > r:
        raise InadmissibleError("index exceeds r")
    mu = Composition(tuple(lam) + (1,) * (r - i))
    return mu, tuple(range(1, i + 1)), tuple((j,) for j in range(1, i + 1)), 1, "rook"


_BUILDERS = {
    "char0-full": (_char0_full, ("left", "right")),
    "right-p": (_right_p, ("right",)),
    "left-top": (_left_top, ("left",)),
    "left-p": (_left_p, ("left",)),
    "rook": (_rook, ("left", "right")),
}


def admissible(kind: str, lam: Partition, r: int, p: int | None = None) -> bool:
    try:
        _BUILDERS[kind][0](lam, r, p or 2)
    except InadmissibleError:
        return False
    return True


def witness_sides(kind: str) -> tuple:
    return _BUILDERS[kind][1]


def witness_bracket(kind: str, lam, r: int, p: int | None = None, side: str | None = None,
                    rule: str = "paper", force: bool = False) -> WitnessResult:
    """Rebuild the proof's element ``b`` and compute its bracket ``<b, b>``.

    ``force`` skips the admissibility check of the ``char0-full`` construction
    (used to document what happens at index ``r``).
    """
    if kind not in _BUILDERS:
        raise ValueError(f"unknown witness kind {kind!r}")
    lam = Partition(lam)
    build, sides = _BUILDERS[kind]
    side = side or sides[0]
    if side not in sides:
        raise InadmissibleError(f"{kind} witnesses live on the {'/'.join(sides)} side")
    if kind in ("right-p", "left-p"):
        if p is None:
            raise ValueError(f"{kind} needs a prime p")
        _check_prime(p)
    if force and kind == "char0-full":
        mu, C, D, expected, mkind = _char0_full(lam, r, p, force=True)
    else:
        mu, C, D, expected, mkind = build(lam, r, p or 2)
    field = GF(p) if (p and kind != "char0-full") else QQ
    spec = MonoidSpec(mkind, r)
    ordering = SubsetOrdering(r, mu, rule)
    cs = SchurCells(spec, side, n=max(r, len(mu)), compositions=[mu], rule=rule)
    if lam.index == 0:
        s = t = (mu, (), ())
        S = T = ()
        oc_size = od_size = 1
    else:
        oc = orbit_of_C(mu, C)
        od = orbit_of_D(mu, D, ordering)
        S = _unique_weight(lam, oc.comp)
        T = _unique_weight(lam, od.comp)
        s, t = (mu, oc.key, S), (mu, od.key, T)
        oc_size, od_size = len(oc.members), len(od.members)
    computed = r_st(lam, s, t, cs)
    return WitnessResult(kind, lam, side, mu, C, ordering.sort(D) if D else (), S, T, expected, computed,
                         field, {"orbit_C": oc_size, "orbit_D": od_size})


def _unique_weight(lam: Partition, comp: Composition):
    """Weight word of the row-reading tableau; it must be the weight of no other standard tableau."""
    canon = canonical_tableau(lam)
    W = weight_tableau(canon, comp)
    if not is_semistandard(W):
        raise InadmissibleError(f"weight tableau {W} is not semistandard")
    hits = [s for s in standard_tableaux(lam) if weight_tableau(s, comp) == W]
    if hits != [canon]:
        raise InadmissibleError(f"{len(hits)} standard tableaux have weight {W}")
    return W


def witness_partitions(kind: str, r: int, p: int | None = None) -> list[Partition]:
    """All partitions for which the construction applies, in poset order."""
    mkind = "rook" if kind == "rook" else "full"
    return [lam for lam in full_lambda(mkind, r) if admissible(kind, lam, r, p)]


# -- counting -----------------------------------------------------------------


def expansions(r: int, p: int) -> list[tuple[int, tuple[int, ...]]]:
    """``(m, (s_m, ..., s_M))`` with ``r = sum s_j p^j``, ``s_m > 0`` and ``s_M > 0``."""
    out = []

    def rec(level, remaining, acc):
        if remaining == 0:
            if acc:
                out.append(acc)
            return
        if p**level > remaining:
            return
        for s in range(remaining // p**level, -1, -1):
            if s == 0 and not acc:
                rec(level + 1, remaining, acc)
                continue
            rec(level + 1, remaining - s * p**level, acc + [(level, s)])

    rec(0, r, [])
    res = []
    for acc in out:
        m = acc[0][0]
        levels = [0] * (acc[-1][0] - m + 1)
        for level, s in acc:
            levels[level - m] = s
        if levels[-1] > 0:
            res.append((m, tuple(levels)))
    return sorted(set(res))


def irreducible_data(r: int, p: int, side: str) -> list[PAdicDecomposition]:
    """Every data tuple of the parameterization, packaged as a p-adic decomposition."""
    _check_prime(p)
    out = []
    for m, levels in expansions(r, p):
        upper = [restricted_partitions(s, p) if s else [EMPTY_PARTITION] for s in levels[1:]]
        if side == "left" and m > 0:
            lows = [(levels[0], q) for q in restricted_partitions(levels[0], p)]
        else:
            lows = [(j, q) for j in range(1, levels[0] + 1) for q in restricted_partitions(j, p)]
        for j, low in lows:
            for rest in _product(upper):
                parts = (low,) + rest
                out.append(PAdicDecomposition(p, m, m + len(levels) - 1, (j,) + levels[1:], parts))
    return out


def _product(lists):
    if not lists:
        return [()]
    return [(x,) + tail for x in lists[0] for tail in _product(lists[1:])]


def count_irreducible_data(r: int, p: int, side: str) -> int:
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    return len(irreducible_data(r, p, side))


def data_partitions(r: int, p: int, side: str) -> list[Partition]:
    return [p_adic_reconstruct(d) for d in irreducible_data(r, p, side)]
