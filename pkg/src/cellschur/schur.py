"""Left and right generalized Schur algebras of a transformation monoid.

The ambient basis is the set of double-coset sums ``X(S_mu a S_nu)`` over all
pairs of compositions.  A basis element is keyed ``(mu, nu, rep)`` where ``rep``
is the smallest member of the double coset.  Inside ``^mu A^nu`` all block
families are sorted with the ``nu``-dependent subset ordering.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .cells import CellStructure, clean, full_poset, r_st
from .combinatorics import (
    EMPTY_PARTITION,
    Composition,
    Partition,
    compose,
    compositions_of,
    inverse,
    partitions_of,
    semistandard_tableaux,
    standard_tableaux,
    weight_tableau,
    young_generators,
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
    psi_map,
    reachable_block_families,
    realized_indices,
)
from .monoid_cells import murphy_element

SIDES = ("left", "right")


class SchurError(RuntimeError):
    """An internal consistency check of the Schur construction failed."""


def _orbit(start, moves):
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in moves(x):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


# -- orbits on index sets and block families ----------------------------------


@dataclass(frozen=True)
class OrbitC:
    mu: Composition
    members: tuple
    comp: Composition

    @property
    def key(self):
        return self.members[0]


@dataclass(frozen=True)
class OrbitD:
    nu: Composition
    members: tuple
    comp: Composition

    @property
    def key(self):
        return self.members[0]


def composition_of_C(mu, C) -> Composition:
    """``mu(C)_j = |b_j(mu) & C|``."""
    return Composition(sum(1 for c in C if c in blk) for blk in Composition(mu).blocks())


def composition_of_D(D, ordering: SubsetOrdering) -> Composition:
    """``nu(D)_j = |D & O_j|`` over the ordered ``S_nu``-orbits of subsets."""
    counts = [0] * len(ordering.orbit_labels)
    for d in D:
        counts[ordering.slot_of(d) - 1] += 1
    return Composition(counts)


def act_on_C(rho, C) -> tuple:
    return tuple(sorted(rho[c - 1] for c in C))


def act_on_D(D, pi, ordering: SubsetOrdering) -> tuple:
    """``D pi = {pi^-1[d]}``, re-sorted under ``ordering``."""
    inv = inverse(pi)
    return ordering.sort(tuple(inv[x - 1] for x in d) for d in D)


def orbit_of_C(mu, C) -> OrbitC:
    mu = Composition(mu)
    C = tuple(C)
    gens = young_generators(mu)
    members = tuple(sorted(_orbit(C, lambda x: (act_on_C(g, x) for g in gens))))
    return OrbitC(mu, members, composition_of_C(mu, C))


def orbit_of_D(nu, D, ordering: SubsetOrdering) -> OrbitD:
    nu = Composition(nu)
    D = ordering.sort(D)
    gens = young_generators(nu)
    found = _orbit(D, lambda x: (act_on_D(x, g, ordering) for g in gens))
    members = tuple(sorted(found, key=lambda F: [ordering.key(d) for d in F]))
    return OrbitD(nu, members, composition_of_D(D, ordering))


def intertwiner_rho_C(mu, C, rho) -> tuple:
    """The unique ``rho_C`` in ``S_mu(C)`` with ``rho o phi_C == phi_{rho C} o rho_C``."""
    mu = Composition(mu)
    if rho not in set(young_subgroup(mu)):
        raise ValueError("rho is not in the Young subgroup")
    C = tuple(C)
    rC = act_on_C(rho, C)
    pos = {c: j for j, c in enumerate(rC, start=1)}
    rho_C = tuple(pos[rho[c - 1]] for c in C)
    if compose(rho, C) != compose(rC, rho_C):
        raise SchurError("intertwiner identity fails for phi")
    if rho_C not in set(young_subgroup(composition_of_C(mu, C))):
        raise SchurError("rho_C is not in S_mu(C)")
    return rho_C


def intertwiner_pi_D(nu, D, pi, ordering: SubsetOrdering) -> tuple:
    """The unique ``pi_D`` in ``S_nu(D)`` with ``psi_D o pi == pi_D o psi_{D pi}``."""
    nu = Composition(nu)
    if pi not in set(young_subgroup(nu)):
        raise ValueError("pi is not in the Young subgroup")
    r = ordering.r
    D = ordering.sort(D)
    Dpi = act_on_D(D, pi, ordering)
    inv = inverse(pi)
    where = {d: k for k, d in enumerate(Dpi, start=1)}
    out = [0] * len(D)
    for j, d in enumerate(D, start=1):
        k = where[tuple(sorted(inv[x - 1] for x in d))]
        out[k - 1] = j
    pi_D = tuple(out)
    lhs = compose(psi_map(D, r), pi)
    rhs = compose(pi_D, psi_map(Dpi, r))
    if lhs != rhs:
        raise SchurError("intertwiner identity fails for psi")
    if pi_D not in set(young_subgroup(composition_of_D(D, ordering))):
        raise SchurError("pi_D is not in S_nu(D)")
    return pi_D


# -- double cosets --------------------------------------------------------------


@dataclass(frozen=True)
class DoubleCoset:
    mu: Composition
    nu: Composition
    representative: tuple
    members: tuple
    n_L: int
    n_R: int
    index: int
    orbit_C: OrbitC | None = field(default=None, compare=False)
    orbit_D: OrbitD | None = field(default=None, compare=False)

    @property
    def key(self):
        return (self.mu, self.nu, self.representative)

    def to_json(self) -> dict:
        return {
            "mu": [str(x) for x in self.mu],
            "nu": [str(x) for x in self.nu],
            "representative": [str(x) for x in self.representative],
            "size": str(len(self.members)),
            "nL": str(self.n_L),
            "nR": str(self.n_R),
        }


def _left_right_gens(mu, nu):
    return young_generators(mu), young_generators(nu)


def double_cosets(spec: MonoidSpec, mu, nu, rule: str = "paper") -> list[DoubleCoset]:
    """Partition of ``M`` into ``S_mu``-``S_nu`` double cosets, with orbit data attached."""
    mu, nu = Composition(mu), Composition(nu)
    r = spec.r
    if mu.total != r or nu.total != r:
        raise ValueError(f"compositions {mu}, {nu} must both have weight {r}")
    ordering = SubsetOrdering(r, nu, rule)
    left, right = _left_right_gens(mu, nu)
    remaining = set(enumerate_monoid(spec))
    out = []
    orbit_c_cache: dict = {}
    orbit_d_cache: dict = {}
    for alpha in enumerate_monoid(spec):
        if alpha not in remaining:
            continue
        members = _orbit(
            alpha, lambda x: [compose(g, x) for g in left] + [compose(x, g) for g in right]
        )
        remaining -= members
        n_L = len(_orbit(alpha, lambda x: [compose(g, x) for g in left]))
        n_R = len(_orbit(alpha, lambda x: [compose(x, g) for g in right]))
        f = factorize(alpha, ordering)
        oc = orbit_c_cache.get(f.C) or orbit_of_C(mu, f.C)
        od = orbit_d_cache.get(f.D) or orbit_of_D(nu, f.D, ordering)
        for c in oc.members:
            orbit_c_cache[c] = oc
        for d in od.members:
            orbit_d_cache[d] = od
        mem = tuple(sorted(members))
        out.append(DoubleCoset(mu, nu, mem[0], mem, n_L, n_R, f.index, oc, od))
    return out


def coset_decomposition(spec: MonoidSpec, mu, nu, alpha, rule: str = "paper") -> list[tuple]:
    """Pieces ``phi_C S_mu(C) sigma S_nu(D) psi_D`` of ``S_mu alpha S_nu``.

    Returns ``(C, D, piece)`` triples; raises if the pieces overlap or do not
    cover the double coset.
    """
    mu, nu = Composition(mu), Composition(nu)
    r = spec.r
    ordering = SubsetOrdering(r, nu, rule)
    f = factorize(alpha, ordering)
    if f.index == 0:
        return [((), (), frozenset([alpha]))]
    oc = orbit_of_C(mu, f.C)
    od = orbit_of_D(nu, f.D, ordering)
    left = young_subgroup(oc.comp)
    right = young_subgroup(od.comp)
    pieces = []
    seen: set = set()
    for C in oc.members:
        for D in od.members:
            piece = frozenset(
                assemble(compose(k, compose(f.sigma, g)), C, D, r) for k in left for g in right
            )
            if seen & piece:
                raise SchurError("coset pieces overlap")
            seen |= piece
            pieces.append((C, D, piece))
    lg, rg = _left_right_gens(mu, nu)
    full = _orbit(alpha, lambda x: [compose(g, x) for g in lg] + [compose(x, g) for g in rg])
    if seen != full:
        raise SchurError("coset pieces do not cover the double coset")
    return pieces


# -- the invariant summands ----------------------------------------------------


def small_double_cosets(mu_c: Composition, nu_c: Composition) -> list[frozenset]:
    """``S_mu' \\ S_i / S_nu'`` as sets of permutations, sorted by smallest member."""
    i = mu_c.total
    left, right = young_generators(mu_c), young_generators(nu_c)
    remaining = set(young_subgroup((i,)))
    out = []
    for w in sorted(remaining):
        if w not in remaining:
            continue
        orb = _orbit(w, lambda x: [compose(g, x) for g in left] + [compose(x, g) for g in right])
        remaining -= orb
        out.append(frozenset(orb))
    return out


def semistandard_elements(lam: Partition, mu_c: Composition, nu_c: Composition) -> dict:
    """``{(S, T): sum of m_st over standard s, t with weight words S, T}``."""
    out: dict = {}
    tabs = standard_tableaux(lam)
    for s in tabs:
        S = weight_tableau(s, mu_c)
        for t in tabs:
            T = weight_tableau(t, nu_c)
            acc = out.setdefault((S, T), {})
            for w, c in murphy_element(lam, s, t).expansion.items():
                acc[w] = acc.get(w, 0) + c
    valid_S = set(semistandard_tableaux(lam, mu_c))
    valid_T = set(semistandard_tableaux(lam, nu_c))
    return {k: clean(v) for k, v in out.items() if k[0] in valid_S and k[1] in valid_T}


def summand_basis(mu_c, nu_c) -> list[tuple]:
    """Basis of the ``(S_mu', S_nu')``-invariant part of ``Z[S_i]``.

    Returns ``(lam, S, T, expansion)`` tuples; checks invariance and that the
    elements form a Z-basis of the span of the small double-coset sums.
    """
    mu_c, nu_c = Composition(mu_c), Composition(nu_c)
    i = mu_c.total
    if nu_c.total != i:
        raise ValueError("compositions must have equal weight")
    cosets = small_double_cosets(mu_c, nu_c)
    out = []
    for lam in partitions_of(i):
        for (S, T), x in sorted(semistandard_elements(lam, mu_c, nu_c).items()):
            out.append((lam, S, T, x))
    if len(out) != len(cosets):
        raise SchurError(f"{len(out)} semistandard elements for {len(cosets)} double cosets")
    matrix = [_coset_coefficients(x, cosets) for (_, _, _, x) in out]
    inverse_integer(matrix)  # unimodularity
    return out


def _coset_coefficients(x: dict, cosets: list[frozenset]) -> list[int]:
    """Write an invariant element as a combination of double-coset sums."""
    coeffs = []
    covered = 0
    for E in cosets:
        c = x.get(min(E), 0)
        if any(x.get(w, 0) != c for w in E):
            raise SchurError("element is not invariant under the Young subgroups")
        coeffs.append(c)
        covered += len(E) if c else 0
    if covered != len(x):
        raise SchurError("element has support outside the double cosets")
    return coeffs


def phi_transfer(oc: OrbitC, od: OrbitD, x: dict, ordering: SubsetOrdering) -> dict:
    """``sum over C in O_mu, D in O_nu of phi_C o x o psi_D`` as a monoid-algebra element."""
    r = ordering.r
    out: dict = {}
    for C in oc.members:
        for D in od.members:
            for sigma, c in x.items():
                a = assemble(sigma, C, D, r)
                out[a] = out.get(a, 0) + c
    return clean(out)


@dataclass
class _Summand:
    key: tuple  # (i, orbit-C key, orbit-D key)
    orbit_C: OrbitC | None
    orbit_D: OrbitD | None
    cosets: list  # representatives, columns of the change of basis
    cells: list  # (lam, S, T) rows
    elements: dict  # (lam, S, T) -> {rep: coefficient}
    inverse: list  # rows indexed by coset position


class PairData:
    """Everything about ``^mu A^nu``: cosets, summands and the semistandard change of basis."""

    def __init__(self, spec: MonoidSpec, mu, nu, rule: str = "paper"):
        self.spec = spec
        self.mu, self.nu = Composition(mu), Composition(nu)
        self.ordering = SubsetOrdering(spec.r, self.nu, rule)
        self.cosets = double_cosets(spec, self.mu, self.nu, rule)
        self.by_rep = {d.representative: d for d in self.cosets}
        self.member_rep = {m: d.representative for d in self.cosets for m in d.members}
        self._build_summands()

    def _build_summands(self):
        r = self.spec.r
        groups: dict = {}
        for d in self.cosets:
            key = (d.index, d.orbit_C.key, d.orbit_D.key)
            groups.setdefault(key, []).append(d)
        self.summands: dict = {}
        self.rep_summand: dict = {}
        for key, cos in groups.items():
            i = key[0]
            oc, od = cos[0].orbit_C, cos[0].orbit_D
            if i == 0:
                z = cos[0].representative
                cell = (EMPTY_PARTITION, (), ())
                s = _Summand(key, oc, od, [z], [cell], {cell: {z: 1}}, [[1]])
            else:
                s = self._summand(key, oc, od, cos, r)
            self.summands[key] = s
            for pos, rep in enumerate(s.cosets):
                self.rep_summand[rep] = (key, pos)

    def _summand(self, key, oc, od, cos, r):
        C0, D0 = oc.key, od.key
        mu_c, nu_c = oc.comp, od.comp
        small = small_double_cosets(mu_c, nu_c)
        small_of = {w: j for j, E in enumerate(small) for w in E}
        big_of_small: dict = {}
        for d in cos:
            hits = {
                small_of[f.sigma]
                for f in (factorize(m, self.ordering) for m in d.members)
                if f.C == C0 and f.D == D0
            }
            if len(hits) != 1:
                raise SchurError("double coset does not meet the base piece in one small coset")
            big_of_small[hits.pop()] = d.representative
        if len(big_of_small) != len(small):
            raise SchurError("transfer is not a bijection on double cosets")
        basis = summand_basis(mu_c, nu_c)
        reps = [big_of_small[j] for j in range(len(small))]
        cells, elements, matrix = [], {}, []
        for lam, S, T, x in basis:
            coeffs = _coset_coefficients(x, small)
            cell = (lam, S, T)
            cells.append(cell)
            elements[cell] = {reps[j]: c for j, c in enumerate(coeffs) if c}
            matrix.append(coeffs)
        return _Summand(key, oc, od, reps, cells, elements, inverse_integer(matrix))

    def orbits_C(self, i: int) -> list[OrbitC]:
        seen, out = set(), []
        for C in index_subsets(i, self.spec.r):
            if C not in seen:
                o = orbit_of_C(self.mu, C)
                seen.update(o.members)
                out.append(o)
        return out


# -- the algebra --------------------------------------------------------------


@dataclass(frozen=True)
class SchurSpec:
    kind: str
    r: int
    n: int | None = None
    side: str = "left"
    rule: str = "paper"

    def __post_init__(self):
        if self.side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}")
        n = self.r if self.n is None else self.n
        if n < self.r:
            raise ValueError(f"n = {n} must be at least r = {self.r}")
        object.__setattr__(self, "n", n)


class SchurAlgebra:
    """Double-coset algebra with the rescaled product of the chosen side.

    ``compositions`` defaults to all of ``Lambda(r, n)``; any list of
    compositions of ``r`` (of any length) spans a subalgebra.
    """

    def __init__(self, spec: MonoidSpec, side: str = "left", n: int | None = None,
                 compositions=None, rule: str = "paper", bound: int = MAX_RANK):
        if spec.r > bound:
            raise BoundError(f"rank {spec.r} exceeds the bound {bound}")
        if side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}")
        self.spec, self.side, self.rule = spec, side, rule
        self.r = spec.r
        self.n = self.r if n is None else n
        if self.n < self.r:
            raise ValueError(f"n = {self.n} must be at least r = {self.r}")
        if compositions is None:
            compositions = compositions_of(self.r, self.n)
        self.compositions = [Composition(c) for c in compositions]
        for c in self.compositions:
            if c.total != self.r:
                raise ValueError(f"{c} is not a composition of {self.r}")
        self._pairs: dict = {}
        self._ord_cache: dict = {}
        self._star_cache: dict = {}

    def pair(self, mu, nu) -> PairData:
        key = (Composition(mu), Composition(nu))
        if key not in self._pairs:
            self._pairs[key] = PairData(self.spec, key[0], key[1], self.rule)
        return self._pairs[key]

    def basis_keys(self) -> list:
        return [
            (mu, nu, d.representative)
            for mu in self.compositions
            for nu in self.compositions
            for d in self.pair(mu, nu).cosets
        ]

    def coset(self, key) -> DoubleCoset:
        mu, nu, rep = key
        return self.pair(mu, nu).by_rep[rep]

    def ordinary_product(self, k1, k2) -> dict:
        """``{key: a(D1, D2, D)}``; empty when the middle compositions differ."""
        (mu, nu, _), (rho, pi, rep2) = k1, k2
        if nu != rho:
            return {}
        D1, D2 = self.coset(k1), self.coset(k2)
        target = self.pair(mu, pi)
        counts: dict = {}
        for m in D1.members:
            rep = target.member_rep[compose_maps(m, rep2)]
            counts[rep] = counts.get(rep, 0) + 1
        out = {}
        for rep, c in counts.items():
            num = c * len(D2.members)
            size = len(target.by_rep[rep].members)
            if num % size:
                raise SchurError("structure constant is not an integer")
            out[(mu, pi, rep)] = num // size
        return out

    def _n(self, key) -> int:
        d = self.coset(key)
        return d.n_L if self.side == "left" else d.n_R

    def star_basis(self, k1, k2) -> dict:
        hit = self._star_cache.get((k1, k2))
        if hit is not None:
            return hit
        n1, n2 = self._n(k1), self._n(k2)
        out = {}
        for key, a in self.ordinary_product(k1, k2).items():
            v = Fraction(self._n(key) * a, n1 * n2)
            if v.denominator != 1:
                raise SchurError(f"non-integral {self.side} structure constant {v}")
            if v:
                out[key] = int(v)
        self._star_cache[(k1, k2)] = out
        return out

    def star_product(self, x: dict, y: dict) -> dict:
        acc: dict = {}
        by_left: dict = {}
        for k2, b in y.items():
            by_left.setdefault(k2[0], []).append((k2, b))
        for k1, a in x.items():
            for k2, b in by_left.get(k1[1], ()):
                for k, v in self.star_basis(k1, k2).items():
                    acc[k] = acc.get(k, 0) + a * b * v
        return clean(acc)

    def identity_candidate(self) -> dict:
        idm = identity_map(self.r)
        return {(mu, mu, self.pair(mu, mu).member_rep[idm]): 1 for mu in self.compositions}


def identity_element(alg: SchurAlgebra) -> dict:
    """The unit of the algebra, verified on every basis element."""
    e = alg.identity_candidate()
    keys = alg.basis_keys()
    if all(_acts_as_identity(alg, e, k) for k in keys):
        return e
    return _solve_identity(alg, keys)


def _acts_as_identity(alg, e, k) -> bool:
    b = {k: 1}
    return alg.star_product(e, b) == b and alg.star_product(b, e) == b


def _solve_identity(alg, keys):
    from .linalg import solve_rational

    # unknown coefficients on the S_mu-S_mu blocks; equations: e*b = b and b*e = b
    unknowns = [k for k in keys if k[0] == k[1]]
    rows, rhs = [], []
    for k in keys:
        for left in (True, False):
            cols = {}
            for j, u in enumerate(unknowns):
                prod = alg.star_basis(u, k) if left else alg.star_basis(k, u)
                for kk, v in prod.items():
                    cols.setdefault(kk, {})[j] = v
            for kk in set(cols) | {k}:
                rows.append([cols.get(kk, {}).get(j, 0) for j in range(len(unknowns))])
                rhs.append(1 if kk == k else 0)
    sol = solve_rational(rows, rhs)
    if sol is None or any(x.denominator != 1 for x in sol):
        raise SchurError("the algebra has no integral identity")
    return {u: int(x) for u, x in zip(unknowns, sol) if x}


# -- cell structure ----------------------------------------------------------


class SchurCells(CellStructure):
    """Semistandard cell basis of ``A_L`` or ``A_R``."""

    def __init__(self, spec: MonoidSpec, side: str = "left", n: int | None = None,
                 ring: RingSpec = ZZ, compositions=None, rule: str = "paper"):
        self.alg = SchurAlgebra(spec, side, n, compositions, rule)
        self.spec, self.side, self.ring, self.rule = spec, side, ring, rule
        self.r, self.n = self.alg.r, self.alg.n
        self.indices = realized_indices(spec)
        self.poset = full_poset(self.indices)
        self._left: dict = {}
        self._right: dict = {}

    @property
    def compositions(self):
        return self.alg.compositions

    def _c_orbits(self, mu, i):
        return self.alg.pair(mu, mu).orbits_C(i)

    @cached_property
    def _d_orbits(self) -> dict:
        out = {}
        for nu in self.compositions:
            ordering = SubsetOrdering(self.r, nu, self.rule)
            for i in self.indices:
                if i == 0:
                    continue
                seen, orbits = set(), []
                for D in reachable_block_families(self.spec, i, ordering):
                    if D not in seen:
                        o = orbit_of_D(nu, D, ordering)
                        seen.update(o.members)
                        orbits.append(o)
                out[(nu, i)] = orbits
        return out

    def left_index(self, lam):
        if lam not in self._left:
            if lam.index == 0:
                self._left[lam] = [(mu, (), ()) for mu in self.compositions]
            else:
                self._left[lam] = [
                    (mu, o.key, S)
                    for mu in self.compositions
                    for o in self._c_orbits(mu, lam.index)
                    for S in semistandard_tableaux(lam, o.comp)
                ]
        return self._left[lam]

    def right_index(self, lam):
        if lam not in self._right:
            if lam.index == 0:
                self._right[lam] = [(nu, (), ()) for nu in self.compositions]
            else:
                self._right[lam] = [
                    (nu, o.key, T)
                    for nu in self.compositions
                    for o in self._d_orbits[(nu, lam.index)]
                    for T in semistandard_tableaux(lam, o.comp)
                ]
        return self._right[lam]

    def cell_element(self, lam, s, t):
        (mu, oc, S), (nu, od, T) = s, t
        pair = self.alg.pair(mu, nu)
        summand = pair.summands[(lam.index, oc, od)]
        return {(mu, nu, rep): c for rep, c in summand.elements[(lam, S, T)].items()}

    def natural_basis(self):
        return self.alg.basis_keys()

    def product(self, x, y):
        return self.alg.star_product(x, y)

    def identity(self):
        return identity_element(self.alg)

    def to_cell_coords(self, x):
        buckets: dict = {}
        for (mu, nu, rep), c in x.items():
            if not c:
                continue
            pair = self.alg.pair(mu, nu)
            skey, pos = pair.rep_summand[rep]
            vec = buckets.setdefault((mu, nu, skey), {})
            vec[pos] = vec.get(pos, 0) + c
        out: dict = {}
        for (mu, nu, skey), vec in buckets.items():
            summand = self.alg.pair(mu, nu).summands[skey]
            _, oc, od = skey
            for k, cell in enumerate(summand.cells):
                v = sum(c * summand.inverse[pos][k] for pos, c in vec.items())
                if v:
                    lam, S, T = cell
                    out[(lam, (mu, oc, S), (nu, od, T))] = v
        return out

    def bracket(self, lam, s, t):
        # C[s,t] * C[s,t] vanishes unless both sides sit over the same composition
        if s[0] != t[0]:
            return 0
        return r_st(lam, s, t, self)


def schur_cell_structure(spec: MonoidSpec, r: int | None = None, n: int | None = None,
                         side: str = "left", ring: RingSpec = ZZ, rule: str = "paper") -> SchurCells:
    if r is not None and r != spec.r:
        raise ValueError("r does not match the monoid")
    return SchurCells(spec, side, n, ring, rule=rule)
