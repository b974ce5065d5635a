"""Exact dense linear algebra over the integers, the rationals and prime fields.

Matrices are lists of rows of Python ints (or Fractions).  Nothing here ever
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RingSpec:
    """Coefficient ring: ``integers``, ``rationals`` or ``prime`` (with ``p``)."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("integers", "rationals", "prime"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "prime" and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "prime" else 0

    @property
    def is_field(self) -> bool:
        return self.kind != "integers"

    def reduce(self, x: int) -> int:
        return x % self.p if self.kind == "prime" else x

    def label(self) -> str:
        return {"integers": "ZZ", "rationals": "QQ"}.get(self.kind, f"GF({self.p})")

    @classmethod
    def from_char(cls, char: int) -> "RingSpec":
        return cls("rationals") if char == 0 else cls("prime", char)


ZZ = RingSpec("integers")
QQ = RingSpec("rationals")


def GF(p: int) -> RingSpec:
    return RingSpec("prime", p)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def rank_integer(matrix) -> int:
    """Rank over QQ by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, rows):
            f = a[i][c]
            row_i, row_r = a[i], a[rank]
            for j in range(c, cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def rank_mod_p(matrix, p: int) -> int:
    a = [[x % p for x in row] for row in matrix]
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(rows):
            if i != rank and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def rank_over(matrix, ring: RingSpec) -> int:
    if ring.kind == "prime":
        return rank_mod_p(matrix, ring.p)
    return rank_integer(matrix)


def inverse_exact(matrix) -> list[list[Fraction]]:
    """Inverse over QQ by Gauss-Jordan; raises ``ValueError`` if singular."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def inverse_integer(matrix) -> list[list[int]]:
    """Inverse of a unimodular integer matrix; raises if the inverse is not integral."""
    inv = inverse_exact(matrix)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("change of basis is not invertible over the integers")
        out.append([int(x) for x in row])
    return out


def determinant(matrix) -> int:
    """Integer determinant by Bareiss elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) // prev
        prev = a[c][c]
    return sign * a[n - 1][n - 1]


def nullspace_dim(matrix, ring: RingSpec) -> int:
    cols = len(matrix[0]) if matrix else 0
    return cols - rank_over(matrix, ring)


def matmul(a, b):
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def solve_rational(matrix, rhs) -> list[Fraction] | None:
    """Some solution of ``matrix @ x == rhs`` over QQ, or ``None``."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    if any(a[i][cols] != 0 for i in range(r, rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    return x
