"""Exact root-system data for the simple types A-G in Bourbaki numbering.

Everything here is derived from the Cartan matrix: the inverse Cartan
matrix is obtained by exact Gauss-Jordan elimination over the rationals and
the Gram matrix of the fundamental weights follows from the half squared
lengths of the simple roots.  Long simple roots have squared length 2,
except in C_n and G_2 where the short roots are normalised to 2.

D_3 is accepted and handled with the D-family formulas (it is A_3 with the
middle node relabelled as node 1).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

IntMatrix = tuple[tuple[int, ...], ...]
RationalMatrix = tuple[tuple[Fraction, ...], ...]

FAMILIES = "ABCDEFG"
DEFAULT_MAX_RANK = 64

_rank_cap: int | None = None


def max_rank() -> int:
    """Current rank cap: explicit override, else ``WZK_MAX_RANK``, else 64."""
    if _rank_cap is not None:
        return _rank_cap
    env = os.environ.get("WZK_MAX_RANK")
    if env:
        return int(env)
    return DEFAULT_MAX_RANK


def set_max_rank(cap: int | None) -> None:
    global _rank_cap
    if cap is not None and cap < 1:
        raise ValueError("rank cap must be positive")
    _rank_cap = cap


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        n = self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[self.family]
        if not ok:
            raise ValueError(f"invalid rank {n} for family {self.family}")
        if n > max_rank():
            raise ValueError(f"rank {n} exceeds the rank cap {max_rank()}")

    @classmethod
    def parse(cls, token: str) -> LieType:
        """Parse ``"C:3"`` (also accepts ``"C3"``)."""
        token = token.strip()
        if ":" in token:
            fam, _, rk = token.partition(":")
        else:
            fam, rk = token[:1], token[1:]
        try:
            rank = int(rk)
        except ValueError:
            raise ValueError(f"cannot parse Lie type {token!r}") from None
        return cls(fam.strip().upper(), rank)

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def token(self) -> str:
        return f"{self.family}:{self.rank}"

    def nodes(self) -> range:
        return range(1, self.rank + 1)


def _check_node(t: LieType, k: int) -> None:
    if not 1 <= k <= t.rank:
        raise IndexError(f"node {k} out of range for {t}")


@lru_cache(maxsize=None)
def cartan_matrix(t: LieType) -> IntMatrix:
    """Cartan matrix with entries ``C[i][j] = 2(a_i, a_j)/(a_j, a_j)``.

    Row i expresses the simple root ``alpha_i`` in the fundamental basis.
    """
    n = t.rank
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2

    def link(i, j, cij=-1, cji=-1):
        c[i - 1][j - 1] = cij
        c[j - 1][i - 1] = cji

    fam = t.family
    if fam in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if fam == "B":
            link(n - 1, n, -2, -1)
        elif fam == "C":
            link(n - 1, n, -1, -2)
    elif fam == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif fam == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif fam == "F":
        link(1, 2)
        link(2, 3, -2, -1)
        link(3, 4)
    elif fam == "G":
        link(1, 2, -1, -3)
    return tuple(tuple(row) for row in c)


def _invert(m: IntMatrix) -> RationalMatrix:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@lru_cache(maxsize=None)
def inverse_cartan(t: LieType) -> RationalMatrix:
    """Matrix ``(d_ij)`` with ``omega_i = sum_j d_ij alpha_j``."""
    return _invert(cartan_matrix(t))


@lru_cache(maxsize=None)
def half_root_lengths(t: LieType) -> tuple[Fraction, ...]:
    h = [Fraction(1)] * t.rank
    n = t.rank
    if t.family == "B":
        h[n - 1] = Fraction(1, 2)
    elif t.family == "C":
        h[n - 1] = Fraction(2)
    elif t.family == "F":
        h[2] = h[3] = Fraction(1, 2)
    elif t.family == "G":
        h[1] = Fraction(3)
    return tuple(h)


def half_root_length(t: LieType, k: int) -> Fraction:
    """``(alpha_k, alpha_k)/2`` for the 1-based node ``k``."""
    _check_node(t, k)
    return half_root_lengths(t)[k - 1]


@lru_cache(maxsize=None)
def gram_fundamental(t: LieType) -> RationalMatrix:
    """Gram matrix ``e_jk = (omega_j, omega_k) = h_k * d_jk``."""
    d = inverse_cartan(t)
    h = half_root_lengths(t)
    return tuple(tuple(h[k] * row[k] for k in range(t.rank)) for row in d)


def short_nodes(t: LieType) -> tuple[int, ...]:
    h = half_root_lengths(t)
    top = max(h)
    return tuple(k for k in t.nodes() if h[k - 1] < top)


def long_nodes(t: LieType) -> tuple[int, ...]:
    h = half_root_lengths(t)
    top = max(h)
    return tuple(k for k in t.nodes() if h[k - 1] == top)


def miniscule_weights(t: LieType) -> tuple[int, ...]:
    n = t.rank
    return {
        "A": tuple(range(1, n + 1)),
        "B": (n,),
        "C": (1,),
        "D": (1, n - 1, n),
        "E": {6: (1, 6), 7: (7,), 8: ()}[n] if t.family == "E" else (),
        "F": (),
        "G": (),
    }[t.family]


def e_of_G(t: LieType) -> int:
    """Squared length ratio of long to short roots."""
    return {"A": 1, "D": 1, "E": 1, "B": 2, "C": 2, "F": 2, "G": 3}[t.family]


@lru_cache(maxsize=None)
def dual_permutation(t: LieType) -> tuple[int, ...]:
    """Permutation ``pi`` (1-based) with ``(lambda*)_k = lambda_{pi(k)}``."""
    n = t.rank
    perm = list(range(1, n + 1))
    if t.family == "A":
        perm.reverse()
    elif t.family == "D" and n % 2 == 1:
        perm[n - 2], perm[n - 1] = n, n - 1
    elif t.family == "E" and n == 6:
        perm = [6, 2, 5, 4, 3, 1]
    return tuple(perm)


def _scaled(m: RationalMatrix) -> tuple[IntMatrix, int]:
    den = lcm(*(x.denominator for row in m for x in row))
    return tuple(tuple(int(x * den) for x in row) for row in m), den


@lru_cache(maxsize=None)
def scaled_inverse_cartan(t: LieType) -> tuple[IntMatrix, int]:
    """Integer matrix ``N`` and ``den`` with ``inverse_cartan(t) == N/den``."""
    return _scaled(inverse_cartan(t))


@lru_cache(maxsize=None)
def scaled_gram(t: LieType) -> tuple[IntMatrix, int]:
    return _scaled(gram_fundamental(t))


def supported_types(max_rank_: int = 8) -> list[LieType]:
    """All valid types of rank at most ``max_rank_``, ordered by family then rank."""
    out = []
    for fam, lo in zip(FAMILIES, (1, 2, 2, 3, 6, 4, 2)):
        for n in range(lo, max_rank_ + 1):
            try:
                out.append(LieType(fam, n))
            except ValueError:
                continue
    return out
