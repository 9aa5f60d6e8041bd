"""Weights in the fundamental basis and the dominance order.

A :class:`Weight` is an integer vector ``(a_1, ..., a_n)`` meaning
``sum a_i omega_i``.  Root coordinates are exact rationals.  Binary
operations refuse to mix weights of different types.

The hot paths (radicality, dominance, inner products) run on integer
numerators over a common denominator, so exhaustive sweeps stay fast without
leaving exact arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .root_data import (
    LieType,
    cartan_matrix,
    dual_permutation,
    scaled_gram,
    scaled_inverse_cartan,
)


class TypeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    t: LieType
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.t.rank:
            raise ValueError(
                f"{self.t} weights have {self.t.rank} coefficients, got {len(self.coeffs)}")

    @classmethod
    def of(cls, t: LieType, coeffs: Iterable[int]) -> Weight:
        return cls(t, tuple(int(a) for a in coeffs))

    @classmethod
    def parse(cls, text: str) -> Weight:
        """Parse the text format ``"C:3 1,0,2"``."""
        parts = text.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'TYPE:RANK a1,...,an', got {text!r}")
        return parse_coeffs(LieType.parse(parts[0]), parts[1])

    def __str__(self):
        return f"{self.t.token} {','.join(map(str, self.coeffs))}"

    def __getitem__(self, k: int) -> int:
        """1-based coefficient access."""
        if not 1 <= k <= self.t.rank:
            raise IndexError(k)
        return self.coeffs[k - 1]

    def __add__(self, other: Weight) -> Weight:
        return add(self, other)

    def __sub__(self, other: Weight) -> Weight:
        return sub(self, other)

    def __mul__(self, m: int) -> Weight:
        return scale(self, m)

    __rmul__ = __mul__

    def __neg__(self) -> Weight:
        return scale(self, -1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def pretty(self) -> str:
        """Human-readable form such as ``w1+2w3`` (``0`` for the zero weight)."""
        terms = []
        for k, a in enumerate(self.coeffs, 1):
            if a == 0:
                continue
            coef = "" if a == 1 else "-" if a == -1 else str(a)
            terms.append(f"{coef}w{k}")
        return "+".join(terms).replace("+-", "-") or "0"


@dataclass(frozen=True)
class RootCoords:
    t: LieType
    coords: tuple[Fraction, ...]

    def to_weight(self) -> Weight:
        """Multiply back through the Cartan matrix; fails unless integral."""
        c = cartan_matrix(self.t)
        n = self.t.rank
        out = []
        for j in range(n):
            s = sum(self.coords[k] * c[k][j] for k in range(n))
            if s.denominator != 1:
                raise ValueError("root coordinates do not give an integral weight")
            out.append(int(s))
        return Weight(self.t, tuple(out))


def parse_coeffs(t: LieType, csv: str) -> Weight:
    try:
        coeffs = tuple(int(x) for x in csv.split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight coefficients {csv!r}") from None
    return Weight(t, coeffs)


def zero(t: LieType) -> Weight:
    return Weight(t, (0,) * t.rank)


def fundamental(t: LieType, j: int) -> Weight:
    if not 1 <= j <= t.rank:
        raise IndexError(f"node {j} out of range for {t}")
    return Weight(t, tuple(int(k == j) for k in t.nodes()))


def _same_type(u: Weight, v: Weight) -> None:
    if u.t != v.t:
        raise TypeMismatch(f"cannot combine a {u.t} weight with a {v.t} weight")


def add(u: Weight, v: Weight) -> Weight:
    _same_type(u, v)
    return Weight(u.t, tuple(a + b for a, b in zip(u.coeffs, v.coeffs)))


def sub(u: Weight, v: Weight) -> Weight:
    _same_type(u, v)
    return Weight(u.t, tuple(a - b for a, b in zip(u.coeffs, v.coeffs)))


def scale(w: Weight, m: int) -> Weight:
    return Weight(w.t, tuple(m * a for a in w.coeffs))


def is_dominant(w: Weight) -> bool:
    return all(a >= 0 for a in w.coeffs)


def is_p_restricted(w: Weight, p: int) -> bool:
    return all(0 <= a < p for a in w.coeffs)


def _root_numerators(t: LieType, coeffs: Sequence[int]) -> tuple[list[int], int]:
    nmat, den = scaled_inverse_cartan(t)
    n = t.rank
    nums = [0] * n
    for i, a in enumerate(coeffs):
        if a:
            row = nmat[i]
            for k in range(n):
                nums[k] += a * row[k]
    return nums, den


def to_root_coords(w: Weight) -> RootCoords:
    """``c_k = sum_i a_i d_ik`` so that ``w = sum_k c_k alpha_k``."""
    nums, den = _root_numerators(w.t, w.coeffs)
    return RootCoords(w.t, tuple(Fraction(x, den) for x in nums))


def is_radical(w: Weight) -> bool:
    """True iff ``w`` lies in the root lattice (all root coordinates integral)."""
    nums, den = _root_numerators(w.t, w.coeffs)
    return all(x % den == 0 for x in nums)


def is_radical_by_table(w: Weight) -> bool:
    """Root-lattice membership via the per-type congruences on ``a_1..a_n``.

    Independent of :func:`is_radical`; the two are cross-checked in tests.
    """
    t, a = w.t, (0,) + w.coeffs  # 1-based
    n = t.rank
    fam = t.family
    if fam == "A":
        return sum(i * a[i] for i in range(1, n + 1)) % (n + 1) == 0
    if fam == "B":
        return a[n] % 2 == 0
    if fam == "C":
        return sum(i * a[i] for i in range(1, n + 1)) % 2 == 0
    if fam == "D":
        odd = sum(a[k] for k in range(1, n - 1, 2))
        if n % 2 == 0:
            return (odd - a[n - 1]) % 2 == 0 and (a[n - 1] - a[n]) % 2 == 0
        return (2 * odd + a[n - 1] - a[n]) % 4 == 0
    if fam == "E":
        if n == 6:
            return (a[1] - a[3] + a[5] - a[6]) % 3 == 0
        if n == 7:
            return (a[2] + a[5] + a[7]) % 2 == 0
        return True
    return True  # F_4, G_2


def inner(u: Weight, v: Weight) -> Fraction:
    """``(u, v) = sum_ij a_i b_j e_ij``."""
    _same_type(u, v)
    emat, den = scaled_gram(u.t)
    total = 0
    for i, a in enumerate(u.coeffs):
        if a:
            row = emat[i]
            total += a * sum(b * e for b, e in zip(v.coeffs, row))
    return Fraction(total, den)


def dominance_geq(u: Weight, v: Weight) -> bool:
    """``u >= v``: ``u - v`` is a non-negative integral combination of simple roots."""
    _same_type(u, v)
    diff = [a - b for a, b in zip(u.coeffs, v.coeffs)]
    nums, den = _root_numerators(u.t, diff)
    return all(x >= 0 and x % den == 0 for x in nums)


def dominates_multiple_fundamental(w: Weight, m: int, j: int) -> bool:
    """``w >= m*omega_j`` decided by radicality plus one inner-product inequality.

    For dominant ``w``, radicality of ``w - m omega_j`` together with
    ``(w, omega_j) >= m (omega_j, omega_j)`` already forces every root
    coordinate of the difference to be non-negative, so the result agrees
    with :func:`dominance_geq`.  For non-dominant ``w`` it need not
    (A_2: ``-2w1+2w2`` against ``w2``).
    """
    if m <= 0:
        raise ValueError("m must be positive")
    wj = fundamental(w.t, j)
    if not is_radical(w - m * wj):
        return False
    return inner(w, wj) >= m * inner(wj, wj)


def dual(w: Weight) -> Weight:
    """Highest weight of the dual module."""
    perm = dual_permutation(w.t)
    return Weight(w.t, tuple(w.coeffs[k - 1] for k in perm))


def p_adic_expansion(w: Weight, p: int) -> list[Weight]:
    """Digits ``[l_0, ..., l_k]`` with ``w = sum p^s l_s``; empty for ``w = 0``."""
    if p < 2:
        raise ValueError("p must be at least 2")
    if not is_dominant(w):
        raise ValueError(f"p-adic expansion needs a dominant weight, got {w}")
    digits = []
    rest = list(w.coeffs)
    while any(rest):
        digits.append(Weight(w.t, tuple(a % p for a in rest)))
        rest = [a // p for a in rest]
    return digits

