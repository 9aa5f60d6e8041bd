"""Brute-force dominant weight sets, independent of the closed-form criteria.

The dominant weights of an indecomposable module come from one of:

* the full set ``{mu dominant : mu <= omega}`` (Premet for ``p > e(G)``, and
  C_n at ``p = 2`` on ``Omega_0^+``),
* a single weight (the spin-type modules ``w_n`` of B_n/C_n at ``p = 2``),
* the pull-back of a C_n set through the special isogeny (B_n at ``p = 2``),
* a fixed table for G_2 at ``p = 2``.

A product of two modules has the zero weight iff some dominant weight of the
first factor's dual is a dominant weight of the second factor, because weight
sets are Weyl-invariant.  Nothing here calls a zero-weight criterion.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import floor

import numpy as np

from .criteria import is_tensor_indecomposable, isogeny_BC
from .root_data import LieType, cartan_matrix, e_of_G
from .weights import (
    Weight,
    dominance_geq,
    dual,
    fundamental,
    is_dominant,
    is_p_restricted,
    to_root_coords,
)

Coeffs = tuple[int, ...]

# Chunk size (rows) for the vectorised box enumeration.
_CHUNK = 1 << 18

G2_P2_UNCERTAIN = "w1 in V_w2 for G_2 at p=2 is the characteristic-0 default"
EXCEPTIONAL_SET = ("characteristic-0 dominant weights; only the zero-weight answer "
                   "(always present) is guaranteed for F_4 at p=2 and G_2 at p=3")


class UnsupportedModule(ValueError):
    pass


@dataclass(frozen=True)
class DominantWeightSet:
    t: LieType
    coeffs: frozenset[Coeffs]
    note: str | None = None
    uncertain: frozenset[Coeffs] = field(default_factory=frozenset)

    @property
    def weights(self) -> frozenset[Weight]:
        return frozenset(Weight(self.t, c) for c in self.coeffs)

    def __contains__(self, w: Weight) -> bool:
        return w.t == self.t and w.coeffs in self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def sorted(self) -> list[Weight]:
        """Members in lexicographic order of coefficients, largest first."""
        return [Weight(self.t, c) for c in sorted(self.coeffs, reverse=True)]

    def scaled(self, m: int) -> DominantWeightSet:
        def sc(c):
            return tuple(m * a for a in c)
        return DominantWeightSet(self.t, frozenset(map(sc, self.coeffs)), self.note,
                                 frozenset(map(sc, self.uncertain)))

    def to_dict(self) -> dict:
        out = {
            "type": self.t.token,
            "weights": [list(c) for c in sorted(self.coeffs, reverse=True)],
        }
        if self.note:
            out["note"] = self.note
        if self.uncertain:
            out["uncertain"] = [list(c) for c in sorted(self.uncertain, reverse=True)]
        return out


def _box_search(t: LieType, lam: Coeffs, bounds: list[int]) -> set[Coeffs]:
    n = t.rank
    cart = np.array(cartan_matrix(t), dtype=np.int64)
    lam_v = np.array(lam, dtype=np.int64)
    # Enumerate the last n-1 coordinates as a block, loop over the first.
    tail = [np.arange(b + 1, dtype=np.int64) for b in bounds[1:]]
    if tail:
        grid = np.stack(np.meshgrid(*tail, indexing="ij"), axis=-1).reshape(-1, n - 1)
        tail_shift = grid @ cart[1:]
    else:
        tail_shift = np.zeros((1, n), dtype=np.int64)
    out: set[Coeffs] = set()
    for b0 in range(bounds[0] + 1):
        base = lam_v - b0 * cart[0]
        for start in range(0, len(tail_shift), _CHUNK):
            mu = base - tail_shift[start:start + _CHUNK]
            keep = mu[(mu >= 0).all(axis=1)]
            out.update(map(tuple, keep.tolist()))
    return out


@lru_cache(maxsize=None)
def _subweights(t: LieType, lam: Coeffs) -> frozenset[Coeffs]:
    c = to_root_coords(Weight(t, lam)).coords
    bounds = [floor(x) for x in c]
    return frozenset(_box_search(t, lam, bounds))


def dominant_subweights(lam: Weight) -> DominantWeightSet:
    """All dominant ``mu`` with ``mu <= lam``, by exhaustive search.

    ``lam - mu = sum b_k alpha_k`` with ``0 <= b_k <= c_k(lam)``, since the
    inverse Cartan matrix is entrywise positive and so every dominant ``mu``
    has non-negative root coordinates.
    """
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return DominantWeightSet(lam.t, _subweights(lam.t, lam.coeffs))


def _g2_p2_table(t: LieType, w: Coeffs) -> DominantWeightSet:
    table = {
        (1, 0): {(1, 0)},
        (0, 1): {(0, 1), (1, 0), (0, 0)},
        (1, 1): {(1, 1), (2, 0), (0, 1), (1, 0), (0, 0)},
        (0, 0): {(0, 0)},
    }
    uncertain = frozenset({(1, 0)}) if w == (0, 1) else frozenset()
    return DominantWeightSet(t, frozenset(table[w]), G2_P2_UNCERTAIN if uncertain else None,
                             uncertain)


@lru_cache(maxsize=None)
def _restricted_module(t: LieType, p: int, w: Coeffs) -> DominantWeightSet:
    n = t.rank
    wt = Weight(t, w)
    fam = t.family
    if p > e_of_G(t) or not any(w):
        return dominant_subweights(wt)
    if fam == "C" and p == 2:
        if wt == fundamental(t, n):
            return DominantWeightSet(t, frozenset({w}))
        if w[-1] == 0:
            return dominant_subweights(wt)
    if fam == "B" and p == 2:
        if wt == fundamental(t, n):
            return DominantWeightSet(t, frozenset({w}))
        if w[-1] == 0:
            c_set = _restricted_module(LieType("C", n), 2, w)
            pulled = {isogeny_BC(Weight(c_set.t, c)).coeffs for c in c_set.coeffs}
            return DominantWeightSet(t, frozenset(pulled))
    if fam == "G" and p == 2:
        return _g2_p2_table(t, w)
    if (fam == "F" and p == 2) or (fam == "G" and p == 3):
        base = dominant_subweights(wt)
        return DominantWeightSet(t, base.coeffs, EXCEPTIONAL_SET)
    raise UnsupportedModule(f"no weight-set description for {t}, p={p}, {wt.pretty()}")


def module_dominant_weights(t: LieType, p: int, w: Weight) -> DominantWeightSet:
    """Dominant weights of the tensor-indecomposable module ``V_w``."""
    if w.t != t:
        raise ValueError(f"weight of type {w.t} used with {t}")
    if not is_dominant(w):
        raise ValueError(f"{w} is not dominant")
    twist, rest = 0, w
    while any(rest.coeffs) and all(a % p == 0 for a in rest.coeffs):
        twist += 1
        rest = Weight(t, tuple(a // p for a in rest.coeffs))
    if not is_p_restricted(rest, p) or not is_tensor_indecomposable(t, p, rest):
        raise ValueError(f"V_{w.pretty()} is tensor-decomposable for p={p}")
    base = _restricted_module(t, p, rest.coeffs)
    return base.scaled(p ** twist) if twist else base


@lru_cache(maxsize=None)
def _dual_set(t: LieType, p: int, w: Coeffs) -> frozenset[Coeffs]:
    base = _restricted_module(t, p, w)
    return frozenset(dual(Weight(t, c)).coeffs for c in base.coeffs)


@lru_cache(maxsize=None)
def _divisible_part(t: LieType, p: int, w: Coeffs, m: int) -> frozenset[Coeffs]:
    """Members of the dual set divisible by ``m``, divided by ``m``."""
    return frozenset(tuple(a // m for a in c) for c in _dual_set(t, p, w)
                     if all(a % m == 0 for a in c))


def tensor_has_zero_weight(t: LieType, p: int, factor1: tuple[int, Weight],
                           factor2: tuple[int, Weight]) -> bool:
    """Zero weight in ``V_{p^s1 w1} (x) V_{p^s2 w2}`` by set intersection.

    Factors are ``(twist, p-restricted weight)`` pairs.
    """
    for s, w in (factor1, factor2):
        if w.t != t or s < 0:
            raise ValueError("bad factor")
        if w.is_zero():
            raise ValueError("factors must be non-trivial")
        if not is_p_restricted(w, p) or not is_tensor_indecomposable(t, p, w):
            raise ValueError(f"V_{w.pretty()} is not a restricted indecomposable factor")
    (s1, w1), (s2, w2) = sorted([factor1, factor2], key=lambda f: f[0])
    # Common dominant weights of V_{p^s1 w1}* and V_{p^s2 w2}; divide through by p^s1.
    gap = p ** (s2 - s1)
    left = _divisible_part(t, p, w1.coeffs, gap)
    right = _restricted_module(t, p, w2.coeffs).coeffs
    if len(left) > len(right):
        left, right = right, left
    return any(c in right for c in left)


def minimum_element(ws: DominantWeightSet) -> Weight:
    """The unique ``<=``-minimal element; raises if there is none."""
    members = ws.sorted()
    cand = min(members, key=lambda m: sum(to_root_coords(m).coords))
    if not all(dominance_geq(x, cand) for x in members):
        raise ValueError("weight set has no unique minimal element")
    return cand
