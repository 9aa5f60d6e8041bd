"""Closed-form zero-weight criteria for irreducible modules in characteristic p.

The module ``V_lambda`` is reduced by Frobenius to ``lambda / p^k`` and then
classified as a product of tensor-indecomposable factors (Steinberg).  For a
product of exactly two factors the zero weight is decided by:

* ``p > e(G)``: ``lambda`` radical, and either the upper factor is radical or
  the dual of the lower factor dominates ``p^i`` times the miniscule weight
  below the upper factor;
* ``C_n``, ``p = 2``: the three patterns for ``Omega_0^+`` / ``omega_n``
  factors, and never when the lower factor is ``omega_n``;
* ``B_n``, ``p = 2``: transport to ``C_n`` through the special isogeny;
* ``G_2``, ``p = 2``: ``omega_1`` must not be a factor, with one exception;
* ``F_4``, ``p = 2`` and ``G_2``, ``p = 3``: always.

Every :class:`Decision` carries a trace of the facts that were evaluated and
the label of the single terminal case that produced the verdict.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .root_data import (
    LieType,
    e_of_G,
    gram_fundamental,
    inverse_cartan,
    long_nodes,
    miniscule_weights,
    short_nodes,
)
from .weights import (
    Weight,
    dominance_geq,
    dominates_multiple_fundamental,
    dual,
    fundamental,
    inner,
    is_dominant,
    is_p_restricted,
    is_radical,
    p_adic_expansion,
    zero,
)


class ShapeCase(str, Enum):
    GENERIC = "GENERIC"
    BC1 = "BC1"  # i = 0, lambda0 in Omega_0^+, lambda1 = w_n
    BC2 = "BC2"  # i >= 1, lambda0 in Omega_0^+, lambda1 = w_n
    BC3 = "BC3"  # i >= 1, both in Omega_0^+
    BC4 = "BC4"  # i >= 1, both w_n
    BC5 = "BC5"  # i >= 1, lambda0 = w_n, lambda1 in Omega_0^+
    EG_SHORTLONG = "EG_SHORTLONG"


class NotTwoFactor(ValueError):
    """``V_lambda`` is not a product of exactly two non-trivial indecomposables."""

    def __init__(self, reason: str, n_factors: int):
        super().__init__(reason)
        self.reason = reason
        self.n_factors = n_factors


class Decomposable(ValueError):
    pass


# Terminal case labels.
NOT_RADICAL = "highest weight not radical"
GENERIC_TOP_RADICAL = "p > e(G): upper factor radical"
GENERIC_WITNESS = "p > e(G): dual of lower factor against miniscule witness"
C_TOP_SPIN = "C_n, p=2: upper factor w_n, lower factor in Omega_0^+"
C_TOP_RADICAL = "C_n, p=2: both factors in Omega_0^+, upper factor radical"
C_TOP_W1 = "C_n, p=2: both factors in Omega_0^+, upper factor dominates w_1"
C_BOTTOM_SPIN = "C_n, p=2: lower factor w_n"
B_VIA_C = "B_n, p=2 via special isogeny to C_n"
G2_NO_W1 = "G_2, p=2: w_1 is not a factor"
G2_EXCEPTION = "G_2, p=2: i=1, lambda0=w1+w2, lambda1=w1"
G2_W1 = "G_2, p=2: w_1 is a factor"
ALWAYS = "F_4 at p=2 / G_2 at p=3: every irreducible module has weight 0"

IND_RADICAL = "indecomposable: radical"
IND_C_SPIN = "indecomposable: C_n, p=2, n even, w_n"
IND_B_OMEGA0 = "indecomposable: B_n, p=2, Omega_0^+ with non-radical C_n image"
IND_G2_W1 = "indecomposable: G_2, p=2, w_1"


@dataclass(frozen=True)
class TensorShape:
    """``lambda = p^k (lambda0 + p^i lambda1)`` with both digits non-zero."""

    t: LieType
    p: int
    k: int
    i: int
    lam0: Weight
    lam1: Weight
    case: ShapeCase

    @property
    def reduced(self) -> Weight:
        """``lambda0 + p^i lambda1``."""
        return self.lam0 + self.p ** self.i * self.lam1

    @property
    def weight(self) -> Weight:
        return self.p ** self.k * self.reduced

    def factors(self) -> tuple[tuple[int, Weight], tuple[int, Weight]]:
        """The two tensor factors as ``(Frobenius twist, restricted weight)``."""
        return (self.k, self.lam0), (self.k + self.i, self.lam1)

    def to_dict(self) -> dict:
        return {
            "type": self.t.token,
            "p": self.p,
            "case": self.case.value,
            "k": self.k,
            "i": self.i,
            "lambda0": list(self.lam0.coeffs),
            "lambda1": list(self.lam1.coeffs),
        }


@dataclass
class Decision:
    has_zero_weight: bool
    case: str
    trace: list[tuple[str, str]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "has_zero_weight": self.has_zero_weight,
            "case": self.case,
            "trace": [list(pair) for pair in self.trace],
        }


def _b(x: bool) -> str:
    return "true" if x else "false"


# --- minor inequality -----------------------------------------------------

def minor_inequality(t: LieType, i: int, j: int, k: int, matrix: str = "gram") -> bool:
    """``m_ij m_kk >= m_ik m_kj`` for the Gram matrix or the inverse Cartan matrix."""
    if matrix == "gram":
        m = gram_fundamental(t)
    elif matrix == "inverse":
        m = inverse_cartan(t)
    else:
        raise ValueError(f"unknown matrix {matrix!r}")
    for x in (i, j, k):
        if not 1 <= x <= t.rank:
            raise IndexError(f"node {x} out of range for {t}")
    i, j, k = i - 1, j - 1, k - 1
    return m[i][j] * m[k][k] >= m[i][k] * m[k][j]


def check_an5_all(t: LieType) -> bool:
    """The minor inequality over all n^3 triples, for both matrices."""
    n = t.rank
    for name in ("gram", "inverse"):
        m = gram_fundamental(t) if name == "gram" else inverse_cartan(t)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if m[i][j] * m[k][k] < m[i][k] * m[k][j]:
                        return False
    return True


# --- B_n / C_n relabelling and the special isogenies -----------------------

def _require(w: Weight, family: str) -> None:
    if w.t.family != family:
        raise ValueError(f"expected a {family}_n weight, got {w.t}")


def as_type_c(w: Weight) -> Weight:
    """``lambda^C``: the same coefficients read as a C_n weight."""
    _require(w, "B")
    return Weight(LieType("C", w.t.rank), w.coeffs)


def as_type_b(w: Weight) -> Weight:
    _require(w, "C")
    return Weight(LieType("B", w.t.rank), w.coeffs)


def isogeny_CB(lam_b: Weight) -> Weight:
    """Comorphism of ``C_n -> B_n``: doubles the long-node coefficients of B_n."""
    _require(lam_b, "B")
    a = lam_b.coeffs
    return Weight(LieType("C", lam_b.t.rank), tuple(2 * x for x in a[:-1]) + (a[-1],))


def isogeny_BC(lam_c: Weight) -> Weight:
    """Comorphism of ``B_n -> C_n``: doubles the coefficient of ``w_n``."""
    _require(lam_c, "C")
    a = lam_c.coeffs
    return Weight(LieType("B", lam_c.t.rank), a[:-1] + (2 * a[-1],))


# --- tensor structure -----------------------------------------------------

def in_omega0(w: Weight) -> bool:
    """Dominant with last coefficient zero."""
    return is_dominant(w) and w.coeffs[-1] == 0


def _support_part(w: Weight, nodes) -> Weight:
    keep = set(nodes)
    return Weight(w.t, tuple(a if k in keep else 0 for k, a in enumerate(w.coeffs, 1)))


def _splits(t: LieType, p: int, w: Weight) -> bool:
    if p != e_of_G(t):
        return False
    short = any(w[k] for k in short_nodes(t))
    long_ = any(w[k] for k in long_nodes(t))
    return short and long_


def is_tensor_indecomposable(t: LieType, p: int, w: Weight) -> bool:
    """Whether the restricted module ``V_w`` is tensor-indecomposable.

    Only when ``p = e(G)`` can it split, namely into its short-node part and
    its long-node part.
    """
    if w.t != t:
        raise ValueError(f"weight of type {w.t} used with {t}")
    if not (is_dominant(w) and is_p_restricted(w, p)):
        raise ValueError(f"{w} is not {p}-restricted dominant")
    return not _splits(t, p, w)


def _split(t: LieType, w: Weight) -> tuple[Weight, Weight]:
    if t.family in "BC":
        n = t.rank
        return _support_part(w, range(1, n)), _support_part(w, (n,))
    return _support_part(w, short_nodes(t)), _support_part(w, long_nodes(t))


def tensor_factors(t: LieType, p: int, lam: Weight) -> list[tuple[int, Weight]]:
    """Tensor-indecomposable factors of ``V_lam`` as ``(twist, restricted weight)``."""
    if lam.t != t:
        raise ValueError(f"weight of type {lam.t} used with {t}")
    out = []
    for s, d in enumerate(p_adic_expansion(lam, p)):
        if d.is_zero():
            continue
        if _splits(t, p, d):
            lo, hi = _split(t, d)
            out += [(s, lo), (s, hi)]
        else:
            out.append((s, d))
    return out


def _bc_case(t: LieType, lam0: Weight, lam1: Weight, i: int) -> ShapeCase:
    wn = fundamental(t, t.rank)
    if i == 0:
        return ShapeCase.BC1
    if in_omega0(lam0):
        return ShapeCase.BC2 if lam1 == wn else ShapeCase.BC3
    return ShapeCase.BC4 if lam1 == wn else ShapeCase.BC5


def classify_two_factor(t: LieType, p: int, lam: Weight) -> TensorShape:
    """Recognise ``V_lam`` as a product of exactly two indecomposables.

    Raises :class:`NotTwoFactor` for the trivial module, indecomposable
    modules and products of three or more factors.
    """
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    factors = tensor_factors(t, p, lam)
    if not factors:
        raise NotTwoFactor("trivial module (zero highest weight)", 0)
    if len(factors) == 1:
        raise NotTwoFactor("tensor-indecomposable module", 1)
    if len(factors) > 2:
        raise NotTwoFactor(f"{len(factors)} tensor factors", len(factors))
    (s0, lam0), (s1, lam1) = factors
    k, i = s0, s1 - s0
    if p == 2 and t.family in "BC":
        case = _bc_case(t, lam0, lam1, i)
    elif i == 0:
        case = ShapeCase.EG_SHORTLONG
    else:
        case = ShapeCase.GENERIC
    return TensorShape(t, p, k, i, lam0, lam1, case)


# --- miniscule witnesses and minimal dominant weights ----------------------

def miniscule_witness(w: Weight) -> int:
    """The unique miniscule node ``j`` with ``w >= omega_j`` (``w`` non-radical)."""
    hits = [j for j in miniscule_weights(w.t) if dominance_geq(w, fundamental(w.t, j))]
    if len(hits) != 1:
        raise AssertionError(f"expected one miniscule weight below {w}, found {hits}")
    return hits[0]


def _strip_twist(t: LieType, p: int, w: Weight) -> tuple[int, Weight]:
    digits = p_adic_expansion(w, p)
    nonzero = [(s, d) for s, d in enumerate(digits) if not d.is_zero()]
    if not nonzero:
        return 0, zero(t)
    if len(nonzero) > 1 or not is_tensor_indecomposable(t, p, nonzero[0][1]):
        raise Decomposable(f"V_{w.pretty()} is tensor-decomposable for p={p}")
    return nonzero[0]


def minimal_dominant_weight(t: LieType, p: int, w: Weight) -> Weight:
    """The unique minimal dominant weight of the indecomposable module ``V_w``."""
    k, wr = _strip_twist(t, p, w)
    n = t.rank
    if wr.is_zero():
        res = wr
    elif p == 2 and t.family == "C" and wr == fundamental(t, n):
        res = wr
    elif p == 2 and t.family == "B" and in_omega0(wr):
        res = zero(t) if is_radical(as_type_c(wr)) else fundamental(t, 1)
    elif p == 2 and t.family == "G" and wr == fundamental(t, 1):
        res = wr
    elif is_radical(wr):
        res = zero(t)
    else:
        res = fundamental(t, miniscule_witness(wr))
    return p ** k * res


def zero_weight_indecomposable(t: LieType, p: int, w: Weight) -> Decision:
    k, wr = _strip_twist(t, p, w)
    n = t.rank
    trace = [("ω", w.pretty()), ("Frobenius twist k", str(k)), ("restricted part", wr.pretty())]
    rad = is_radical(wr)
    trace.append(("ω radical", _b(rad)))
    if not rad:
        return Decision(False, NOT_RADICAL, trace)
    if p == 2 and t.family == "C" and n % 2 == 0 and wr == fundamental(t, n):
        return Decision(False, IND_C_SPIN, trace)
    if p == 2 and t.family == "B" and in_omega0(wr) and not wr.is_zero():
        crad = is_radical(as_type_c(wr))
        trace.append(("ω^C radical in C_n", _b(crad)))
        if not crad:
            return Decision(False, IND_B_OMEGA0, trace)
    if p == 2 and t.family == "G" and wr == fundamental(t, 1):
        return Decision(False, IND_G2_W1, trace)
    return Decision(True, IND_RADICAL, trace)


# --- explicit inequality rows ---------------------------------------------

def table1_inequality(t: LieType, lam0: Weight, j: int, p: int, i: int) -> bool:
    """``(lambda0*, w_j) >= p^i (w_j, w_j)`` written out in the coefficients of lambda0."""
    if j not in miniscule_weights(t):
        raise ValueError(f"w_{j} is not miniscule in {t}")
    if lam0.t != t:
        raise ValueError(f"weight of type {lam0.t} used with {t}")
    a = (0,) + lam0.coeffs
    n = t.rank
    m = p ** i
    F = Fraction
    fam = t.family
    if fam == "A":
        lhs = sum(F(k, n + 1 - j) * a[k] for k in range(1, n + 1 - j))
        lhs += sum(F(n + 1 - k, j) * a[k] for k in range(n + 1 - j, n + 1))
        return lhs >= m
    if fam == "B":
        return sum(k * a[k] for k in range(1, n)) + F(n * a[n], 2) >= F(m * n, 2)
    if fam == "C":
        return sum(a[1:]) >= m
    if fam == "D":
        b = (0,) + dual(lam0).coeffs
        if j == 1:
            return sum(a[1:n - 1]) + F(a[n - 1], 2) + F(a[n], 2) >= m
        head = sum(k * a[k] for k in range(1, n - 1))
        if j == n - 1:
            return head + F(n * b[n - 1], 2) + F((n - 2) * b[n], 2) >= F(m * n, 2)
        return head + F((n - 2) * b[n - 1], 2) + F(n * b[n], 2) >= F(m * n, 2)
    if fam == "E" and n == 6:
        if j == 1:
            return 2 * a[1] + 3 * a[2] + 4 * a[3] + 6 * a[4] + 5 * a[5] + 4 * a[6] >= 4 * m
        return 4 * a[1] + 3 * a[2] + 5 * a[3] + 6 * a[4] + 4 * a[5] + 2 * a[6] >= 4 * m
    if fam == "E" and n == 7:
        return (2 * a[1] + 3 * a[2] + 4 * a[3] + 6 * a[4] + 5 * a[5] + 4 * a[6]
                + 3 * a[7]) >= 3 * m
    raise AssertionError("unreachable: no miniscule weights")


def inner_product_inequality(t: LieType, lam0: Weight, j: int, p: int, i: int) -> bool:
    wj = fundamental(t, j)
    return inner(dual(lam0), wj) >= p ** i * inner(wj, wj)


def type_a_normalized_inequality(w: Weight, j: int, m: int) -> bool:
    """``(w, w_j) >= m (w_j, w_j)`` for A_n, divided through by ``j(n+1-j)``."""
    if w.t.family != "A":
        raise ValueError("only defined for type A")
    n = w.t.rank
    b = (0,) + w.coeffs
    lhs = sum(Fraction(k, j) * b[k] for k in range(1, j + 1))
    lhs += sum(Fraction(n + 1 - k, n + 1 - j) * b[k] for k in range(j + 1, n + 1))
    return lhs >= m


# --- two-factor decisions --------------------------------------------------

def _shape_trace(shape: TensorShape) -> list[tuple[str, str]]:
    return [
        ("shape", shape.case.value),
        ("k", str(shape.k)),
        ("i", str(shape.i)),
        ("λ0", shape.lam0.pretty()),
        ("λ1", shape.lam1.pretty()),
    ]


def _generic(shape: TensorShape, trace) -> Decision:
    t, p, i = shape.t, shape.p, shape.i
    lam0, lam1 = shape.lam0, shape.lam1
    top = is_radical(lam1)
    trace.append(("λ1 radical", _b(top)))
    if top:
        return Decision(True, GENERIC_TOP_RADICAL, trace)
    j = miniscule_witness(lam1)
    wj = fundamental(t, j)
    m = p ** i
    lhs, rhs = inner(dual(lam0), wj), m * inner(wj, wj)
    ok = dominates_multiple_fundamental(dual(lam0), m, j)
    trace.append(("miniscule witness", f"w{j}"))
    trace.append((f"(λ0*,w{j}) = {lhs} ≥ p^i(w{j},w{j}) = {rhs}", _b(lhs >= rhs)))
    trace.append((f"λ0* ⪰ {m}w{j}", _b(ok)))
    return Decision(ok, GENERIC_WITNESS, trace)


def _type_c(shape: TensorShape, trace) -> Decision:
    t, i = shape.t, shape.i
    n = t.rank
    lam0, lam1 = shape.lam0, shape.lam1
    m = 2 ** i
    if shape.case in (ShapeCase.BC4, ShapeCase.BC5):
        return Decision(False, C_BOTTOM_SPIN, trace)
    if shape.case in (ShapeCase.BC1, ShapeCase.BC2):
        lhs = inner(lam0, fundamental(t, n))
        ok = dominates_multiple_fundamental(lam0, m, n)
        trace.append((f"(λ0,w{n}) = {lhs} ≥ 2^i·n = {m * n}", _b(lhs >= m * n)))
        trace.append((f"λ0 ⪰ {m}w{n}", _b(ok)))
        return Decision(ok, C_TOP_SPIN, trace)
    top = is_radical(lam1)
    trace.append(("λ1 radical", _b(top)))
    if top:
        return Decision(True, C_TOP_RADICAL, trace)
    w1 = fundamental(t, 1)
    if not dominance_geq(lam1, w1):
        raise AssertionError(f"non-radical {lam1} does not dominate w1")
    trace.append(("λ1 ⪰ w1", "true"))
    lhs = inner(lam0, w1)
    ok = dominates_multiple_fundamental(lam0, m, 1)
    trace.append((f"(λ0,w1) = {lhs} ≥ 2^i = {m}", _b(lhs >= m)))
    trace.append((f"λ0 ⪰ {m}w1", _b(ok)))
    return Decision(ok, C_TOP_W1, trace)


def _type_b(shape: TensorShape, trace) -> Decision:
    image = isogeny_CB(shape.reduced)
    trace.append(("φ*_CB(λ) in C_n", image.pretty()))
    inner_decision = zero_weight_two_factor(image.t, 2, image)
    trace += [(f"C_n: {label}", value) for label, value in inner_decision.trace]
    return Decision(inner_decision.has_zero_weight, f"{B_VIA_C}: {inner_decision.case}", trace)


def _g2_p2(shape: TensorShape, trace) -> Decision:
    t = shape.t
    w1 = fundamental(t, 1)
    has_w1 = w1 in (shape.lam0, shape.lam1)
    trace.append(("w1 ∈ {λ0, λ1}", _b(has_w1)))
    if not has_w1:
        return Decision(True, G2_NO_W1, trace)
    special = (shape.i == 1 and shape.lam0 == Weight(t, (1, 1)) and shape.lam1 == w1)
    trace.append(("i=1, λ0=w1+w2, λ1=w1", _b(special)))
    if special:
        return Decision(True, G2_EXCEPTION, trace)
    return Decision(False, G2_W1, trace)


def decide_shape(shape: TensorShape) -> Decision:
    """Zero-weight verdict for a classified two-factor module."""
    t, p = shape.t, shape.p
    lam = shape.reduced
    trace = [("λ", shape.weight.pretty())] + _shape_trace(shape)
    rad = is_radical(lam)
    trace.append(("λ radical", _b(rad)))
    if not rad:
        return Decision(False, NOT_RADICAL, trace)
    fam = t.family
    if (fam == "F" and p == 2) or (fam == "G" and p == 3):
        return Decision(True, ALWAYS, trace)
    if fam == "G" and p == 2:
        return _g2_p2(shape, trace)
    if fam == "C" and p == 2:
        return _type_c(shape, trace)
    if fam == "B" and p == 2:
        return _type_b(shape, trace)
    if p <= e_of_G(t):
        raise AssertionError(f"no criterion routes {t} at p={p}")
    return _generic(shape, trace)


def zero_weight_two_factor(t: LieType, p: int, lam: Weight) -> Decision:
    """Does ``V_lam`` have the zero weight?  ``V_lam`` must be a two-factor product."""
    return decide_shape(classify_two_factor(t, p, lam))


def zero_weight_b_direct(shape: TensorShape) -> bool:
    """B_n at p=2 evaluated from the B_n-side conditions, without transport.

    Kept as an independent cross-check of :func:`_type_b`.
    """
    if shape.t.family != "B" or shape.p != 2:
        raise ValueError("B_n at p=2 only")
    i = shape.i
    c0 = as_type_c(shape.lam0)
    ct = c0.t
    if shape.case is ShapeCase.BC2:
        spin = 2 ** (i - 1) * fundamental(ct, ct.rank)
        return is_radical(c0 + spin) and dominance_geq(c0, spin)
    if shape.case is ShapeCase.BC3:
        c1 = as_type_c(shape.lam1)
        if not is_radical(c0 + 2 ** i * c1):
            return False
        if is_radical(c1):
            return True
        w1 = fundamental(ct, 1)
        return dominance_geq(c1, w1) and dominance_geq(c0, 2 ** i * w1)
    return False
