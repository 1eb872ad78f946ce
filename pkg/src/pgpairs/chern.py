"""Characteristic-class calculus on Gr(2,n).

Chern classes of the tautological bundles, tensor-product Chern classes
through the splitting principle (power sums and Newton's identities), and the
three invariants of a linear section X = Gr(2,n) cut by k general hyperplanes:
the topological Euler characteristic, the chi_y genus, and the middle Hodge
numbers.  Everything is exact: class coefficients are rationals, series
coefficients are rationals, and integrality is asserted at the end rather
than assumed.

The Euler characteristic is integrated directly from the total Chern class
(with the normal directions removed multiplicatively), while chi_y comes from
the generating series x(1 + y e^-x)/(1 - e^-x) per Chern root, evaluated at
integer values of y and reassembled by exact Lagrange interpolation.  The two
paths are independent enough that their agreement at y = -1 is a real check.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    AmbientMismatch,
    InconsistentEuler,
    InvalidParameter,
    NonIntegralGenus,
)
from .schubert import ChowClass, ChowRing, betti, get_ring

# ---------------------------------------------------------------------------
# truncated power series over Q (dense lists of Fractions, index = degree)


def _ser_mul(a, b, trunc):
    out = [Fraction(0)] * (trunc + 1)
    for i, x in enumerate(a):
        if i > trunc or not x:
            continue
        for j, y in enumerate(b):
            if i + j > trunc:
                break
            if y:
                out[i + j] += x * y
    return out

def _ser_div(a, b, trunc):
    if not b[0]:
        raise InvalidParameter("series division by a series with zero constant term")
    out = [Fraction(0)] * (trunc + 1)
    for m in range(trunc + 1):
        acc = a[m] if m < len(a) else Fraction(0)
        for j in range(1, m + 1):
            if j < len(b) and b[j]:
                acc -= b[j] * out[m - j]
        out[m] = acc / b[0]
    return out

def _ser_log(a, trunc):
    # a[0] must be 1; from a = exp(l):  m*a_m = sum_{j<=m} j*l_j*a_{m-j}
    out = [Fraction(0)] * (trunc + 1)
    for m in range(1, trunc + 1):
        acc = m * (a[m] if m < len(a) else Fraction(0))
        for j in range(1, m):
            acc -= j * out[j] * (a[m - j] if m - j < len(a) else Fraction(0))
        out[m] = acc / m
    return out

def _exp_neg(trunc):
    # e^-x
    out, fact = [], 1
    for j in range(trunc + 1):
        if j:
            fact *= j
        out.append(Fraction((-1) ** j, fact))
    return out


def _chow_exp(arg: ChowClass, ring: ChowRing) -> ChowClass:
    """exp of a class with no degree-zero part, truncated at the ring dimension."""
    out = ring.one()
    cur = ring.one()
    for i in range(1, ring.dim + 1):
        cur = (cur * arg).scale(Fraction(1, i))
        if cur.is_zero():
            break
        out = out + cur
    return out


# ---------------------------------------------------------------------------
# Chern data and the splitting-principle calculus


@dataclass(frozen=True)
class ChernData:
    """Chern classes c_1..c_rank of a bundle over one Gr(2,n); c_0 = 1 implicit.

    classes[i] is homogeneous of degree i+1; entries above the dimension of
    the ambient ring are omitted since they vanish there.
    """

    ring: ChowRing
    rank: int
    classes: tuple

    def __post_init__(self):
        for i, c in enumerate(self.classes):
            if c.component(i + 1) != c:
                raise InvalidParameter(f"c_{i + 1} is not homogeneous of degree {i + 1}")

    def chern(self, i: int) -> ChowClass:
        if i == 0:
            return self.ring.one()
        if 1 <= i <= len(self.classes):
            return self.classes[i - 1]
        return self.ring.zero()

    def total(self) -> ChowClass:
        out = self.ring.one()
        for c in self.classes:
            out = out + c
        return out


def _power_sums(data: ChernData, upto: int) -> list:
    """Newton's identities: power sums p_1..p_upto from the Chern classes."""
    ring = data.ring
    p = [ring.zero()] * (upto + 1)
    for m in range(1, upto + 1):
        acc = data.chern(m).scale((-1) ** (m - 1) * m)
        for i in range(1, m):
            acc = acc + (data.chern(i) * p[m - i]).scale((-1) ** (i - 1))
        p[m] = acc
    return p


def _elementaries(power_sums, ring: ChowRing, upto: int) -> list:
    """Inverse Newton: elementary symmetric classes e_1..e_upto from power sums."""
    e = [ring.one()] + [ring.zero()] * upto
    for m in range(1, upto + 1):
        acc = ring.zero()
        for i in range(1, m + 1):
            acc = acc + (e[m - i] * power_sums[i]).scale((-1) ** (i - 1))
        e[m] = acc.scale(Fraction(1, m))
    return e


def tautological_chern(n: int, engine: str = "pieri"):
    """Chern data of the dual tautological subbundle and of the quotient bundle.

    c(S^dual) = 1 + sigma_1 + sigma_{1,1}; the quotient is pinned by the
    Whitney identity c(S) c(Q) = 1, which is re-checked to top degree.
    """
    ring = get_ring(n, engine)
    s_dual = ChernData(ring, 2, (ring.sigma(1), ring.sigma(1, 1)))
    # c(S) = 1 - sigma_1 + sigma_{1,1} = 1 - x;  c(Q) = sum x^j
    x = ring.sigma(1) - ring.sigma(1, 1)
    inv = ring.one()
    cur = ring.one()
    for _ in range(ring.dim):
        cur = cur * x
        if cur.is_zero():
            break
        inv = inv + cur
    q_classes = []
    for i in range(1, ring.dim + 1):
        comp = inv.component(i)
        if i <= n - 2:
            q_classes.append(comp)
        elif not comp.is_zero():
            raise InconsistentEuler(f"c_{i} of the quotient bundle does not vanish")
    q = ChernData(ring, n - 2, tuple(q_classes))
    c_s = ring.one() - ring.sigma(1) + ring.sigma(1, 1)
    if c_s * q.total() != ring.one():
        raise InconsistentEuler("Whitney identity c(S) c(Q) = 1 fails")
    return s_dual, q


def tensor_chern(e_data: ChernData, f_data: ChernData) -> ChernData:
    """Chern data of a tensor product via the splitting principle.

    Power sums of the root multiset {x_i + y_j} expand binomially in the power
    sums of the factors; elementary symmetric classes come back through
    Newton's identities.  Exact in both ranks.
    """
    if e_data.ring is not f_data.ring:
        if (e_data.ring.n, e_data.ring.engine) != (f_data.ring.n, f_data.ring.engine):
            raise AmbientMismatch("tensor factors over different rings")
    ring = e_data.ring
    top = ring.dim
    pe = _power_sums(e_data, top)
    pf = _power_sums(f_data, top)
    pe[0] = ring.one().scale(e_data.rank)
    pf[0] = ring.one().scale(f_data.rank)
    p_tensor = [ring.zero()] * (top + 1)
    for m in range(1, top + 1):
        acc = ring.zero()
        for t in range(m + 1):
            acc = acc + (pe[t] * pf[m - t]).scale(comb(m, t))
        p_tensor[m] = acc
    rank = e_data.rank * f_data.rank
    elem = _elementaries(p_tensor, ring, min(rank, top))
    return ChernData(ring, rank, tuple(elem[1 : min(rank, top) + 1]))


_TANGENT: dict = {}
_TANGENT_LOCK = threading.Lock()


def tangent_chern(n: int, engine: str = "pieri") -> ChernData:
    """Chern data of the tangent bundle of Gr(2,n), i.e. S^dual tensor Q."""
    key = (n, engine)
    hit = _TANGENT.get(key)
    if hit is None:
        with _TANGENT_LOCK:
            hit = _TANGENT.get(key)
            if hit is None:
                s_dual, q = tautological_chern(n, engine)
                hit = tensor_chern(s_dual, q)
                _TANGENT[key] = hit
    return hit


# ---------------------------------------------------------------------------
# invariants of a linear section X = Gr(2,n) cut by k general hyperplanes


class _SectionState:
    """Per-(n, engine) caches shared by the section invariants; multiplication
    happens once per power of the hyperplane series and is then reused for
    every k.  Construction is serialized by the lock, reads are lock-free."""

    def __init__(self, n: int, engine: str):
        self.ring = get_ring(n, engine)
        self.lock = threading.Lock()
        tangent = tangent_chern(n, engine)
        self.tangent = tangent
        self.psums = _power_sums(tangent, self.ring.dim)
        sigma1 = self.ring.sigma(1)
        # sigma_1/(1 + sigma_1) = sigma_1 - sigma_1^2 + ... : the class whose
        # k-th power removes k hyperplane normal directions from c(T)
        pows = [self.ring.one()]
        for _ in range(self.ring.dim):
            pows.append(pows[-1] * sigma1)
        self.sigma1_pows = pows
        lef = self.ring.zero()
        for j in range(1, self.ring.dim + 1):
            lef = lef + pows[j].scale((-1) ** (j - 1))
        self.lefschetz = lef
        self.euler_pows = [tangent.total()]
        self.chi_nodes: dict = {}

    def euler_integrand(self, k: int) -> ChowClass:
        with self.lock:
            while len(self.euler_pows) <= k:
                self.euler_pows.append(self.euler_pows[-1] * self.lefschetz)
            return self.euler_pows[k]

    def _node(self, y0: int):
        node = self.chi_nodes.get(y0)
        if node is not None:
            return node
        trunc = self.ring.dim
        exp_neg = _exp_neg(trunc)
        # B = (1 - e^-x)/x, so the root factor is x (1 + y e^-x) / (1 - e^-x) = A/B
        a_ser = [Fraction(1 + y0)] + [y0 * c for c in exp_neg[1:]]
        b_ser = [Fraction((-1) ** j) / _factorial(j + 1) for j in range(trunc + 1)]
        q_ser = _ser_div(a_ser, b_ser, trunc)
        g_ser = _ser_log([c / (1 + y0) for c in q_ser], trunc)  # log of Q_y/(1+y)
        arg = self.ring.zero()
        for m in range(1, trunc + 1):
            if g_ser[m]:
                arg = arg + self.psums[m].scale(g_ser[m])
        tangent_prod = _chow_exp(arg, self.ring).scale(Fraction(1 + y0) ** self.ring.dim)
        # normal factor per hyperplane: u/Q_y(u) = (1 - e^-u)/(1 + y e^-u)
        n_ser = _ser_div([Fraction(0)] + [-c for c in exp_neg[1:]], a_ser, trunc)
        normal = self.ring.zero()
        for j in range(1, trunc + 1):
            if n_ser[j]:
                normal = normal + self.sigma1_pows[j].scale(n_ser[j])
        node = {"normal": normal, "pows": [tangent_prod]}
        self.chi_nodes[y0] = node
        return node

    def chi_value(self, y0: int, k: int) -> Fraction:
        with self.lock:
            node = self._node(y0)
            while len(node["pows"]) <= k:
                node["pows"].append(node["pows"][-1] * node["normal"])
            return node["pows"][k].integrate()


def _factorial(j: int) -> int:
    out = 1
    for i in range(2, j + 1):
        out *= i
    return out


_STATES: dict = {}
_STATES_LOCK = threading.Lock()


def _state(n: int, engine: str) -> _SectionState:
    key = (n, engine)
    st = _STATES.get(key)
    if st is None:
        with _STATES_LOCK:
            st = _STATES.get(key)
            if st is None:
                st = _SectionState(n, engine)
                _STATES[key] = st
    return st


def _validate_section(n: int, k: int):
    if n < 4:
        raise InvalidParameter(f"Gr(2,{n}) needs n >= 4")
    if k < 0 or k > 2 * (n - 2):
        raise InvalidParameter(f"section of Gr(2,{n}) by {k} hyperplanes is empty")


def euler_characteristic_ci(n: int, k: int, engine: str = "pieri") -> int:
    """Topological Euler characteristic of a smooth dimensionally transverse
    intersection of Gr(2,n) with k hyperplanes, by Gauss-Bonnet on the ambient
    Grassmannian."""
    _validate_section(n, k)
    val = _state(n, engine).euler_integrand(k).integrate()
    if val.denominator != 1:
        raise NonIntegralGenus(f"Euler characteristic {val} is not an integer")
    return int(val)


def _interpolate(values) -> list:
    """Exact polynomial through (i, values[i]) for i = 0..m-1, as coefficients."""
    m = len(values)
    dd = [Fraction(v) for v in values]
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / j  # x_i - x_{i-j} = j on the integer grid
    coeffs = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        # coeffs <- coeffs*(x - i) + dd[i]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - i * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += dd[i]
    return coeffs


def chi_y_ci(n: int, k: int, engine: str = "pieri") -> list:
    """Hirzebruch chi_y genus of the same section, as the integer coefficient
    list [chi(O), chi(Omega^1), ...] of length dim X + 1."""
    _validate_section(n, k)
    st = _state(n, engine)
    top = st.ring.dim
    dim = top - k
    values = [st.chi_value(y0, k) for y0 in range(top + 1)]
    coeffs = _interpolate(values)
    out = []
    for p, c in enumerate(coeffs):
        if c.denominator != 1:
            raise NonIntegralGenus(f"coefficient of y^{p} is {c}")
        if p > dim and c:
            raise NonIntegralGenus(f"chi_y has degree {p} above dim X = {dim}")
        if p <= dim:
            out.append(int(c))
    return out


@dataclass(frozen=True)
class HodgeSummary:
    """Euler characteristic, chi_y genus, and middle-degree Hodge data of a
    smooth linear section."""

    dim: int
    euler_char: int
    chi_y: tuple
    middle_betti: int
    middle_hodge: tuple

    def __post_init__(self):
        if sum(c * (-1) ** p for p, c in enumerate(self.chi_y)) != self.euler_char:
            raise InconsistentEuler("chi_y(-1) differs from the Euler characteristic")
        if tuple(reversed(self.middle_hodge)) != self.middle_hodge:
            raise InconsistentEuler("middle Hodge numbers are not symmetric")
        if sum(self.middle_hodge) != self.middle_betti:
            raise InconsistentEuler("middle Hodge numbers do not sum to the middle Betti number")


def middle_hodge(n: int, k: int, engine: str = "pieri") -> HodgeSummary:
    """Full invariant record for the section: off-middle cohomology is forced
    by weak/hard Lefschetz to agree with the Grassmannian, and the middle row
    h^{p, dim-p} is solved from the chi_y coefficients."""
    _validate_section(n, k)
    dim = 2 * (n - 2) - k
    chi_list = chi_y_ci(n, k, engine)
    chi_list = chi_list + [0] * (dim + 1 - len(chi_list))
    euler = euler_characteristic_ci(n, k, engine)
    if sum(c * (-1) ** p for p, c in enumerate(chi_list)) != euler:
        raise InconsistentEuler(
            f"chi_y(-1) = {sum(c * (-1) ** p for p, c in enumerate(chi_list))} "
            f"but the Euler characteristic is {euler}"
        )
    row = []
    for p in range(dim + 1):
        if 2 * p == dim:
            h = (-1) ** p * chi_list[p]
        else:
            tate = betti(n, 2 * p) if 2 * p < dim else betti(n, 2 * (dim - p))
            h = (-1) ** (dim - p) * (chi_list[p] - (-1) ** p * tate)
        if h < 0:
            raise InconsistentEuler(f"middle Hodge number h^({p},{dim - p}) = {h} < 0")
        row.append(h)
    return HodgeSummary(
        dim=dim,
        euler_char=euler,
        chi_y=tuple(chi_list),
        middle_betti=sum(row),
        middle_hodge=tuple(row),
    )
