"""Schubert calculus on Gr(2,n).

The Chow ring in the basis of Schubert classes sigma_{a,b}, indexed by
partitions (a, b) with n-2 >= a >= b >= 0.  Multiplication is computed by the
Pieri rule for special classes together with the two-row Giambelli identity
sigma_{a,b} = sigma_a*sigma_b - sigma_{a+1}*sigma_{b-1}; an independent
Littlewood-Richardson engine is available as a cross-check.  The module also
builds the classes of Gr(2,n) and of its smooth hyperplane sections in Z[L],
each by two routes that must agree.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import AmbientMismatch, InvalidParameter
from .ring import LPoly

ENGINES = ("pieri", "lr")


def box_partitions(n: int):
    """All partitions (a, b) in the 2 x (n-2) box, sorted by degree then lex."""
    side = n - 2
    parts = [(a, b) for a in range(side + 1) for b in range(a + 1)]
    parts.sort(key=lambda p: (p[0] + p[1], p))
    return parts


def betti(n: int, j: int) -> int:
    """j-th Betti number of Gr(2,n): the number of partitions of size j/2 in
    the 2 x (n-2) box; zero in odd degrees."""
    if n < 4:
        raise InvalidParameter(f"Gr(2,{n}) needs n >= 4")
    if j % 2 or j < 0:
        return 0
    m = j // 2
    side = n - 2
    return sum(1 for a in range(max((m + 1) // 2, m - side), min(m, side) + 1) if m - a <= a)


def sum_even_powers(n: int) -> LPoly:
    """1 + L^2 + L^4 + ... with exponents up to n-2."""
    if n < 2:
        raise InvalidParameter(f"sum_even_powers needs n >= 2, got {n}")
    return LPoly({2 * k: 1 for k in range((n - 2) // 2 + 1)})


def lefschetz_shift(n: int) -> int:
    """The twist s appearing in the dual-side relation: n-2 for even n, n-1 for odd."""
    return n - 2 if n % 2 == 0 else n - 1


def grassmannian_class(n: int, method: str = "cells") -> LPoly:
    """Class of Gr(2,n) in Z[L].

    `cells`: one cell per partition in the 2 x (n-2) box, of dimension
    2(n-2) - |partition|.  `product_formula`: [P^(n-2)] or [P^(n-1)] times the
    even-power sum, depending on the parity of n.  Both routes agree.
    """
    if n < 4:
        raise InvalidParameter(f"Gr(2,{n}) needs n >= 4")
    if method == "cells":
        out = {}
        top = 2 * (n - 2)
        for a, b in box_partitions(n):
            d = top - (a + b)
            out[d] = out.get(d, 0) + 1
        return LPoly(out)
    if method == "product_formula":
        from .ring import projective_class

        base = projective_class(n - 2) if n % 2 == 0 else projective_class(n - 1)
        return base * sum_even_powers(n)
    raise InvalidParameter(f"unknown method {method!r}")


def hyperplane_section_class(n: int) -> LPoly:
    """Class of a smooth hyperplane section of Gr(2,n) in Z[L]:
    [P^(n-3)] (n even) or [P^(n-2)] (n odd) times the even-power sum."""
    if n < 4:
        raise InvalidParameter(f"Gr(2,{n}) needs n >= 4")
    from .ring import projective_class

    base = projective_class(n - 3) if n % 2 == 0 else projective_class(n - 2)
    return base * sum_even_powers(n)


def lr_count(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient for two-row shapes, by enumerating
    the skew fillings of nu/lam with content mu directly.

    Independent of the Pieri/Giambelli path; used as the second engine.
    """
    if nu[0] < lam[0] or nu[1] < lam[1]:
        return 0
    if nu[0] + nu[1] != lam[0] + lam[1] + mu[0] + mu[1]:
        return 0
    len1 = nu[0] - lam[0]
    len2 = nu[1] - lam[1]
    count = 0
    for j1 in range(len1 + 1):  # trailing 2s in row 1
        j2 = mu[1] - j1
        if not 0 <= j2 <= len2:
            continue
        if (len1 - j1) + (len2 - j2) != mu[0]:
            continue
        row1 = [1] * (len1 - j1) + [2] * j1
        row2 = [1] * (len2 - j2) + [2] * j2
        ok = True
        for col in range(lam[0] + 1, nu[1] + 1):  # columns occupied in both rows
            if row2[col - lam[1] - 1] <= row1[col - lam[0] - 1]:
                ok = False
                break
        if ok:  # ballot condition on the reverse reading word
            ones = twos = 0
            for x in row1[::-1] + row2[::-1]:
                if x == 1:
                    ones += 1
                else:
                    twos += 1
                    if twos > ones:
                        ok = False
                        break
        if ok:
            count += 1
    return count


class ChowRing:
    """The Chow ring of Gr(2,n) with a memoized multiplication table.

    The table is filled on demand under a lock (construction is serialized per
    ring); completed entries are immutable and read-shared, so concurrent
    lookups need no further synchronization.
    """

    def __init__(self, n: int, engine: str = "pieri"):
        if n < 4:
            raise InvalidParameter(f"Gr(2,{n}) needs n >= 4")
        if engine not in ENGINES:
            raise InvalidParameter(f"unknown engine {engine!r}")
        self.n = n
        self.engine = engine
        self.max_col = n - 2
        self.dim = 2 * (n - 2)
        self.point = (self.max_col, self.max_col)
        self._table = {}
        self._lock = threading.Lock()

    # -- class constructors ------------------------------------------------

    def sigma(self, a: int, b: int = 0) -> "ChowClass":
        if not (self.max_col >= a >= b >= 0):
            raise InvalidParameter(f"({a},{b}) is not in the 2 x {self.max_col} box")
        return ChowClass(self, {(a, b): Fraction(1)})

    def one(self) -> "ChowClass":
        return self.sigma(0, 0)

    def zero(self) -> "ChowClass":
        return ChowClass(self, {})

    def basis(self):
        return box_partitions(self.n)

    # -- structure constants ------------------------------------------------

    def _pieri(self, p: int, lam) -> list:
        """Expansion of sigma_p * sigma_lam: one term per partition obtained by
        adding p boxes with at most one new box per column, kept inside the box."""
        a, b = lam
        total = a + b + p
        out = []
        for a2 in range(max(a, total - a), min(self.max_col, total - b) + 1):
            out.append((a2, total - a2))
        return out

    def _product_pieri(self, lam, mu) -> dict:
        c, d = mu
        acc = {}
        for nu1 in self._pieri(c, lam):
            for nu2 in self._pieri(d, nu1):
                acc[nu2] = acc.get(nu2, 0) + 1
        # two-row Giambelli: sigma_{c,d} = sigma_c*sigma_d - sigma_{c+1}*sigma_{d-1},
        # with sigma_{c+1} = 0 once it leaves the box
        if d >= 1 and c + 1 <= self.max_col:
            for nu1 in self._pieri(c + 1, lam):
                for nu2 in self._pieri(d - 1, nu1):
                    acc[nu2] = acc.get(nu2, 0) - 1
        return {nu: v for nu, v in acc.items() if v}

    def _product_lr(self, lam, mu) -> dict:
        total = lam[0] + lam[1] + mu[0] + mu[1]
        out = {}
        for a2 in range(max(lam[0], (total + 1) // 2), min(self.max_col, total) + 1):
            nu = (a2, total - a2)
            if nu[1] > a2 or nu[1] < 0:
                continue
            c = lr_count(lam, mu, nu)
            if c:
                out[nu] = c
        return out

    def product(self, lam, mu) -> dict:
        """Structure constants sigma_lam * sigma_mu as {nu: coefficient}."""
        key = (lam, mu) if lam <= mu else (mu, lam)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._table.get(key)
            if hit is None:
                if self.engine == "pieri":
                    hit = self._product_pieri(key[0], key[1])
                else:
                    hit = self._product_lr(key[0], key[1])
                self._table[key] = hit
        return hit

    # -- cache file support ---------------------------------------------------

    def table_entries(self) -> list:
        """Snapshot of the computed table as (lam, mu, [(nu, coeff), ...]) triples."""
        with self._lock:
            items = sorted(self._table.items())
        return [
            [list(lam), list(mu), [[list(nu), c] for nu, c in sorted(exp.items())]]
            for (lam, mu), exp in items
        ]

    def preload(self, entries) -> None:
        with self._lock:
            for lam, mu, exp in entries:
                key = (tuple(lam), tuple(mu))
                self._table[key] = {tuple(nu): int(c) for nu, c in exp}


class ChowClass:
    """Graded rational linear combination of Schubert classes of one Gr(2,n).

    Immutable; components of degree above the dimension of the Grassmannian
    are truncated silently, which is the ring structure rather than an error.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ChowRing, terms: dict):
        self.ring = ring
        self.terms = {p: Fraction(v) for p, v in terms.items() if v}

    def _check(self, other: "ChowClass"):
        if self.ring.n != other.ring.n or self.ring.engine != other.ring.engine:
            raise AmbientMismatch(
                f"Gr(2,{self.ring.n})/{self.ring.engine} vs Gr(2,{other.ring.n})/{other.ring.engine}"
            )

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        out = dict(self.terms)
        for p, v in other.terms.items():
            out[p] = out.get(p, 0) + v
        return ChowClass(self.ring, out)

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        out = dict(self.terms)
        for p, v in other.terms.items():
            out[p] = out.get(p, 0) - v
        return ChowClass(self.ring, out)

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.ring, {p: -v for p, v in self.terms.items()})

    def scale(self, c) -> "ChowClass":
        c = Fraction(c)
        return ChowClass(self.ring, {p: v * c for p, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = {}
        for lam, v1 in self.terms.items():
            for mu, v2 in other.terms.items():
                c = v1 * v2
                for nu, m in self.ring.product(lam, mu).items():
                    out[nu] = out.get(nu, 0) + c * m
        return ChowClass(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ChowClass":
        if k < 0:
            raise InvalidParameter("negative powers are not defined")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def component(self, degree: int) -> "ChowClass":
        return ChowClass(self.ring, {p: v for p, v in self.terms.items() if p[0] + p[1] == degree})

    def coefficient(self, part) -> Fraction:
        return self.terms.get(tuple(part), Fraction(0))

    def integrate(self) -> Fraction:
        """Degree pairing against the point class sigma_{n-2,n-2}."""
        return self.terms.get(self.ring.point, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChowClass)
            and self.ring.n == other.ring.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.n, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for p in sorted(self.terms, key=lambda q: (q[0] + q[1], q)):
            v = self.terms[p]
            head = "" if v == 1 else f"{v}*"
            bits.append(f"{head}s{p}")
        return " + ".join(bits)


_RINGS: dict = {}
_RINGS_LOCK = threading.Lock()


def get_ring(n: int, engine: str = "pieri") -> ChowRing:
    """Shared per-(n, engine) ring, built once and then read-shared."""
    key = (n, engine)
    ring = _RINGS.get(key)
    if ring is None:
        with _RINGS_LOCK:
            ring = _RINGS.get(key)
            if ring is None:
                ring = ChowRing(n, engine)
                _RINGS[key] = ring
    return ring
