"""Intersection numbers of divisors on G/B.

For a single weight, ``deg c1(L_lam)^d = d! prod<lam, b^vee> / prod<rho, b^vee>``
over positive roots b.  The mixed numbers ``L_1 ... L_d`` are the
polarization of that form.  They are computed by extracting one coefficient
of ``prod_b <sum_j t_j mu_j, b^vee>`` over the *distinct* weights mu_j, which
stays polynomial in d (a d!-term symmetrization would not).

``chevalley_top_intersection`` recomputes the same numbers from Schubert
calculus.  It shares no code with the polynomial route apart from the root
data.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Sequence

from .errors import IntegralityError, WrongArity
from .rootsystem import RootSystem, Weight, pair
from .weyl import DEFAULT_MAX_SIZE, WeylElement, enumerate_weyl, inversion_count

__all__ = [
    "DivisorClass",
    "SchubertClass",
    "chevalley_top_intersection",
    "degree",
    "is_globally_generated",
    "is_very_ample",
    "top_intersection",
]


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise IntegralityError(f"intersection number {num}/{den} is not an integer")
    return q


def _check_all(rs: RootSystem, weights: Sequence[Weight]) -> None:
    if len(weights) != rs.d:
        raise WrongArity(f"{rs.name} needs exactly d={rs.d} divisors, got {len(weights)}")
    for w in weights:
        rs.check_weight(w)


def is_very_ample(rs: RootSystem, lam: Weight) -> bool:
    rs.check_weight(lam)
    return lam.is_strictly_dominant()


def is_globally_generated(rs: RootSystem, lam: Weight) -> bool:
    rs.check_weight(lam)
    return lam.is_dominant()


@dataclass(frozen=True)
class DivisorClass:
    """A class in Pic(G/B), named by its weight."""

    rs: RootSystem = field(repr=False)
    weight: Weight

    @property
    def very_ample(self) -> bool:
        return is_very_ample(self.rs, self.weight)

    @property
    def globally_generated(self) -> bool:
        return is_globally_generated(self.rs, self.weight)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.rs, self.weight + other.weight)


def top_intersection(rs: RootSystem, weights: Sequence[Weight]) -> int:
    """The intersection number ``L_{w_1} . ... . L_{w_d}``."""
    weights = list(weights)
    _check_all(rs, weights)
    counts = Counter(w.coords for w in weights)
    distinct = list(counts)
    target = tuple(counts[c] for c in distinct)
    k = len(distinct)

    # poly: exponent vector -> coefficient, pruned to exponents <= target
    poly: dict[tuple[int, ...], int] = {(0,) * k: 1}
    for root in rs.positive_roots:
        lin = [pair(Weight(c), root) for c in distinct]
        nxt: dict[tuple[int, ...], int] = {}
        for exps, coeff in poly.items():
            for j, a in enumerate(lin):
                if a == 0 or exps[j] == target[j]:
                    continue
                e = exps[:j] + (exps[j] + 1,) + exps[j + 1 :]
                nxt[e] = nxt.get(e, 0) + coeff * a
        poly = nxt
    coeff = poly.get(target, 0)
    return _exact_div(coeff * prod(factorial(a) for a in target), rs.rho_pairing_product)


def degree(rs: RootSystem, L: Weight, H: Weight) -> int:
    """``L . H^(d-1)``, the degree of L with respect to the polarization H."""
    rs.check_weight(L)
    rs.check_weight(H)
    hs = [pair(H, r) for r in rs.positive_roots]
    total = 0
    for b, root in enumerate(rs.positive_roots):
        lb = pair(L, root)
        if lb:
            total += lb * prod(h for a, h in enumerate(hs) if a != b)
    return _exact_div(factorial(rs.d - 1) * total, rs.rho_pairing_product)


class SchubertClass:
    """An integer combination of Schubert classes sigma_w, w in W.

    sigma_w has codimension l(w); sigma_e is the fundamental class and
    sigma_{w0} the class of a point.
    """

    def __init__(self, rs: RootSystem, coefficients=None, max_size: int = DEFAULT_MAX_SIZE):
        self.rs = rs
        self._elements = _weyl_table(rs, max_size)
        self.coefficients: dict[WeylElement, int] = dict(coefficients or {})

    @classmethod
    def fundamental(cls, rs: RootSystem, max_size: int = DEFAULT_MAX_SIZE) -> SchubertClass:
        table = _weyl_table(rs, max_size)
        return cls(rs, {table.elements[0]: 1}, max_size)

    def times_divisor(self, lam: Weight) -> SchubertClass:
        """Chevalley's rule:
        ``c1(L_lam) sigma_w = sum <lam, b^vee> sigma_{w s_b}`` over positive
        roots b with ``l(w s_b) = l(w) + 1``.
        """
        self.rs.check_weight(lam)
        t = self._elements
        pairings = [pair(lam, r) for r in self.rs.positive_roots]
        out: dict[WeylElement, int] = {}
        for w, c in self.coefficients.items():
            for b, v in t.covers[t.index[w]]:
                if pairings[b]:
                    u = t.elements[v]
                    out[u] = out.get(u, 0) + c * pairings[b]
        return SchubertClass(self.rs, {w: c for w, c in out.items() if c}, t.max_size)

    def coefficient(self, w: WeylElement) -> int:
        return self.coefficients.get(w, 0)

    def degree(self) -> int:
        """Coefficient of the point class."""
        return self.coefficient(self._elements.elements[-1])


@dataclass
class _WeylTable:
    elements: list
    index: dict
    # covers[v] = [(root index b, index of v s_b)] with l(v s_b) = l(v) + 1
    covers: list
    max_size: int


_TABLES: dict[tuple[str, int], _WeylTable] = {}


def _weyl_table(rs: RootSystem, max_size: int) -> _WeylTable:
    key = (rs.name, max_size)
    if key in _TABLES:
        return _TABLES[key]
    elements = enumerate_weyl(rs, max_size)
    index = {w: k for k, w in enumerate(elements)}
    by_rho = {w.rho_image: k for k, w in enumerate(elements)}
    root_vecs = [rs.root_weight(r).coords for r in rs.positive_roots]
    heights = [sum(r.coroot_functional) for r in rs.positive_roots]
    covers = []
    for w in elements:
        v = w.rho_image
        row = []
        for b, beta in enumerate(root_vecs):
            # w s_b (rho) = w(rho) - <rho, b^vee> w(b)
            wb = [sum(m * x for m, x in zip(line, beta)) for line in w.action]
            image = tuple(a - heights[b] * c for a, c in zip(v, wb))
            if inversion_count(rs, image) == w.length + 1:
                row.append((b, by_rho[image]))
        covers.append(row)
    table = _WeylTable(elements, index, covers, max_size)
    _TABLES[key] = table
    return table


def chevalley_top_intersection(
    rs: RootSystem, weights: Sequence[Weight], max_size: int = DEFAULT_MAX_SIZE
) -> int:
    """Same number as ``top_intersection``, via repeated Chevalley products."""
    weights = list(weights)
    _check_all(rs, weights)
    cls = SchubertClass.fundamental(rs, max_size)
    for lam in weights:
        cls = cls.times_divisor(lam)
    return cls.degree()
