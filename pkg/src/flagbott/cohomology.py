"""Cohomology of line bundles on G/B in characteristic zero.

By Borel-Weil-Bott, ``H^*(G/B, L_lam)`` vanishes identically when
``lam + rho`` lies on a wall, and otherwise lives in the single degree
``l(w)`` where ``w`` moves ``lam + rho`` into the dominant chamber.  The
surviving group is the irreducible module of highest weight ``w.lam``.

Sign convention: ``L_lam`` has sections iff ``lam`` is dominant.

Everything here is a characteristic-zero statement.  Nothing is computed
over F_p; transporting the results to almost all primes relies on flat
base change and semicontinuity, which this package does not model.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Union

from .errors import IntegralityError, NotDominant
from .rootsystem import RootSystem, Weight, pair


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise IntegralityError(f"{num} / {den} is not an integer")
    return q


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible module with highest weight ``lam``."""
    rs.check_weight(lam)
    if not lam.is_dominant():
        raise NotDominant(f"{lam} is not dominant")
    shifted = lam + rs.rho()
    num = prod(pair(shifted, r) for r in rs.positive_roots)
    return _exact_div(num, rs.rho_pairing_product)


def euler_characteristic(rs: RootSystem, lam: Weight) -> int:
    """chi(L_lam) from the signed Weyl product; no Bott reduction involved."""
    rs.check_weight(lam)
    shifted = lam + rs.rho()
    num = prod(pair(shifted, r) for r in rs.positive_roots)
    return _exact_div(num, rs.rho_pairing_product)


@dataclass(frozen=True)
class AllVanish:
    vanishes = True

    def dimension_in(self, k: int) -> int:
        return 0

    def to_dict(self) -> dict:
        return {"vanishes": True, "degree": None, "dimension": None, "dominantization": None}

    def render(self, lam: Weight) -> str:
        return f"H^*(G/B, L{lam}): all cohomology vanishes"


@dataclass(frozen=True)
class Concentrated:
    degree: int
    dimension: int
    dominantization: Weight
    word: tuple[int, ...] = ()

    vanishes = False

    @property
    def weyl_length(self) -> int:
        return self.degree

    def dimension_in(self, k: int) -> int:
        return self.dimension if k == self.degree else 0

    def to_dict(self) -> dict:
        return {
            "vanishes": False,
            "degree": self.degree,
            "dimension": self.dimension,
            "dominantization": self.dominantization.to_list(),
        }

    def render(self, lam: Weight) -> str:
        return (
            f"H^{self.degree}(G/B, L{lam}) has dimension {self.dimension}; "
            "all other cohomology vanishes"
        )


CohomologyResult = Union[AllVanish, Concentrated]


def is_singular(rs: RootSystem, lam: Weight) -> bool:
    """True if ``lam + rho`` is orthogonal to some positive coroot."""
    shifted = lam + rs.rho()
    return any(pair(shifted, r) == 0 for r in rs.positive_roots)


def bott(rs: RootSystem, lam: Weight) -> CohomologyResult:
    rs.check_weight(lam)
    if is_singular(rs, lam):
        return AllVanish()
    mu = list((lam + rs.rho()).coords)
    word = []
    # lowest negative index first; at most d steps
    while True:
        j = next((k for k, c in enumerate(mu) if c < 0), None)
        if j is None:
            break
        m = mu[j]
        mu = [c - m * rs.cartan[k][j] for k, c in enumerate(mu)]
        word.append(j + 1)
    if len(word) > rs.d:
        raise IntegralityError(f"dominantization of {lam} took {len(word)} > d steps")
    dom = Weight(mu) - rs.rho()
    return Concentrated(
        degree=len(word),
        dimension=weyl_dimension(rs, dom),
        dominantization=dom,
        word=tuple(reversed(word)),
    )
