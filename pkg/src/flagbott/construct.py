"""End-to-end construction of an unstable, never-split rank-2 extension on G/B.

Steps:

1. ``L = s_i . lam0`` for a dominant seed ``lam0``; Bott puts all of its
   cohomology in degree 1, with ``h^1 = dim V(lam0)``.
2. Record the sign pattern of L (mixed signs, no zeros expected).
3. Search the very ample cone for an H with ``L . H^(d-1) > 0``.
4. Emit a :class:`Certificate`.  The characteristic-p consequences are
   stored as fixed text; they are asserted, not computed.
"""

from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass
from typing import Iterator

from .cohomology import Concentrated, bott
from .errors import (
    DegenerateSignPattern,
    IntegralityError,
    NoMixedSigns,
    NotDominant,
    RankTooSmall,
    SearchExhausted,
    ZeroCoordinate,
)
from .intersection import degree, is_very_ample
from .rootsystem import RootSystem, Weight, parse_group
from .weyl import dot, simple_reflection

DEFAULT_MAX_COORD = 32

ASSERTED_CONSEQUENCES = (
    "H^1(X_Z, L) has a torsion-free generator theta; the extension 0 -> L -> V -> O -> 0 "
    "it classifies is non-split; for all primes p in a nonempty open subset of Spec Z, "
    "Frobenius splitting of X_p keeps theta nonzero under every Frobenius pullback, so "
    "0 -> L_p -> V_p stays the non-split Harder-Narasimhan filtration and (F^t)*V_p is "
    "never a direct sum of strongly semistable bundles."
)


class SignPatternWarning(UserWarning):
    pass


@dataclass(frozen=True)
class SignPattern:
    """1-based indices of the positive, negative and zero coordinates."""

    positives: tuple[int, ...]
    negatives: tuple[int, ...]
    zeros: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.positives)

    @property
    def mixed(self) -> bool:
        """Both signs occur and nothing is zero."""
        return bool(self.positives) and bool(self.negatives) and not self.zeros

    def to_dict(self) -> dict:
        return {
            "positives": list(self.positives),
            "negatives": list(self.negatives),
            "zeros": list(self.zeros),
        }


def sign_pattern(L: Weight) -> SignPattern:
    return SignPattern(
        tuple(i + 1 for i, m in enumerate(L) if m > 0),
        tuple(i + 1 for i, m in enumerate(L) if m < 0),
        tuple(i + 1 for i, m in enumerate(L) if m == 0),
    )


def candidate_L(rs: RootSystem, lam0: Weight, i: int) -> Weight:
    """``s_i . lam0 = lam0 - (<lam0, alpha_i^vee> + 1) alpha_i``."""
    rs.check_weight(lam0)
    rs.check_index(i)
    if not lam0.is_dominant():
        raise NotDominant(f"seed {lam0} is not dominant")
    return dot(rs, simple_reflection(rs, i), lam0)


def _search_order(n: int, max_coord: int) -> Iterator[tuple[int, ...]]:
    # by largest coordinate, then lexicographically
    for top in range(1, max_coord + 1):
        for h in itertools.product(range(1, top + 1), repeat=n):
            if top in h:
                yield h


def find_polarization(rs: RootSystem, L: Weight, max_coord: int = DEFAULT_MAX_COORD) -> Weight:
    """First very ample H in the box ``[1, max_coord]^n`` with ``L . H^(d-1) > 0``."""
    rs.check_weight(L)
    if max_coord < 1:
        raise ValueError("max_coord must be at least 1")
    if L.is_dominant() or (-L).is_dominant():
        raise NoMixedSigns(f"{L} is nef or anti-nef; no polarization search is meaningful")
    best_H, best_deg = None, None
    for h in _search_order(rs.rank, max_coord):
        H = Weight(h)
        deg = degree(rs, L, H)
        if deg > 0:
            return H
        if best_deg is None or deg > best_deg:
            best_H, best_deg = H, deg
    raise SearchExhausted(
        f"no very ample H in [1,{max_coord}]^{rs.rank} gives {L} positive degree "
        f"(best: H={best_H}, degree {best_deg})",
        best_H=best_H,
        best_degree=best_deg,
    )


def paper_recipe_H(rs: RootSystem, L: Weight, N: int) -> Weight:
    """N on every positive slot of L, 1 on every negative slot.

    Always very ample.  Its degree against L is *not* guaranteed positive.
    """
    rs.check_weight(L)
    if N < 1:
        raise ValueError("N must be a positive integer")
    pattern = sign_pattern(L)
    if pattern.zeros:
        raise ZeroCoordinate(f"{L} has zero coordinates at {list(pattern.zeros)}")
    return Weight(N if m > 0 else 1 for m in L)


@dataclass(frozen=True)
class Certificate:
    group: str
    d: int
    lambda0: Weight
    reflection_index: int
    L: Weight
    cohomology: Concentrated
    sign_pattern: SignPattern
    H: Weight
    degree_L: int
    paper_recipe_H: Weight | None
    paper_recipe_degree: int | None
    paper_recipe_N: int | None
    asserted_consequences: str = ASSERTED_CONSEQUENCES

    @property
    def slope_check(self) -> bool:
        """mu(L) > mu(V): L destabilizes V since V/L is trivial."""
        return 2 * self.degree_L > self.degree_L

    def to_dict(self) -> dict:
        recipe = None
        if self.paper_recipe_H is not None:
            recipe = {
                "H": self.paper_recipe_H.to_list(),
                "degree": self.paper_recipe_degree,
                "N": self.paper_recipe_N,
            }
        return {
            "group": self.group,
            "dim": self.d,
            "lambda0": self.lambda0.to_list(),
            "reflection": self.reflection_index,
            "L": self.L.to_list(),
            "h1_dimension": self.cohomology.dimension,
            "concentration_degree": self.cohomology.degree,
            "sign_pattern": self.sign_pattern.to_dict(),
            "H": self.H.to_list(),
            "degree": self.degree_L,
            "paper_recipe": recipe,
            "asserted_consequences": self.asserted_consequences,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> Certificate:
        recipe = data.get("paper_recipe")
        sp = data["sign_pattern"]
        return cls(
            group=data["group"],
            d=data["dim"],
            lambda0=Weight(data["lambda0"]),
            reflection_index=data["reflection"],
            L=Weight(data["L"]),
            # s_i . lambda0 dominantizes back to lambda0 through s_i
            cohomology=Concentrated(
                degree=data["concentration_degree"],
                dimension=data["h1_dimension"],
                dominantization=Weight(data["lambda0"]),
                word=(data["reflection"],),
            ),
            sign_pattern=SignPattern(
                tuple(sp["positives"]), tuple(sp["negatives"]), tuple(sp["zeros"])
            ),
            H=Weight(data["H"]),
            degree_L=data["degree"],
            paper_recipe_H=Weight(recipe["H"]) if recipe else None,
            paper_recipe_degree=recipe["degree"] if recipe else None,
            paper_recipe_N=recipe["N"] if recipe else None,
            asserted_consequences=data["asserted_consequences"],
        )

    def validate(self) -> list[str]:
        """Recompute every number from scratch; return a list of failures."""
        problems = []
        rs = parse_group(self.group)
        if rs.rank < 2:
            problems.append("rank must be at least 2")
        if self.d != rs.d:
            problems.append(f"dim {self.d} != {rs.d}")
        try:
            L = candidate_L(rs, self.lambda0, self.reflection_index)
        except Exception as exc:
            problems.append(f"candidate_L failed: {exc}")
            L = None
        if L != self.L:
            problems.append(f"L {self.L} != s_{self.reflection_index} . lambda0 = {L}")
        coh = bott(rs, self.L)
        if not isinstance(coh, Concentrated) or coh.degree != 1:
            problems.append(f"cohomology of L is not concentrated in degree 1: {coh}")
        elif coh != self.cohomology or coh.dimension < 1:
            problems.append(f"recorded cohomology {self.cohomology} != recomputed {coh}")
        if sign_pattern(self.L) != self.sign_pattern:
            problems.append("sign pattern does not match L")
        if not is_very_ample(rs, self.H):
            problems.append(f"H {self.H} is not very ample")
        deg = degree(rs, self.L, self.H)
        if deg != self.degree_L:
            problems.append(f"degree {self.degree_L} != recomputed {deg}")
        if self.degree_L <= 0 or not self.slope_check:
            problems.append("degree of L is not positive, so L does not destabilize V")
        if self.paper_recipe_H is not None:
            expected = paper_recipe_H(rs, self.L, self.paper_recipe_N)
            if expected != self.paper_recipe_H:
                problems.append("paper recipe H does not match L and N")
            elif degree(rs, self.L, self.paper_recipe_H) != self.paper_recipe_degree:
                problems.append("paper recipe degree does not match")
        if self.asserted_consequences != ASSERTED_CONSEQUENCES:
            problems.append("asserted consequences text was altered")
        return problems

    def render(self) -> str:
        lines = [
            f"group            {self.group}  (dim G/B = {self.d})",
            f"lambda0          {self.lambda0}",
            f"reflection       s{self.reflection_index}",
            f"L = s{self.reflection_index}.lambda0   {self.L}",
            f"cohomology       H^{self.cohomology.degree} has dimension {self.cohomology.dimension};"
            " all other cohomology vanishes",
            f"sign pattern     positives={list(self.sign_pattern.positives)}"
            f" negatives={list(self.sign_pattern.negatives)}"
            f" zeros={list(self.sign_pattern.zeros)}",
            f"polarization H   {self.H}  (very ample)",
            f"degree L.H^(d-1) {self.degree_L}",
            f"slope check      mu(L) = {self.degree_L} > mu(V) = {self.degree_L}/2: "
            f"{'yes' if self.slope_check else 'NO'}",
        ]
        if self.paper_recipe_H is not None:
            lines.append(
                f"literal recipe   N={self.paper_recipe_N}: H={self.paper_recipe_H},"
                f" degree {self.paper_recipe_degree}"
            )
        else:
            lines.append("literal recipe   not applicable (L has zero coordinates)")
        lines.append("asserted, not computed:")
        lines.append("  " + self.asserted_consequences)
        return "\n".join(lines)


def construct_counterexample(
    rs: RootSystem,
    lam0: Weight | None = None,
    i: int = 1,
    max_coord: int = DEFAULT_MAX_COORD,
    strict: bool = False,
) -> Certificate:
    if rs.rank < 2:
        raise RankTooSmall(f"{rs.name} has rank {rs.rank}; the construction needs rank > 1")
    lam0 = rs.zero() if lam0 is None else rs.check_weight(lam0)
    L = candidate_L(rs, lam0, i)
    coh = bott(rs, L)
    if not isinstance(coh, Concentrated) or coh.degree != 1:
        raise IntegralityError(f"Bott gave {coh} for s_{i}.{lam0}; expected degree 1")
    pattern = sign_pattern(L)
    if pattern.zeros:
        msg = f"L = {L} has zero coordinates at {list(pattern.zeros)}"
        if strict:
            raise DegenerateSignPattern(msg)
        warnings.warn(msg, SignPatternWarning, stacklevel=2)
    H = find_polarization(rs, L, max_coord)
    deg = degree(rs, L, H)

    recipe_H = recipe_deg = recipe_N = None
    if not pattern.zeros:
        recipe_N = max_coord
        recipe_H = paper_recipe_H(rs, L, recipe_N)
        recipe_deg = degree(rs, L, recipe_H)

    return Certificate(
        group=rs.name,
        d=rs.d,
        lambda0=lam0,
        reflection_index=i,
        L=L,
        cohomology=coh,
        sign_pattern=pattern,
        H=H,
        degree_L=deg,
        paper_recipe_H=recipe_H,
        paper_recipe_degree=recipe_deg,
        paper_recipe_N=recipe_N,
    )
