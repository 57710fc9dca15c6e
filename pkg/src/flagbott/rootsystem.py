"""Split simple root systems in exact integer form.

Weights are stored in fundamental-weight coordinates, so the coordinate
``m_i`` of a weight is its pairing with the i-th simple coroot.  Every
positive root carries the simple-coroot expansion of its coroot, which is
the integer functional ``lambda -> <lambda, beta^vee>``.  Simple roots are
numbered as in Bourbaki's tables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, InvalidType, InvalidWeight, RankMismatch

SERIES = "ABCDEFG"

# (series, rank) -> number of positive roots
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

# index of the root lattice in the weight lattice, i.e. det(cartan)
_CONNECTION_INDEX = {
    "A": lambda n: n + 1,
    "B": lambda n: 2,
    "C": lambda n: 2,
    "D": lambda n: 4,
    "E": lambda n: {6: 3, 7: 2, 8: 1}[n],
    "F": lambda n: 1,
    "G": lambda n: 1,
}


@dataclass(frozen=True)
class Weight:
    """An integral weight, written in the basis of fundamental weights.

    Via ``X^*(T) = Pic(G/B)`` the same vector names the line bundle
    ``L(m_1, ..., m_n)``.
    """

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        object.__setattr__(self, "coords", tuple(int(c) for c in coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: Weight) -> None:
        if len(other.coords) != len(self.coords):
            raise RankMismatch(f"weights of rank {len(self)} and {len(other)}")

    def __add__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> Weight:
        return Weight(-a for a in self.coords)

    def __mul__(self, k: int) -> Weight:
        return Weight(k * a for a in self.coords)

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_strictly_dominant(self) -> bool:
        return all(c > 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def to_list(self) -> list[int]:
        return list(self.coords)


@dataclass(frozen=True)
class Root:
    simple_expansion: tuple[int, ...]
    coroot_functional: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.simple_expansion)


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def d(self) -> int:
        """Number of positive roots, equal to dim G/B."""
        return len(self.positive_roots)

    def __str__(self) -> str:
        return self.name

    def check_index(self, i: int) -> int:
        """Validate a 1-based simple index and return it 0-based."""
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"simple index {i} outside 1..{self.rank} for {self.name}")
        return i - 1

    def check_weight(self, lam: Weight) -> Weight:
        if len(lam) != self.rank:
            raise RankMismatch(f"weight {lam} has {len(lam)} coordinates, {self.name} has rank {self.rank}")
        return lam

    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental coordinates (column i of the Cartan matrix)."""
        j = self.check_index(i)
        return Weight(row[j] for row in self.cartan)

    def fundamental_weight(self, i: int) -> Weight:
        j = self.check_index(i)
        return Weight(int(k == j) for k in range(self.rank))

    def zero(self) -> Weight:
        return Weight((0,) * self.rank)

    def rho(self) -> Weight:
        return Weight((1,) * self.rank)

    def root_weight(self, root: Root) -> Weight:
        """A root written in fundamental coordinates."""
        return Weight(
            sum(self.cartan[k][j] * b for j, b in enumerate(root.simple_expansion))
            for k in range(self.rank)
        )

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.positive_roots if r.height == 1)

    @cached_property
    def rho_pairing_product(self) -> int:
        """prod over positive roots of <rho, beta^vee>."""
        return prod(sum(r.coroot_functional) for r in self.positive_roots)


def pair(lam: Weight, root: Root) -> int:
    """<lam, root^vee> as an exact integer."""
    f = root.coroot_functional
    if len(f) != len(lam):
        raise RankMismatch(f"weight of rank {len(lam)} paired with root of rank {len(f)}")
    return sum(a * b for a, b in zip(f, lam.coords))


def rho(rs: RootSystem) -> Weight:
    return rs.rho()


def is_valid_type(series: str, rank: int) -> bool:
    return (
        (series == "A" and rank >= 1)
        or (series == "B" and rank >= 2)
        or (series == "C" and rank >= 3)
        or (series == "D" and rank >= 4)
        or (series == "E" and rank in (6, 7, 8))
        or (series == "F" and rank == 4)
        or (series == "G" and rank == 2)
    )


def cartan_matrix(series: str, rank: int) -> list[list[int]]:
    """Bourbaki Cartan matrix with ``c[i][j] = <alpha_j, alpha_i^vee>``."""
    if not is_valid_type(series, rank):
        raise InvalidType(f"{series}{rank} is not a simple type")
    n = rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j):
        c[i][j] = c[j][i] = -1

    if series in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if series == "B":
            # alpha_n short
            c[n - 1][n - 2] = -2
        elif series == "C":
            # alpha_n long
            c[n - 2][n - 1] = -2
    elif series == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif series == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif series == "F":
        bond(0, 1)
        bond(1, 2)
        bond(2, 3)
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        c[2][1] = -2
    elif series == "G":
        # alpha_1 short, alpha_2 long
        c[0][1] = -3
        c[1][0] = -1
    return c


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list[Root]:
    # Close the simple roots under simple reflections, carrying each root
    # and its coroot together:
    #   s_i(beta)     = beta     - <beta, alpha_i^vee> alpha_i
    #   s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee
    n = len(cartan)
    simple = []
    for i in range(n):
        e = tuple(int(k == i) for k in range(n))
        simple.append((e, e))
    seen = {r for r, _ in simple}
    roots = list(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta, cobeta in frontier:
            for i in range(n):
                if beta[i] == 1 and sum(beta) == 1:
                    continue
                p = sum(cartan[i][j] * b for j, b in enumerate(beta))
                q = sum(cartan[j][i] * k for j, k in enumerate(cobeta))
                new = tuple(b - p * (j == i) for j, b in enumerate(beta))
                conew = tuple(k - q * (j == i) for j, k in enumerate(cobeta))
                if new in seen:
                    continue
                seen.add(new)
                roots.append((new, conew))
                nxt.append((new, conew))
        frontier = nxt
    roots.sort(key=lambda rc: (sum(rc[0]), tuple(-x for x in rc[0])))
    return [Root(r, c) for r, c in roots]


def build_root_system(series: str, rank: int) -> RootSystem:
    series = str(series).upper()
    if series not in SERIES or not isinstance(rank, int) or not is_valid_type(series, rank):
        raise InvalidType(f"{series}{rank} is not a simple type")
    c = cartan_matrix(series, rank)
    roots = _positive_roots(c)
    assert len(roots) == _POSITIVE_ROOT_COUNT[series](rank)
    return RootSystem(series, rank, tuple(tuple(row) for row in c), tuple(roots))


def expected_positive_root_count(series: str, rank: int) -> int:
    return _POSITIVE_ROOT_COUNT[series](rank)


def connection_index(series: str, rank: int) -> int:
    return _CONNECTION_INDEX[series](rank)


_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")
_WEIGHT_RE = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


def parse_group(text: str) -> RootSystem:
    """Parse ``"A2"``, ``"g2"``, ``"E8"`` etc."""
    m = _TYPE_RE.match(text)
    if not m:
        raise InvalidType(f"cannot parse group type {text!r}")
    return build_root_system(m.group(1).upper(), int(m.group(2)))


def parse_weight(text: str, rs: RootSystem | None = None) -> Weight:
    if not _WEIGHT_RE.match(text):
        raise InvalidWeight(f"cannot parse weight {text!r}; expected e.g. -2,1")
    lam = Weight(int(t) for t in text.split(","))
    if rs is not None:
        rs.check_weight(lam)
    return lam
