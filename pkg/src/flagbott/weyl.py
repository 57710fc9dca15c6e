"""Weyl group elements, the linear and dot actions, and enumeration.

An element is identified by its image of rho, which determines it because
rho is regular.  Words are kept for reporting only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence

from .errors import GroupTooLarge, InvalidWeight
from .rootsystem import RootSystem, Weight, pair

DEFAULT_MAX_SIZE = 10**6

Matrix = tuple[tuple[int, ...], ...]


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _apply(m: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(mij * vj for mij, vj in zip(row, v)) for row in m)


def reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    """Matrix of s_i on fundamental coordinates: I - alpha_i e_i^T."""
    j = rs.check_index(i)
    n = rs.rank
    return tuple(
        tuple(int(r == c) - (rs.cartan[r][j] if c == j else 0) for c in range(n))
        for r in range(n)
    )


def inversion_count(rs: RootSystem, image_of_rho: Sequence[int]) -> int:
    """Number of positive roots beta with <w(rho), beta^vee> < 0, i.e. l(w)."""
    v = Weight(image_of_rho)
    return sum(1 for r in rs.positive_roots if pair(v, r) < 0)


@dataclass(frozen=True, eq=False)
class WeylElement:
    word: tuple[int, ...]
    length: int
    action: Matrix = field(repr=False)
    rs: RootSystem = field(repr=False)

    @property
    def rho_image(self) -> tuple[int, ...]:
        return _apply(self.action, (1,) * self.rs.rank)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs == other.rs and self.action == other.action

    def __hash__(self):
        return hash((self.rs.name, self.action))

    def __mul__(self, other: WeylElement) -> WeylElement:
        return element_from_word(self.rs, self.word + other.word)

    def inverse(self) -> WeylElement:
        return element_from_word(self.rs, tuple(reversed(self.word)))

    def __str__(self) -> str:
        return format_word(self.word)


def element_from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    """Build s_{w[0]} s_{w[1]} ... ; the rightmost letter acts first."""
    word = tuple(int(i) for i in word)
    m = _identity(rs.rank)
    for i in word:
        m = _matmul(m, reflection_matrix(rs, i))
    length = inversion_count(rs, _apply(m, (1,) * rs.rank))
    return WeylElement(word, length, m, rs)


def identity(rs: RootSystem) -> WeylElement:
    return element_from_word(rs, ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    return element_from_word(rs, (i,))


def format_word(word: Sequence[int]) -> str:
    if not word:
        return "e"
    return "*".join(f"s{i}" for i in word)


def parse_word(text: str, rs: RootSystem | None = None) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e", "1"):
        return ()
    word = []
    for tok in text.split("*"):
        tok = tok.strip().lower()
        if not tok.startswith("s") or not tok[1:].isdigit():
            raise InvalidWeight(f"cannot parse Weyl word {text!r}; expected e.g. s1*s2")
        i = int(tok[1:])
        if rs is not None:
            rs.check_index(i)
        word.append(i)
    return tuple(word)


def reflect(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """s_i(lam) = lam - <lam, alpha_i^vee> alpha_i."""
    j = rs.check_index(i)
    rs.check_weight(lam)
    m = lam[j]
    return Weight(c - m * rs.cartan[k][j] for k, c in enumerate(lam))


def act(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    rs.check_weight(lam)
    return Weight(_apply(w.action, lam.coords))


def dot(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    """The rho-shifted action w.lam = w(lam + rho) - rho."""
    r = rs.rho()
    return act(rs, w, lam + r) - r


def enumerate_weyl(rs: RootSystem, max_size: int = DEFAULT_MAX_SIZE) -> list[WeylElement]:
    """All of W, by breadth-first search on the orbit of rho.

    Elements come out sorted by length; each carries the reduced word found
    first when simple reflections are tried in ascending index order.
    """
    n = rs.rank
    start = (1,) * n
    elements = [WeylElement((), 0, _identity(n), rs)]
    seen = {start}
    queue = deque([(start, elements[0])])
    refl = [reflection_matrix(rs, i + 1) for i in range(n)]
    while queue:
        v, w = queue.popleft()
        for i in range(n):
            # s_i w is longer than w exactly when <w(rho), alpha_i^vee> > 0
            if v[i] <= 0:
                continue
            nv = _apply(refl[i], v)
            if nv in seen:
                continue
            seen.add(nv)
            if len(seen) > max_size:
                raise GroupTooLarge(f"Weyl group of {rs.name} has more than {max_size} elements")
            nw = WeylElement((i + 1,) + w.word, w.length + 1, _matmul(refl[i], w.action), rs)
            elements.append(nw)
            queue.append((nv, nw))
    return elements


def weyl_order(rs: RootSystem) -> int:
    """|W| = prod over positive roots of (ht + 1) / ht, no enumeration."""
    order = prod(Fraction(r.height + 1, r.height) for r in rs.positive_roots)
    assert order.denominator == 1
    return int(order)


def longest_element(rs: RootSystem) -> WeylElement:
    """w0, found by walking -rho back into the dominant chamber."""
    v = list(-rs.rho())
    word = []
    while True:
        neg = [k for k, c in enumerate(v) if c < 0]
        if not neg:
            break
        j = neg[0]
        m = v[j]
        v = [c - m * rs.cartan[k][j] for k, c in enumerate(v)]
        word.append(j + 1)
    # word sends -rho to rho, and w0 is an involution
    return element_from_word(rs, word)
