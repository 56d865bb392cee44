"""Arithmetic for finite abelian groups presented as products of cyclic groups.

Elements are plain tuples of residues; every operation takes the group
explicitly, so values stay cheap to hash and compare.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import gcd, prod
from typing import Dict, Iterator, List, Tuple

Element = Tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct product Z_{m_1} x ... x Z_{m_k}, each factor of order m_i >= 1."""

    orders: Tuple[int, ...]

    def __post_init__(self) -> None:
        orders = tuple(int(m) for m in self.orders)
        if not orders:
            raise ValueError("group needs at least one cyclic factor")
        if any(m < 1 for m in orders):
            raise ValueError(f"cyclic orders must be >= 1, got {orders!r}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def cyclic(cls, m: int) -> "FiniteAbelianGroup":
        return cls((m,))

    @classmethod
    def klein(cls) -> "FiniteAbelianGroup":
        return cls((2, 2))

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def zero(self) -> Element:
        return (0,) * len(self.orders)

    def element(self, coords) -> Element:
        """Reduce an integer vector into the group (coordinatewise mod m_i)."""
        coords = tuple(coords)
        if len(coords) != len(self.orders):
            raise ValueError(
                f"element has {len(coords)} coordinates, group has {len(self.orders)}"
            )
        return tuple(int(c) % m for c, m in zip(coords, self.orders))

    def contains(self, el: Element) -> bool:
        return (
            isinstance(el, tuple)
            and len(el) == len(self.orders)
            and all(0 <= c < m for c, m in zip(el, self.orders))
        )

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic coordinate order."""
        return product(*(range(m) for m in self.orders))

    def _check(self, el: Element) -> None:
        if not self.contains(el):
            raise ValueError(f"{el!r} is not an element of Z_{self.orders}")

    def add(self, x: Element, y: Element) -> Element:
        self._check(x)
        self._check(y)
        return tuple((a + b) % m for a, b, m in zip(x, y, self.orders))

    def neg(self, x: Element) -> Element:
        self._check(x)
        return tuple((-a) % m for a, m in zip(x, self.orders))

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def is_klein(self) -> bool:
        return self.orders == (2, 2)

    def is_cyclic(self) -> bool:
        return len(self.orders) == 1


def centered(m: int, a: int) -> int:
    """Centered representative of a mod m, in S = {-floor((m-1)/2), ..., floor(m/2)}.

    For even m the boundary class m/2 is represented by +m/2.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    a %= m
    return a if a <= m // 2 else a - m


def uncentered(m: int, v: int) -> int:
    """Inverse of :func:`centered`: the residue in [0, m) of a centered value."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return v % m


def centered_range(m: int) -> range:
    """The interval S of centered representatives for Z_m, ascending."""
    return range(-((m - 1) // 2), m // 2 + 1)


def unit_scale(m: int, u: int, a: int) -> int:
    """u*a mod m for a unit u; a bijection of Z_m onto itself."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if gcd(u, m) != 1:
        raise ValueError(f"{u} is not a unit mod {m}")
    return (u * a) % m


def zero_fixing_bijections(group: FiniteAbelianGroup) -> List[Dict[Element, Element]]:
    """All six bijections of the Klein four-group fixing 0.

    Every such bijection permutes the three involutions and is automatically an
    automorphism, which is what makes them usable for relabeling arguments.
    """
    if not group.is_klein():
        raise ValueError("zero-fixing bijection enumeration is Klein-group only")
    zero = group.zero
    nonzero = [el for el in group.elements() if el != zero]
    maps = []
    for perm in permutations(nonzero):
        phi = {zero: zero}
        phi.update(dict(zip(nonzero, perm)))
        maps.append(phi)
    return maps


KLEIN = FiniteAbelianGroup.klein()
KLEIN_NAMES: Dict[Element, str] = {(0, 0): "0", (1, 0): "a", (0, 1): "b", (1, 1): "c"}
KLEIN_BY_NAME: Dict[str, Element] = {v: k for k, v in KLEIN_NAMES.items()}


def format_element(group: FiniteAbelianGroup, el: Element) -> str:
    """Short display form: plain residue for cyclic groups, 0/a/b/c for Klein."""
    if group.is_klein():
        return KLEIN_NAMES[el]
    if group.is_cyclic():
        return str(el[0])
    return "(" + ",".join(str(c) for c in el) + ")"
