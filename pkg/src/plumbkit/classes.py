"""The discriminant group ``H = L'/L`` as the cokernel of ``B``.

A cycle ``l'`` in ``L'`` is identified with its integral pairing vector
``B l'``; ``L`` maps onto the column lattice of ``B``. With ``U B V = D`` in
Smith form, the class of ``l'`` has coordinates ``(U B l')_i mod d_i`` over
the invariant factors ``d_i > 1``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import linalg
from .errors import EnumerationCapExceeded
from .lattice import Cycle, Lattice

DEFAULT_CAP = 100_000


@dataclass(frozen=True)
class GroupClass:
    coords: tuple[int, ...]
    representative: Cycle

    def to_dict(self) -> dict:
        return {"coords": list(self.coords), "representative": self.representative.to_strings()}


class ClassGroup:
    def __init__(self, lattice: Lattice, cap: int | None = None):
        lattice.require_negdef()
        self.lattice = lattice
        self.cap = DEFAULT_CAP if cap is None else cap
        if self.cap < 1:
            raise ValueError("enumeration cap must be >= 1")
        d, u, v = linalg.smith_normal_form(lattice.B)
        self._diag = [d[i][i] for i in range(len(d))]
        self._U = u
        self._Uinv = linalg.integer_inverse(u)
        self._V = v
        # positions of the nontrivial factors in the Smith diagonal
        self._slots = [i for i, x in enumerate(self._diag) if x > 1]
        self.invariant_factors = tuple(self._diag[i] for i in self._slots)
        self.order = abs(lattice.det)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"ClassGroup(order={self.order}, invariant_factors={list(self.invariant_factors)})"

    def coords_of(self, x: Cycle) -> tuple[int, ...]:
        self.lattice.require_lprime(x)
        p = [int(v) for v in self.lattice.pairings(x)]
        y = linalg.matvec(self._U, p)
        return tuple(y[i] % self._diag[i] for i in self._slots)

    def class_of(self, x: Cycle) -> GroupClass:
        return self.from_coords(self.coords_of(x))

    def from_coords(self, coords) -> GroupClass:
        coords = tuple(int(c) % d for c, d in zip(coords, self.invariant_factors, strict=True))
        y = [0] * self.lattice.s
        for slot, c in zip(self._slots, coords):
            y[slot] = c
        p = linalg.matvec(self._Uinv, y)
        return GroupClass(coords, self.lattice.from_pairings(p))

    @property
    def identity(self) -> GroupClass:
        return self.from_coords([0] * len(self.invariant_factors))

    def generators(self) -> list[GroupClass]:
        """One generator per invariant factor."""
        k = len(self.invariant_factors)
        return [self.from_coords([int(i == j) for i in range(k)]) for j in range(k)]

    def add(self, a: GroupClass, b: GroupClass) -> GroupClass:
        return self.from_coords([x + y for x, y in zip(a.coords, b.coords)])

    def neg(self, a: GroupClass) -> GroupClass:
        return self.from_coords([-x for x in a.coords])

    def element_order(self, a: GroupClass) -> int:
        n = 1
        for c, d in zip(a.coords, self.invariant_factors):
            n = math.lcm(n, d // math.gcd(c, d))
        return n

    def check_cap(self, what: str = "enumeration"):
        if self.order > self.cap:
            raise EnumerationCapExceeded(f"{what} needs all {self.order} classes; cap is {self.cap}")

    def __iter__(self) -> Iterator[GroupClass]:
        """All classes, ordered by canonical coordinates."""
        self.check_cap()
        for coords in itertools.product(*(range(d) for d in self.invariant_factors)):
            yield self.from_coords(coords)

    def theta_character(self, h: GroupClass) -> tuple[Fraction, ...]:
        """Exponents ``q_j`` in [0, 1) with ``theta(h)(g_j) = exp(2 pi i q_j)``."""
        lat = self.lattice
        return tuple(
            _frac(lat.pair(h.representative, lat.dual_cycle(j))) for j in range(lat.s)
        )

    def character_pairing(self, a: GroupClass, b: GroupClass) -> Fraction:
        """``theta(a)(b)`` as an exponent in [0, 1)."""
        return _frac(self.lattice.pair(a.representative, b.representative))


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)

