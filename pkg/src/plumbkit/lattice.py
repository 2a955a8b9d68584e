"""Intersection lattice of a plumbing graph: pairing, duals, K, chi, cones."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple

from . import linalg
from .errors import NotInLprime, NotNegativeDefinite, SingularMatrix
from .graph import PlumbingGraph
from .rational import format_vector


@dataclass(frozen=True)
class Cycle:
    """Rational cycle ``sum_j coeffs[j] * E_j``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    @classmethod
    def zero(cls, s: int) -> "Cycle":
        return cls([0] * s)

    @classmethod
    def basis(cls, s: int, j: int) -> "Cycle":
        return cls([int(i == j) for i in range(s)])

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def __add__(self, other: "Cycle") -> "Cycle":
        return Cycle(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True))

    def __sub__(self, other: "Cycle") -> "Cycle":
        return Cycle(a - b for a, b in zip(self.coeffs, other.coeffs, strict=True))

    def __neg__(self) -> "Cycle":
        return Cycle(-a for a in self.coeffs)

    def __mul__(self, c) -> "Cycle":
        return Cycle(c * a for a in self.coeffs)

    __rmul__ = __mul__

    # partial order: x <= y iff y - x is effective
    def __le__(self, other: "Cycle") -> bool:
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs, strict=True))

    def __ge__(self, other: "Cycle") -> bool:
        return other <= self

    def add_basis(self, j: int, times: int = 1) -> "Cycle":
        c = list(self.coeffs)
        c[j] += times
        return Cycle(c)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        return [j for j, c in enumerate(self.coeffs) if c != 0]

    def floor(self) -> "Cycle":
        return Cycle(math.floor(c) for c in self.coeffs)

    def frac(self) -> "Cycle":
        return Cycle(c - math.floor(c) for c in self.coeffs)

    def to_strings(self) -> list[str]:
        return format_vector(self.coeffs)

    def __str__(self):
        return "(" + ", ".join(self.to_strings()) + ")"


def cycle_min(x: Cycle, y: Cycle) -> Cycle:
    return Cycle(min(a, b) for a, b in zip(x, y, strict=True))


class ConeFlags(NamedTuple):
    effective: bool
    nef: bool
    anti_nef: bool


class Lattice:
    """Intersection data ``(L, B)`` of a plumbing graph.

    Construction fails with :class:`SingularMatrix` when ``det B == 0``;
    negative definiteness is only a flag here. Methods that need it call
    :meth:`require_negdef`.
    """

    def __init__(self, graph: PlumbingGraph):
        self.graph = graph
        s = graph.size
        b = [[0] * s for _ in range(s)]
        for j, e in enumerate(graph.eulers):
            b[j][j] = e
        for i, j in graph.edges:
            b[i][j] = b[j][i] = 1
        self.B = b
        self.minors = linalg.leading_minors(b)
        self.det = self.minors[-1]
        if self.det == 0:
            raise SingularMatrix("intersection matrix is singular (det = 0)")
        self.negdef = all((-1) ** (k + 1) * m > 0 for k, m in enumerate(self.minors))
        self.inverse = linalg.inverse(b)

    @property
    def s(self) -> int:
        return self.graph.size

    def require_negdef(self):
        if not self.negdef:
            raise NotNegativeDefinite("intersection form is not negative definite")

    def E(self, j: int) -> Cycle:
        return Cycle.basis(self.s, j)

    def zero(self) -> Cycle:
        return Cycle.zero(self.s)

    def dual_cycle(self, j: int) -> Cycle:
        """``D_j``: the j-th column of ``B^{-1}``, so ``(D_j, E_i) = delta_ij``."""
        return Cycle(row[j] for row in self.inverse)

    def pairings(self, x: Cycle) -> list[Fraction]:
        """The vector ``((x, E_j))_j = B x``."""
        return linalg.matvec(self.B, x.coeffs)

    def pair(self, x: Cycle, y: Cycle) -> Fraction:
        return sum((a * b for a, b in zip(self.pairings(x), y.coeffs)), Fraction(0))

    def square(self, x: Cycle) -> Fraction:
        return self.pair(x, x)

    def from_pairings(self, p: Iterable) -> Cycle:
        """The unique cycle ``x`` with ``(x, E_j) = p[j]``."""
        return Cycle(linalg.matvec(self.inverse, [Fraction(v) for v in p]))

    def in_lprime(self, x: Cycle) -> bool:
        return all(Fraction(v).denominator == 1 for v in self.pairings(x))

    def require_lprime(self, x: Cycle):
        if not self.in_lprime(x):
            raise NotInLprime(f"cycle {x} is not in L' (non-integral pairing)")

    @cached_property
    def canonical_cycle(self) -> Cycle:
        """``K`` with ``(K, E_j) = -e_j - 2``."""
        return self.from_pairings([-e - 2 for e in self.graph.eulers])

    @cached_property
    def K_squared_plus_s(self) -> Fraction:
        return self.square(self.canonical_cycle) + self.s

    def chi(self, x: Cycle) -> Fraction:
        return -self.pair(x, x + self.canonical_cycle) / 2

    def cone_membership(self, x: Cycle) -> ConeFlags:
        p = self.pairings(x)
        return ConeFlags(
            effective=x.is_effective(),
            nef=all(v >= 0 for v in p),
            anti_nef=all(v <= 0 for v in p),
        )

    def is_nef(self, x: Cycle) -> bool:
        return all(v >= 0 for v in self.pairings(x))

    def is_anti_nef(self, x: Cycle) -> bool:
        return all(v <= 0 for v in self.pairings(x))

    def is_characteristic(self, k: Cycle) -> bool:
        return all(
            (v + e) % 2 == 0 for v, e in zip(self.pairings(k), self.graph.eulers)
        )

    @cached_property
    def rationality(self):
        """Cached :func:`plumbkit.invariants.is_rational_graph` report."""
        from .invariants import is_rational_graph

        return is_rational_graph(self)

    def class_group(self, cap: int | None = None):
        from .classes import ClassGroup

        return ClassGroup(self, cap=cap)
