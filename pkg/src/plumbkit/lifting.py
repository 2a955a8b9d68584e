"""Set-theoretic sections of ``L' -> H`` and Laufer-type computation sequences.

``anti_nef_lift`` climbs from the unit-cube representative. This reaches the
global minimum of ``(l' + L) ∩ -NE``: every anti-nef class member is
effective, so it is ``>=`` the unit-cube representative, and a step along
``E_j`` with ``(x, E_j) > 0`` never leaves the region below that minimum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, NamedTuple, Sequence

from .classes import ClassGroup, GroupClass
from .lattice import Cycle, Lattice

# chooses the vertex to add among the admissible ones (sorted ascending)
Chooser = Callable[[Sequence[int]], int]


def smallest(candidates: Sequence[int]) -> int:
    return candidates[0]


@dataclass(frozen=True)
class Step:
    vertex: int
    before: Fraction  # the triggering pairing
    after: Fraction


@dataclass(frozen=True)
class LauferTrace:
    """Certificate ``x_0, x_0 + E_{j(0)}, ..., x_t``."""

    start: Cycle
    end: Cycle
    steps: tuple[Step, ...] = field(default=())
    condition: str = ""

    @property
    def vertices(self) -> list[int]:
        return [st.vertex for st in self.steps]

    def __len__(self):
        return len(self.steps)

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "start": self.start.to_strings(),
            "end": self.end.to_strings(),
            "steps": [
                {"vertex": st.vertex, "before": str(st.before), "after": str(st.after)}
                for st in self.steps
            ],
        }


def _climb(lat: Lattice, start: Cycle, bound: Sequence[Fraction], choose: Chooser, condition: str, report_sign: int):
    """From ``start`` add ``E_j`` while some ``(x, E_j) > bound[j]``.

    Trace steps record ``report_sign * ((x, E_j) - bound[j])``, i.e. the pairing
    named in ``condition``.
    """
    s = lat.s
    B = lat.B
    slack = [p - b for p, b in zip(lat.pairings(start), bound)]
    x = list(start.coeffs)
    steps = []
    while True:
        bad = [j for j in range(s) if slack[j] > 0]
        if not bad:
            break
        j = choose(bad)
        if j not in bad:
            raise ValueError(f"chooser returned inadmissible vertex {j}")
        before = slack[j]
        x[j] += 1
        for i in range(s):
            slack[i] += B[i][j]
        steps.append(Step(j, report_sign * before, report_sign * slack[j]))
    end = Cycle(x)
    return end, LauferTrace(start, end, tuple(steps), condition)


class Reduction(NamedTuple):
    reduced: Cycle  # l_{l'}: minimal effective integral cycle with l' - l nef
    remainder: Cycle  # e(l') = l' - l_{l'}
    trace: LauferTrace


def laufer_reduce(lat: Lattice, lprime: Cycle, choose: Chooser = smallest) -> Reduction:
    """Generalized Laufer algorithm: ``l' = e(l') + l_{l'}`` with ``e(l')`` nef."""
    lat.require_negdef()
    end, trace = _climb(lat, lat.zero(), lat.pairings(lprime), choose, "(l' - x, E_j) < 0", -1)
    return Reduction(end, lprime - end, trace)


def unit_cube_rep(lat: Lattice, h: GroupClass) -> Cycle:
    """``l'_e(h)``: the class member with every coefficient in [0, 1)."""
    return h.representative.frac()


def anti_nef_ascent(lat: Lattice, h: GroupClass, choose: Chooser = smallest) -> tuple[Cycle, LauferTrace]:
    lat.require_negdef()
    return _climb(lat, unit_cube_rep(lat, h), [0] * lat.s, choose, "(x, E_j) > 0", 1)


def anti_nef_lift(lat: Lattice, h: GroupClass) -> Cycle:
    """Minimal element of ``h`` inside ``-NE``."""
    return anti_nef_ascent(lat, h)[0]


def nef_lift(lat: Lattice, group: ClassGroup, h: GroupClass) -> Cycle:
    """Maximal element of ``h`` inside ``NE``, as ``-anti_nef_lift(-h)``."""
    return -anti_nef_lift(lat, group.neg(h))


def distinguished_char(lat: Lattice, h: GroupClass) -> Cycle:
    """``k_r = K + 2 * anti_nef_lift(h)``."""
    return lat.canonical_cycle + 2 * anti_nef_lift(lat, h)


def in_script_L(lat: Lattice, group: ClassGroup, lprime: Cycle) -> bool:
    """Membership in the union over classes of ``nef_lift(h) + L_e``."""
    lat.require_lprime(lprime)
    h = group.class_of(lprime)
    diff = lprime - nef_lift(lat, group, h)
    return diff.is_integral() and diff.is_effective()


def fundamental_cycle(lat: Lattice, choose: Chooser = smallest) -> tuple[Cycle, LauferTrace]:
    """Laufer's ``Z_min``: start at ``E_0`` and add ``E_j`` while ``(x, E_j) > 0``."""
    lat.require_negdef()
    return _climb(lat, lat.E(0), [0] * lat.s, choose, "(x, E_j) > 0", 1)
