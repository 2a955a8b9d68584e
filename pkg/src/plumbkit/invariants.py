"""Rationality, h^1 of natural line bundles, Seiberg-Witten data of rational graphs."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .classes import ClassGroup, GroupClass
from .errors import NotRational
from .lattice import Cycle, Lattice
from .lifting import LauferTrace, distinguished_char, fundamental_cycle, in_script_L, laufer_reduce, nef_lift


@dataclass(frozen=True)
class RationalityReport:
    fundamental_cycle: Cycle
    chi_zmin: Fraction
    is_rational: bool
    trace: LauferTrace

    def to_dict(self) -> dict:
        return {
            "fundamental_cycle": self.fundamental_cycle.to_strings(),
            "chi_zmin": str(self.chi_zmin),
            "is_rational": self.is_rational,
            "trace": self.trace.to_dict(),
        }


def is_rational_graph(lat: Lattice) -> RationalityReport:
    """Artin-Laufer test: rational iff ``chi(Z_min) == 1``."""
    z, trace = fundamental_cycle(lat)
    c = lat.chi(z)
    return RationalityReport(z, c, c == 1, trace)


def require_rational(lat: Lattice):
    if not lat.negdef or not lat.rationality.is_rational:
        raise NotRational("graph is not rational; the formula is only valid for rational graphs")


def h1_rational(lat: Lattice, lprime: Cycle) -> Fraction:
    """``h^1(O(l'))`` on a rational graph: ``-(l', l_{l'}) - chi(l_{l'})``."""
    require_rational(lat)
    lat.require_lprime(lprime)
    red = laufer_reduce(lat, lprime).reduced
    return -lat.pair(lprime, red) - lat.chi(red)


@dataclass(frozen=True)
class SWData:
    sw: Fraction
    d: Fraction
    k_r: Cycle


def sw_rational(lat: Lattice, h: GroupClass) -> SWData:
    """For rational graphs ``-sw = d/2 = (k_r^2 + s)/8``."""
    require_rational(lat)
    k_r = distinguished_char(lat, h)
    q = lat.square(k_r) + lat.s
    return SWData(-q / 8, q / 4, k_r)


def conjecture_rhs(lat: Lattice, group: ClassGroup, lprime: Cycle) -> Fraction:
    """``-sw_[k] - (k^2 + s)/8`` for ``k = K - 2 l'``, i.e. ``(k_r^2 - k^2)/8``."""
    require_rational(lat)
    lat.require_lprime(lprime)
    k = lat.canonical_cycle - 2 * lprime
    # k lies in the orbit K + 2(-l' + L)
    sw = sw_rational(lat, group.class_of(-lprime)).sw
    return -sw - (lat.square(k) + lat.s) / 8


@dataclass
class ClassCheck:
    coords: tuple[int, ...]
    nef_lift: Cycle
    h1: Fraction
    rhs: Fraction
    members_checked: int = 0
    nonmembers_checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.h1 == 0 == self.rhs

    def to_dict(self) -> dict:
        return {
            "class": list(self.coords),
            "nef_lift": self.nef_lift.to_strings(),
            "h1": str(self.h1),
            "rhs": str(self.rhs),
            "members_checked": self.members_checked,
            "nonmembers_checked": self.nonmembers_checked,
            "failures": self.failures,
            "passed": self.passed,
        }


@dataclass
class EqualitySuiteReport:
    classes: list[ClassCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.classes)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "classes": [c.to_dict() for c in self.classes]}


def sample_shifts(s: int, max_samples: int, rng: random.Random) -> list[tuple[int, ...]]:
    """Nonzero offsets ``c`` with entries in {0, 1, 2}; all of them if few enough."""
    offsets = [c for c in itertools.product(range(3), repeat=s) if any(c)]
    if len(offsets) > max_samples:
        offsets = rng.sample(offsets, max_samples)
    return offsets


def verify_equality_suite(lat: Lattice, group: ClassGroup, seed: int = 0, samples_per_class: int = 8) -> EqualitySuiteReport:
    """Check ``h^1 = RHS`` on the distinguished set and ``h^1 <= RHS`` off it.

    For each class ``h`` the cycles ``nef_lift(h) ± sum c_j E_j`` with
    ``c_j in {0, 1, 2}`` are sampled (seeded).
    """
    require_rational(lat)
    group.check_cap("equality suite")
    rng = random.Random(seed)
    out = []
    for h in group:
        top = nef_lift(lat, group, h)
        check = ClassCheck(h.coords, top, h1_rational(lat, top), conjecture_rhs(lat, group, top))
        for c in sample_shifts(lat.s, samples_per_class, rng):
            for sign in (1, -1):
                lp = top + sign * Cycle(c)
                h1 = h1_rational(lat, lp)
                rhs = conjecture_rhs(lat, group, lp)
                if in_script_L(lat, group, lp):
                    check.members_checked += 1
                    if h1 != rhs:
                        check.failures.append(f"member {lp}: h1={h1} != rhs={rhs}")
                else:
                    check.nonmembers_checked += 1
                    if h1 > rhs:
                        check.failures.append(f"non-member {lp}: h1={h1} > rhs={rhs}")
        out.append(check)
    return EqualitySuiteReport(out)
