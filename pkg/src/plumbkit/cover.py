"""Equivariant geometric genus of the universal abelian cover (rational graphs),
Casson-Walker sums and the sum formula over the unit cube."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .classes import ClassGroup, GroupClass
from .errors import PlumbingError
from .invariants import require_rational, sw_rational
from .lattice import Lattice
from .lifting import anti_nef_lift, unit_cube_rep


def equivariant_pg(lat: Lattice, h: GroupClass) -> Fraction:
    """``p_g(X_a)_{theta(h)} = chi(l'_e(h)) - chi(anti_nef_lift(h))``."""
    require_rational(lat)
    return lat.chi(unit_cube_rep(lat, h)) - lat.chi(anti_nef_lift(lat, h))


def equivariant_pg_squares(lat: Lattice, h: GroupClass) -> Fraction:
    """Same eigengenus written as ``((K + 2 l_ne)^2 - (K + 2 l_e)^2) / 8``."""
    require_rational(lat)
    K = lat.canonical_cycle
    top = K + 2 * anti_nef_lift(lat, h)
    cube = K + 2 * unit_cube_rep(lat, h)
    return (lat.square(top) - lat.square(cube)) / 8


@dataclass(frozen=True)
class CoverRow:
    cls: GroupClass
    theta: tuple[Fraction, ...]
    eigengenus: Fraction

    def to_dict(self) -> dict:
        return {
            "class": self.cls.to_dict(),
            "theta_exponents": [str(q) for q in self.theta],
            "eigengenus": str(self.eigengenus),
        }


@dataclass(frozen=True)
class CoverGenusTable:
    rows: tuple[CoverRow, ...]

    @property
    def total(self) -> Fraction:
        return sum((r.eigengenus for r in self.rows), Fraction(0))

    @property
    def cover_rational(self) -> bool:
        return all(r.eigengenus == 0 for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "rows": [r.to_dict() for r in self.rows],
            "total": str(self.total),
            "cover_rational": self.cover_rational,
        }


def cover_pg_table(lat: Lattice, group: ClassGroup) -> CoverGenusTable:
    require_rational(lat)
    group.check_cap("cover table")
    return CoverGenusTable(
        tuple(CoverRow(h, group.theta_character(h), equivariant_pg(lat, h)) for h in group)
    )


def intermediate_cover_pg(lat: Lattice, group: ClassGroup, kernel_gens: Iterable[GroupClass]) -> Fraction:
    """Geometric genus of the cover with group ``H / <kernel_gens>``.

    Sums eigengenera over the characters trivial on the kernel.
    """
    require_rational(lat)
    group.check_cap("intermediate cover")
    gens = list(kernel_gens)
    total = Fraction(0)
    for h in group:
        if all(group.character_pairing(h, g) == 0 for g in gens):
            total += equivariant_pg(lat, h)
    return total


def lambda_from_sw(lat: Lattice, group: ClassGroup) -> Fraction:
    """Casson-Walker invariant as the sum of all ``sw`` (rational graphs only)."""
    require_rational(lat)
    group.check_cap("Casson-Walker sum")
    return sum((sw_rational(lat, h).sw for h in group), Fraction(0))


def cube_sum_direct(lat: Lattice, group: ClassGroup) -> Fraction:
    """``sum_{l' in Q} ((K + 2l')^2 + s) / 8``."""
    group.check_cap("unit cube sum")
    K = lat.canonical_cycle
    return sum(
        ((lat.square(K + 2 * unit_cube_rep(lat, h)) + lat.s) / 8 for h in group), Fraction(0)
    )


def cube_sum_rewritten(lat: Lattice, group: ClassGroup) -> Fraction:
    """Same sum as ``|H| (K^2 + s)/8 - sum_{l' in Q} chi(l')``."""
    group.check_cap("unit cube sum")
    chis = sum((lat.chi(unit_cube_rep(lat, h)) for h in group), Fraction(0))
    return group.order * lat.K_squared_plus_s / 8 - chis


def sum_formula_rhs(lat: Lattice, group: ClassGroup, lam) -> Fraction:
    """``-lambda - sum_{l' in Q} ((K + 2l')^2 + s)/8``; both evaluations must agree."""
    direct = cube_sum_direct(lat, group)
    rewritten = cube_sum_rewritten(lat, group)
    if direct != rewritten:
        raise PlumbingError(f"unit cube sum mismatch: {direct} != {rewritten}")
    return -Fraction(lam) - direct


@dataclass(frozen=True)
class CoverLambdaCheck:
    cover_side: Fraction
    base_side: Fraction

    @property
    def holds(self) -> bool:
        return self.cover_side == self.base_side


def cover_lambda_identity(lat: Lattice, group: ClassGroup, lam, cover: Lattice, lam_cover) -> CoverLambdaCheck:
    """Compare ``lambda(M_a) + (K_a^2 + s_a)/8`` with ``lambda(M) + sum_Q (...)``.

    ``cover`` must have trivial discriminant group (integral homology sphere link).
    Both lambda values are external inputs; the identity is evaluated, not derived.
    """
    cover.require_negdef()
    if abs(cover.det) != 1:
        raise ValueError("the cover graph must have |det| = 1")
    cover_side = Fraction(lam_cover) + cover.K_squared_plus_s / 8
    base_side = Fraction(lam) + cube_sum_direct(lat, group)
    return CoverLambdaCheck(cover_side, base_side)
