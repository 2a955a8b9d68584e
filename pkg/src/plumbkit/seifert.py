"""Star-shaped plumbing graphs from normalized Seifert invariants."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import GraphFormatError, InvalidSeifertPair, SingularMatrix
from .graph import PlumbingGraph
from .lattice import Lattice


def neg_cont_fraction(alpha: int, omega: int) -> list[int]:
    """``alpha/omega = b_1 - 1/(b_2 - 1/(... - 1/b_k))`` with every ``b_i >= 2``."""
    if not (0 < omega < alpha) or math.gcd(alpha, omega) != 1:
        raise InvalidSeifertPair(f"need coprime 0 < omega < alpha, got ({alpha}, {omega})")
    out = []
    p, q = alpha, omega
    while q:
        b = -(-p // q)  # ceiling
        out.append(b)
        p, q = q, b * q - p
    return out


def eval_neg_cont_fraction(bs) -> Fraction:
    val = Fraction(bs[-1])
    for b in reversed(bs[:-1]):
        val = b - 1 / val
    return val


@dataclass(frozen=True)
class SeifertData:
    e0: int
    legs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        legs = tuple(tuple(leg) for leg in self.legs)
        for leg in legs:
            if len(leg) != 2:
                raise InvalidSeifertPair(f"leg {leg!r} is not a pair (alpha, omega)")
            neg_cont_fraction(*leg)
        object.__setattr__(self, "legs", legs)

    @property
    def orbifold_euler(self) -> Fraction:
        return self.e0 + sum((Fraction(w, a) for a, w in self.legs), Fraction(0))

    @classmethod
    def from_dict(cls, doc) -> "SeifertData":
        if not isinstance(doc, dict) or "e0" not in doc or "legs" not in doc:
            raise GraphFormatError("Seifert document needs 'e0' and 'legs'")
        return cls(int(doc["e0"]), tuple(tuple(leg) for leg in doc["legs"]))

    def to_dict(self) -> dict:
        return {"e0": self.e0, "legs": [list(leg) for leg in self.legs]}


def load_seifert(path) -> SeifertData:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return SeifertData.from_dict(doc)


def star_graph(data: SeifertData) -> PlumbingGraph:
    """Central vertex 0 with weight ``e0``; each leg is a chain ``-b_1, ..., -b_k``."""
    eulers = [data.e0]
    edges = []
    for alpha, omega in data.legs:
        prev = 0
        for b in neg_cont_fraction(alpha, omega):
            eulers.append(-b)
            edges.append((prev, len(eulers) - 1))
            prev = len(eulers) - 1
    return PlumbingGraph(tuple(eulers), tuple(edges))


def star_summary(data: SeifertData) -> dict:
    g = star_graph(data)
    summary = {"orbifold_euler": data.orbifold_euler, "vertices": g.size}
    try:
        lat = Lattice(g)
    except SingularMatrix:
        summary.update(det=0, negdef=False, K_squared_plus_s=None)
        return summary
    summary.update(det=lat.det, negdef=lat.negdef, K_squared_plus_s=lat.K_squared_plus_s)
    return summary


def brieskorn_2_3(t: int) -> SeifertData:
    """Seifert data of ``x^2 + y^3 + z^(12t+2)``."""
    return SeifertData(-1, ((3, 1), (3, 1), (6 * t + 1, 2 * t)))
