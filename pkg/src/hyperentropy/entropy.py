"""Degree-based entropy I_d^t, the degree self-information sum h, and the extremal bound formulas.

All logarithms are base 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .core import CycleClass, Hypergraph
from .errors import InvalidParameters


def entropy_of_degrees(degrees: Iterable[int], t: float = 1.0) -> float:
    """Shannon entropy (bits) of the distribution p_i = d_i^t / sum_j d_j^t."""
    w = [float(d) ** t for d in degrees]
    total = math.fsum(w)
    return math.log2(total) - math.fsum(x * math.log2(x) for x in w) / total


def degree_entropy(H: Hypergraph, t: float = 1.0) -> float:
    return entropy_of_degrees(H.degrees(), t)


def h_of_degrees(degrees: Iterable[int]) -> float:
    return math.fsum(d * math.log2(d) for d in degrees if d > 1)


def h_value(H: Hypergraph) -> float:
    """sum_v d_v log2 d_v."""
    return h_of_degrees(H.degrees())


def entropy_from_h(h: float, k: int, m: int) -> float:
    """I_d^1 = log2(km) - h/(km)."""
    return math.log2(k * m) - h / (k * m)


@dataclass(frozen=True)
class BoundPair:
    lower: float
    upper: float
    lower_witness: tuple[str, ...]
    upper_witness: tuple[str, ...]
    lower_expr: str = ""
    upper_expr: str = ""


def _check(cls: CycleClass | str, k: int, m: int) -> CycleClass:
    cls = CycleClass(cls)
    if cls is CycleClass.OTHER:
        raise InvalidParameters("bounds exist only for supertree, unicyclic and bicyclic classes")
    if k < 3 or m < 2:
        raise InvalidParameters(f"bounds need k >= 3 and m >= 2, got k={k}, m={m}")
    return cls


def h_bounds(cls: CycleClass | str, k: int, m: int) -> BoundPair:
    """Closed-form range of h over a class; witnesses name the families attaining each end."""
    cls = _check(cls, k, m)
    mlogm = m * math.log2(m)
    if cls is CycleClass.SUPERTREE:
        return BoundPair(2.0 * (m - 1), mlogm, ("TStar",), ("Hyperstar",),
                         "2(m-1) log 2", "m log m")
    if cls is CycleClass.UNICYCLIC:
        return BoundPair(2.0 * m, mlogm + 2.0, ("HI",), ("HII",),
                         "2m log 2", "m log m + 2 log 2")
    return BoundPair(2.0 * (m + 1), mlogm + 4.0, ("HIII",), ("HIV", "HV"),
                     "2(m+1) log 2", "m log m + 4 log 2")


def theorem_bounds(cls: CycleClass | str, k: int, m: int) -> BoundPair:
    """Range of I_d^1 over a class; max h gives min entropy and vice versa."""
    cls = _check(cls, k, m)
    km = k * m
    base = math.log2(km)
    mlogm = m * math.log2(m)
    if cls is CycleClass.SUPERTREE:
        return BoundPair(base - math.log2(m) / k, base - 2.0 * (m - 1) / km,
                         ("Hyperstar",), ("TStar",),
                         "log(km) - (log m)/k", "log(km) - 2(m-1) log 2/(km)")
    if cls is CycleClass.UNICYCLIC:
        return BoundPair(base - (mlogm + 2.0) / km, base - 2.0 / k,
                         ("HII",), ("HI",),
                         "log(km) - (m log m + 2 log 2)/(km)", "log(km) - (2 log 2)/k")
    return BoundPair(base - (mlogm + 4.0) / km, base - 2.0 * (m + 1) / km,
                     ("HIV", "HV"), ("HIII",),
                     "log(km) - (m log m + 4 log 2)/(km)", "log(km) - 2(m+1) log 2/(km)")
