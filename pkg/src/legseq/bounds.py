"""Theoretical upper bounds for the measures, and measured-vs-bound reports.

All bound formulas use the natural logarithm.  Bounds are evaluated in
double precision; measured values are exact integers and the bounds
exceed them by a wide margin, so rounding is immaterial and comparisons
are plain measured <= bound with no epsilon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class BoundReport:
    """One bound compared against an optional measured value."""

    name: str
    params: dict
    bound: float
    measured: Optional[int] = None
    guaranteed: bool = False

    @property
    def slack(self) -> Optional[float]:
        if self.measured is None:
            return None
        return self.measured / self.bound

    @property
    def satisfied(self) -> Optional[bool]:
        if self.measured is None:
            return None
        return self.measured <= self.bound

    def to_json(self):
        return {
            "name": self.name,
            "params": dict(self.params),
            "value": self.bound,
            "measured": self.measured,
            "guaranteed": self.guaranteed,
            "slack": self.slack,
        }


def bound_W(k: int, p: int) -> float:
    """Well-distribution bound 10 k sqrt(p) ln p for filtered triples."""
    if k < 1 or p < 3:
        raise ValueError("need k >= 1 and p >= 3")
    return 10.0 * k * math.sqrt(p) * math.log(p)


def bound_C(order: int, k: int, p: int) -> float:
    """Correlation bound 2^(order+3) * order * k * sqrt(p) * ln p for
    filtered triples."""
    if order < 2 or k < 1:
        raise ValueError("need order >= 2 and k >= 1")
    return (2.0 ** (order + 3)) * order * k * math.sqrt(p) * math.log(p)


def bound_theoremA_C(order: int, k: int, p: int) -> float:
    """Correlation bound 10 k * order * sqrt(p) * ln p for
    single-polynomial sequences."""
    if order < 2:
        raise ValueError("correlation order must be >= 2")
    return 10.0 * k * order * math.sqrt(p) * math.log(p)


def bound_theorem3(order: int, phi_values: dict) -> int:
    """Combiner bound 2^order * max of Phi_k over order <= k <= 2*order.

    phi_values maps k to the (integer) cross-correlation measure of the
    family; every k in the range must be present.
    """
    missing = [k for k in range(order, 2 * order + 1)
               if k not in phi_values]
    if missing:
        raise ValueError(f"missing cross-correlation orders: {missing}")
    return (2 ** order) * max(
        phi_values[k] for k in range(order, 2 * order + 1)
    )


def weil_incomplete_bound(s: int, p: int) -> float:
    """Incomplete character-sum bound s sqrt(p) (1 + ln p) for a
    polynomial with s distinct roots; exposed for sanity checks."""
    if s < 1:
        raise ValueError("need s >= 1")
    return s * math.sqrt(p) * (1.0 + math.log(p))
