"""Point counts of the blown-up threefold and the Weil-bound squeeze for h.

Every accept/reject decision is an exact integer comparison of squares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from hmcy.fp import PrimeContext
from hmcy.nodes import NodeInventory

# 2 b^2 - b^3 = chi - 2 with chi = 140
BETTI_RELATION = 138
H3_DIM = 6


@dataclass(frozen=True)
class ResolutionCount:
    p: int
    count_G: int
    count_E: int
    correction_total: int

    @property
    def count_X_tilde(self) -> int:
        return self.count_G + self.p * self.count_E + self.correction_total


@dataclass(frozen=True)
class WeilSolution:
    candidates: tuple[int, ...]

    @property
    def unique(self) -> Optional[int]:
        return self.candidates[0] if len(self.candidates) == 1 else None


def count_X_tilde(ctx: PrimeContext, count_G: int, count_E: int, inv: NodeInventory) -> ResolutionCount:
    if inv.p != ctx.p:
        raise ValueError(f"node inventory is for p={inv.p}, not {ctx.p}")
    return ResolutionCount(ctx.p, count_G, count_E, inv.correction_total)


def trace_h3(p: int, n: int, h: int) -> int:
    """Trace of Frobenius on H^3 given #X~(F_p) = n and trace p*h on H^2."""
    return p**3 + 1 + h * (p + p * p) - n


def _within_weil(trace: int, b3: int, p: int) -> bool:
    return b3 >= 0 and trace * trace <= b3 * b3 * p**3


def solve_h2(n: int, p: int = 101) -> WeilSolution:
    """All b^2 compatible with n points when Frobenius acts on H^2 as p.

    b^3 = 2 b^2 - 138, and the H^3 trace must satisfy |T| <= b^3 p^(3/2).
    """
    b = p + p * p
    a = p**3 + 1 - n
    r = p**1.5
    start = BETTI_RELATION // 2
    approx = (-a + BETTI_RELATION * r) / (b + 2 * r)
    h = max(start, math.floor(approx) - 2)
    found = []
    while True:
        b3 = 2 * h - BETTI_RELATION
        t = a + b * h
        if _within_weil(t, b3, p):
            found.append(h)
        elif t > 0:
            # t outgrows the bound (p + p^2 > 2 p^1.5), so nothing further fits
            break
        h += 1
    return WeilSolution(tuple(found))


def solve_h2_at_101(n: int) -> WeilSolution:
    return solve_h2(n, 101)


def solve_h(p: int, n: int, b3: int = H3_DIM) -> WeilSolution:
    """All integers h with (p^3 + 1 + h(p + p^2) - n)^2 <= b3^2 p^3."""
    b = p + p * p
    centre = (n - 1 - p**3) // b
    radius = math.ceil(b3 * p**1.5 / b) + 2
    found = tuple(
        h for h in range(centre - radius, centre + radius + 1)
        if _within_weil(trace_h3(p, n, h), b3, p)
    )
    return WeilSolution(found)


def conjectured_h(ctx: PrimeContext) -> int:
    """12, 20, 24 or 72 according to which of i and a fifth root of unity exist."""
    return {(True, True): 72, (False, True): 20, (True, False): 24, (False, False): 12}[
        (ctx.has_i, ctx.has_eps)
    ]
