"""The 60 nodes of X: orbit generation, definedness, rulings and blowup corrections."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from hmcy.fp import PrimeContext, legendre, matrix_rank
from hmcy.varieties import Point, build_L, build_M, normalize, on_X, sigma, tau

SIGMA, TAU, REGULAR = "sigma", "tau", "regular"

# Square class of the determinant of the local quadratic form at each node type.
RULING_DET = {SIGMA: "one", TAU: "five", REGULAR: "gauss"}  # gauss: -12 + 16i


class UndefinedNodeError(ValueError):
    """Raised when an operation needs a node that is not defined over F_p."""


@dataclass(frozen=True)
class NodeRecord:
    node_class: str
    # (sigma shift k, sign of i, tau power j); unused slots are 0
    orbit_indices: tuple[int, int, int]
    coords: Optional[tuple[Point, Point]]
    defined: bool
    ruling_rational: Optional[bool] = None

    @property
    def ruling_det_class(self) -> str:
        return RULING_DET[self.node_class]


@dataclass(frozen=True)
class NodeInventory:
    p: int
    defined: dict = field(default_factory=dict)
    rational: dict = field(default_factory=dict)
    correction_total: int = 0

    @property
    def sigma_defined(self) -> int:
        return self.defined.get(SIGMA, 0)

    @property
    def tau_defined(self) -> int:
        return self.defined.get(TAU, 0)

    @property
    def regular_defined(self) -> int:
        return self.defined.get(REGULAR, 0)

    @property
    def total_defined(self) -> int:
        return sum(self.defined.values())


def _orbit_point(x, z, k: int, j: int, ctx: PrimeContext) -> tuple[Point, Point]:
    p = ctx.p
    if j:
        x = tau(x, ctx.eps_root, p, 3 * j)
        z = tau(z, ctx.eps_root, p, j)
    for _ in range(k):
        x, z = sigma(x), sigma(z)
    return normalize(x, p), normalize(z, p)


def _rational(cls: str, sign: int, ctx: PrimeContext) -> bool:
    if cls == SIGMA:
        return True
    if cls == TAU:
        return legendre(5, ctx.p) == 1
    i = ctx.i_root if sign > 0 else ctx.p - ctx.i_root
    ok = legendre(-12 + 16 * i, ctx.p) == 1
    if not ok:
        raise AssertionError(f"-12+16i is a non-square mod {ctx.p}; ruling logic is inconsistent")
    return ok


def enumerate_nodes(ctx: PrimeContext) -> list[NodeRecord]:
    """All 60 nodes in a fixed order: 5 sigma, 5 tau, then 50 regular nodes."""
    p = ctx.p
    recs: list[NodeRecord] = []

    def add(cls, idx, x, z, defined, sign=0):
        k, _, j = idx
        if not defined:
            recs.append(NodeRecord(cls, idx, None, False))
            return
        coords = _orbit_point(x, z, k, j, ctx)
        recs.append(NodeRecord(cls, idx, coords, True, _rational(cls, sign, ctx)))

    e0 = (1, 0, 0, 0, 0)
    for k in range(5):
        add(SIGMA, (k, 0, 0), e0, e0, True)
    ones = (1, 1, 1, 1, 1)
    for j in range(5):
        add(TAU, (0, 0, j), ones, ones, j == 0 or ctx.has_eps)
    x0 = (0, 1, p - 1, p - 1, 1)
    for sign in (1, -1):
        for j in range(5):
            for k in range(5):
                defined = ctx.has_i and (j == 0 or ctx.has_eps)
                z0 = None
                if ctx.has_i:
                    i = ctx.i_root if sign > 0 else p - ctx.i_root
                    z0 = (0, 1, i, p - i, p - 1)
                add(REGULAR, (k, sign, j), x0, z0, defined, sign)
    return recs


def _require_defined(rec: NodeRecord) -> None:
    if not rec.defined:
        raise UndefinedNodeError(f"{rec.node_class} node {rec.orbit_indices} is not defined over F_p")


def ruling_rational(rec: NodeRecord, ctx: PrimeContext) -> bool:
    _require_defined(rec)
    return _rational(rec.node_class, rec.orbit_indices[1], ctx)


def blowup_correction(rec: NodeRecord, ctx: PrimeContext) -> int:
    """Points added by replacing the node with its exceptional quadric.

    A split quadric has (p+1)^2 points, a non-split one p^2 + 1; the node
    itself was already counted once.
    """
    p = ctx.p
    return p * p + 2 * p if ruling_rational(rec, ctx) else p * p


def verify_node_singular(rec: NodeRecord, ctx: PrimeContext) -> bool:
    """On X, and the Jacobian block [L(z) | M(x)] has rank at most 4."""
    _require_defined(rec)
    x, z = rec.coords
    return is_singular_point(x, z, ctx.p)


def is_singular_point(x, z, p: int) -> bool:
    if not on_X(x, z, p):
        return False
    jac = [lr + mr for lr, mr in zip(build_L(z, p), build_M(x, p))]
    return matrix_rank(jac, p) <= 4


def inventory(ctx: PrimeContext, nodes: Optional[list[NodeRecord]] = None) -> NodeInventory:
    nodes = enumerate_nodes(ctx) if nodes is None else nodes
    defined = Counter(r.node_class for r in nodes if r.defined)
    rational = Counter(r.node_class for r in nodes if r.defined and r.ruling_rational)
    total = sum(blowup_correction(r, ctx) for r in nodes if r.defined)
    return NodeInventory(ctx.p, dict(defined), dict(rational), total)


def expected_defined(p: int) -> tuple[int, int, int]:
    """(sigma, tau, regular) counts of F_p-rational nodes, from p mod 20."""
    r = p % 20
    if r == 1:
        return 5, 5, 50
    if r == 11:
        return 5, 5, 0
    if r in (9, 13, 17):
        return 5, 1, 10
    return 5, 1, 0
