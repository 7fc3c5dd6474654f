"""Frobenius classes in Gal(Q(i, sqrt2, sqrt5)/Q) and the trace comparison for V."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from hmcy.fp import BadPrimeError, PrimeContext, legendre

TRACE_TEST_PRIMES = (67, 71, 101, 103, 113, 131, 157)

# Rows of the mod-40 table: residues -> ((-1/p), (2/p), (5/p)).
FROBENIUS_TABLE = {
    (3, 27): (-1, -1, -1),
    (7, 23): (-1, 1, -1),
    (11, 19): (-1, -1, 1),
    (13, 37): (1, -1, -1),
    (17, 33): (1, 1, -1),
    (21, 29): (1, -1, 1),
    (31, 39): (-1, 1, 1),
    (1, 9): (1, 1, 1),
}
IDENTITY = (1, 1, 1)
NON_IDENTITY = frozenset(c for c in product((1, -1), repeat=3) if c != IDENTITY)


@dataclass(frozen=True)
class FrobImage:
    chi_minus1: int
    chi_2: int
    chi_5: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.chi_minus1, self.chi_2, self.chi_5)


def frobenius_image(p: int) -> FrobImage:
    if p in (2, 5) or p < 3:
        raise BadPrimeError(f"Frobenius at {p} is ramified in Q(i, sqrt2, sqrt5)")
    return FrobImage(legendre(-1, p), legendre(2, p), legendre(5, p))


def table_image(p: int) -> tuple[int, int, int]:
    r = p % 40
    for residues, img in FROBENIUS_TABLE.items():
        if r in residues:
            return img
    raise BadPrimeError(f"{p} mod 40 = {r} is not coprime to 40")


@dataclass(frozen=True)
class Coverage:
    covered: frozenset
    missing: frozenset
    identity_members: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.missing


def t_coverage(primes: Iterable[int]) -> Coverage:
    imgs = {q: frobenius_image(q).as_tuple() for q in primes}
    covered = frozenset(v for v in imgs.values() if v != IDENTITY)
    ident = tuple(sorted(q for q, v in imgs.items() if v == IDENTITY))
    return Coverage(covered, NON_IDENTITY - covered, ident)


def verify_T_coverage(primes: Iterable[int]) -> bool:
    """True when the Frobenius images hit all 7 non-identity classes."""
    return t_coverage(primes).ok


def trace_W(ctx: PrimeContext, count_E: int) -> int:
    """Trace on the induced piece: p(2p + 2 - #E) if i in F_p, else 0."""
    if not ctx.has_i:
        if count_E:
            raise ValueError(f"#E must be 0 for p = {ctx.p} = 3 mod 4")
        return 0
    return ctx.p * (2 * ctx.p + 2 - count_E)


MATCH, MISMATCH, INCONCLUSIVE = "match", "mismatch", "inconclusive"


@dataclass(frozen=True)
class ModularityRow:
    p: int
    trace_h3: Optional[int]
    trace_W: int
    a_p: int

    @property
    def trace_V(self) -> Optional[int]:
        return None if self.trace_h3 is None else self.trace_h3 - self.trace_W

    @property
    def status(self) -> str:
        if self.trace_V is None:
            return INCONCLUSIVE
        return MATCH if self.trace_V == self.a_p else MISMATCH

    @property
    def match(self) -> Optional[bool]:
        return None if self.status == INCONCLUSIVE else self.status == MATCH


def modularity_row(ctx: PrimeContext, trace_h3: Optional[int], count_E: int, a_p: int) -> ModularityRow:
    """``trace_h3`` is None when the Weil squeeze left h ambiguous."""
    return ModularityRow(ctx.p, trace_h3, trace_W(ctx, count_E), a_p)


def parity_check(p: int, n: int) -> bool:
    """#X~(F_p) is even; equivalently the H^3 trace is even for odd p."""
    return n % 2 == 0
