"""Defining equations of the Horrocks-Mumford quintics F, G and the threefold X.

Points of P^4 are plain 5-tuples of residues.  Evaluators return residues in
``[0, p)``; nothing here is symbolic.  ``Form`` carries the same polynomials as
explicit monomial lists for the enumeration kernels in :mod:`hmcy.counting`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from hmcy.fp import PrimeContext, determinant

Point = tuple[int, int, int, int, int]


class RootUnavailableError(ValueError):
    """A root of unity needed by an evaluator does not exist in F_p."""


def normalize(v: Sequence[int], p: int) -> Point:
    """Canonical representative: first nonzero coordinate scaled to 1."""
    v = [a % p for a in v]
    for a in v:
        if a:
            inv = pow(a, -1, p)
            return tuple(b * inv % p for b in v)  # type: ignore[return-value]
    raise ValueError("the zero vector is not a projective point")


def sigma(v: Sequence[int]) -> Point:
    """Heisenberg shift: (x_0, ..., x_4) -> (x_1, ..., x_4, x_0)."""
    return tuple(v[(i + 1) % 5] for i in range(5))  # type: ignore[return-value]


def tau(v: Sequence[int], eps: int, p: int, power: int = 1) -> Point:
    """Diagonal Heisenberg generator: x_i -> eps^(power*i) x_i."""
    return tuple(v[i] * pow(eps, power * i, p) % p for i in range(5))  # type: ignore[return-value]


def eval_F(x: Sequence[int], p: int) -> int:
    """The quintic F = det M(x) / 2.

    Sign pattern (+, -, +, -) on the four cyclic families; this is the
    hypersurface carrying the (mu)-fixed points (1:t:t:t:t) and (0:1:-1:-1:1).
    """
    s = 0
    for i in range(5):
        a, b, c, d, e = (x[(i + k) % 5] for k in range(5))
        s += a**3 * b * e - a**3 * c * d + a * b**2 * e**2 - a * c**2 * d**2
    return s % p


def eval_G(z: Sequence[int], p: int) -> int:
    s = 0
    for i in range(5):
        a, b, c, d, e = (z[(i + k) % 5] for k in range(5))
        s += a**3 * b * e - a**3 * c * d - a * b**2 * e**2 + a * c**2 * d**2
    return s % p


def build_M(x: Sequence[int], p: int) -> list[list[int]]:
    x0, x1, x2, x3, x4 = x
    m = [
        [0, -x3, x1, x4, -x2],
        [-x3, 0, -x4, x2, x0],
        [x1, -x4, 0, -x0, x3],
        [x4, x2, -x0, 0, -x1],
        [-x2, x0, x3, -x1, 0],
    ]
    return [[v % p for v in row] for row in m]


def build_L(z: Sequence[int], p: int) -> list[list[int]]:
    z0, z1, z2, z3, z4 = z
    m = [
        [0, z2, -z4, -z1, z3],
        [z4, 0, z3, -z0, -z2],
        [-z3, z0, 0, z4, -z1],
        [-z2, -z4, z1, 0, z0],
        [z1, -z3, -z0, z2, 0],
    ]
    return [[v % p for v in row] for row in m]


def _matvec(m: list[list[int]], v: Sequence[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) % p for row in m]


def on_X(x: Sequence[int], z: Sequence[int], p: int) -> bool:
    """Membership in X = {M(x) z = 0}, cross-checked against L(z) x = 0."""
    via_m = not any(_matvec(build_M(x, p), z, p))
    via_l = not any(_matvec(build_L(z, p), x, p))
    if via_m != via_l:
        raise AssertionError(f"M/L duality broken at {(tuple(x), tuple(z))} mod {p}")
    return via_m


def _branch_root(ctx: PrimeContext, branch: int) -> int:
    if branch not in (1, 2):
        raise ValueError("branch must be 1 or 2")
    if ctx.i_root is None:
        raise RootUnavailableError(f"sqrt(-1) does not exist mod {ctx.p}")
    return ctx.i_root if branch == 1 else ctx.p - ctx.i_root


def eval_E(z: Sequence[int], branch: int, ctx: PrimeContext) -> list[int]:
    """The five quadrics cutting out E_1 (branch 1, +i) or E_2 (branch 2, -i)."""
    p = ctx.p
    y = _branch_root(ctx, branch)
    return [
        (y * z[i] ** 2 + z[(i + 1) % 5] * z[(i + 4) % 5] + z[(i + 2) % 5] * z[(i + 3) % 5]) % p
        for i in range(5)
    ]


def eval_E_family(z: Sequence[int], lam: int, mu: int, p: int) -> list[int]:
    """Quadrics of the Heisenberg-invariant elliptic normal curve E_(lam:mu)."""
    if lam % p == 0 and mu % p == 0:
        raise ValueError("(0:0) is not a point of P^1")
    return [
        (-lam * mu * z[i] ** 2 - mu * mu * z[(i + 1) % 5] * z[(i + 4) % 5]
         + lam * lam * z[(i + 2) % 5] * z[(i + 3) % 5]) % p
        for i in range(5)
    ]


# --- monomial-list forms ------------------------------------------------------


@dataclass(frozen=True)
class Form:
    """A system of homogeneous polynomials in five variables with integer coefficients.

    ``monomials`` holds ``(form_index, coefficient, exponents)`` triples; a point
    lies on the system when every member form vanishes.
    """

    name: str
    monomials: tuple[tuple[int, int, tuple[int, int, int, int, int]], ...]
    nforms: int = 1

    def evaluate(self, v: Sequence[int], p: int) -> list[int]:
        out = [0] * self.nforms
        for f, c, e in self.monomials:
            t = c
            for a, k in zip(v, e):
                t *= a**k
            out[f] += t
        return [s % p for s in out]

    def vanishes(self, v: Sequence[int], p: int) -> bool:
        return not any(self.evaluate(v, p))

    def permuted(self, perm: Sequence[int]) -> "Form":
        """Same system with variable j renamed to variable perm[j]."""
        mons = []
        for f, c, e in self.monomials:
            ne = [0] * 5
            for j, k in enumerate(e):
                ne[perm[j]] += k
            mons.append((f, c, tuple(ne)))
        return Form(f"{self.name}*", tuple(mons), self.nforms)


def _cyclic(terms, form_index: int = 0, shift_form: bool = False):
    """Expand cyclic-sum templates ``(coef, {offset: power})`` over i = 0..4."""
    mons = []
    for i in range(5):
        for c, spec in terms:
            e = [0] * 5
            for off, k in spec.items():
                e[(i + off) % 5] += k
            mons.append((form_index + (i if shift_form else 0), c, tuple(e)))
    return tuple(mons)


def form_F() -> Form:
    return Form("F", _cyclic([
        (1, {0: 3, 1: 1, 4: 1}), (-1, {0: 3, 2: 1, 3: 1}),
        (1, {0: 1, 1: 2, 4: 2}), (-1, {0: 1, 2: 2, 3: 2}),
    ]))


def form_G() -> Form:
    return Form("G", _cyclic([
        (1, {0: 3, 1: 1, 4: 1}), (-1, {0: 3, 2: 1, 3: 1}),
        (-1, {0: 1, 1: 2, 4: 2}), (1, {0: 1, 2: 2, 3: 2}),
    ]))


def form_E(ctx: PrimeContext, branch: int) -> Form:
    y = _branch_root(ctx, branch)
    mons = _cyclic([(y, {0: 2}), (1, {1: 1, 4: 1}), (1, {2: 1, 3: 1})], shift_form=True)
    return Form(f"E{branch}", mons, nforms=5)


def form_E_family(lam: int, mu: int) -> Form:
    mons = _cyclic([(-lam * mu, {0: 2}), (-mu * mu, {1: 1, 4: 1}), (lam * lam, {2: 1, 3: 1})],
                   shift_form=True)
    return Form(f"E({lam}:{mu})", mons, nforms=5)


# --- determinant calibration --------------------------------------------------


def det_M(x: Sequence[int], p: int) -> int:
    return determinant(build_M(x, p), p)


def det_L(z: Sequence[int], p: int) -> int:
    return determinant(build_L(z, p), p)


def det_constants(p: int, samples: int = 100, seed: int = 0) -> tuple[int, int]:
    """Constants c_F, c_G with det M(x) = c_F F(x) and det L(z) = c_G G(z).

    Calibrated at the first sample off the hypersurface, then asserted on
    ``samples`` further random points; any disagreement is a transcription error.
    """
    import random

    rng = random.Random(seed)
    consts = []
    for det, ev in ((det_M, eval_F), (det_L, eval_G)):
        c = None
        checked = 0
        while checked < samples:
            v = [rng.randrange(p) for _ in range(5)]
            d, q = det(v, p), ev(v, p)
            if c is None:
                if q:
                    c = d * pow(q, -1, p) % p
                continue
            if d != c * q % p:
                raise AssertionError(f"det/quintic proportionality fails at {v} mod {p}")
            checked += 1
        consts.append(c)
    return consts[0], consts[1]
