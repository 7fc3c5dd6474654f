"""Prime-field arithmetic: contexts, quadratic characters, square roots, ranks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

MAX_PRIME = 1 << 20

# Deterministic for n < 3.3e24, which covers every 64-bit input.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class BadPrimeError(ValueError):
    """Raised when an integer is not a usable (odd, good-reduction) prime."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for n < 2**64."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _tonelli_shanks(a: int, p: int) -> int:
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def sqrt_mod(a: int, p: int) -> Optional[int]:
    """Smaller square root of ``a`` modulo ``p``, or None for a non-residue."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    r = _tonelli_shanks(a, p)
    return min(r, p - r)


@dataclass(frozen=True)
class PrimeContext:
    """A validated good prime together with the roots the pipeline needs.

    ``i_root``, ``eps_root`` and ``sqrt5`` are the smallest representatives in
    ``[0, p)`` of a square root of -1, a primitive fifth root of unity and a
    square root of 5; each is None when it does not exist in F_p.
    """

    p: int
    i_root: Optional[int]
    eps_root: Optional[int]
    sqrt5: Optional[int]

    @property
    def p_mod_4(self) -> int:
        return self.p % 4

    @property
    def p_mod_5(self) -> int:
        return self.p % 5

    @property
    def p_mod_20(self) -> int:
        return self.p % 20

    @property
    def p_mod_40(self) -> int:
        return self.p % 40

    @property
    def has_i(self) -> bool:
        return self.i_root is not None

    @property
    def has_eps(self) -> bool:
        return self.eps_root is not None

    @property
    def has_sqrt5(self) -> bool:
        return self.sqrt5 is not None

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)


def check_prime(p: int) -> int:
    """Return ``p`` if it is a prime of good reduction in the supported range."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise BadPrimeError(f"{p!r} is not an integer")
    if p < 3 or p == 5 or p >= MAX_PRIME or not is_prime(p):
        raise BadPrimeError(f"{p} is not an odd prime ≠ 5 below 2**20")
    return p


def make_context(p: int) -> PrimeContext:
    check_prime(p)
    i_root = sqrt_mod(p - 1, p)
    eps_root = None
    if p % 5 == 1:
        eps_root = next(a for a in range(2, p) if pow(a, 5, p) == 1)
    return PrimeContext(p=p, i_root=i_root, eps_root=eps_root, sqrt5=sqrt_mod(5, p))


# --- matrices over F_p -------------------------------------------------------

FpMatrix = list  # row-major list of rows, entries already reduced mod p


def _echelon(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[v % p for v in row] for row in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [v * inv % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def matrix_rank(m: Sequence[Sequence[int]], p: int) -> int:
    return len(_echelon(m, p)[1])


def nullspace(m: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Basis of the right kernel of ``m`` over F_p."""
    ncols = len(m[0])
    red, pivots = _echelon(m, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc] % p
        basis.append(v)
    return basis


def determinant(m: Sequence[Sequence[int]], p: int) -> int:
    a = [[v % p for v in row] for row in m]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return det % p
