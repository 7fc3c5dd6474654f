"""q-expansion of the weight-4 level-5 newform f = (eta(q) eta(q^5))^4."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from hmcy.fp import is_prime

MAX_TERMS = 10**5


@dataclass(frozen=True)
class SeriesCoeffs:
    """Coefficients a_1..a_{n_max} of f; ``s[n]`` is a_n."""

    n_max: int
    a: tuple[int, ...] = field(repr=False)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"a_{n} outside 1..{self.n_max}")
        return self.a[n - 1]


@dataclass(frozen=True)
class CheckReport:
    name: str
    checked: int
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def euler_product_power(n: int, power: int = 4) -> list[int]:
    """prod_{k>=1} (1 - q^k)^power mod q^n, one binomial factor at a time."""
    from math import comb

    binom = [(-1) ** j * comb(power, j) for j in range(power + 1)]
    a = [0] * n
    a[0] = 1
    for k in range(1, n):
        old = a[:]
        for d in range(k, n):
            s = 0
            for j in range(1, power + 1):
                if j * k > d:
                    break
                s += binom[j] * old[d - j * k]
            a[d] = old[d] + s
    return a


def mul_trunc(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return out


def euler_fourth_power_sparse(n: int) -> list[int]:
    """prod (1 - q^k)^4 mod q^n as (pentagonal series) x (Jacobi cube series).

    Both factors are sparse with small coefficients, so the product is exact
    and cheap even for n = 10^5.
    """
    pent = {}
    m = 0
    while True:
        e1, e2 = m * (3 * m - 1) // 2, m * (3 * m + 1) // 2
        if e1 >= n:
            break
        sgn = -1 if m % 2 else 1
        pent[e1] = sgn
        if m and e2 < n:
            pent[e2] = sgn
        m += 1
    jac = {}
    m = 0
    while m * (m + 1) // 2 < n:
        jac[m * (m + 1) // 2] = (-1) ** m * (2 * m + 1)
        m += 1
    out = [0] * n
    for e1, c1 in pent.items():
        for e2, c2 in jac.items():
            if e1 + e2 < n:
                out[e1 + e2] += c1 * c2
    return out


def expand_f(n_max: int) -> SeriesCoeffs:
    """a_1..a_{n_max} of q * prod (1 - q^k)^4 (1 - q^{5k})^4."""
    if not 1 <= n_max <= MAX_TERMS:
        raise ValueError(f"n_max must lie in [1, {MAX_TERMS}], got {n_max}")
    n = n_max  # coefficients of q^0..q^{n_max-1} in the eta part
    big = np.array(euler_fourth_power_sparse(n), dtype=np.int64)
    small = np.zeros(n, dtype=np.int64)
    small[::5] = big[: (n + 4) // 5]
    bound = int(np.abs(big).max()) ** 2 * n
    if bound >= 2**63:
        raise OverflowError("coefficient product bound exceeds int64")
    prod = np.convolve(big, small)[:n]
    return SeriesCoeffs(n_max, tuple(int(v) for v in prod))


def primes_upto(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if is_prime(q)]


def hecke_checks(s: SeriesCoeffs) -> CheckReport:
    """Multiplicativity on coprime pairs and the prime-square recursion.

    a_{l^2} = a_l^2 - l^3 for l != 5; at the level prime a_25 = a_5^2.
    """
    from math import gcd

    if s.n_max < 25:
        raise ValueError("need at least 25 coefficients")
    bad = []
    checked = 0
    for m in range(2, s.n_max + 1):
        for k in range(m + 1, s.n_max // m + 1):
            if gcd(m, k) == 1:
                checked += 1
                if s[m * k] != s[m] * s[k]:
                    bad.append(("mult", m, k))
    for q in primes_upto(int(s.n_max**0.5)):
        checked += 1
        want = s[q] ** 2 - (0 if q == 5 else q**3)
        if s[q * q] != want:
            bad.append(("square", q))
    return CheckReport("hecke", checked, tuple(bad))


def ap_parity(s: SeriesCoeffs) -> CheckReport:
    ps = [q for q in primes_upto(s.n_max) if q not in (2, 5)]
    return CheckReport("a_p even", len(ps), tuple(q for q in ps if s[q] % 2))


def ramanujan_bound(s: SeriesCoeffs) -> CheckReport:
    """|a_p| <= 2 p^(3/2), compared as a_p^2 <= 4 p^3."""
    ps = primes_upto(s.n_max)
    return CheckReport("ramanujan", len(ps), tuple(q for q in ps if s[q] ** 2 > 4 * q**3))
