"""Chern classes in H*(P^4 x P^4) = Z[X, Y] / (X^5, Y^5)."""

from __future__ import annotations

from typing import Union

N = 5  # X^5 = Y^5 = 0


class TruncPoly2:
    """Integer polynomial in X, Y with exponents truncated below 5."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = [[0] * N for _ in range(N)]
        if coeffs:
            for (a, b), v in dict(coeffs).items():
                if a < N and b < N:
                    self.c[a][b] += int(v)

    @classmethod
    def const(cls, v: int) -> "TruncPoly2":
        return cls({(0, 0): v})

    def __getitem__(self, ab: tuple[int, int]) -> int:
        a, b = ab
        return self.c[a][b] if a < N and b < N else 0

    def terms(self) -> dict[tuple[int, int], int]:
        return {(a, b): self.c[a][b] for a in range(N) for b in range(N) if self.c[a][b]}

    def _coerce(self, other) -> "TruncPoly2":
        return other if isinstance(other, TruncPoly2) else TruncPoly2.const(other)

    def __add__(self, other) -> "TruncPoly2":
        o = self._coerce(other)
        out = TruncPoly2()
        out.c = [[x + y for x, y in zip(r, s)] for r, s in zip(self.c, o.c)]
        return out

    __radd__ = __add__

    def __neg__(self) -> "TruncPoly2":
        out = TruncPoly2()
        out.c = [[-x for x in r] for r in self.c]
        return out

    def __sub__(self, other) -> "TruncPoly2":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncPoly2":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncPoly2":
        o = self._coerce(other)
        out = TruncPoly2()
        for a, b in self.terms():
            u = self.c[a][b]
            for a2 in range(N - a):
                row = o.c[a2]
                for b2 in range(N - b):
                    if row[b2]:
                        out.c[a + a2][b + b2] += u * row[b2]
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncPoly2":
        out = TruncPoly2.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncPoly2) and self.c == other.c

    def inverse(self) -> "TruncPoly2":
        """Multiplicative inverse; needs constant term +-1."""
        u = self[0, 0]
        if u not in (1, -1):
            raise ValueError("only polynomials with constant term +-1 are units over Z")
        nil = 1 - u * self  # nilpotent: every term has positive degree
        out, power = TruncPoly2.const(1), TruncPoly2.const(1)
        for _ in range(2 * (N - 1)):
            power = power * nil
            out = out + power
        return u * out

    def degree_part(self, d: int) -> "TruncPoly2":
        return TruncPoly2({(a, d - a): self[a, d - a] for a in range(max(0, d - N + 1), min(d, N - 1) + 1)})

    def __repr__(self) -> str:
        t = self.terms()
        if not t:
            return "0"
        return " + ".join(f"{v}*X^{a}*Y^{b}" for (a, b), v in sorted(t.items()))


X = TruncPoly2({(1, 0): 1})
Y = TruncPoly2({(0, 1): 1})

Poly = Union[TruncPoly2, int]


def chern_total() -> TruncPoly2:
    """c(X') = c(T P^4 x P^4) / c(N) with N = O(1,1)^5."""
    return (1 + X) ** 5 * (1 + Y) ** 5 * ((1 + X + Y) ** 5).inverse()


def chern_total_linearized() -> TruncPoly2:
    """(1+X)^5 (1+Y)^5 (1-X-Y)^5, i.e. c(N)^-1 replaced by its linear part.

    Agrees with :func:`chern_total` in degrees 0, 1 and 3 (so the Euler
    characteristic is unchanged) but not in degree 2.
    """
    return (1 + X) ** 5 * (1 + Y) ** 5 * (1 - X - Y) ** 5


def c3_displayed() -> TruncPoly2:
    """The degree-3 class assembled from its four displayed summands."""
    s = X + Y
    return (
        (10 * X**3 + 50 * X**2 * Y + 50 * X * Y**2 + 10 * Y**3)
        - 5 * s * (10 * X**2 + 25 * X * Y + 10 * Y**2)
        + 10 * s**2 * (5 * X + 5 * Y)
        - 10 * s**3
    )


SURGERY_NODES = 60


def euler_characteristic() -> tuple[int, int]:
    """(chi of a smoothing, chi of the 60-node blowup).

    The integral over P^4 x P^4 reads off the X^4 Y^4 coefficient of
    c_3 * c_5(normal bundle); each node swaps an S^3 for P^1 x P^1 (+4).
    """
    c3 = chern_total().degree_part(3)
    top = c3 * (1 + X + Y) ** 5
    chi_smooth = top[4, 4]
    return chi_smooth, chi_smooth + SURGERY_NODES * 4


def betti_relation() -> int:
    """2 b^2 - b^3 for b^0 = b^6 = 1, b^1 = b^5 = 0, b^2 = b^4."""
    return euler_characteristic()[1] - 2
