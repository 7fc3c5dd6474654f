"""Slow, independent transcriptions used only to cross-check the library."""

import itertools


def projective_points(p):
    """P^4(F_p) in the same stratum order as the reference C++ loops."""
    for k in range(5):
        for tail in itertools.product(range(p), repeat=4 - k):
            yield (0,) * k + (1,) + tail


def G_reference(z0, z1, z2, z3, z4):
    return (z0 * z0 * z0 * z1 * z4 + z1 * z1 * z1 * z2 * z0
            + z2 * z2 * z2 * z3 * z1 + z3 * z3 * z3 * z4 * z2 + z4 * z4 * z4 * z0 * z3
            + z0 * z2 * z2 * z3 * z3 + z1 * z3 * z3 * z4 * z4 + z2 * z4 * z4 * z0 * z0
            + z3 * z0 * z0 * z1 * z1 + z4 * z1 * z1 * z2 * z2 - (z0 * z1 * z1 * z4 * z4
            + z1 * z2 * z2 * z0 * z0 + z2 * z3 * z3 * z1 * z1 + z3 * z4 * z4 * z2 * z2
            + z4 * z0 * z0 * z3 * z3 + z0 * z0 * z0 * z2 * z3 + z1 * z1 * z1 * z3 * z4
            + z2 * z2 * z2 * z4 * z0 + z3 * z3 * z3 * z0 * z1 + z4 * z4 * z4 * z1 * z2))


def E_reference(z, y):
    z0, z1, z2, z3, z4 = z
    return (
        -y * z0 * z0 - z1 * z4 + y * y * z2 * z3,
        -y * z1 * z1 - z2 * z0 + y * y * z3 * z4,
        -y * z2 * z2 - z3 * z1 + y * y * z4 * z0,
        -y * z3 * z3 - z4 * z2 + y * y * z0 * z1,
        -y * z4 * z4 - z0 * z3 + y * y * z1 * z2,
    )


def count_naive(pred, p):
    return sum(1 for v in projective_points(p) if pred(v))


def weil_candidates_bruteforce(p, n, b3, lo, hi):
    return tuple(h for h in range(lo, hi) if (p**3 + 1 + h * (p + p * p) - n) ** 2 <= b3 * b3 * p**3)
