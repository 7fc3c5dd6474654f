import itertools

import pytest
import sympy

from hmcy import nodes
from hmcy.fp import is_prime, legendre, make_context, nullspace
from hmcy.varieties import build_L, build_M, normalize

from oracles import projective_points

GOOD_PRIMES = [q for q in range(3, 400) if is_prime(q) and q != 5]


def test_p101_all_sixty():
    ctx = make_context(101)
    recs = nodes.enumerate_nodes(ctx)
    assert len(recs) == 60
    assert all(r.defined and r.ruling_rational for r in recs)
    assert all(nodes.verify_node_singular(r, ctx) for r in recs)
    assert len({r.coords for r in recs}) == 60


@pytest.mark.parametrize("p", GOOD_PRIMES)
def test_definedness_table(p):
    ctx = make_context(p)
    inv = nodes.inventory(ctx)
    assert (inv.sigma_defined, inv.tau_defined, inv.regular_defined) == nodes.expected_defined(p)
    for r in nodes.enumerate_nodes(ctx):
        if r.defined:
            assert nodes.verify_node_singular(r, ctx)


@pytest.mark.parametrize("p", [q for q in GOOD_PRIMES if q % 4 == 1])
def test_gaussian_determinant_is_square(p):
    i = make_context(p).i_root
    assert legendre(-12 + 16 * i, p) == 1
    assert legendre(-12 - 16 * i, p) == 1


@pytest.mark.parametrize("p", [7, 11, 59, 61, 101])
def test_ruling_classes(p):
    ctx = make_context(p)
    for r in nodes.enumerate_nodes(ctx):
        if not r.defined:
            with pytest.raises(nodes.UndefinedNodeError):
                nodes.ruling_rational(r, ctx)
            continue
        want = {"sigma": True, "tau": legendre(5, p) == 1, "regular": True}[r.node_class]
        assert r.ruling_rational == want
        assert nodes.blowup_correction(r, ctx) == p * p + (2 * p if want else 0)


@pytest.mark.parametrize("p,total", [(59, 21594), (67, 27604), (71, 51830), (89, 129584), (101, 624180)])
def test_correction_totals(p, total):
    assert nodes.inventory(make_context(p)).correction_total == total


def _singular_by_minors(x, z, p):
    jac = sympy.Matrix([lr + mr for lr, mr in zip(build_L(z, p), build_M(x, p))])
    return all(jac[:, list(c)].det() % p == 0 for c in itertools.combinations(range(10), 5))


def test_singularity_by_minors_p13():
    ctx = make_context(13)
    for r in nodes.enumerate_nodes(ctx):
        if r.defined:
            assert _singular_by_minors(*r.coords, 13)


@pytest.mark.parametrize("p", [11, 13])
def test_nodes_are_all_singular_points(p):
    """Scan every F_p-point of X and compare its singular locus with the node list."""
    found = set()
    for x in projective_points(p):
        ker = nullspace(build_M(x, p), p)
        if not ker:
            continue
        for coeffs in itertools.product(range(p), repeat=len(ker)):
            if not any(coeffs):
                continue
            z = [sum(c * v[j] for c, v in zip(coeffs, ker)) % p for j in range(5)]
            z = normalize(z, p)
            if nodes.is_singular_point(x, z, p):
                found.add((tuple(x), z))
    ctx = make_context(p)
    want = {r.coords for r in nodes.enumerate_nodes(ctx) if r.defined}
    assert found == want
