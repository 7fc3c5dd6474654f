import math

import pytest

from hmcy import counting
from hmcy.fp import BadPrimeError, make_context
from hmcy.varieties import RootUnavailableError, eval_E, eval_E_family, eval_F, form_E_family, form_G

from oracles import E_reference, G_reference, count_naive, projective_points


def test_projective_size():
    assert sum(1 for _ in projective_points(7)) == counting.projective_size(7) == 2801


@pytest.mark.parametrize("k", [1, 3, 8])
def test_strata_boxes_tile_P4(k):
    p = 11
    seen = 0
    for lo, hi in counting.strata_boxes(p, k):
        seen += math.prod(h - l for l, h in zip(lo, hi))
    assert seen == counting.projective_size(p)


@pytest.mark.parametrize("p", [3, 7])
def test_G_against_reference_program(p):
    want = count_naive(lambda v: G_reference(*v) % p == 0, p)
    assert counting.count_G(make_context(p)).count == want


def test_G_at_7_frozen():
    # oracle value from the naive enumeration above, frozen
    assert counting.count_G(make_context(7)).count == 646


def test_F_against_naive():
    p = 7
    assert counting.count_F(make_context(p)).count == count_naive(lambda v: eval_F(v, p) == 0, p)


@pytest.mark.parametrize("p", [13, 17])
def test_E_branches_against_reference_program(p):
    ctx = make_context(p)
    for branch, y in ((1, ctx.i_root), (2, p - ctx.i_root)):
        want = count_naive(lambda v: not any(c % p for c in E_reference(v, y)), p)
        assert counting.count_E_single(ctx, branch).count == want
    union = count_naive(lambda v: not any(eval_E(v, 1, ctx)) or not any(eval_E(v, 2, ctx)), p)
    assert counting.count_E_union(ctx).count == union


def test_E_family_member_count():
    p, lam, mu = 11, 1, 3
    want = count_naive(lambda v: not any(eval_E_family(v, lam, mu, p)), p)
    assert counting.count_form(form_E_family(lam, mu), p) == want


def test_E_empty_when_p_3_mod_4():
    ctx = make_context(103)
    assert counting.count_E_union(ctx).count == 0
    with pytest.raises(RootUnavailableError):
        counting.count_E_single(ctx, 1)


@pytest.mark.parametrize("p", [13, 17, 29, 37, 41, 53, 61])
def test_hasse_bound_on_each_curve(p):
    ctx = make_context(p)
    for b in (1, 2):
        n = counting.count_E_single(ctx, b).count
        assert (n - p - 1) ** 2 <= 4 * p


@pytest.mark.parametrize("p", [31, 41])
def test_thread_count_determinism(p):
    form = form_G()
    counts = {t: counting.count_form(form, p, threads=t) for t in (1, 2, 3, 4, 7)}
    assert len(set(counts.values())) == 1


def test_count_rejects_large_prime():
    with pytest.raises(BadPrimeError):
        counting.count_form(form_G(), 65537)


@pytest.mark.parametrize("p,want", [(89, 180), (101, 200), (103, 0)])
def test_E_published(p, want):
    assert counting.count_E_union(make_context(p)).count == want
