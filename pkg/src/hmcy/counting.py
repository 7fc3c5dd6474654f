"""Exact enumeration of F_p-points on projective varieties in P^4.

P^4(F_p) is split into the five affine strata {x_0 = ... = x_{k-1} = 0, x_k = 1}.
Inside each stratum the leading free coordinates are fixed one at a time, each
form is collapsed to a univariate polynomial in x_4 and that polynomial is
evaluated against a table of powers.  The big stratum is cut into contiguous
slabs of x_1 and the slabs are counted on a thread pool; the numba kernel
releases the GIL, and the partial counts are summed, so the result does not
depend on how the work was split.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numba import njit

from hmcy.fp import BadPrimeError, PrimeContext
from hmcy.varieties import Form, RootUnavailableError, form_E, form_F, form_G

# p**4 must fit a signed 64-bit accumulator.
MAX_COUNT_PRIME = 1 << 16


@dataclass(frozen=True)
class CountRecord:
    p: int
    variety: str
    count: int
    elapsed: float = 0.0
    method: str = "computed"


def projective_size(p: int) -> int:
    return p**4 + p**3 + p**2 + p + 1


@njit(nogil=True, cache=True)
def _count_box(coef, exps, fid, nforms, pw, p, lo, hi):  # pragma: no cover - jitted
    nmon = coef.shape[0]
    top = pw.shape[1]
    t0 = np.empty(nmon, np.int64)
    t1 = np.empty(nmon, np.int64)
    t2 = np.empty(nmon, np.int64)
    poly = np.zeros((nforms, top), np.int64)
    count = 0
    for a0 in range(lo[0], hi[0]):
        for m in range(nmon):
            t0[m] = coef[m] * pw[a0, exps[m, 0]] % p
        for a1 in range(lo[1], hi[1]):
            for m in range(nmon):
                t1[m] = t0[m] * pw[a1, exps[m, 1]] % p
            for a2 in range(lo[2], hi[2]):
                for m in range(nmon):
                    t2[m] = t1[m] * pw[a2, exps[m, 2]] % p
                for a3 in range(lo[3], hi[3]):
                    poly[:, :] = 0
                    for m in range(nmon):
                        poly[fid[m], exps[m, 4]] += t2[m] * pw[a3, exps[m, 3]]
                    for f in range(nforms):
                        for k in range(top):
                            poly[f, k] %= p
                    for a4 in range(lo[4], hi[4]):
                        ok = True
                        for f in range(nforms):
                            s = 0
                            for k in range(top):
                                s += poly[f, k] * pw[a4, k]
                            if s % p != 0:
                                ok = False
                                break
                        if ok:
                            count += 1
    return count


def strata_boxes(p: int, chunks: int = 1) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Half-open coordinate boxes partitioning P^4(F_p) into affine pieces.

    The x_0 = 1 stratum is additionally cut into ``chunks`` slabs along x_1.
    """
    boxes = []
    for lead in range(5):
        lo = [0 if j < lead else (1 if j == lead else 0) for j in range(5)]
        hi = [1 if j < lead else (2 if j == lead else p) for j in range(5)]
        if lead == 0 and chunks > 1:
            edges = np.linspace(0, p, min(chunks, p) + 1).astype(int)
            for a, b in zip(edges[:-1], edges[1:]):
                if b > a:
                    boxes.append((tuple(lo[:1] + [int(a)] + lo[2:]), tuple(hi[:1] + [int(b)] + hi[2:])))
        else:
            boxes.append((tuple(lo), tuple(hi)))
    return boxes


def _compile(form: Form, p: int):
    coef = np.array([c % p for _, c, _ in form.monomials], dtype=np.int64)
    exps = np.array([e for _, _, e in form.monomials], dtype=np.int64)
    fid = np.array([f for f, _, _ in form.monomials], dtype=np.int64)
    top = int(exps.max()) + 1
    pw = np.array([[pow(a, k, p) for k in range(top)] for a in range(p)], dtype=np.int64)
    return coef, exps, fid, pw


def count_form(form: Form, p: int, threads: int | None = None) -> int:
    """Number of points of P^4(F_p) where every form of the system vanishes."""
    if p >= MAX_COUNT_PRIME:
        raise BadPrimeError(f"counting needs p < 2**16, got {p}")
    threads = max(1, threads or os.cpu_count() or 1)
    coef, exps, fid, pw = _compile(form, p)
    boxes = strata_boxes(p, chunks=4 * threads if threads > 1 else 1)

    def work(box):
        lo, hi = (np.array(b, dtype=np.int64) for b in box)
        return int(_count_box(coef, exps, fid, form.nforms, pw, p, lo, hi))

    if threads == 1:
        return sum(map(work, boxes))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(work, boxes))


def count_hypersurface(form: Form, ctx: PrimeContext, threads: int | None = None) -> CountRecord:
    t = time.perf_counter()
    n = count_form(form, ctx.p, threads)
    return CountRecord(ctx.p, form.name, n, time.perf_counter() - t)


def count_G(ctx: PrimeContext, threads: int | None = None) -> CountRecord:
    return count_hypersurface(form_G(), ctx, threads)


def count_F(ctx: PrimeContext, threads: int | None = None) -> CountRecord:
    return count_hypersurface(form_F(), ctx, threads)


def count_E_single(ctx: PrimeContext, branch: int, threads: int | None = None) -> CountRecord:
    if ctx.i_root is None:
        raise RootUnavailableError(f"E{branch} has no defining equations over F_{ctx.p} (p = 3 mod 4)")
    t = time.perf_counter()
    n = count_form(form_E(ctx, branch), ctx.p, threads)
    return CountRecord(ctx.p, f"E{branch}", n, time.perf_counter() - t)


def count_E_union(ctx: PrimeContext, threads: int | None = None) -> CountRecord:
    """#(E_1 u E_2)(F_p); the branches are disjoint, so the counts add.

    For p = 3 mod 4 the answer is 0 without enumeration: a rational point would
    need i in F_p, or z_i^2 = 0 for every i.
    """
    if ctx.i_root is None:
        return CountRecord(ctx.p, "E", 0, 0.0)
    t = time.perf_counter()
    n = sum(count_E_single(ctx, b, threads).count for b in (1, 2))
    return CountRecord(ctx.p, "E", n, time.perf_counter() - t)
