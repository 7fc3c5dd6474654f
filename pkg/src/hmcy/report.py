"""Per-prime pipeline, result cache, table rendering and golden comparison."""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import os
import tempfile
import threading
import time
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable, Optional

from hmcy import counting
from hmcy.eta import SeriesCoeffs, expand_f
from hmcy.fp import PrimeContext, make_context
from hmcy.galois import INCONCLUSIVE, modularity_row, parity_check
from hmcy.golden import REFERENCE_TABLE, FIELDS, KNOWN_TYPOS, ROW_LABELS
from hmcy.nodes import inventory
from hmcy.resolution import conjectured_h, count_X_tilde, solve_h, trace_h3

log = logging.getLogger(__name__)

CACHE_VERSION = 1


class ResultCache:
    """Versioned JSON store of exact point counts, keyed by decimal prime.

    A corrupt or version-mismatched file is ignored with a warning; writes go
    through a temporary file and a lock, so there is only ever one writer.
    """

    def __init__(self, path: Optional[os.PathLike | str] = None):
        self.path = Path(path) if path else None
        self.counts: dict[str, dict[str, int]] = {}
        self.timestamps: dict[str, str] = {}
        self._lock = threading.Lock()
        if self.path and self.path.exists():
            self._load()

    def _load(self) -> None:
        try:
            data = json.loads(self.path.read_text())
            if data.get("version") != CACHE_VERSION:
                raise ValueError(f"cache version {data.get('version')!r} != {CACHE_VERSION}")
            counts = data["counts"]
            if not all(isinstance(v, int) for d in counts.values() for v in d.values()):
                raise ValueError("non-integer count")
            self.counts = {k: dict(v) for k, v in counts.items()}
            self.timestamps = dict(data.get("timestamps", {}))
        except (OSError, ValueError, KeyError, TypeError, AttributeError) as exc:
            log.warning("ignoring cache %s: %s", self.path, exc)
            self.counts, self.timestamps = {}, {}

    def get(self, p: int, variety: str) -> Optional[int]:
        return self.counts.get(str(p), {}).get(variety)

    def put(self, p: int, variety: str, n: int) -> None:
        with self._lock:
            self.counts.setdefault(str(p), {})[variety] = int(n)
            self.timestamps[str(p)] = time.strftime("%Y-%m-%dT%H:%M:%S")
            self._flush()

    def _flush(self) -> None:
        if not self.path:
            return
        payload = {"version": CACHE_VERSION, "counts": self.counts, "timestamps": self.timestamps}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, indent=1, sort_keys=True)
        os.replace(tmp, self.path)


_COUNTERS = {
    "G": counting.count_G,
    "F": counting.count_F,
    "E": counting.count_E_union,
    "E1": lambda ctx, threads=None: counting.count_E_single(ctx, 1, threads),
    "E2": lambda ctx, threads=None: counting.count_E_single(ctx, 2, threads),
}


def get_count(ctx: PrimeContext, variety: str, cache: Optional[ResultCache] = None,
              threads: Optional[int] = None) -> counting.CountRecord:
    if cache is not None:
        n = cache.get(ctx.p, variety)
        if n is not None:
            return counting.CountRecord(ctx.p, variety, n, 0.0, "cached")
    rec = _COUNTERS[variety](ctx, threads)
    rec = counting.CountRecord(ctx.p, variety, rec.count, rec.elapsed, rec.method)
    if cache is not None:
        cache.put(ctx.p, variety, rec.count)
    return rec


def weil_display(p: int) -> str:
    """6 p^(3/2) rounded up to one decimal, computed exactly."""
    n = 3600 * p**3
    r = math.isqrt(n)
    r += r * r < n
    return f"{r // 10}.{r % 10}"


@dataclass
class PrimeReport:
    p: int
    count_G: int
    sigma_defined: int
    tau_defined: int
    regular_defined: int
    count_E: int
    has_i: int
    has_sqrt5: int
    has_eps: int
    count_X_tilde: int
    p3_plus_1_minus_N: int
    p_plus_p2: int
    h: Optional[int]
    h_candidates: list
    trace_h3: Optional[int]
    weil_bound_display: str
    a_p: int
    diff: Optional[int]
    diff_over_p: Optional[int]
    w_check: Optional[int]
    trace_W: int
    trace_V: Optional[int]
    status: str
    parity_ok: bool
    conjecture_ok: Optional[bool]

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "PrimeReport":
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})


def analyze_prime(p: int, *, series: Optional[SeriesCoeffs] = None, cache: Optional[ResultCache] = None,
                  threads: Optional[int] = None) -> PrimeReport:
    ctx = make_context(p)
    series = series if series is not None and series.n_max >= p else expand_f(p)
    n_g = get_count(ctx, "G", cache, threads).count
    n_e = get_count(ctx, "E", cache, threads).count
    inv = inventory(ctx)
    n = count_X_tilde(ctx, n_g, n_e, inv).count_X_tilde
    sol = solve_h(p, n)
    h = sol.unique
    tr = trace_h3(p, n, h) if h is not None else None
    a_p = series[p]
    row = modularity_row(ctx, tr, n_e, a_p)
    diff = None if tr is None else tr - a_p
    return PrimeReport(
        p=p,
        count_G=n_g,
        sigma_defined=inv.sigma_defined,
        tau_defined=inv.tau_defined,
        regular_defined=inv.regular_defined,
        count_E=n_e,
        has_i=int(ctx.has_i),
        has_sqrt5=int(ctx.has_sqrt5),
        has_eps=int(ctx.has_eps),
        count_X_tilde=n,
        p3_plus_1_minus_N=p**3 + 1 - n,
        p_plus_p2=p + p * p,
        h=h,
        h_candidates=list(sol.candidates),
        trace_h3=tr,
        weil_bound_display=weil_display(p),
        a_p=a_p,
        diff=diff,
        diff_over_p=None if diff is None or diff % p else diff // p,
        w_check=2 * p + 2 - n_e if ctx.has_i else None,
        trace_W=row.trace_W,
        trace_V=row.trace_V,
        status=row.status,
        parity_ok=parity_check(p, n),
        conjecture_ok=None if h is None else h == conjectured_h(ctx),
    )


def analyze(primes: Iterable[int], cache: Optional[ResultCache] = None,
            threads: Optional[int] = None) -> list[PrimeReport]:
    primes = list(primes)
    series = expand_f(max(primes))
    return [analyze_prime(p, series=series, cache=cache, threads=threads) for p in primes]


# --- rendering ----------------------------------------------------------------


def _cell(rep: PrimeReport, name: str) -> str:
    v = getattr(rep, name)
    if name == "h" and v is None:
        return "{" + ",".join(map(str, rep.h_candidates)) + "}"
    return "" if v is None else str(v)


def render(reports: list[PrimeReport], fmt: str = "md") -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=1)
    header = ["p"] + [str(r.p) for r in reports]
    rows = [[ROW_LABELS[f]] + [_cell(r, f) for r in reports] for f in FIELDS]
    rows.append(["status"] + [r.status for r in reports])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt != "md":
        raise ValueError(f"unknown format {fmt!r}")
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


# --- golden comparison --------------------------------------------------------


@dataclass(frozen=True)
class GoldenDiff:
    p: int
    field: str
    expected: object
    actual: object
    known_typo: bool


def compare_golden(rep: PrimeReport) -> list[GoldenDiff]:
    """Cell-by-cell differences from the published column (empty if untabulated)."""
    want = REFERENCE_TABLE.get(rep.p)
    if want is None:
        return []
    out = []
    for f in FIELDS:
        got = getattr(rep, f)
        if got != want[f]:
            typo = KNOWN_TYPOS.get((rep.p, f))
            out.append(GoldenDiff(rep.p, f, want[f], got, typo is not None and typo == got))
    return out
