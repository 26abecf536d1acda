"""Certify a range of odd t and report the distinct quadratic fields reached."""
from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor

from .sl27 import certify_sl27


def odd_range(lo, hi):
    start = lo if lo % 2 else lo + 1
    return list(range(start, hi + 1, 2))


def _one(t):
    cert = certify_sl27(t)
    return t, cert.verdict, cert.d, round(cert.wall_clock, 3)


def run_batch(ts, jobs=1):
    """Rows (t, verdict, d, seconds) in input order, plus the distinct d values."""
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_one, ts))
    else:
        rows = [_one(t) for t in ts]
    distinct = sorted({d for _, _, d, _ in rows if d is not None})
    return rows, distinct


def batch_report(rows, distinct):
    return {
        "rows": [{"t": t, "verdict": v, "d": d, "seconds": s} for t, v, d, s in rows],
        "distinct_d": distinct,
        "distinct_count": len(distinct),
    }


def parse_range(text):
    """'1..41' or '1:41' -> (1, 41)."""
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.|:)\s*(-?\d+)\s*", text)
    if not m:
        raise ValueError(f"bad range {text!r}, expected LO..HI")
    return int(m.group(1)), int(m.group(2))
