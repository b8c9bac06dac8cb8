"""Double-precision evaluation of xi(m) and xi2(m) for large m.

Reindexing the single-index series by k = m - j gives

    xi(m)  = sum_{k=0}^m t_k
    xi2(m) = sum_{k=0}^m (k+1) t_k,      t_k = m! / ((m-k)! m^k)

with t_0 = 1 and t_k = t_{k-1} (m-k+1)/m.  Every t_k lies in [0, 1] and the
sequence is non-increasing, so the terms never overflow and the sum can stop
once the remaining tail is provably negligible.

Tail bounds used for early exit, after the last included index k:

    sum_{i>k} t_i         <= t_{k+1} (m-k)
    sum_{i>k} (i+1) t_i   <= t_{k+1} (m-k) (m+1)

The loop stops when the bound drops to ``rel_cutoff`` times the partial sum,
so ``truncation_bound <= rel_cutoff`` always holds.

:func:`xi_float_naive` evaluates the original binomial definition term by
term in log space and is kept only as an accuracy foil.
"""

import math
from dataclasses import dataclass

from .exact_core import check_m

DEFAULT_REL_CUTOFF = 1e-17

SIMPLIFIED = "simplified"
NAIVE_LOG = "naive-log"


@dataclass(frozen=True)
class SeriesEval:
    m: int
    value: float
    terms_used: int
    truncation_bound: float
    mode: str


def _check_cutoff(rel_cutoff):
    if not 0.0 < rel_cutoff < 1.0:
        raise ValueError(f"rel_cutoff must lie in (0, 1), got {rel_cutoff!r}")


def _series(m, rel_cutoff, weighted):
    check_m(m)
    _check_cutoff(rel_cutoff)
    terms = []
    partial = 0.0
    t = 1.0
    k = 0
    bound = 0.0
    while True:
        term = (k + 1) * t if weighted else t
        terms.append(term)
        partial += term
        if k == m:
            break
        nxt = t * (m - k) / m
        if nxt > t:
            raise AssertionError(f"term sequence increased at k={k + 1}")
        tail = nxt * (m - k)
        if weighted:
            tail *= m + 1
        if tail <= rel_cutoff * partial:
            bound = tail / partial
            break
        t = nxt
        k += 1
    # fsum rounds the exact sum of the collected terms once.
    value = math.fsum(terms)
    return SeriesEval(m, value, len(terms), bound, SIMPLIFIED)


def xi_float(m: int, rel_cutoff: float = DEFAULT_REL_CUTOFF) -> SeriesEval:
    return _series(m, rel_cutoff, weighted=False)


def xi2_float(m: int, rel_cutoff: float = DEFAULT_REL_CUTOFF) -> SeriesEval:
    return _series(m, rel_cutoff, weighted=True)


def xi_float_naive(m: int) -> SeriesEval:
    """Sum C(m,k) (k/m)^k (1-k/m)^(m-k) with each term built from logs.

    Uses ``0 * log 0 = 0``.  All m+1 terms are summed in ascending k.
    """
    check_m(m)
    log_m_fact = math.lgamma(m + 1)
    terms = []
    for k in range(m + 1):
        log_term = log_m_fact - math.lgamma(k + 1) - math.lgamma(m - k + 1)
        if k:
            log_term += k * math.log(k / m)
        if m - k:
            log_term += (m - k) * math.log1p(-k / m)
        terms.append(math.exp(log_term))
    return SeriesEval(m, math.fsum(terms), m + 1, 0.0, NAIVE_LOG)


def identity_residual(m: int, rel_cutoff: float = DEFAULT_REL_CUTOFF) -> float:
    """|xi2(m) - xi(m) - m| / m evaluated in floating point."""
    xi = xi_float(m, rel_cutoff).value
    xi2 = xi2_float(m, rel_cutoff).value
    return abs(xi2 - xi - m) / m
