"""Exact evaluation of gamma, gamma2, xi and xi2.

Two routes are provided for each integer function:

* the defining binomial / trinomial sums, ``gamma_defn`` and ``gamma2_defn``;
* the single-index series, ``gamma_simplified`` and ``gamma2_simplified``.

``xi(m) = gamma(m) / m**m`` and ``xi2(m) = gamma2(m) / m**m``.  The identity
``gamma2(m) - gamma(m) == m**(m + 1)`` (equivalently ``xi2 = xi + m``) is
checked by :func:`verify_identity`.

All arithmetic is on Python ``int`` and :class:`fractions.Fraction`; the
convention ``0**0 == 1`` is used throughout, which Python already follows.
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError, ResourceError

DEFAULT_CROSS_CHECK_CAP = 200
DEFAULT_SIMPLIFIED_CAP = 5000


def check_m(m) -> int:
    """Return ``m`` as an int if it is a positive integer, else raise."""
    if isinstance(m, bool) or not isinstance(m, int):
        raise DomainError(f"m must be a positive integer, got {m!r}")
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return m


def _self_powers(m):
    # [0**0, 1**1, ..., m**m]
    return [k**k for k in range(m + 1)]


def gamma_defn(m: int) -> int:
    """sum_k C(m,k) k^k (m-k)^(m-k), summed directly."""
    check_m(m)
    pw = _self_powers(m)
    total = 0
    binom = 1
    for k in range(m + 1):
        total += binom * pw[k] * pw[m - k]
        binom = binom * (m - k) // (k + 1)
    return total


def gamma2_defn(m: int) -> int:
    """Trinomial double sum over (j, k, m-j-k); O(m^2) big-int terms.

    Iterates j then k.  ``C(m,j) C(m-j,k)`` is updated along each row.
    """
    check_m(m)
    pw = _self_powers(m)
    total = 0
    outer = 1  # C(m, j)
    for j in range(m + 1):
        rest = m - j
        inner = 1  # C(rest, k)
        row = 0
        for k in range(rest + 1):
            row += inner * pw[k] * pw[rest - k]
            inner = inner * (rest - k) // (k + 1)
        total += outer * pw[j] * row
        outer = outer * (m - j) // (j + 1)
    return total


def gamma_simplified(m: int) -> int:
    """sum_{j=0}^m m^j m!/j!, with the term carried from j-1 to j."""
    check_m(m)
    term = 1
    for i in range(2, m + 1):
        term *= i  # j = 0: m!
    total = term
    for j in range(1, m + 1):
        term, rem = divmod(term * m, j)
        assert rem == 0
        total += term
    return total


def gamma2_simplified(m: int) -> int:
    """sum_{j=0}^m m^(m-j) C(m,j) (j+1)!.

    Since C(m,j) (j+1)! = (j+1) m!/(m-j)!, each term is (j+1) u_j with
    u_j = m^(m-j) m!/(m-j)!, and u_{j+1} = u_j (m-j) / m exactly.
    """
    check_m(m)
    u = m**m
    total = 0
    for j in range(m + 1):
        total += (j + 1) * u
        u, rem = divmod(u * (m - j), m)
        assert rem == 0
    return total


def telescope_sum(m: int) -> int:
    """sum_{k=0}^m m^k (m!/k!) (m-k), which collapses to m^(m+1)."""
    check_m(m)
    term = 1
    for i in range(2, m + 1):
        term *= i
    total = term * m
    for k in range(1, m + 1):
        term, rem = divmod(term * m, k)
        assert rem == 0
        total += term * (m - k)
    return total


def xi_exact(m: int) -> Fraction:
    check_m(m)
    return Fraction(gamma_simplified(m), m**m)


def xi2_exact(m: int) -> Fraction:
    check_m(m)
    return Fraction(gamma2_simplified(m), m**m)


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of checking the identity at a single ``m``.

    ``gamma_defn`` and ``gamma2_defn`` are ``None`` when the definitional
    route was not evaluated.
    """

    m: int
    gamma_defn: Optional[int]
    gamma_simplified: int
    gamma2_defn: Optional[int]
    gamma2_simplified: int
    identity_holds: bool
    telescope_holds: bool
    elapsed: float

    @property
    def cross_checked(self) -> bool:
        return self.gamma_defn is not None

    @property
    def lemma_holds(self) -> Optional[bool]:
        if not self.cross_checked:
            return None
        return (
            self.gamma_defn == self.gamma_simplified
            and self.gamma2_defn == self.gamma2_simplified
        )

    @property
    def passed(self) -> bool:
        return (
            self.identity_holds
            and self.telescope_holds
            and self.lemma_holds is not False
        )


def verify_identity(
    m: int,
    cross_check: bool = False,
    cross_check_cap: int = DEFAULT_CROSS_CHECK_CAP,
    cap: int = DEFAULT_SIMPLIFIED_CAP,
) -> VerifyReport:
    """Check ``gamma2(m) - gamma(m) == m**(m+1)`` and the telescoping sum.

    With ``cross_check`` the definitional sums are evaluated too and must
    agree with the simplified ones.  Raises :class:`ResourceError` when
    ``m`` exceeds ``cap``, or ``cross_check_cap`` when cross-checking.
    """
    check_m(m)
    if m > cap:
        raise ResourceError(f"m={m} exceeds the verification cap {cap}")
    if cross_check and m > cross_check_cap:
        raise ResourceError(
            f"cross-check requested for m={m} above cap {cross_check_cap}"
        )
    start = time.perf_counter()
    g = gamma_simplified(m)
    g2 = gamma2_simplified(m)
    target = m ** (m + 1)
    gd = gamma_defn(m) if cross_check else None
    g2d = gamma2_defn(m) if cross_check else None
    return VerifyReport(
        m=m,
        gamma_defn=gd,
        gamma_simplified=g,
        gamma2_defn=g2d,
        gamma2_simplified=g2,
        identity_holds=(g2 - g == target),
        telescope_holds=(telescope_sum(m) == target),
        elapsed=time.perf_counter() - start,
    )
