"""Abel binomial sums and Hurwitz multinomial sums over the rationals.

    A_m(x, y; p, q) = sum_k C(m,k) (x+k)^(k+p) (y+m-k)^(m-k+q)

    B_m(x_1..x_n; p_1..p_n) = sum over compositions (k_1..k_n) of m of
        m!/(k_1!...k_n!) prod_j (x_j+k_j)^(k_j+p_j)

plus the closed-form right-hand sides for p = q = 0 (binomial case) and
p_j = 0 (multinomial case) expressed with rising factorials.

Arguments ``x`` accept anything :class:`fractions.Fraction` accepts: ints,
Fractions, or strings such as ``"3/4"``.  Values whose denominator is 1 are
returned as plain ``int``.
"""

from fractions import Fraction
from math import prod
from typing import Iterator, Sequence, Tuple

from .errors import DomainError, SingularTermError
from .exact_core import check_m

Composition = Tuple[int, ...]


def _rational(x) -> Fraction:
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    return Fraction(x)


def _normalize(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def _exponent(e) -> int:
    if isinstance(e, bool) or not isinstance(e, int):
        raise TypeError(f"exponent must be an int, got {e!r}")
    return e


def _power(base: Fraction, exp: int):
    """``base**exp`` with 0**0 == 1; ``None`` marks a singular term."""
    if base == 0 and exp < 0:
        return None
    return _normalize(base**exp)


def compositions(m: int, n: int) -> Iterator[Composition]:
    """Yield every n-tuple of non-negative ints summing to m.

    Tuples come out in descending lexicographic order, so ``(m, 0, ..., 0)``
    is first and ``(0, ..., 0, m)`` last.  There are C(m+n-1, n-1) of them.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a non-negative integer, got {m!r}")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")

    parts = [0] * n

    def walk(j, remaining):
        if j == n - 1:
            parts[j] = remaining
            yield tuple(parts)
            return
        for k in range(remaining, -1, -1):
            parts[j] = k
            yield from walk(j + 1, remaining - k)

    yield from walk(0, m)


def abel_sum(m: int, x, y, p: int = 0, q: int = 0):
    """Exact value of A_m(x, y; p, q).

    Raises :class:`SingularTermError` naming ``k`` when some term has a zero
    base under a negative exponent.
    """
    check_m(m)
    x, y = _rational(x), _rational(y)
    p, q = _exponent(p), _exponent(q)
    total = 0
    binom = 1
    for k in range(m + 1):
        left = _power(x + k, k + p)
        if left is None:
            raise SingularTermError(
                f"singular term at k={k}: (x+k)={x + k} raised to {k + p}",
                index=k,
                part=0,
            )
        right = _power(y + m - k, m - k + q)
        if right is None:
            raise SingularTermError(
                f"singular term at k={k}: (y+m-k)={y + m - k} raised to {m - k + q}",
                index=k,
                part=1,
            )
        total += binom * left * right
        binom = binom * (m - k) // (k + 1)
    return _normalize(total)


def hurwitz_sum(m: int, xs: Sequence, ps: Sequence[int] = None):
    """Exact value of B_m(x_1..x_n; p_1..p_n); ``ps`` defaults to zeros.

    Compositions are visited in the order of :func:`compositions`; the
    multinomial coefficient is carried down the recursion as a product of
    binomials C(r, k_j) over the remaining mass r.
    """
    check_m(m)
    xs = [_rational(x) for x in xs]
    n = len(xs)
    if n < 1:
        raise DomainError("need at least one part")
    ps = [0] * n if ps is None else [_exponent(p) for p in ps]
    if len(ps) != n:
        raise DomainError(f"got {n} bases but {len(ps)} exponents")

    table = [
        [_power(xs[j] + k, k + ps[j]) for k in range(m + 1)] for j in range(n)
    ]
    prefix = [0] * n

    def singular(j, k, remaining):
        prefix[j] = k
        comp = tuple(prefix[: j + 1]) + (
            (remaining - k,) + (0,) * (n - j - 2) if j < n - 1 else ()
        )
        raise SingularTermError(
            f"singular term in composition {comp} at part j={j}: "
            f"(x_j+k_j)={xs[j] + k} raised to {k + ps[j]}",
            index=comp,
            part=j,
        )

    def walk(j, remaining, coef, acc):
        row = table[j]
        if j == n - 1:
            f = row[remaining]
            if f is None:
                singular(j, remaining, remaining)
            return coef * acc * f
        total = 0
        binom = 1  # C(remaining, k), k descending from remaining
        for k in range(remaining, -1, -1):
            f = row[k]
            if f is None:
                singular(j, k, remaining)
            prefix[j] = k
            total += walk(j + 1, remaining - k, coef * binom, acc * f)
            binom = binom * k // (remaining - k + 1)
        return total

    return _normalize(walk(0, m, 1, 1))


def alpha(k: int, r: int) -> int:
    """Rising factorial (r+k-1)!/(r-1)! = r (r+1) ... (r+k-1)."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise DomainError(f"k must be a non-negative integer, got {k!r}")
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise DomainError(f"r must be a positive integer, got {r!r}")
    return prod(range(r, r + k))


def riordan_binomial_rhs(m: int, x, y):
    """sum_k C(m,k) k! (x+y+m)^(m-k), which equals A_m(x, y; 0, 0)."""
    check_m(m)
    s = _rational(x) + _rational(y) + m
    total = 0
    falling = 1  # C(m,k) k! = m!/(m-k)!
    for k in range(m + 1):
        total += falling * s ** (m - k)
        falling *= m - k
    return _normalize(total)


def riordan_multinomial_rhs(m: int, xs: Sequence, n: int = None):
    """sum_k C(m,k) (x_1+...+x_n+m)^(m-k) alpha(k, n-1).

    Equals B_m(x_1..x_n; 0..0).  ``n`` defaults to ``len(xs)`` and must be
    at least 2.
    """
    check_m(m)
    xs = [_rational(x) for x in xs]
    if n is None:
        n = len(xs)
    if isinstance(n, bool) or not isinstance(n, int) or n <= 1:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")
    if len(xs) != n:
        raise DomainError(f"n={n} but {len(xs)} bases given")
    s = sum(xs, Fraction(0)) + m
    r = n - 1
    total = 0
    binom = 1
    rising = 1  # alpha(k, r)
    for k in range(m + 1):
        total += binom * s ** (m - k) * rising
        binom = binom * (m - k) // (k + 1)
        rising *= r + k
    return _normalize(total)
