"""Integer and rational arithmetic helpers.

Rational numbers throughout the package are ``fractions.Fraction`` values:
they are always stored reduced, with positive denominator and canonical
zero 0/1, which is exactly the representation the rest of the code relies
on for structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

#: Trial division bound used by :func:`factorize`.  Integers built from the
#: tables this artifact handles are either small or smooth; anything whose
#: complete factorization needs a prime above this bound raises instead of
#: silently looping.
TRIAL_DIVISION_LIMIT = 10**6


class FactorizationError(ValueError):
    """Trial division up to :data:`TRIAL_DIVISION_LIMIT` did not finish."""


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (fixed witness set)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int, limit: int = TRIAL_DIVISION_LIMIT) -> dict[int, int]:
    """Prime factorization of ``|n|`` by trial division, as ``{p: e}``.

    Raises :class:`FactorizationError` when a composite cofactor survives
    all trial divisors up to ``limit``.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 5
    while p * p <= n and p <= limit:
        for q in (p, p + 2):
            while n % q == 0:
                factors[q] = factors.get(q, 0) + 1
                n //= q
        p += 6
    if n > 1:
        if is_probable_prime(n):
            factors[n] = factors.get(n, 0) + 1
        else:
            # perfect prime powers (p^k with p just above the bound) still resolve
            for k in range(2, n.bit_length() + 1):
                root = nth_root_exact(n, k)
                if root is not None and is_probable_prime(root):
                    factors[root] = factors.get(root, 0) + k
                    break
            else:
                raise FactorizationError(
                    f"composite cofactor {n} exceeds trial division limit"
                )
    return factors


def divisors(n: int, limit: int = TRIAL_DIVISION_LIMIT) -> list[int]:
    """Sorted positive divisors of ``|n|``."""
    divs = [1]
    for p, e in factorize(n, limit).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def squarefree_part(q: Fraction | int) -> int:
    """The unique squarefree integer s with Q(sqrt(q)) = Q(sqrt(s)); s=1 means Q.

    Works for any nonzero rational: q and num(q)*den(q) differ by the square
    den(q)^2, so only the odd-exponent primes of num*den survive.
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("squarefree part of 0 is undefined")
    n = q.numerator * q.denominator
    s = -1 if n < 0 else 1
    for p, e in factorize(n).items():
        if e % 2 == 1:
            s *= p
    return s


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n), extending Legendre with the usual conventions.

    (a|2) is 0 for even a and +-1 according to a mod 8; (a|-1) is the sign
    of a.  n must be nonzero.
    """
    if n == 0:
        raise ValueError("Kronecker symbol (a|0) not supported")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    # n odd and positive: Jacobi symbol by quadratic reciprocity
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    return is_probable_prime(n)


def primes_up_to(bound: int) -> list[int]:
    """Primes <= bound by sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, bound + 1) if sieve[p]]


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorize(n).values())


def nth_root_exact(n: int, k: int) -> int | None:
    """The integer k-th root of n when n is a perfect k-th power, else None."""
    if n == 0:
        return 0
    if n < 0:
        if k % 2 == 0:
            return None
        r = nth_root_exact(-n, k)
        return None if r is None else -r
    r = round(n ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == n:
            return c
    # float seed can be off for huge n; fall back to bisection
    lo, hi = 0, 1 << (n.bit_length() // k + 2)
    while lo <= hi:
        mid = (lo + hi) // 2
        m = mid**k
        if m == n:
            return mid
        if m < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def rational_nth_root(q: Fraction, k: int) -> Fraction | None:
    """The rational k-th root of q if one exists, else None (real root for odd k)."""
    num = nth_root_exact(q.numerator, k)
    if num is None:
        return None
    den = nth_root_exact(q.denominator, k)
    if den is None:
        return None
    return Fraction(num, den)


def is_rational_square(q: Fraction) -> bool:
    return q >= 0 and rational_nth_root(q, 2) is not None


def prime_factors(n: int) -> list[int]:
    """Sorted distinct primes dividing |n|."""
    return sorted(factorize(n))


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
