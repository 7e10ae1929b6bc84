"""Small-integer arithmetic helpers (trial division is plenty at these sizes)."""

from __future__ import annotations

from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as sorted ``(prime, exponent)`` pairs."""
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``n == p**k`` and ``k >= 1``, else None."""
    if n < 2:
        return None
    f = factorize(n)
    return f[0] if len(f) == 1 else None


def is_prime_power_or_one(n: int) -> bool:
    return n == 1 or prime_power(n) is not None


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    """Number of integers in ``1..n`` coprime to ``n``."""
    if n < 1:
        raise ValueError(f"euler_phi expects n >= 1, got {n}")
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def multiplicative_order(u: int, m: int) -> int:
    """Least ``k >= 1`` with ``u**k == 1 (mod m)``; ``u`` must be a unit mod ``m``."""
    if gcd(u, m) != 1:
        raise ValueError(f"{u} is not a unit modulo {m}")
    k, x = 1, u % m
    while x != 1 % m:
        x = x * u % m
        k += 1
    return k
