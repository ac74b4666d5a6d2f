"""Exact integer helpers for desk-scale numbers (trial division)."""

from __future__ import annotations

from math import gcd


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as ``{prime: exponent}``; empty for n = 1."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def multiplicative_order(r: int, m: int) -> int:
    """Least k >= 1 with r^k = 1 (mod m)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return 1
    if gcd(r, m) != 1:
        raise ValueError(f"{r} is not invertible modulo {m}")
    x, k = r % m, 1
    while x != 1:
        x = x * r % m
        k += 1
    return k
