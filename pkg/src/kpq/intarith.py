"""Exact integer primitives: primality, factorization, square-free parts and roots.

Python integers are unbounded, so nothing here can wrap around.  The only
hard limit is the deterministic Miller-Rabin range, past which
:func:`is_prime` raises instead of guessing.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

__all__ = [
    "Factorization",
    "is_prime",
    "factorize",
    "squarefree_part",
    "integer_nth_root",
    "is_square",
    "odd_primes_upto",
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# The first 13 prime bases are a deterministic witness set below this bound.
_MR_LIMIT = 3317044064679887385961981
_TRIAL_LIMIT = 4096


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for ``n < 3.3e24``."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise OverflowError(f"{n} exceeds the deterministic Miller-Rabin range")
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = self.sign
        last = 1
        for prime, exp in self.factors:
            if prime <= last or exp < 1:
                raise ValueError("factors must be strictly increasing with positive exponents")
            last = prime
            prod *= prime**exp
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    def __iter__(self):
        return iter(self.factors)

    def recompose(self) -> int:
        out = self.sign
        for prime, exp in self.factors:
            out *= prime**exp
        return out


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    root, exact = integer_nth_root(n, 2)
    if exact:
        _split(root, out, rng)
        _split(root, out, rng)
        return
    f = _pollard_brent(n, rng)
    _split(f, out, rng)
    _split(n // f, out, rng)


def factorize(n: int) -> Factorization:
    """Factor a nonzero integer.

    Trial division removes primes below 4096; any cofactor left over is
    certified prime or split with Brent's variant of Pollard rho (seeded, so the
    run is reproducible).
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    rest = abs(n)
    found: dict[int, int] = {}
    for p in (2, 3):
        while rest % p == 0:
            found[p] = found.get(p, 0) + 1
            rest //= p
    p, step = 5, 2
    while p * p <= rest and p < _TRIAL_LIMIT:
        while rest % p == 0:
            found[p] = found.get(p, 0) + 1
            rest //= p
        p += step
        step = 6 - step
    if rest > 1:
        if p * p > rest:
            found[rest] = found.get(rest, 0) + 1
        else:
            _split(rest, found, random.Random(rest))
    return Factorization(n, sign, tuple(sorted(found.items())))


def squarefree_part(v: int) -> tuple[int, int]:
    """Write ``v = m**2 * d`` with ``m > 0`` and ``d`` square-free, sign(d) = sign(v)."""
    if v == 0:
        raise ValueError("square-free part of 0 is undefined")
    fac = factorize(v)
    m, d = 1, fac.sign
    for prime, exp in fac.factors:
        m *= prime ** (exp // 2)
        if exp % 2:
            d *= prime
    return m, d


def integer_nth_root(v: int, k: int) -> tuple[int, bool]:
    """Return ``(floor(v ** (1/k)), exact)`` computed with integers only."""
    if v < 0:
        raise ValueError("v must be nonnegative")
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1 or v < 2:
        return v, True
    if k == 2:
        r = math.isqrt(v)
        return r, r * r == v
    # Newton iteration from an overestimate; decreases monotonically to the floor.
    x = 1 << -(-v.bit_length() // k)
    while True:
        y = ((k - 1) * x + v // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x**k == v


def is_square(v: int) -> bool:
    return v >= 0 and math.isqrt(v) ** 2 == v


def odd_primes_upto(limit: int) -> list[int]:
    """Odd primes ``<= limit`` by a byte sieve."""
    if limit < 3:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i in range(3, limit + 1, 2) if sieve[i]]
