"""Desk-scale Diophantine tools.

Covers Fibonacci/Lucas numbers, the equation ``D1*x**2 + D2 = lam2 * p**y``
together with its exceptional families, the Lucas-square and repunit-square
scans, the half-integer power test, and the l-th root search for
``alpha = q + m*sqrt(d)``.

The multiplier lambda in {1, sqrt(2), 2} is always carried as ``lam2``, its
square, so everything stays in the integers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

from kpq.intarith import integer_nth_root, is_prime, is_square, odd_primes_upto

__all__ = [
    "LAMBDA_SQUARES",
    "EXCEPTIONAL_E",
    "fibonacci",
    "lucas",
    "f_triples",
    "in_E",
    "in_F",
    "in_G",
    "in_H",
    "HMembership",
    "BSInstance",
    "BSSolutionSet",
    "count_bs_solutions",
    "bs_consistency",
    "bs_sweep",
    "cohn_scan",
    "ljunggren_scan",
    "repunit",
    "quad_pow",
    "prop1_member",
    "RootCandidate",
    "prop2_find_root",
]

LAMBDA_SQUARES = (1, 2, 4)

# (lam2, D1, D2, p)
EXCEPTIONAL_E = frozenset({
    (4, 13, 3, 2),
    (2, 7, 11, 3),
    (1, 2, 1, 3),
    (4, 7, 1, 2),
    (2, 1, 1, 5),
    (2, 1, 1, 13),
    (4, 1, 3, 7),
})


def _check_lam2(lam2: int) -> None:
    if lam2 not in LAMBDA_SQUARES:
        raise ValueError(f"lambda^2 must be one of {LAMBDA_SQUARES}, got {lam2}")


def _fib_pair(k: int) -> tuple[int, int]:
    """(F_k, F_{k+1}) by fast doubling."""
    if k == 0:
        return 0, 1
    a, b = _fib_pair(k >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    return (d, c + d) if k & 1 else (c, d)


def fibonacci(k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _fib_pair(k)[0]


def lucas(k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    f, g = _fib_pair(k)
    # L_k = 2 F_{k+1} - F_k
    return 2 * g - f


def f_triples(k_max: int) -> list[tuple[int, int, int]]:
    """(F_{k-2e}, L_{k+e}, F_k) for 2 <= k <= k_max and e = +-1."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    out = []
    for k in range(2, k_max + 1):
        for eps in (1, -1):
            if k - 2 * eps >= 0:
                out.append((fibonacci(k - 2 * eps), lucas(k + eps), fibonacci(k)))
    return out


def in_E(lam2: int, D1: int, D2: int, p: int) -> bool:
    return (lam2, D1, D2, p) in EXCEPTIONAL_E


def in_F(D1: int, D2: int, p: int) -> bool:
    # Every coordinate is nondecreasing in k beyond k = 3, so stop once F_{k-2} passes max(D1, D2, p).
    top = max(D1, D2, p)
    k = 2
    while fibonacci(max(k - 2, 0)) <= top:
        for eps in (1, -1):
            if k - 2 * eps >= 0 and (fibonacci(k - 2 * eps), lucas(k + eps), fibonacci(k)) == (D1, D2, p):
                return True
        k += 1
    return False


def _prime_ok(lam2: int, p: int) -> bool:
    return is_prime(p) and (p != 2 or lam2 == 4)


def _log_exact(value: int, p: int) -> int | None:
    """r >= 1 with p**r == value, else None."""
    if value < p or p < 2:
        return None
    r = 0
    while value % p == 0:
        value //= p
        r += 1
    return r if value == 1 else None


def in_G(lam2: int, D1: int, D2: int, p: int) -> bool:
    """(D1, D2, p) = (1, 4p^r - 1, p) with p prime (odd unless lambda = 2)."""
    _check_lam2(lam2)
    if D1 != 1 or not _prime_ok(lam2, p) or (D2 + 1) % 4:
        return False
    return _log_exact((D2 + 1) // 4, p) is not None


@dataclass(frozen=True)
class HMembership:
    """Outcome of the search for (r, s) with D1 s^2 + D2 = lam2 p^r, 3 D1 s^2 - D2 = +-lam2.

    ``exhaustive`` is False only when a solution may exist outside the bounds.
    """
    member: bool
    witness: tuple[int, int] | None = None
    exhaustive: bool = True

    def __bool__(self):
        return self.member


def in_H(lam2: int, D1: int, D2: int, p: int, r_max: int = 40, s_max: int = 10**6) -> HMembership:
    _check_lam2(lam2)
    if min(D1, D2) < 1 or not _prime_ok(lam2, p):
        return HMembership(False)
    if math.gcd(D1, D2) != 1 or D1 % p == 0 or D2 % p == 0:
        return HMembership(False)
    # The second equation pins s^2 = (D2 +- lam2) / (3 D1); at most two candidates.
    exhaustive = True
    for sign in (1, -1):
        num = D2 + sign * lam2
        if num <= 0 or num % (3 * D1):
            continue
        s, exact = integer_nth_root(num // (3 * D1), 2)
        if not exact or s < 1:
            continue
        total = D1 * s * s + D2
        if total % lam2:
            continue
        r = _log_exact(total // lam2, p)
        if r is None:
            continue
        if r <= r_max and s <= s_max:
            return HMembership(True, (r, s))
        exhaustive = False
    return HMembership(False, None, exhaustive)


@dataclass(frozen=True)
class BSInstance:
    lam2: int
    D1: int
    D2: int
    p: int
    y_max: int = 40

    def __post_init__(self):
        _check_lam2(self.lam2)
        if self.D1 < 1 or self.D2 < 1:
            raise ValueError("D1 and D2 must be positive")
        if math.gcd(self.D1, self.D2) != 1:
            raise ValueError(f"gcd(D1, D2) = {math.gcd(self.D1, self.D2)} != 1")
        if not _prime_ok(self.lam2, self.p):
            raise ValueError(f"p = {self.p} must be a prime, odd unless lambda^2 = 4")
        if self.y_max < 1:
            raise ValueError("y_max must be positive")


@dataclass(frozen=True)
class BSSolutionSet:
    instance: BSInstance
    solutions: tuple[tuple[int, int], ...]
    in_E: bool
    in_F: bool
    in_G: bool
    in_H: HMembership = field(default_factory=lambda: HMembership(False))

    @property
    def exceptional(self) -> bool:
        return self.in_E or self.in_F or self.in_G or bool(self.in_H)


def count_bs_solutions(inst: BSInstance) -> BSSolutionSet:
    """Every positive (x, y) with y <= y_max solving D1 x^2 + D2 = lam2 p^y."""
    sols = []
    pw = inst.lam2
    for y in range(1, inst.y_max + 1):
        pw *= inst.p
        rest = pw - inst.D2
        if rest > 0 and rest % inst.D1 == 0:
            x, exact = integer_nth_root(rest // inst.D1, 2)
            if exact:
                sols.append((x, y))
    key = (inst.lam2, inst.D1, inst.D2, inst.p)
    return BSSolutionSet(
        instance=inst,
        solutions=tuple(sols),
        in_E=in_E(*key),
        in_F=in_F(inst.D1, inst.D2, inst.p),
        in_G=in_G(*key),
        in_H=in_H(*key),
    )


def bs_consistency(result: BSSolutionSet) -> str:
    """"OK" when at most one solution or the instance is exceptional, else "VIOLATION"."""
    if len(result.solutions) <= 1 or result.exceptional:
        return "OK"
    return "VIOLATION"


def bs_sweep(d1_max: int, d2_max: int, p_max: int, y_max: int = 40,
             lam2s: tuple[int, ...] = LAMBDA_SQUARES) -> list[BSSolutionSet]:
    """Instances with two or more solutions, sorted by (lam2, D1, D2, p)."""
    primes = odd_primes_upto(p_max)
    out = []
    for lam2 in lam2s:
        ps = ([2] if lam2 == 4 and p_max >= 2 else []) + primes
        for D1, D2, p in product(range(1, d1_max + 1), range(1, d2_max + 1), ps):
            if math.gcd(D1, D2) != 1:
                continue
            res = count_bs_solutions(BSInstance(lam2, D1, D2, p, y_max))
            if len(res.solutions) >= 2:
                out.append(res)
    return out


def cohn_scan(k_max: int) -> list[tuple[int, int]]:
    """(k, L_k) for 0 <= k <= k_max with L_k a perfect square."""
    out = []
    a, b = 2, 1
    for k in range(k_max + 1):
        if is_square(a):
            out.append((k, a))
        a, b = b, a + b
    return out


def repunit(x: int, n: int) -> int:
    """(x**n - 1) / (x - 1)."""
    return (x**n - 1) // (x - 1)


def ljunggren_scan(x_max: int, n_max: int) -> list[tuple[int, int, int]]:
    """(x, n, y) with 2 <= x <= x_max, odd 3 <= n <= n_max and repunit(x, n) = y**2."""
    out = []
    for x in range(2, x_max + 1):
        for n in range(3, n_max + 1, 2):
            y, exact = integer_nth_root(repunit(x, n), 2)
            if exact:
                out.append((x, n, y))
    return out


def quad_pow(a: int, b: int, d: int, k: int) -> tuple[int, int]:
    """(X, Y) with (a + b sqrt d)**k = X + Y sqrt d."""
    x, y = 1, 0
    while k:
        if k & 1:
            x, y = x * a + y * b * d, x * b + y * a
        a, b = a * a + b * b * d, 2 * a * b
        k >>= 1
    return x, y


def prop1_member(d: int, a: int, b: int, ell: int) -> bool:
    """Whether ((a + b sqrt d) / 2)**ell lies in Z[sqrt d], for odd a, b and d = 5 mod 8."""
    if d % 8 != 5:
        raise ValueError(f"d must be 5 mod 8, got {d}")
    if d >= 0 and is_square(d):
        raise ValueError("d must not be a perfect square")
    if a % 2 == 0 or b % 2 == 0:
        raise ValueError("a and b must be odd")
    if not is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")
    x, y = quad_pow(a, b, d, ell)
    den = 1 << ell
    return x % den == 0 and y % den == 0


@dataclass(frozen=True)
class RootCandidate:
    """The element a + b sqrt d, or (a + b sqrt d) / 2 when ``halved``."""
    a: int
    b: int
    halved: bool

    def __post_init__(self):
        if self.halved and (self.a - self.b) % 2:
            raise ValueError("halved candidates need a = b (mod 2)")

    def norm(self, d: int) -> int:
        n = self.a * self.a - self.b * self.b * d
        return n // 4 if self.halved else n

    def power(self, d: int, k: int) -> tuple[int, int] | None:
        """Integral coordinates of self**k, or None when they are not integers."""
        x, y = quad_pow(self.a, self.b, d, k)
        if not self.halved:
            return x, y
        den = 1 << k
        if x % den or y % den:
            return None
        return x // den, y // den


def prop2_find_root(case, ell: int) -> RootCandidate | None:
    """An integral beta with beta**ell = alpha, or None when no such beta exists.

    Any root has norm ``N = p**(n/ell)``, so ``a*a - b*b*d`` equals ``N`` for
    integral shapes or ``4N`` for half-integral ones.  Both equations have
    finitely many solutions, and all are tried.
    """
    if ell < 2 or case.n % ell or not is_prime(ell):
        raise ValueError(f"ell does not divide n: ell = {ell}, n = {case.n}")
    d = case.d
    if d >= 0:
        raise ValueError("d must be negative")
    target = (case.q, case.m)
    norm = case.p ** (case.n // ell)
    for halved, total in ((False, norm), (True, 4 * norm)):
        b = 0
        while b * b * -d <= total:
            a, exact = integer_nth_root(total + b * b * d, 2)
            if exact:
                for sa, sb in {(a, b), (-a, b), (a, -b), (-a, -b)}:
                    if halved:
                        if (sa - sb) % 2:
                            continue
                        # (a + b sqrt d)/2 with a, b odd is integral only for d = 1 mod 4
                        if sa % 2 and d % 4 != 1:
                            continue
                    cand = RootCandidate(sa, sb, halved)
                    if cand.power(d, ell) == target:
                        return cand
            b += 1
    return None
