"""The fields K_{p,q} = Q(sqrt(q^2 - p^n)): hypotheses, class numbers, orders.

A :class:`FieldCase` carries ``v = q**2 - p**n = m**2 * d``; the element
``alpha = q + m*sqrt(d)`` has norm ``p**n``.  :func:`check_conditions` evaluates
the divisibility hypotheses exactly and :func:`verify` computes the class
number and, for cases meeting every hypothesis, the order of the prime class
above ``p``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from kpq.intarith import integer_nth_root, is_prime, odd_primes_upto, squarefree_part
from kpq.quadforms import InertPrimeError, class_count, form_order, fundamental_discriminant, prime_form

__all__ = [
    "SizeViolation",
    "ConsistencyError",
    "FieldCase",
    "ConditionReport",
    "VerificationResult",
    "Theorem2Scan",
    "build_case",
    "check_conditions",
    "verify",
    "theorem4_case",
    "theorem4_pairs",
    "scan_theorem2",
    "star_fails",
]

PASS = "PASS"
FAIL = "FAIL"


class SizeViolation(ValueError):
    """q**2 >= p**n, so q**2 - p**n does not define an imaginary field."""

    def __init__(self, p: int, q: int, n: int):
        self.p, self.q, self.n = p, q, n
        super().__init__(f"size violation: q^2 >= p^n ({q}^2 = {q * q} >= {p**n} = {p}^{n})")


class ConsistencyError(RuntimeError):
    """A computed value contradicts a proved statement; indicates a bug."""


def _check_odd_n(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be an odd integer >= 3, got {n}")


def _check_odd_prime(name: str, x: int) -> None:
    if x == 2 or not is_prime(x):
        raise ValueError(f"{name} must be an odd prime, got {x}")


@dataclass(frozen=True)
class FieldCase:
    n: int
    p: int
    q: int
    v: int
    m: int
    d: int
    D: int

    def __post_init__(self):
        if self.v >= 0:
            raise SizeViolation(self.p, self.q, self.n)
        if self.m * self.m * self.d != self.v:
            raise ValueError("m^2 * d must equal v")
        # norm(q + m sqrt d) = q^2 - m^2 d
        if self.q * self.q - self.m * self.m * self.d != self.p**self.n:
            raise ValueError("alpha does not have norm p^n")

    @property
    def alpha(self) -> tuple[int, int]:
        """``(q, m)``, the coordinates of ``alpha = q + m*sqrt(d)``."""
        return self.q, self.m


def _make_case(p: int, q: int, n: int) -> FieldCase:
    v = q * q - p**n
    if v >= 0:
        raise SizeViolation(p, q, n)
    m, d = squarefree_part(v)
    return FieldCase(n=n, p=p, q=q, v=v, m=m, d=d, D=fundamental_discriminant(d))


def build_case(p: int, q: int, n: int) -> FieldCase:
    _check_odd_n(n)
    _check_odd_prime("p", p)
    _check_odd_prime("q", q)
    if p == q:
        raise ValueError("p and q must be distinct")
    return _make_case(p, q, n)


def star_fails(q: int, d: int) -> bool:
    """q = +-1 (mod |d|); always true for |d| in {1, 2} since q is odd."""
    k = abs(d)
    if k <= 2:
        return True
    return q % k in (1, k - 1)


@dataclass(frozen=True)
class ConditionReport:
    size_ok: bool
    star_fail: bool
    cube_path: bool
    pcube_fail_a: bool
    pcube_fail_b: bool
    verdict: str = field(init=False)
    marker: str = field(init=False)

    def __post_init__(self):
        cube_fail = self.cube_path and (self.pcube_fail_a or self.pcube_fail_b)
        ok = self.size_ok and not self.star_fail and not cube_fail
        object.__setattr__(self, "verdict", PASS if ok else FAIL)
        if self.star_fail:
            marker = "*"
        elif self.pcube_fail_a or self.pcube_fail_b:
            marker = "**"
        else:
            marker = ""
        object.__setattr__(self, "marker", marker)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS


def check_conditions(case: FieldCase) -> ConditionReport:
    p, q, n, d = case.p, case.q, case.n, case.d
    cube_path = d % 4 == 1 and n % 3 == 0
    fail_a = fail_b = False
    if cube_path:
        root = p ** (n // 3)
        fail_a = (2 * q + 1) % 3 == 0 and root == (2 * q + 1) // 3
        fail_b = (q * q + 2) % 3 == 0 and root == (q * q + 2) // 3
    return ConditionReport(
        size_ok=q * q < p**n,
        star_fail=star_fails(q, d),
        cube_path=cube_path,
        pcube_fail_a=fail_a,
        pcube_fail_b=fail_b,
    )


@dataclass(frozen=True)
class VerificationResult:
    h: int
    divisible: bool
    order_p: int | None = None
    order_matches: bool | None = None

    @property
    def consistent(self) -> bool:
        """False only when a passing case misses the divisibility or order claim."""
        if self.order_p is None:
            return True
        return self.divisible and bool(self.order_matches)


def verify(case: FieldCase, report: ConditionReport) -> VerificationResult:
    h = class_count(case.D)
    divisible = h % case.n == 0
    if not report.passed:
        return VerificationResult(h=h, divisible=divisible)
    if case.d >= -3:
        raise ConsistencyError(f"passing case with d = {case.d} >= -3")
    try:
        order = form_order(prime_form(case.D, case.p), limit=h)
    except InertPrimeError as exc:
        raise ConsistencyError(f"{case.p} divides the norm of alpha but is inert") from exc
    return VerificationResult(h=h, divisible=divisible, order_p=order, order_matches=order == case.n)


def theorem4_case(p: int, n: int) -> tuple[FieldCase, VerificationResult]:
    """The field Q(sqrt(1 - p**n)), i.e. the case with q = 1."""
    _check_odd_n(n)
    _check_odd_prime("p", p)
    case = _make_case(p, 1, n)
    h = class_count(case.D)
    return case, VerificationResult(h=h, divisible=h % n == 0)


def theorem4_pairs(bound: int) -> list[tuple[int, int]]:
    """All (p, n), p an odd prime and n >= 3 odd, with p**n <= bound, sorted."""
    pairs = []
    cube_root, _ = integer_nth_root(max(bound, 0), 3)
    for p in odd_primes_upto(cube_root):
        n = 3
        while p**n <= bound:
            pairs.append((p, n))
            n += 2
    return pairs


@dataclass(frozen=True)
class Theorem2Scan:
    q: int
    n: int
    p_max: int
    scanned: int
    failures: tuple[tuple[int, int], ...]
    distinct_d: int

    @property
    def bound_holds(self) -> bool:
        """Every failing p has |d| <= q + 1."""
        return all(abs(d) <= self.q + 1 for _, d in self.failures)


def scan_theorem2(q: int, n: int, p_max: int) -> Theorem2Scan:
    """Star-condition failures among odd primes p <= p_max for fixed q and n."""
    _check_odd_n(n)
    if n % 3 == 0:
        raise ValueError(f"n must not be divisible by 3, got {n}")
    _check_odd_prime("q", q)
    failures = []
    seen = set()
    scanned = 0
    for p in odd_primes_upto(p_max):
        if p == q or q * q >= p**n:
            continue
        _, d = squarefree_part(q * q - p**n)
        scanned += 1
        seen.add(d)
        if star_fails(q, d):
            failures.append((p, d))
    return Theorem2Scan(q, n, p_max, scanned, tuple(failures), len(seen))
