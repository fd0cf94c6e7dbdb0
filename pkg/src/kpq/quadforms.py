"""Class groups of imaginary quadratic fields via reduced binary quadratic forms.

Ideal classes of the maximal order of discriminant ``D < 0`` are represented
by reduced primitive forms ``(a, b, c)`` with ``b**2 - 4ac = D``.  The prime
ideal above ``p`` corresponds to a form with leading coefficient ``p``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from kpq import kernels
from kpq.intarith import factorize, is_prime

__all__ = [
    "QuadForm",
    "ClassGroup",
    "InertPrimeError",
    "is_fundamental",
    "fundamental_discriminant",
    "principal_form",
    "reduce",
    "compose",
    "power",
    "class_number",
    "class_count",
    "prime_form",
    "form_order",
]


class InertPrimeError(ValueError):
    """Raised when no form of leading coefficient p exists (p inert)."""


@dataclass(frozen=True, order=True)
class QuadForm:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.c <= 0:
            raise ValueError(f"{self} is not positive definite")
        if self.discriminant >= 0:
            raise ValueError(f"{self} has nonnegative discriminant")

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not abs(b) <= a <= c:
            return False
        return b >= 0 or (abs(b) != a and a != c)

    @property
    def is_principal(self) -> bool:
        return self.is_reduced and self.a == 1

    def inverse(self) -> QuadForm:
        return reduce(QuadForm(self.a, -self.b, self.c))

    def __mul__(self, other: QuadForm) -> QuadForm:
        return compose(self, other)

    def __pow__(self, k: int) -> QuadForm:
        return power(self, k)


def is_fundamental(D: int) -> bool:
    """True for fundamental discriminants (of either sign, excluding 1)."""
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        return D // 4 % 4 in (2, 3) and _squarefree(D // 4)
    return False


def _squarefree(v: int) -> bool:
    return all(e == 1 for _, e in factorize(v).factors)


def fundamental_discriminant(d: int) -> int:
    """Discriminant of the maximal order of Q(sqrt(d)) for square-free ``d < 0``."""
    if d >= 0:
        raise ValueError(f"d must be negative, got {d}")
    if not _squarefree(d):
        raise ValueError(f"d = {d} is not square-free")
    return d if d % 4 == 1 else 4 * d


def principal_form(D: int) -> QuadForm:
    b0 = D % 2
    return QuadForm(1, b0, (b0 - D) // 4)


def _check_primitive(f: QuadForm) -> None:
    if not f.is_primitive:
        raise ValueError(f"{f} is not primitive")


def reduce(f: QuadForm) -> QuadForm:
    """The unique reduced form properly equivalent to ``f``."""
    _check_primitive(f)
    return QuadForm(*kernels.reduce_form(f.a, f.b, f.c))


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Reduced representative of the product class ``[f][g]``."""
    if f.discriminant != g.discriminant:
        raise ValueError(
            f"discriminant mismatch: {f.discriminant} vs {g.discriminant}")
    _check_primitive(f)
    _check_primitive(g)
    return QuadForm(*kernels.compose_forms(tuple(f), tuple(g)))


def power(f: QuadForm, k: int) -> QuadForm:
    """``f**k`` by square-and-multiply; negative ``k`` uses the inverse class."""
    if k < 0:
        return power(f.inverse(), -k)
    result = principal_form(f.discriminant)
    base = reduce(f)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


@dataclass(frozen=True)
class ClassGroup:
    D: int
    forms: tuple[QuadForm, ...]

    @property
    def h(self) -> int:
        return len(self.forms)

    @property
    def identity(self) -> QuadForm:
        return principal_form(self.D)

    def __len__(self):
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)

    def __contains__(self, f):
        return f in self._index

    @property
    def _index(self) -> frozenset:
        return frozenset(self.forms)


def _check_fundamental(D: int) -> None:
    if D >= 0:
        raise ValueError(f"discriminant must be negative, got {D}")
    if not is_fundamental(D):
        raise ValueError(f"{D} is not a fundamental discriminant")


@lru_cache(maxsize=256)
def class_number(D: int) -> ClassGroup:
    """Enumerate every reduced primitive form of the fundamental discriminant ``D``."""
    _check_fundamental(D)
    return ClassGroup(D, tuple(QuadForm(*f) for f in kernels.reduced_forms(D)))


@lru_cache(maxsize=4096)
def class_count(D: int) -> int:
    """``h(D)`` alone, without materializing the forms."""
    _check_fundamental(D)
    return kernels.count_reduced_forms(D)


def prime_form(D: int, p: int) -> QuadForm:
    """Reduced class of ``(p, b, (b*b - D) / 4p)`` with the least ``0 <= b < 2p``."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    _check_fundamental(D)
    for b in range(D % 2, 2 * p, 2):
        if (b * b - D) % (4 * p) == 0:
            return reduce(QuadForm(p, b, (b * b - D) // (4 * p)))
    raise InertPrimeError(f"inert: {p} is inert in the field of discriminant {D}")


def form_order(f: QuadForm, limit: int | None = None) -> int:
    """Order of ``[f]`` in the class group, by repeated composition.

    ``limit`` defaults to h(D); the order divides h, so running past it means
    the arithmetic is broken.
    """
    _check_primitive(f)
    if limit is None:
        limit = class_count(f.discriminant)
    k = kernels.form_order(tuple(f), limit)
    if k == 0:
        raise ArithmeticError(f"order of {f} exceeds {limit}")
    return k
