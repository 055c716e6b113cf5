"""Number-theoretic kernel: Moebius function, divisors, lcm-constrained
index sets, and exponent-multiset (integer partition) enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, gcd, prod
from typing import Iterator


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Moebius mu(n): 0 on squareful n, else (-1)^(number of prime factors)."""
    if n < 1:
        raise ValueError(f"mobius requires n >= 1, got {n}")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def gcd_lcm(a: int, b: int) -> tuple[int, int]:
    """Return (gcd, lcm); their product equals a*b."""
    if a < 1 or b < 1:
        raise ValueError(f"gcd_lcm requires positive inputs, got ({a}, {b})")
    g = gcd(a, b)
    return g, a * b // g


@dataclass(frozen=True)
class ExponentMultiset:
    """Sparse multiset of part sizes: ((part, multiplicity), ...) with
    ascending parts and positive multiplicities."""

    parts: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        """Total number of parts counted with multiplicity."""
        return sum(m for _, m in self.parts)

    @property
    def weight(self) -> int:
        """Sum of part * multiplicity."""
        return sum(p * m for p, m in self.parts)

    def multiplicity(self, part: int) -> int:
        for p, m in self.parts:
            if p == part:
                return m
        return 0

    def factorial_product(self) -> int:
        """Product of multiplicity factorials."""
        return prod(factorial(m) for _, m in self.parts)


def exponent_multisets(n: int, max_part: int) -> Iterator[ExponentMultiset]:
    """Stream every multiset of parts <= max_part with weight exactly n.

    Equivalent to the integer partitions of n with bounded largest part,
    emitted once each in decreasing order of largest part. Streaming by
    design: partition counts grow fast with n.
    """
    if n < 1:
        raise ValueError(f"exponent_multisets requires n >= 1, got {n}")
    if max_part < 1:
        raise ValueError(f"max_part must be >= 1, got {max_part}")

    def walk(remaining: int, part: int, acc: list[tuple[int, int]]) -> Iterator[ExponentMultiset]:
        if remaining == 0:
            yield ExponentMultiset(tuple(sorted(acc)))
            return
        if part < 1:
            return
        for mult in range(remaining // part, 0, -1):
            acc.append((part, mult))
            yield from walk(remaining - part * mult, part - 1, acc)
            acc.pop()
        yield from walk(remaining, part - 1, acc)

    yield from walk(n, min(max_part, n), [])


def pairs_with_lcm(n: int) -> tuple[tuple[int, int], ...]:
    """All ordered pairs (s, t) of positive integers with lcm(s, t) = n."""
    if n < 1:
        raise ValueError(f"pairs_with_lcm requires n >= 1, got {n}")
    ds = divisors(n)
    return tuple((s, t) for s in ds for t in ds if s * t // gcd(s, t) == n)


def tuples_with_lcm(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Stream all ordered k-tuples of positive integers with lcm equal to n."""
    if n < 1 or k < 1:
        raise ValueError(f"tuples_with_lcm requires n, k >= 1, got ({n}, {k})")
    ds = divisors(n)

    def walk(prefix: tuple[int, ...], running: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == k:
            if running == n:
                yield prefix
            return
        for d in ds:
            yield from walk(prefix + (d,), running * d // gcd(running, d))

    yield from walk((), 1)
