"""Fibonacci numbers mod k, the restricted period, and the Pisano period.

The restricted period alpha(k) is the least positive index i with
F(i) = 0 (mod k); the Pisano period pi(k) is the least P >= 1 with
(F(P), F(P+1)) = (0, 1) (mod k), after which the whole sequence repeats.
Single pair values use fast doubling, so indices far beyond iterative
reach are fine; period scans walk the pair map one step at a time and are
hard-capped at 6k steps, the classical upper bound on pi(k).  alpha of a
composite k can also be assembled from its prime factorization via the
lcm rule and Wall's prime-power theorem.

Everything here is a pure function over plain integers; there is no cache
or other shared state.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import NamedTuple


class ScanBoundExceeded(RuntimeError):
    """A period scan ran past 6k steps.

    pi(k) <= 6k for every k, so hitting this means the scan itself is
    broken, not that the period does not exist.
    """


@dataclass(frozen=True)
class FibPairState:
    """A consecutive Fibonacci pair (F(i), F(i+1)) reduced mod k.

    advance() applies one step of the pair map (a, b) -> (b, a+b).  This is
    the O(i) route to any pair and serves as the independent check on the
    fast-doubling evaluator.
    """

    k: int
    i: int
    pair: tuple[int, int]

    @classmethod
    def start(cls, k: int) -> FibPairState:
        if k < 1:
            raise ValueError(f"modulus must be >= 1, got {k}")
        return cls(k, 0, (0, 1 % k))

    def advance(self) -> FibPairState:
        a, b = self.pair
        return FibPairState(self.k, self.i + 1, (b, (a + b) % self.k))


def fib_pair(i: int) -> tuple[int, int]:
    """(F(i), F(i+1)) as exact integers, by fast doubling."""
    if i < 0:
        raise ValueError(f"index must be non-negative, got {i}")
    a, b = 0, 1
    for bit in bin(i)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib_pair_mod(i: int, k: int) -> tuple[int, int]:
    """(F(i) mod k, F(i+1) mod k) in O(log i) modular multiplications."""
    if i < 0:
        raise ValueError(f"index must be non-negative, got {i}")
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    if k == 1:
        return 0, 0
    a, b = 0, 1
    for bit in bin(i)[2:]:
        c = a * (2 * b - a) % k
        d = (a * a + b * b) % k
        if bit == "1":
            a, b = d, (c + d) % k
        else:
            a, b = c, d
    return a, b


class PrimePowerAlpha(NamedTuple):
    """One prime-power factor p**s and its restricted period, with the rule used."""

    prime: int
    exponent: int
    alpha: int
    rule: str


@dataclass(frozen=True)
class AlphaResult:
    """alpha(k) together with how it was obtained.

    method is "direct-scan" (walk the Fibonacci sequence mod k to its first
    zero) or "factored" (lcm over prime powers); trace carries the
    per-prime-power breakdown in the factored case.
    """

    k: int
    alpha: int
    method: str
    trace: tuple[PrimePowerAlpha, ...] = ()


def alpha_direct(k: int) -> AlphaResult:
    """alpha(k) by scanning F(1), F(2), ... mod k until the first zero."""
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    if k == 1:
        return AlphaResult(1, 1, "direct-scan")
    a, b = 1, 1  # (F(1), F(2)) mod k, k >= 2
    i = 1
    bound = 6 * k
    while a:
        a, b = b, (a + b) % k
        i += 1
        if i > bound:
            raise ScanBoundExceeded(
                f"no Fibonacci multiple of {k} within {bound} terms; "
                f"pi(k) <= 6k rules this out, so the scan is buggy"
            )
    return AlphaResult(k, i, "direct-scan")


def pisano_direct(k: int) -> int:
    """The Pisano period pi(k): least P >= 1 with (F(P), F(P+1)) = (0, 1) mod k."""
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    if k == 1:
        return 1
    a, b = 1, 1  # (F(1), F(2)) mod k
    p = 1
    bound = 6 * k
    while (a, b) != (0, 1):
        a, b = b, (a + b) % k
        p += 1
        if p > bound:
            raise ScanBoundExceeded(
                f"Fibonacci pairs mod {k} did not cycle within {bound} terms; "
                f"pi(k) <= 6k rules this out, so the scan is buggy"
            )
    return p


def factorize(k: int) -> list[tuple[int, int]]:
    """Prime factorization of k >= 2 by trial division, primes ascending."""
    if k < 2:
        raise ValueError(f"can only factorize integers >= 2, got {k}")
    out = []
    n = k
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    """Trial-division primality check; plenty for the sizes handled here."""
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


def _alpha_prime_power(p: int, s: int) -> tuple[int, str]:
    if s < 1:
        raise ValueError(f"exponent must be >= 1, got {s}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        # alpha(2) = 3 and alpha(4) = 6 are the base cases; from s = 3 on,
        # alpha(2**s) = 2**(s-3) * alpha(4).
        if s == 1:
            return 3, "alpha(2) = 3"
        if s == 2:
            return 6, "alpha(4) = 6"
        return (1 << (s - 3)) * 6, "alpha(2^s) = 2^(s-3) * alpha(4)"
    a_p = alpha_direct(p).alpha
    if s == 1:
        return a_p, "direct scan"
    # Wall: for odd p with alpha(p^2) != alpha(p), alpha(p^s) = p^(s-1) * alpha(p).
    # A prime violating the hypothesis would be a Wall-Sun-Sun prime; none is
    # known, but the condition is checked rather than assumed.
    if alpha_direct(p * p).alpha != a_p:
        return p ** (s - 1) * a_p, "alpha(p^s) = p^(s-1) * alpha(p)"
    return alpha_direct(p**s).alpha, "direct scan (alpha(p^2) = alpha(p))"


def alpha_prime_power(p: int, s: int) -> int:
    """alpha(p**s) for prime p, via the prime-power rules where they apply."""
    return _alpha_prime_power(p, s)[0]


def alpha_factored(k: int) -> AlphaResult:
    """alpha(k) as lcm of alpha over the prime powers in k's factorization."""
    if k < 2:
        raise ValueError(f"factored route needs k >= 2, got {k}")
    trace = []
    for p, s in factorize(k):
        a, rule = _alpha_prime_power(p, s)
        trace.append(PrimePowerAlpha(p, s, a, rule))
    return AlphaResult(k, lcm(*(t.alpha for t in trace)), "factored", tuple(trace))
