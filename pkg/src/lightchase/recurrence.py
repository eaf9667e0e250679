"""The row-state sequence of one-pass chasing, exact and modular.

On a uniform start every light in a row goes through the same states, so
the whole sweep collapses to one integer sequence: with start offset q,
the state of row i just after row i-1 is cleared satisfies

    S(0) = 0,  S(1) = -q,  S(i) = -q - S(i-2) - 3*S(i-1).

(Row i starts at -q, picks up -S(i-2) from the presses directly above it,
and -S(i-1) from each of its own button and its two side neighbors.)  The
board with `rows` rows is one-pass solvable exactly when S(rows) = 0 mod k.

S also has the closed form S(i) = (-1)^i * q * F(i) * F(i+1) with F the
Fibonacci numbers, which makes modular evaluation cheap at astronomically
large i via fast doubling.  Exact values are plain Python integers: they
grow like the square of F(i), far past any fixed width.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .fib import fib_pair, fib_pair_mod


def _check_q_i(q: int, i: int) -> None:
    if q < 0:
        raise ValueError(f"q must be non-negative, got {q}")
    if i < 0:
        raise ValueError(f"index must be non-negative, got {i}")


@dataclass(frozen=True)
class ChaseParams:
    """Start offset q and optional modulus k (k absent = exact integers)."""

    q: int
    k: int | None = None

    def __post_init__(self) -> None:
        if self.q < 0:
            raise ValueError(f"q must be non-negative, got {self.q}")
        if self.k is not None:
            if self.k < 2:
                raise ValueError(f"k must be >= 2, got {self.k}")
            if self.q > self.k - 1:
                raise ValueError(f"q must be in 0..k-1, got q={self.q} with k={self.k}")


@dataclass(frozen=True)
class ChaseSequence:
    """S(0)..S(n) for fixed parameters, exact or reduced mod k."""

    params: ChaseParams
    values: tuple[int, ...]


def s_exact(q: int, i: int) -> int:
    """S(i) with exact integer arithmetic."""
    _check_q_i(q, i)
    if i == 0:
        return 0
    a, b = 0, -q
    for _ in range(i - 1):
        a, b = b, -q - a - 3 * b
    return b


def s_mod(q: int, i: int, k: int) -> int:
    """S(i) mod k in 0..k-1, by running the recursion in Z_k."""
    _check_q_i(q, i)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if i == 0:
        return 0
    nq = (-q) % k
    a, b = 0, nq
    for _ in range(i - 1):
        a, b = b, (nq - a - 3 * b) % k
    return b


def iter_s_mod(q: int, k: int) -> Iterator[int]:
    """Yield S(0) mod k, S(1) mod k, ... indefinitely in O(1) state.

    The streaming form of s_mod, for sweeps that need a whole prefix of the
    sequence without paying O(i) per term.
    """
    _check_q_i(q, 0)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    nq = (-q) % k
    a, b = 0, nq
    while True:
        yield a
        a, b = b, (nq - a - 3 * b) % k


def s_closed(q: int, i: int, k: int | None = None) -> int:
    """S(i) via the closed form (-1)^i * q * F(i) * F(i+1).

    With a modulus the Fibonacci pair comes from fast doubling, so i may be
    astronomically large; without one the product is computed exactly.
    """
    _check_q_i(q, i)
    if k is None:
        fa, fb = fib_pair(i)
        v = q * fa * fb
        return -v if i % 2 else v
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    fa, fb = fib_pair_mod(i, k)
    v = (q % k) * fa % k * fb % k
    return (k - v) % k if i % 2 else v


def chase_sequence(params: ChaseParams, n: int) -> ChaseSequence:
    """S(0)..S(n) under the given parameters, in one recursion sweep."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    q, k = params.q, params.k
    if k is None:
        values = [0]
        a, b = 0, -q
        for _ in range(n):
            values.append(b)
            a, b = b, -q - a - 3 * b
    else:
        it = iter_s_mod(q, k)
        values = [next(it) for _ in range(n + 1)]
    return ChaseSequence(params, tuple(values))
