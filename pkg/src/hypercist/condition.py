"""Necessary conditions for floor(k/2) CISTs and the even-dimension verdict.

All arithmetic is exact integer arithmetic, so vertex counts such as
``2**10000`` are handled without loss.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import DomainError, InapplicableError


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


class Variant(str, enum.Enum):
    REGULAR = "regular"
    BIPARTITE = "bipartite"


@dataclass(frozen=True)
class ConditionReport:
    lhs: int
    rhs: int
    variant: Variant
    k: int
    nv: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def as_dict(self) -> dict:
        return {
            "variant": self.variant.value,
            "k": self.k,
            "nv": self.nv,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
        }


def condition_regular(k: int, nv: int) -> ConditionReport:
    """ceil((nv-2)/ceil(k/2)) <= floor(nv/floor(k/2)) for k-regular, k-connected graphs."""
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if nv < 2:
        raise DomainError(f"vertex count must be >= 2, got {nv}")
    lhs = ceil_div(nv - 2, ceil_div(k, 2))
    rhs = nv // (k // 2)
    return ConditionReport(lhs, rhs, Variant.REGULAR, k, nv)


def condition_bipartite(k: int, nv: int) -> ConditionReport:
    """The bipartite variant, with m = nv/2 vertices on each side:
    ceil((m-1)/ceil(k/2)) <= floor(m/floor(k/2)).
    """
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if nv < 2 or nv % 2:
        raise DomainError(f"a regular bipartite graph has an even vertex count, got {nv}")
    m = nv // 2
    lhs = ceil_div(m - 1, ceil_div(k, 2))
    rhs = m // (k // 2)
    return ConditionReport(lhs, rhs, Variant.BIPARTITE, k, nv)


def lemma_strict(x: int, k: int) -> bool:
    """Evaluate ceil((x-1)/k) > floor(x/k) where k divides neither x nor x-1."""
    if x < 1 or k < 1:
        raise InapplicableError(f"x and k must be positive, got x={x}, k={k}")
    if x % k == 0 or (x - 1) % k == 0:
        raise InapplicableError(f"{k} divides x={x} or x-1")
    return ceil_div(x - 1, k) > x // k


def divides_exception(m: int) -> bool:
    """True iff m/2 divides 2**(m-1) - 1, for even m >= 4."""
    if m < 4 or m % 2:
        raise DomainError(f"m must be even and >= 4, got {m}")
    half = m // 2
    if half % 2 == 0:
        # an even divisor cannot divide the odd number 2**(m-1) - 1
        return False
    return pow(2, m - 1, half) == 1


def _scan(start: int, stop: int) -> list[int]:
    # start is congruent to 2 mod 4 and m/2 >= 3, so pow() sees an odd modulus
    return [m for m in range(start, stop, 4) if pow(2, m - 1, m // 2) == 1]


def search_exceptions(limit: int, workers: int = 1) -> list[int]:
    """All even m in [4, limit] for which m/2 divides 2**(m-1) - 1, ascending.

    Only m = 2 (mod 4) can qualify. ``workers > 1`` splits the range across
    processes; the result is the same.
    """
    if limit < 4:
        raise DomainError(f"limit must be >= 4, got {limit}")
    stop = limit + 1
    if workers <= 1:
        return _scan(6, stop)
    count = (stop - 6 + 3) // 4
    per = max(1, ceil_div(count, workers * 4))
    starts = list(range(6, stop, 4 * per))
    bounds = [(s, min(s + 4 * per, stop)) for s in starts]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = pool.map(_scan, *zip(*bounds))
        return [m for chunk in chunks for m in chunk]


class Verdict(str, enum.Enum):
    IMPOSSIBLE = "impossible"
    POWER_OF_TWO = "exception-power-of-two"
    DIVISOR = "exception-divisor"
    OUT_OF_SCOPE = "out-of-scope"


@dataclass(frozen=True)
class ConjectureVerdict:
    """Whether Q_n can be ruled out from having n/2 CISTs.

    The exceptional classes only mean the necessary condition does not fail;
    they say nothing about existence.
    """

    n: int
    verdict: Verdict
    detail: str

    def as_dict(self) -> dict:
        return {"n": self.n, "verdict": self.verdict.value, "detail": self.detail}


def conjecture_verdict(n: int) -> ConjectureVerdict:
    if n <= 2 or n % 2:
        return ConjectureVerdict(n, Verdict.OUT_OF_SCOPE, "only even n > 2 are classified")
    k = n // 2
    if is_power_of_two(n):
        return ConjectureVerdict(n, Verdict.POWER_OF_TWO, f"k={k} divides x=2^{n - 1}")
    if divides_exception(n):
        return ConjectureVerdict(n, Verdict.DIVISOR, f"k={k} divides x-1=2^{n - 1}-1")
    return ConjectureVerdict(
        n, Verdict.IMPOSSIBLE,
        f"k={k} divides neither 2^{n - 1} nor 2^{n - 1}-1, so the bipartite condition fails",
    )


def hypercube_condition(n: int, bipartite: bool = True) -> ConditionReport:
    """Condition for Q_n (n-regular, 2**n vertices) to hold floor(n/2) CISTs."""
    return condition_bipartite(n, 1 << n) if bipartite else condition_regular(n, 1 << n)
