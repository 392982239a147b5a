"""Naive brute-force reference implementations.

Everything here is intentionally simple and shares no logic with the fast
paths in `young` and `decomp`: enumeration walks weakly increasing tuples
from the standard library and reverses them, and the symmetry check is an
inline index condition rather than a call into the duality code.  Used by
the tests and the CLI --verify flag only.
"""

from itertools import combinations_with_replacement
from math import comb

from .errors import OddFrame, TooLarge
from .young import Partition

GUARD = 10**7  # keeps a full brute-force sweep at desk scale


def _check_guard(d: int, e: int) -> None:
    if d < 0 or e < 0:
        raise ValueError("frame sides must be non-negative")
    if comb(d + e, e) > GUARD:
        raise TooLarge(f"{d}x{e} frame has {comb(d + e, e)} partitions, guard is {GUARD}")


def brute_enumerate_partitions(d: int, e: int) -> list[Partition]:
    """All weakly decreasing d-tuples with entries in [0, e], largest first."""
    _check_guard(d, e)
    tuples = [tuple(reversed(c)) for c in combinations_with_replacement(range(e + 1), d)]
    tuples.sort(reverse=True)
    return [Partition(t) for t in tuples]


def brute_count(d: int, e: int, degree: int) -> int:
    """Number of partitions of the given degree, by filtering the full list."""
    return sum(1 for p in brute_enumerate_partitions(d, e) if sum(p.parts) == degree)


def brute_symmetric_count(d: int, e: int) -> int:
    """Number of duality-fixed partitions, by direct entrywise check."""
    if e % 2:
        raise OddFrame(f"{d}x{e} frame has an odd number of columns")
    _check_guard(d, e)
    count = 0
    for c in combinations_with_replacement(range(e + 1), d):
        t = tuple(reversed(c))
        if all(t[i] + t[d - 1 - i] == e for i in range(d)):
            count += 1
    return count
