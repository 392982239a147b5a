"""Weight-lattice combinatorics for general linear groups (type A).

The longest Weyl element acts on a weight by reversing its entries, so the
dual of a dominant weight is its reversed negation.  A self-dual weight is
classified as symmetric or anti-symmetric by the parity of its pairing
with the sum of the positive coroots; for general linear groups that
pairing is always even on self-dual weights, so the anti-symmetric class
is empty (the test suite sweeps boxes to confirm this).
"""

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from functools import cache
from itertools import combinations_with_replacement
from typing import NamedTuple

from .errors import NotDominant
from .young import Frame, Partition, embed


class WeightVector:
    """An integer weight of GL_n; the rank n is the number of entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[int]):
        self.entries = tuple(int(m) for m in entries)
        if not self.entries:
            raise ValueError("weight vector needs at least one entry")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self) -> str:
        return f"WeightVector({self.entries!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(m) for m in self.entries) + ")"


@cache
def _two_rho_check(rank: int) -> tuple[int, ...]:
    # literal sum of the positive coroots e_i - e_j over i < j
    total = [0] * rank
    for i in range(rank):
        for j in range(i + 1, rank):
            total[i] += 1
            total[j] -= 1
    return tuple(total)


@dataclass(frozen=True)
class RootDatumA:
    """Root datum of GL_n: reversal as longest Weyl element, coroots e_i - e_j."""

    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")

    def positive_coroots(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                v = [0] * self.rank
                v[i], v[j] = 1, -1
                out.append(tuple(v))
        return tuple(out)

    def two_rho_check(self) -> tuple[int, ...]:
        """Sum of the positive coroots; entry i is rank + 1 - 2(i+1)."""
        return _two_rho_check(self.rank)

    def w0(self, entries: Iterable[int]) -> tuple[int, ...]:
        """The longest Weyl element: order reversal of the entries."""
        return tuple(reversed(tuple(entries)))


class SignClass(Enum):
    SYMMETRIC = "symmetric"
    ANTI_SYMMETRIC = "anti-symmetric"
    NOT_SELF_DUAL = "not-self-dual"


def is_dominant(weight: WeightVector) -> bool:
    m = weight.entries
    return all(m[i] >= m[i + 1] for i in range(len(m) - 1))


def _require_dominant(weight: WeightVector) -> None:
    if not is_dominant(weight):
        raise NotDominant(f"{weight} is not weakly decreasing")


def dual_weight(weight: WeightVector) -> WeightVector:
    """Highest weight of the dual: negate and reverse.  An involution."""
    _require_dominant(weight)
    return WeightVector(-m for m in reversed(weight.entries))


def is_self_dual(weight: WeightVector) -> bool:
    _require_dominant(weight)
    return dual_weight(weight) == weight


def pair_two_rho_check(weight: WeightVector) -> int:
    """Pairing of the weight with the sum of positive coroots."""
    coeffs = _two_rho_check(weight.rank)
    return sum(c * m for c, m in zip(coeffs, weight.entries))


def sign_of(weight: WeightVector) -> SignClass:
    """Classify a dominant weight: not self-dual, or self-dual with a parity sign.

    A self-dual weight is symmetric when its pairing with the coroot sum is
    even and anti-symmetric when odd.  For GL_n the anti-symmetric branch
    never fires: paired entries m_i = -m_{n+1-i} contribute evenly.
    """
    _require_dominant(weight)
    if dual_weight(weight) != weight:
        return SignClass.NOT_SELF_DUAL
    if pair_two_rho_check(weight) % 2 == 0:
        return SignClass.SYMMETRIC
    return SignClass.ANTI_SYMMETRIC


def shift_entries(weight: WeightVector, offset: int) -> WeightVector:
    """Add a constant to every entry (tensoring by a determinant power)."""
    return WeightVector(m + offset for m in weight.entries)


def weight_from_partition(alpha: Partition, frame: Frame) -> WeightVector:
    """Embed a frame partition as a dominant GL_d weight, padded to d entries."""
    return WeightVector(embed(alpha, frame))


class BoxClassification(NamedTuple):
    symmetric: tuple[WeightVector, ...]
    antisymmetric: tuple[WeightVector, ...]
    dual_pair_representatives: tuple[WeightVector, ...]


def classify_box(rank: int, bound: int) -> BoxClassification:
    """Partition the dominant weights with entries in [-bound, bound] by sign.

    The box is closed under duality, so every non-self-dual weight has its
    partner inside it; each such pair is represented once, by its
    lexicographically larger member.  Lists come back in decreasing
    lexicographic order.
    """
    if rank < 1:
        raise ValueError("rank must be positive")
    if bound < 0:
        raise ValueError("bound must be non-negative")
    symmetric, antisymmetric, pairs = [], [], []
    for entries in combinations_with_replacement(range(bound, -bound - 1, -1), rank):
        partner = tuple(-m for m in reversed(entries))
        if partner == entries:
            weight = WeightVector(entries)
            if pair_two_rho_check(weight) % 2 == 0:
                symmetric.append(weight)
            else:
                antisymmetric.append(weight)
        elif entries > partner:
            pairs.append(WeightVector(entries))
    return BoxClassification(tuple(symmetric), tuple(antisymmetric), tuple(pairs))
