"""Partitions in a rectangular frame and their duality combinatorics.

A partition fits in the (d x e)-frame when it has at most d nonzero parts,
each at most e.  The frame carries three involutions that drive everything
downstream: transposition (reflect the diagram), duality (rotate the
diagram 180 degrees and complement it inside the frame), and reversal of
the binary lattice-path encoding.  Half partitions are those of degree
d*e/2, so that a partition and its dual have equal degree.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import FrameViolation, MalformedSequence, OddFrame


class Partition:
    """A weakly decreasing tuple of non-negative integers.

    Trailing zeros are allowed; they matter for frame padding but not for
    equality, which compares trimmed part tuples.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part in {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        self.parts = parts

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def trimmed(self) -> tuple[int, ...]:
        parts = self.parts
        n = len(parts)
        while n and parts[n - 1] == 0:
            n -= 1
        return parts[:n]

    def padded(self, length: int) -> tuple[int, ...]:
        """Parts adjusted to exactly `length` entries by adding or trimming zeros."""
        trimmed = self.trimmed()
        if len(trimmed) > length:
            raise ValueError(f"{self} has more than {length} nonzero parts")
        return trimmed + (0,) * (length - len(trimmed))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.trimmed() == other.trimmed()

    def __hash__(self) -> int:
        return hash(self.trimmed())

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.trimmed()) + ")"


@dataclass(frozen=True)
class Frame:
    """A d-row, e-column bounding box for partitions."""

    d: int
    e: int

    def __post_init__(self):
        if self.d < 1 or self.e < 1:
            raise ValueError(f"frame sides must be positive, got {self.d}x{self.e}")

    @property
    def size(self) -> int:
        return self.d * self.e

    @property
    def d_half(self) -> int:
        return self.d // 2

    @property
    def e_half(self) -> int:
        if self.e % 2:
            raise OddFrame(f"frame {self.d}x{self.e} has an odd number of columns")
        return self.e // 2

    @property
    def half_degree(self) -> int:
        """The degree d*e/2 that a half partition must have; even frames only."""
        return self.d * self.e_half

    def transposed(self) -> "Frame":
        return Frame(self.e, self.d)


@dataclass(frozen=True)
class BinarySequence:
    """A finite string over {0,1}; the lattice-path encoding of a diagram."""

    bits: str

    def __post_init__(self):
        if set(self.bits) - {"0", "1"}:
            raise MalformedSequence(f"non-binary characters in {self.bits!r}")

    def __str__(self) -> str:
        return self.bits

    def __len__(self) -> int:
        return len(self.bits)


def contains(frame: Frame, alpha: Partition) -> bool:
    """True iff alpha has at most d nonzero parts, each at most e."""
    parts = alpha.trimmed()
    if len(parts) > frame.d:
        return False
    return not parts or parts[0] <= frame.e


def embed(alpha: Partition, frame: Frame) -> tuple[int, ...]:
    """Row widths of alpha padded to the frame's d rows; FrameViolation if it does not fit."""
    if not contains(frame, alpha):
        raise FrameViolation(f"{alpha} does not fit in a {frame.d}x{frame.e} frame")
    return alpha.padded(frame.d)


def degree(alpha: Partition) -> int:
    return alpha.degree


def transpose(alpha: Partition, frame: Frame) -> Partition:
    """Reflect the diagram across its main diagonal; the result lives in the (e x d)-frame."""
    rows = embed(alpha, frame)
    return Partition(sum(1 for r in rows if r >= j) for j in range(1, frame.e + 1))


def dual(alpha: Partition, frame: Frame) -> Partition:
    """Complement of the 180-degree rotation of the diagram inside the frame.

    Entrywise: reverse the padded rows and subtract each from e.  The dual
    of a degree-i partition has degree d*e - i, and dual is an involution.
    """
    rows = embed(alpha, frame)
    return Partition(frame.e - r for r in reversed(rows))


def is_half_partition(alpha: Partition, frame: Frame) -> bool:
    """True iff alpha's degree is d*e/2, i.e. alpha and its dual have equal degree."""
    target = frame.half_degree
    if not contains(frame, alpha):
        raise FrameViolation(f"{alpha} does not fit in a {frame.d}x{frame.e} frame")
    return alpha.degree == target


def is_symmetric(alpha: Partition, frame: Frame) -> bool:
    """True iff alpha equals its dual; implies alpha is a half partition."""
    if frame.e % 2:
        raise OddFrame(f"frame {frame.d}x{frame.e} has an odd number of columns")
    rows = embed(alpha, frame)
    return rows == tuple(frame.e - r for r in reversed(rows))


def to_binary(alpha: Partition, frame: Frame) -> BinarySequence:
    """Lattice-path encoding of the diagram's boundary, lower-left corner first.

    Walking from the frame's lower-left corner to its upper-right corner
    along the diagram's lower boundary, a 1 records one step right and a 0
    one step up, so the result has exactly e ones and d zeros.  The empty
    diagram encodes as d zeros followed by e ones.
    """
    rows = embed(alpha, frame)
    out = []
    x = 0
    for width in reversed(rows):
        out.append("1" * (width - x))
        out.append("0")
        x = width
    out.append("1" * (frame.e - x))
    return BinarySequence("".join(out))


def from_binary(bits: BinarySequence | str, d: int, e: int) -> Partition:
    """Inverse of to_binary; MalformedSequence unless length d+e with d zeros."""
    seq = bits.bits if isinstance(bits, BinarySequence) else BinarySequence(str(bits)).bits
    if len(seq) != d + e or seq.count("0") != d:
        raise MalformedSequence(
            f"need length {d + e} with {d} zeros, got {seq!r}"
        )
    widths = []
    x = 0
    for b in seq:
        if b == "1":
            x += 1
        else:
            widths.append(x)
    return Partition(reversed(widths))


def is_palindrome(bits: BinarySequence | str) -> bool:
    """True iff the sequence reads the same in both directions.

    For a partition in an even frame, the encoding is a palindrome exactly
    when the partition is symmetric.
    """
    seq = bits.bits if isinstance(bits, BinarySequence) else str(bits)
    return seq == seq[::-1]


def enumerate_partitions(frame: Frame, degree_filter: int | None = None) -> Iterator[Partition]:
    """Yield every partition in the frame exactly once, largest first.

    The order is decreasing lexicographic on the padded part tuples, which
    is the documented order for all reports and provenance labels.  With
    `degree_filter` only partitions of that degree appear (same relative
    order).  The total count over all degrees is binom(d+e, e).
    """
    d, e = frame.d, frame.e

    def rec(row: int, bound: int, left: int | None) -> Iterator[tuple[int, ...]]:
        if row == d:
            yield ()
            return
        slots = d - row
        if left is None:
            hi, lo = bound, 0
        else:
            hi = min(bound, left)
            lo = -(-left // slots)  # ceil: smaller values cannot reach the target
        for v in range(hi, lo - 1, -1):
            rest_left = None if left is None else left - v
            for rest in rec(row + 1, v, rest_left):
                yield (v,) + rest

    if degree_filter is not None and (degree_filter < 0 or degree_filter > d * e):
        return
    for parts in rec(0, e, degree_filter):
        yield Partition(parts)
