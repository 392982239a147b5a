"""Formal additive decompositions into GW(k) and K(k) summands.

The headline computation: for a Grassmannian Gr(d, d+e) of even dimension,
the decomposition consists of p = binom(d'+e', e') copies of GW^[n](k)
(one per symmetric half partition, d' = floor(d/2), e' = e/2) and
q = (binom(d+e, e) - p)/2 copies of K(k) (one per dual pair of
partitions).  The partial and middle-block computations expose the two
halves of that argument separately, and the equivariant variant applies
the same bookkeeping to a box of GL_n weights.

Provenance labels tie every summand unit to its indexing object, in a
fixed order: GW labels over symmetric half partitions in decreasing
lexicographic order, then K labels over dual pairs, lower-degree member
first in ascending degree blocks, middle-degree pairs last.
"""

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cache
from math import comb

from .errors import MalformedExpression, OddDimension, OddFrame, TooLarge, VerificationMismatch
from .rootdata import BoxClassification, classify_box, dual_weight
from .young import Frame, Partition, contains, dual, embed, enumerate_partitions, transpose

ENUMERATION_GUARD = 10**7  # provenance requires materializing the frame


class Theory(Enum):
    GW = "GW"
    K = "K"
    MIDDLE = "middle"  # an unresolved middle block, used by gw_partial


@dataclass(frozen=True)
class Summand:
    """A multiplicity of one theory; K summands carry no shift."""

    theory: Theory
    shift: int | None
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("stored summands have multiplicity >= 1")
        if self.theory is Theory.K and self.shift is not None:
            raise ValueError("K summands carry no shift")
        if self.theory is not Theory.K and self.shift is None:
            raise ValueError(f"{self.theory.value} summands need a shift")


@dataclass(frozen=True)
class SpectrumDecomposition:
    """A multiset of formal summands plus one provenance label per unit of rank."""

    summands: tuple[Summand, ...]
    provenance: tuple[str, ...]
    notes: tuple[str, ...] = ()

    def rank(self) -> int:
        return sum(s.multiplicity for s in self.summands)

    def multiplicity(self, theory: Theory) -> int:
        return sum(s.multiplicity for s in self.summands if s.theory is theory)

    def gw_counts(self) -> list[tuple[int, int]]:
        """(shift, count) for each GW summand, in stored order."""
        return [(s.shift, s.multiplicity) for s in self.summands if s.theory is Theory.GW]


def _fmt(parts: tuple[int, ...]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def _gw_label(shift: int, parts: tuple[int, ...]) -> str:
    return f"GW^[{shift}] <- {_fmt(parts)}"


def _pair_label(first: tuple[int, ...], second: tuple[int, ...]) -> str:
    return f"K <- {{{_fmt(first)},{_fmt(second)}}}"


def _partitions_by_degree(frame: Frame) -> dict[int, list[tuple[int, ...]]]:
    buckets: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for alpha in enumerate_partitions(frame):
        buckets[alpha.degree].append(alpha.parts)
    return buckets


def _dual_parts(parts: tuple[int, ...], frame: Frame) -> tuple[int, ...]:
    return tuple(frame.e - r for r in reversed(parts))


def _computation_frame(d: int, e: int) -> tuple[int, int]:
    if d < 1 or e < 1:
        raise ValueError(f"frame sides must be positive, got {d}x{e}")
    if (d * e) % 2:
        raise OddDimension(f"Gr({d},{d + e}) has odd dimension {d * e}; this case is open")
    return (d, e) if e % 2 == 0 else (e, d)


def grassmannian_counts(d: int, e: int) -> tuple[int, int]:
    """The pair (p, q) by the closed formulas, transposing odd-e frames first."""
    fd, fe = _computation_frame(d, e)
    p = comb(fd // 2 + fe // 2, fe // 2)
    q = (comb(fd + fe, fe) - p) // 2
    return p, q


def gw_grassmannian(d: int, e: int, shift: int = 0, *, with_provenance: bool = True) -> SpectrumDecomposition:
    """Full decomposition of GW^[shift](Gr(d, d+e)) for even-dimensional frames.

    Returns p copies of GW^[shift](k) and q copies of K(k).  When e is odd
    (and d even) the frame is transposed first; Gr(d, d+e) and Gr(e, d+e)
    are the same space.  Provenance enumerates the frame, so for large
    frames pass with_provenance=False and only the counts are produced.
    """
    fd, fe = _computation_frame(d, e)
    p, q = grassmannian_counts(d, e)
    notes = () if (fd, fe) == (d, e) else (f"odd column count: computed on the transposed {fd}x{fe} frame",)

    labels: tuple[str, ...] = ()
    if with_provenance:
        if comb(fd + fe, fe) > ENUMERATION_GUARD:
            raise TooLarge(
                f"{fd}x{fe} frame has {comb(fd + fe, fe)} partitions; pass with_provenance=False"
            )
        frame = Frame(fd, fe)
        mid = frame.half_degree
        buckets = _partitions_by_degree(frame)
        sym = [a for a in buckets[mid] if _dual_parts(a, frame) == a]
        gw_labels = [_gw_label(shift, a) for a in sym]
        k_labels = [
            _pair_label(a, _dual_parts(a, frame)) for i in range(mid) for a in buckets[i]
        ]
        k_labels += [
            _pair_label(a, _dual_parts(a, frame))
            for a in buckets[mid]
            if a > _dual_parts(a, frame)
        ]
        assert len(gw_labels) == p and len(k_labels) == q
        labels = tuple(gw_labels + k_labels)

    summands = (Summand(Theory.GW, shift, p),)
    if q:
        summands += (Summand(Theory.K, None, q),)
    return SpectrumDecomposition(summands, labels, notes)


def gw_partial(d: int, e: int, shift: int = 0) -> SpectrumDecomposition:
    """Duality-stable coarse decomposition: one unresolved middle block plus K blocks.

    The middle block collects the half partitions (degree d*e/2) as an
    unresolved marker summand; each lower degree i < d*e/2 contributes a K
    summand of multiplicity |(P_{d,e})_i|, its partitions paired with
    their duals of degree d*e - i.  Requires e even.
    """
    frame = Frame(d, e)
    mid = frame.half_degree
    buckets = _partitions_by_degree(frame)
    labels = [f"middle <- {_fmt(a)}" for a in buckets[mid]]
    summands = [Summand(Theory.MIDDLE, shift, len(buckets[mid]))]
    for i in range(mid):
        labels += [_pair_label(a, _dual_parts(a, frame)) for a in buckets[i]]
        summands.append(Summand(Theory.K, None, len(buckets[i])))
    return SpectrumDecomposition(tuple(summands), tuple(labels))


def gw_middle(d: int, e: int, shift: int = 0) -> SpectrumDecomposition:
    """Decomposition of the self-dual middle block of an even frame.

    One GW^[shift](k) per symmetric half partition and one K(k) per dual
    pair of asymmetric half partitions.  The duality pairing on asymmetric
    half partitions is fixed-point free, so their count is even.
    """
    frame = Frame(d, e)
    mid = frame.half_degree
    halves = [a.parts for a in enumerate_partitions(frame, degree_filter=mid)]
    sym = [a for a in halves if _dual_parts(a, frame) == a]
    asym = [a for a in halves if _dual_parts(a, frame) != a]
    assert len(asym) % 2 == 0
    labels = [_gw_label(shift, a) for a in sym]
    labels += [_pair_label(a, _dual_parts(a, frame)) for a in asym if a > _dual_parts(a, frame)]
    summands = (Summand(Theory.GW, shift, len(sym)),)
    if asym:
        summands += (Summand(Theory.K, None, len(asym) // 2),)
    return SpectrumDecomposition(summands, tuple(labels))


def resolve_middle(partial: SpectrumDecomposition, middle: SpectrumDecomposition) -> SpectrumDecomposition:
    """Substitute a computed middle block into a partial decomposition.

    The result matches gw_grassmannian summand-for-summand, provenance
    included.  Raises VerificationMismatch if the middle block does not
    account for exactly the marker's generators.
    """
    markers = [s for s in partial.summands if s.theory is Theory.MIDDLE]
    if len(markers) != 1:
        raise ValueError("partial decomposition needs exactly one middle marker")
    marker = markers[0]
    # the marker counts generators; a dual pair of generators is one K summand
    generators = middle.multiplicity(Theory.GW) + 2 * middle.multiplicity(Theory.K)
    if generators != marker.multiplicity:
        raise VerificationMismatch(
            f"middle block covers {generators} generators, marker has {marker.multiplicity}"
        )
    if any(s.theory is Theory.MIDDLE for s in middle.summands):
        raise ValueError("middle block is itself unresolved")
    gw_summands = tuple(s for s in middle.summands if s.theory is Theory.GW)
    k_total = partial.multiplicity(Theory.K) + middle.multiplicity(Theory.K)
    summands = gw_summands
    if k_total:
        summands += (Summand(Theory.K, None, k_total),)
    labels = [l for l in middle.provenance if l.startswith("GW^[")]
    labels += [l for l in partial.provenance if l.startswith("K <-")]
    labels += [l for l in middle.provenance if l.startswith("K <-")]
    return SpectrumDecomposition(summands, tuple(labels))


@cache
def recursive_degree_count(d: int, width: int, target: int) -> int:
    """Count partitions with at most d parts, each at most width, of the given degree.

    Conditions on the largest part j: the remainder is a partition with at
    most d-1 parts bounded by j and degree target - j.  Starting j at 0
    only matters for target 0; for positive targets this agrees with a sum
    from j = 1.
    """
    if target < 0:
        return 0
    if d == 0:
        return 1 if target == 0 else 0
    return sum(recursive_degree_count(d - 1, j, target - j) for j in range(min(width, target) + 1))


def count_half_partitions(d: int, e: int, method: str = "enumerate") -> int:
    """Half-partition counts by one of three routes.

    'enumerate' and 'recursive' count all half partitions (they agree);
    'closed_symmetric' is the binomial count of the symmetric ones.
    """
    frame = Frame(d, e)
    mid = frame.half_degree
    if method == "enumerate":
        return sum(1 for _ in enumerate_partitions(frame, degree_filter=mid))
    if method == "recursive":
        return recursive_degree_count(d, e, mid)
    if method == "closed_symmetric":
        return comb(frame.d_half + frame.e_half, frame.e_half)
    raise ValueError(f"unknown method {method!r}")


def decomposition_from_classification(classification: BoxClassification, shift: int = 0) -> SpectrumDecomposition:
    """Build the formal decomposition attached to a sign classification.

    Symmetric weights contribute GW^[shift](k), anti-symmetric ones
    GW^[shift+2](k), and each dual pair one K(k).
    """
    sym, antisym, pairs = classification
    labels = [_gw_label(shift, w.entries) for w in sym]
    labels += [_gw_label(shift + 2, w.entries) for w in antisym]
    labels += [_pair_label(w.entries, dual_weight(w).entries) for w in pairs]
    summands: tuple[Summand, ...] = ()
    if sym:
        summands += (Summand(Theory.GW, shift, len(sym)),)
    if antisym:
        summands += (Summand(Theory.GW, shift + 2, len(antisym)),)
    if pairs:
        summands += (Summand(Theory.K, None, len(pairs)),)
    return SpectrumDecomposition(summands, tuple(labels))


def equivariant_gw(n_rank: int, bound: int, shift: int = 0) -> SpectrumDecomposition:
    """Equivariant decomposition over the box of GL_n weights with entries in [-bound, bound].

    A finite window onto the weight-indexed sum; for GL_n the
    anti-symmetric class is empty, so no GW^[shift+2] summand appears.
    """
    return decomposition_from_classification(classify_box(n_rank, bound), shift)


@dataclass(frozen=True)
class BundleExpression:
    """Symbolic generator: exterior powers applied columnwise, times a determinant twist.

    The profile lists column heights of a diagram in the (d x e)-frame, so
    it lives in the transposed (e x d)-frame.
    """

    exterior_profile: Partition
    twist: int
    frame: Frame

    def __post_init__(self):
        if not contains(self.frame.transposed(), self.exterior_profile):
            raise MalformedExpression(
                f"profile {self.exterior_profile} does not fit the transposed {self.frame.e}x{self.frame.d} frame"
            )

    def profile_parts(self) -> tuple[int, ...]:
        return embed(self.exterior_profile, self.frame.transposed())

    def normalized(self) -> "BundleExpression":
        """Peel full columns (height d) off the profile into determinant twists."""
        parts = self.profile_parts()
        full = sum(1 for p in parts if p == self.frame.d)
        reduced = parts[full:] + (0,) * full
        return BundleExpression(Partition(reduced), self.twist + full, self.frame)


def dual_bundle(b: BundleExpression) -> BundleExpression:
    """Dual generator: dualize the profile in the transposed frame, twist -> -e - twist.

    The dual profile's degree is d*e minus the original's, and applying
    dual_bundle twice returns the original expression exactly.
    """
    profile = dual(b.exterior_profile, b.frame.transposed())
    return BundleExpression(profile, -b.frame.e - b.twist, b.frame)


@dataclass(frozen=True)
class BlockCheck:
    degree: int
    size: int
    passed: bool
    self_dual: bool


@dataclass(frozen=True)
class DualityReport:
    frame: Frame
    blocks: tuple[BlockCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(b.passed for b in self.blocks)


def middle_block_dual_check(frame: Frame) -> DualityReport:
    """Verify the twisted decomposition is stable under duality, block by block.

    For every partition of degree i, the dual of its generator twisted by
    -e' must be the twisted generator of the dual partition, in degree
    d*e - i.  The degree-d*e/2 block is the self-dual one.
    """
    mid = frame.half_degree
    buckets = _partitions_by_degree(frame)
    blocks = []
    for i in range(frame.size + 1):
        ok = True
        for parts in buckets[i]:
            alpha = Partition(parts)
            generator = BundleExpression(transpose(alpha, frame), -frame.e_half, frame)
            dualized = dual_bundle(generator)
            expected = transpose(dual(alpha, frame), frame)
            if (
                dualized.twist != -frame.e_half
                or dualized.exterior_profile != expected
                or sum(dualized.profile_parts()) != frame.size - i
            ):
                ok = False
        blocks.append(BlockCheck(i, len(buckets[i]), ok, i == mid))
    return DualityReport(frame, tuple(blocks))


def to_json_dict(dec: SpectrumDecomposition, *, d: int, e: int, shift: int) -> dict:
    """The stable JSON shape for a Grassmannian decomposition."""
    return {
        "d": d,
        "e": e,
        "shift": shift,
        "gw": [{"shift": s, "count": c} for s, c in dec.gw_counts()],
        "k": {"count": dec.multiplicity(Theory.K)},
        "provenance": list(dec.provenance),
    }
