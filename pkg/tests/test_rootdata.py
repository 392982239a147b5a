from itertools import combinations_with_replacement

import pytest

from grassgw.errors import NotDominant
from grassgw.rootdata import (
    RootDatumA,
    SignClass,
    WeightVector,
    classify_box,
    dual_weight,
    is_dominant,
    is_self_dual,
    pair_two_rho_check,
    shift_entries,
    sign_of,
    weight_from_partition,
)
from grassgw.young import Frame, dual, enumerate_partitions


def dominant_box(rank, bound):
    for entries in combinations_with_replacement(range(bound, -bound - 1, -1), rank):
        yield WeightVector(entries)


def test_is_dominant():
    assert is_dominant(WeightVector((2, 0, -1)))
    assert not is_dominant(WeightVector((0, 1)))
    assert is_dominant(WeightVector((3, 3, 3)))


def test_dual_weight():
    assert dual_weight(WeightVector((2, 0, -1))) == WeightVector((1, 0, -2))
    assert dual_weight(WeightVector((0, 0))) == WeightVector((0, 0))
    assert dual_weight(WeightVector((1, 1, 1))) == WeightVector((-1, -1, -1))
    with pytest.raises(NotDominant):
        dual_weight(WeightVector((0, 1)))


def test_self_dual():
    assert is_self_dual(WeightVector((1, 0, -1)))
    assert not is_self_dual(WeightVector((1, 0, 0)))
    # the fixed-point shape: mirror-negated entries
    assert is_self_dual(WeightVector((5, 2, 0, -2, -5)))


def test_two_rho_check_coefficients():
    for n in range(1, 8):
        datum = RootDatumA(n)
        coroots = datum.positive_coroots()
        assert len(coroots) == n * (n - 1) // 2
        expected = tuple(n + 1 - 2 * (i + 1) for i in range(n))
        assert datum.two_rho_check() == expected
        summed = tuple(sum(v[i] for v in coroots) for i in range(n))
        assert summed == expected


def test_pairing_examples():
    assert pair_two_rho_check(WeightVector((1, -1))) == 2
    assert pair_two_rho_check(WeightVector((0, 0, 0))) == 0
    assert pair_two_rho_check(WeightVector((1, 0, -1))) == 4


def test_sign_of():
    assert sign_of(WeightVector((1, 0, -1))) is SignClass.SYMMETRIC
    assert sign_of(WeightVector((1, 0, 0))) is SignClass.NOT_SELF_DUAL
    assert sign_of(WeightVector((0,))) is SignClass.SYMMETRIC
    with pytest.raises(NotDominant):
        sign_of(WeightVector((0, 1)))


@pytest.mark.parametrize("rank", range(1, 6))
def test_box_sweep_type_a(rank):
    """Over boxes of type-A weights: duality is an involution preserving the
    pairing, and no self-dual weight is anti-symmetric."""
    for w in dominant_box(rank, 4):
        image = dual_weight(w)
        assert is_dominant(image)
        assert dual_weight(image) == w
        assert pair_two_rho_check(image) == pair_two_rho_check(w)
        assert sum(image.entries) == -sum(w.entries)
        assert sign_of(w) is not SignClass.ANTI_SYMMETRIC


def test_classify_box_rank1():
    sym, antisym, pairs = classify_box(1, 1)
    assert sym == (WeightVector((0,)),)
    assert antisym == ()
    assert pairs == (WeightVector((1,)),)


def test_classify_box_rank2():
    sym, antisym, pairs = classify_box(2, 1)
    assert set(sym) == {WeightVector((0, 0)), WeightVector((1, -1))}
    assert antisym == ()
    assert set(pairs) == {WeightVector((1, 1)), WeightVector((1, 0))}


def test_classify_box_zero_weight_and_coverage():
    for rank in (1, 2, 3):
        sym, antisym, pairs = classify_box(rank, 2)
        assert WeightVector((0,) * rank) in sym
        # the three lists are disjoint and cover every orbit in the box
        box = list(dominant_box(rank, 2))
        listed = set(sym) | set(antisym) | set(pairs)
        assert len(listed) == len(sym) + len(antisym) + len(pairs)
        covered = set(sym) | set(antisym)
        for w in pairs:
            partner = dual_weight(w)
            assert w.entries > partner.entries  # representative is the lex-larger member
            covered |= {w, partner}
        assert covered == set(box)


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("e", (2, 4, 6))
def test_shifted_partition_duality(d, e):
    """Dualizing the determinant-shifted weight matches the frame dual."""
    frame = Frame(d, e)
    for alpha in enumerate_partitions(frame):
        shifted = shift_entries(weight_from_partition(alpha, frame), -frame.e_half)
        expected = shift_entries(weight_from_partition(dual(alpha, frame), frame), -frame.e_half)
        assert dual_weight(shifted) == expected
