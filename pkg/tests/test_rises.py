import pytest

from fpfposet.bruhat import bruhat_poset, brute_covers
from fpfposet.errors import UnsuitableRiseError
from fpfposet.involution import enumerate_fpf, length, maximum, minimum, parse
from fpfposet.rises import (
    Label,
    Rise,
    RiseKind,
    apply_ct,
    classify_rises,
    crossing_rise_audit,
    fpf_poset,
    label_key,
    rise_covers,
    suitable_rises,
)


def test_bottom_suitable_rises():
    rises = suitable_rises(minimum(3))
    assert [(r.i1, r.i2, r.kind) for r in rises] == [(1, 4, RiseKind.ED), (3, 6, RiseKind.ED)]


def test_top_has_no_suitable_rises():
    for n in range(1, 5):
        assert suitable_rises(maximum(n)) == []


def test_noncrossing_ee_rise():
    x = parse("(1,5)(2,6)(3,4)")
    r = next(r for r in classify_rises(x) if (r.i1, r.i2) == (1, 2))
    assert r.kind is RiseKind.EE_NONCROSSING and r.free and r.suitable


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rise_invariants(n):
    for x in enumerate_fpf(n):
        pairs = set()
        for r in classify_rises(x):
            i, j = r.i1, r.i2
            assert i < j and x(i) < x(j)
            pairs.add((i, j))
            free = not any(x(i) < x(k) < x(j) for k in range(i + 1, j))
            assert r.free == free
            if r.kind is RiseKind.EE_NONCROSSING:
                assert i < j < x(i) < x(j)
            elif r.kind is RiseKind.EE_CROSSING:
                assert i < x(i) < j < x(j)
            elif r.kind is RiseKind.ED:
                assert x(i) > i and x(j) < j
        m = 2 * n
        assert pairs == {(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1) if x(i) < x(j)}


def test_apply_ct_examples():
    j6 = minimum(3)
    assert str(apply_ct(j6, Rise(1, 4, RiseKind.ED, True))) == "(1,3)(2,4)(5,6)"
    assert str(apply_ct(j6, (3, 6))) == "(1,2)(3,5)(4,6)"
    assert str(apply_ct(parse("(1,5)(2,6)(3,4)"), (1, 2))) == "(1,6)(2,5)(3,4)"


@pytest.mark.parametrize("x, rise, message", [
    ("(1,2)(3,4)(5,6)", (2, 1), "positions"),
    ("(1,2)(3,4)(5,6)", (1, 2), "not a rise"),
    ("(1,2)(3,4)(5,6)", (1, 6), "not free"),
    ("(1,2)(3,4)(5,6)", (1, 3), "ee_crossing"),
    ("(1,2)(3,4)(5,6)", (2, 4), "dd"),
])
def test_apply_ct_rejects_unsuitable(x, rise, message):
    with pytest.raises(UnsuitableRiseError, match=message):
        apply_ct(parse(x), rise)


def test_apply_ct_rejects_wrong_kind_tag():
    with pytest.raises(UnsuitableRiseError, match="has kind"):
        apply_ct(minimum(3), Rise(1, 4, RiseKind.EE_NONCROSSING, True))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_apply_ct_raises_length_by_one(n):
    for x in enumerate_fpf(n):
        results = [apply_ct(x, r) for r in suitable_rises(x)]
        assert len(set(results)) == len(results)
        assert all(length(y) == length(x) + 1 for y in results)


def test_rise_covers_examples():
    assert rise_covers(minimum(3)) == {(parse("(1,3)(2,4)(5,6)"), Label(1, 4)),
                                       (parse("(1,2)(3,5)(4,6)"), Label(3, 6))}
    assert rise_covers(maximum(3)) == set()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_oracle_equivalence_exhaustive(n):
    for x in enumerate_fpf(n):
        assert {y for y, _ in rise_covers(x)} == brute_covers(x)


def test_oracle_equivalence_n5_spot():
    xs = enumerate_fpf(5)
    for x in xs[::37]:
        assert {y for y, _ in rise_covers(x)} == brute_covers(x)


def test_oracle_equivalence_n5_full_poset():
    assert fpf_poset(5).edge_set() == bruhat_poset(5).edge_set()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_no_crossing_rise_counterexamples(n):
    assert [x for x in enumerate_fpf(n) if crossing_rise_audit(x)] == []


def test_label_key():
    labs = [Label(1, 2), Label(2, 3), Label(1, 5)]
    assert sorted(labs, key=label_key("standard")) == [(1, 2), (1, 5), (2, 3)]
    assert sorted(labs, key=label_key("reversed")) == [(2, 3), (1, 5), (1, 2)]
    with pytest.raises(ValueError):
        label_key("sideways")
    assert str(Label(1, 4)) == "(1,4)"
