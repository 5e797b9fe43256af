import pytest

from fpfposet.ds import (
    ComparisonReport,
    build_ds_poset,
    compare_posets,
    ds_upper_covers,
    interchanges,
    type_rise_mismatches,
)
from fpfposet.errors import SubposetViolationError
from fpfposet.involution import ds_length, enumerate_fpf, length, maximum, minimum, parse
from fpfposet.poset import GradedPoset, rank_genfun
from fpfposet.rises import fpf_poset

MISSING = ("(1,2)(3,6)(4,5)", "(1,4)(2,5)(3,6)")


def test_upper_covers_examples():
    assert parse("(1,3)(2,4)(5,6)") in ds_upper_covers(minimum(3))
    assert parse(MISSING[1]) not in ds_upper_covers(parse(MISSING[0]))
    assert ds_upper_covers(maximum(3)) == set()


def test_raw_interchange_that_needs_resorting_is_dropped():
    # swapping b_1=2 and a_3=4 in [1,2][3,6][4,5] gives [1,4][3,6][2,5], not canonical
    results = {y for _, y in interchanges(parse(MISSING[0]))}
    assert parse(MISSING[1]) not in results


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_covers_raise_length_by_one(n):
    for x in enumerate_fpf(n):
        for y in ds_upper_covers(x):
            assert ds_length(y) == ds_length(x) + 1 == length(y)


def test_n2_is_the_three_chain():
    P = build_ds_poset(2)
    assert len(P) == 3 and P.n_edges == 2
    assert P.edge_set() == fpf_poset(2).edge_set()


def test_n3_structure():
    P = build_ds_poset(3)
    assert len(P) == 15
    assert P.n_edges == fpf_poset(3).n_edges - 1
    assert rank_genfun(P) == [1, 2, 3, 3, 3, 2, 1]


def test_compare_n3():
    rep = compare_posets(3)
    assert rep.edges_in_f_not_ds == [MISSING]
    assert rep.edges_in_ds_not_f == []
    assert rep.elements_equal and rep.rank_function_equal
    assert (rep.f_edges, rep.ds_edges) == (26, 25)


def test_compare_n2():
    rep = compare_posets(2)
    assert rep.edges_in_f_not_ds == [] and rep.edges_in_ds_not_f == []


@pytest.mark.parametrize("n, missing", [(4, 19), (5, 312)])
def test_compare_larger(n, missing):
    rep = compare_posets(n)
    assert rep.edges_in_ds_not_f == []
    assert len(rep.edges_in_f_not_ds) == missing
    assert rep.rank_function_equal


@pytest.mark.parametrize("n", [2, 3, 4])
def test_types_match_rise_kinds(n):
    assert type_rise_mismatches(n) == []


def test_strict_mode_raises_on_violation():
    F = fpf_poset(3)
    # drop an F edge that DS also has, keeping the poset well formed
    DS = build_ds_poset(3)
    pairs = [(F.index(a), F.index(b)) for a, b in sorted(DS.edge_set())]
    i, j = next((i, j) for i, j in pairs if len(F.lower_covers[j]) > 1)
    covers = [list(c) for c in F.covers]
    covers[i].remove(j)
    broken = GradedPoset(F.elements, covers, F.rank)
    with pytest.raises(SubposetViolationError):
        compare_posets(3, F=broken)
    rep = compare_posets(3, F=broken, strict=False)
    assert rep.edges_in_ds_not_f == [(str(F.elements[i]), str(F.elements[j]))]


def test_report_round_trip():
    rep = compare_posets(3)
    assert ComparisonReport.from_dict(rep.to_dict()) == rep
