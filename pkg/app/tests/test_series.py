import json

import pytest

from src.crystal import CapMismatchError
from src.crystal.series import (
    SIDES,
    collapses_to_one,
    compare,
    enumerate_crystal,
    exponents_up_to,
    is_positive,
    kostant,
    kostant_check,
    lusztig_side,
    product_side,
    series_to_json,
    series_to_tsv,
    string_side,
    sum_side,
    verify_all,
)
from src.crystal.tableaux import format_tableau, highest, weight_neg
from src.models.roots import RootVector
from src.models.series import TruncatedSeries, UPoly
from tests.support import RANK2_DEPTH_COUNTS, get_test_settings

SCALE = get_test_settings()
ONE_MINUS_U = UPoly(coeffs=(1, -1))


# --- UPoly / TruncatedSeries ---------------------------------------------------

def test_upoly_canonical_form_and_arithmetic():
    assert UPoly(coeffs=(1, 0, 0)).coeffs == (1,)
    assert UPoly(coeffs=(0, 0)).is_zero()
    assert UPoly.one_minus_u(2).coeffs == (1, -2, 1)
    assert ONE_MINUS_U * ONE_MINUS_U == UPoly.one_minus_u(2)
    assert ONE_MINUS_U ** 3 == UPoly.one_minus_u(3)
    assert (ONE_MINUS_U - ONE_MINUS_U).is_zero()
    assert UPoly.one_minus_u(3).evaluate(1) == 0
    assert UPoly.one_minus_u(3).evaluate(0) == 1


def test_upoly_text():
    assert str(ONE_MINUS_U) == "1 - u"
    assert str(UPoly(coeffs=(2, -3, 1))) == "2 - 3*u + u^2"
    assert UPoly().to_text() == "0"
    assert UPoly(coeffs=(1, -1)).to_text() == "1,-1"


def test_one_minus_u_basis():
    assert UPoly.one_minus_u(2).to_one_minus_u_basis() == (0, 0, 1)
    assert UPoly.constant(1).to_one_minus_u_basis() == (1,)
    p = ONE_MINUS_U + UPoly.one_minus_u(2)
    assert p.to_one_minus_u_basis() == (0, 1, 1)


def test_truncated_series_rejects_terms_above_cap():
    with pytest.raises(ValueError):
        TruncatedSeries(rank=1, cap=1, terms={(2,): UPoly.constant(1)})
    with pytest.raises(ValueError):
        TruncatedSeries(rank=1, cap=1, terms={(1,): UPoly()})


def test_truncated_series_multiplication_truncates():
    x = TruncatedSeries.from_terms(1, 2, {(0,): UPoly.constant(1), (1,): UPoly.constant(1)})
    square = x * x
    assert square.coefficient((2,)) == UPoly.constant(1)
    assert square.coefficient((1,)) == UPoly.constant(2)
    cube = square * x
    assert set(cube.terms) == {(0,), (1,), (2,)}


# --- product side ------------------------------------------------------------

def test_product_side_rank_one():
    series = product_side(1, 3)
    assert series.coefficient((0,)) == UPoly.constant(1)
    for m in (1, 2, 3):
        assert series.coefficient((m,)) == ONE_MINUS_U
    assert len(series.terms) == 4


@pytest.mark.parametrize("r", [1, 2, 3])
def test_product_side_cap_zero_is_one(r):
    assert product_side(r, 0) == TruncatedSeries.one(r, 0)


def test_product_side_mixed_coefficient():
    assert product_side(2, 2).coefficient((1, 1)) == ONE_MINUS_U + UPoly.one_minus_u(2)


# --- enumeration -------------------------------------------------------------

def test_enumerate_depth_one():
    assert [format_tableau(b) for b in enumerate_crystal(2, 1)] == ["*/*", "*/3", "2/*"]


def test_enumerate_rank_two_depth_four_layers():
    found = enumerate_crystal(2, 4)
    assert len(found) == 22
    heights = [sum(weight_neg(b).coeffs) for b in found]
    assert tuple(heights.count(d) for d in range(5)) == RANK2_DEPTH_COUNTS
    assert heights == sorted(heights)


def test_enumerate_rank_one():
    assert len(enumerate_crystal(1, 5)) == 6
    assert enumerate_crystal(3, 0) == [highest(3)]


@pytest.mark.parametrize("r, D", [(1, 5), (2, 5), (3, 4)])
def test_strategies_agree(r, D):
    assert enumerate_crystal(r, D, "bfs") == enumerate_crystal(r, D, "direct")


@pytest.mark.slow
@pytest.mark.parametrize("r", SCALE.exhaustive_ranks)
def test_strategies_agree_exhaustive(r):
    D = SCALE.exhaustive_depth
    assert enumerate_crystal(r, D, "bfs") == enumerate_crystal(r, D, "direct")


def test_enumerate_rejects_unknown_strategy_and_negative_cap():
    with pytest.raises(ValueError):
        enumerate_crystal(2, 2, "dfs")
    with pytest.raises(ValueError):
        enumerate_crystal(2, -1)


# --- sum side and comparison -------------------------------------------------

def test_sum_side_coefficients():
    series = sum_side(2, 4)
    assert series.coefficient((0, 0)) == UPoly.constant(1)
    assert series.coefficient((1, 1)) == ONE_MINUS_U + UPoly.one_minus_u(2)
    assert series.coefficient(RootVector(coeffs=(2, 2))) == ONE_MINUS_U + UPoly.one_minus_u(2) + UPoly.one_minus_u(3)


@pytest.mark.parametrize("r", [1, 2])
def test_identity_holds(r):
    assert compare(product_side(r, 6), sum_side(r, 6)).matched


@pytest.mark.slow
@pytest.mark.parametrize("r, D", [(1, 8), (2, 6), (3, 5)])
def test_identity_holds_on_every_side(r, D):
    product = product_side(r, D)
    assert compare(product, sum_side(r, D)).matched
    assert compare(product, string_side(r, D)).matched
    assert compare(product, lusztig_side(r, D)).matched


def test_compare_reports_single_corruption():
    product = product_side(2, 3)
    terms = dict(sum_side(2, 3).terms)
    terms[(1, 1)] = terms[(1, 1)] + UPoly.constant(1)
    report = compare(product, TruncatedSeries.from_terms(2, 3, terms))
    assert not report.matched
    assert len(report.mismatches) == 1
    assert report.mismatches[0].exponent == (1, 1)


def test_compare_rejects_different_caps():
    with pytest.raises(CapMismatchError):
        compare(product_side(2, 3), sum_side(2, 4))


# --- specializations ---------------------------------------------------------

def test_kostant_examples():
    assert kostant(2, (1, 1)) == 2
    assert kostant(2, (2, 2)) == 3
    assert kostant(3, (0, 0, 0)) == 1
    assert kostant(3, RootVector(coeffs=(1, 1, 1))) == 4
    assert kostant(2, (-1, 1)) == 0


def test_exponents_up_to_is_graded():
    exponents = list(exponents_up_to(2, 2))
    assert exponents == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


@pytest.mark.parametrize("r, D", [(1, 6), (2, 6), (3, 4)])
def test_u_zero_gives_kostant_partition_function(r, D):
    assert kostant_check(sum_side(r, D)).passed


@pytest.mark.parametrize("r, D", [(1, 6), (2, 6), (3, 4)])
def test_u_one_collapses_and_coefficients_are_positive(r, D):
    series = sum_side(r, D)
    assert collapses_to_one(series)
    assert is_positive(series)


@pytest.mark.slow
@pytest.mark.parametrize("r", SCALE.exhaustive_ranks)
def test_specializations_exhaustive(r):
    series = sum_side(r, SCALE.verify_depth)
    assert kostant_check(series).passed
    assert collapses_to_one(series)


def test_verify_all_report():
    report = verify_all(2, 4, "bfs")
    assert report.matched
    assert set(report.sides) == set(SIDES)
    assert report.elements == 22
    assert report.kostant.passed
    assert report.mismatch_count() == 0


# --- serialization -----------------------------------------------------------

def test_series_tsv():
    assert series_to_tsv(product_side(1, 2)) == "0\t1\n1\t1,-1\n2\t1,-1\n"


def test_series_json():
    payload = json.loads(series_to_json(product_side(1, 1)))
    assert payload == {
        "rank": 1,
        "cap": 1,
        "terms": [
            {"exponent": [0], "coefficients": [1]},
            {"exponent": [1], "coefficients": [1, -1]},
        ],
    }
