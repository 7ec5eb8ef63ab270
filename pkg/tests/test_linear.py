"""Weight distributions, duals, projectivity, and minimality."""

import pytest

from anticodes import linear
from anticodes.gf import field_make
from anticodes.linear import (
    CapExceeded, CodeError, LinearCode, WeightDistribution,
)
from anticodes.constructions import fixed_weight_anticode, rs_code, simplex

F2 = field_make(2, 1)


def test_weight_distribution_validation():
    WeightDistribution(2, 7, 3, {0: 1, 4: 7})
    with pytest.raises(CodeError):
        WeightDistribution(2, 7, 3, {0: 1, 4: 6})       # bad total
    with pytest.raises(CodeError):
        WeightDistribution(2, 7, 3, {0: 2, 4: 6})       # A_0 != 1
    with pytest.raises(CodeError):
        WeightDistribution(2, 7, 3, {0: 1, 9: 7})       # weight > n


def test_distribution_accessors():
    wd = WeightDistribution(2, 7, 3, {0: 1, 3: 4, 4: 3})
    assert wd.nonzero_weights() == [3, 4]
    assert (wd.min_weight, wd.max_weight, wd.num_weights) == (3, 4, 2)
    assert wd.to_dict() == {"0": 1, "3": 4, "4": 3}


def test_generator_must_be_full_rank():
    with pytest.raises(CodeError):
        LinearCode.from_generator(F2, [[1, 0, 1], [1, 0, 1]])


def test_simplex_distribution():
    wd = simplex(2, 3).weight_distribution()
    assert wd.counts == {0: 1, 4: 7}
    wd = simplex(3, 3).weight_distribution()
    assert wd.counts == {0: 1, 9: 26}


@pytest.mark.parametrize("code", [
    simplex(2, 4), simplex(3, 3), rs_code(4, 3), rs_code(5, 4),
    fixed_weight_anticode(7, 4),
])
def test_two_enumeration_routes_agree(code):
    assert code.weight_distribution() == code.weight_distribution_by_classes()


def test_codeword_count():
    code = rs_code(4, 2)
    words = code.codewords()
    assert len(words) == 16
    assert len(set(words)) == 16


def test_dual_of_simplex_is_hamming():
    code = simplex(2, 3)
    dual = code.dual_code()
    assert (dual.n, dual.k) == (7, 4)
    assert dual.min_distance() == 3
    assert code.dual_distance() == 3
    assert code.is_projective()


def test_projectivity_column_test():
    # repeated column
    code = LinearCode.from_generator(F2, [[1, 1, 0], [0, 0, 1]])
    assert not code.is_projective()
    # scalar-multiple columns over GF(3)
    F3 = field_make(3, 1)
    code = LinearCode.from_generator(F3, [[1, 2, 0], [0, 0, 1]])
    assert not code.is_projective()


def test_minimality_witness():
    # support of (0,0,1) is strictly inside the support of (1,1,1)
    code = LinearCode.from_generator(F2, [[1, 1, 0], [0, 0, 1]])
    ok, witness = code.is_minimal_exact()
    assert not ok
    covered, covering = witness
    small = {i for i, x in enumerate(covered) if x}
    large = {i for i, x in enumerate(covering) if x}
    assert small < large


def test_ab_criterion_implies_minimal():
    for code in (simplex(2, 4), simplex(3, 3), rs_code(4, 3)):
        if code.ab_criterion():
            ok, witness = code.is_minimal_exact()
            assert ok and witness is None


def test_enumeration_cap(monkeypatch):
    code = simplex(2, 4)
    monkeypatch.setattr(linear, "ENUM_CAP", 8)
    with pytest.raises(CapExceeded):
        code.weight_distribution()


def test_minimality_cap(monkeypatch):
    monkeypatch.setattr(linear, "MINIMAL_CAP", 8)
    with pytest.raises(CapExceeded):
        simplex(2, 4).is_minimal_exact()


def test_from_columns_records_ambient_points():
    cols = [(1, 0, 0), (0, 1, 0), (1, 1, 0)]
    code = LinearCode.from_columns(F2, cols)
    assert code.n == 3
    assert code.k == 2                      # rank, not ambient dimension
    dim, pts = code.column_points
    assert dim == 3 and list(pts) == cols
