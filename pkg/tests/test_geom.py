from math import pi, sqrt

import pytest
from hypothesis import given

from arbelos import geom, num
from arbelos.err import ChordOutOfRange, NegativeRadius, NonPositiveRadius
from arbelos.norm import Branch

from .strategies import configs as valid_configs


def test_validate_config():
    assert geom.validate_config(2, 1) == geom.ArbelosConfig(2.0, 1.0)
    assert geom.validate_config(1, 0).T == 0
    assert geom.validate_config(7, 7).T == 7


@pytest.mark.parametrize(
    "R, T, exc",
    [
        (1, 1.0000001, ChordOutOfRange),
        (1, -0.1, ChordOutOfRange),
        (1, float("nan"), ChordOutOfRange),
        (1, float("inf"), ChordOutOfRange),
        (0, 0, NonPositiveRadius),
        (-1, 0.5, NonPositiveRadius),
        (float("inf"), 1, NonPositiveRadius),
        (float("nan"), 1, NonPositiveRadius),
    ],
)
def test_validate_config_rejects(R, T, exc):
    with pytest.raises(exc):
        geom.validate_config(R, T)


def test_knife_area_examples():
    assert geom.knife_area(geom.validate_config(3, 0)) == 0
    assert geom.knife_area(geom.validate_config(1, 1)) == pytest.approx(pi / 4)
    assert geom.knife_area(geom.validate_config(2, 1)) == pytest.approx(0.7853982)


def test_knife_area_ignores_R():
    small, large = geom.validate_config(1, 0.5), geom.validate_config(100, 0.5)
    assert geom.knife_area(small) == geom.knife_area(large)


def test_chord_from_radii():
    assert geom.chord_from_radii(0.9, 0.1) == pytest.approx(0.6, rel=1e-15)
    assert geom.chord_from_radii(0, 3) == 0
    assert geom.chord_from_radii(4, 1) == 4


def test_chord_from_radii_rejects_negative():
    with pytest.raises(NegativeRadius):
        geom.chord_from_radii(-0.1, 1)
    with pytest.raises(NegativeRadius):
        geom.chord_from_radii(1, -1e-300)


def test_radii_from_chord_examples():
    assert geom.radii_from_chord(geom.validate_config(2, 2)) == (1, 1)

    R1, R2 = geom.radii_from_chord(geom.validate_config(1, 0.6))
    assert (R1, R2) == pytest.approx((0.9, 0.1), rel=1e-12)

    config = geom.validate_config(2, 1)
    R1, R2 = geom.radii_from_chord(config, Branch.PLUS)
    assert (R1, R2) == pytest.approx((1.8660254, 0.1339746), abs=1e-7)
    assert num.approx(4 * R1 * R2, 1)
    assert geom.radii_from_chord(config, Branch.MINUS) == (R2, R1)


def test_semicircle_areas_examples():
    A1, A2 = geom.semicircle_areas(geom.validate_config(1, 0.6))
    assert A1 == pytest.approx(0.405 * pi, rel=1e-12)
    assert A2 == pytest.approx(0.005 * pi, rel=1e-12)

    A1, A2 = geom.semicircle_areas(geom.validate_config(1, 1))
    assert A1 == A2 == pytest.approx(pi / 8)

    A1, A2 = geom.semicircle_areas(geom.validate_config(2, 1))
    assert (A1, A2) == pytest.approx((5.4695926, 0.0281945), abs=1e-7)
    assert (A1, A2) == pytest.approx((pi / 8 * (7 + 4 * sqrt(3)), pi / 8 * (7 - 4 * sqrt(3))))
    assert num.approx(A1 + A2, 7 * pi / 4)


def test_area_decomposition_examples():
    report = geom.area_decomposition(geom.validate_config(1, 0.6))
    expected = (pi / 2, 0.405 * pi, 0.005 * pi, 0.09 * pi)
    assert report == pytest.approx(expected, rel=1e-12)

    report = geom.area_decomposition(geom.validate_config(1, 0))
    assert report == (pi / 2, pi / 2, 0, 0)

    scaled = geom.area_decomposition(geom.validate_config(3, 1.8))
    unit = geom.area_decomposition(geom.validate_config(1, 0.6))
    assert scaled == pytest.approx(unit.scaled(9), rel=1e-12)


def test_knife_formula(configs):
    for config in configs:
        report = geom.area_decomposition(config)
        assert num.approx(report.area_knife, pi * config.T**2 / 4)
        # the difference cancels, so compare on the scale of A(C)
        rest = report.area_C - report.area_C1 - report.area_C2
        assert num.approx(rest, report.area_knife, abs=1e-12 * report.area_C)


def test_conservation(configs):
    for config in configs:
        report = geom.area_decomposition(config)
        total = report.area_C1 + report.area_C2 + report.area_knife
        assert num.approx(total, pi / 2 * config.R**2)
        assert num.approx(
            report.area_C1 + report.area_C2,
            pi / 2 * config.R**2 - pi / 4 * config.T**2,
        )


def test_chord_radii_identity(configs):
    for config in configs:
        for branch in Branch:
            radii = geom.radii_from_chord(config, branch)
            assert num.approx(radii.R1 + radii.R2, config.R)
            assert num.approx(4 * radii.R1 * radii.R2, config.T**2)
            assert geom.squares_identity(config, radii) <= 1e-12 * config.R**2
        assert num.approx(geom.chord_from_radii(*geom.radii_from_chord(config)), config.T)


def test_knife_area_from_radii(configs):
    for config in configs:
        radii = geom.radii_from_chord(config)
        assert num.approx(geom.area_knife_from_radii(*radii), geom.knife_area(config))


def test_scale_covariance(configs):
    for config in configs[:100]:
        report = geom.area_decomposition(config)
        for factor in (1e-6, 1.0, 1e6):
            scaled = geom.area_decomposition(
                geom.validate_config(factor * config.R, factor * config.T)
            )
            for got, want in zip(scaled, report.scaled(factor**2)):
                assert num.approx(got, want, abs=0)


@given(valid_configs())
def test_branch_ordering(config):
    R1, R2 = geom.radii_from_chord(config, Branch.PLUS)
    assert R1 >= config.R / 2 >= R2
    assert geom.radii_from_chord(config, Branch.MINUS) == (R2, R1)


@given(valid_configs())
def test_areas_nonnegative_and_ordered(config):
    report = geom.area_decomposition(config)
    assert min(report) >= 0
    assert report.area_C1 >= report.area_C2
