import math

import pytest

import surfgrav


def test_strength_ratio():
    assert surfgrav.strength_ratio(3.0) == pytest.approx(16 / 9, rel=1e-12)
    assert surfgrav.strength_ratio(4.0) == pytest.approx(1.5625, rel=1e-15)
    assert surfgrav.strength_ratio(1e-20) == pytest.approx(1e40, rel=1e-10)


def test_forces():
    f_n = surfgrav.force("newton", 2.0)
    f_p = surfgrav.force("proposed", 2.0)
    assert f_n == pytest.approx(4.6681123750041464e-35, rel=1e-12)
    assert f_p / f_n == pytest.approx(surfgrav.strength_ratio(2.0), rel=1e-12)
    assert surfgrav.force("newton", 2.0, d_n_fm=0.0) == pytest.approx(surfgrav.force("proposed", 2.0, d_n_fm=0.0))
    assert surfgrav.potential("yukawa", 0.4) * 1e13 / 1.602176634 == pytest.approx(-51.851813753526763, rel=1e-9)


def test_planck_bound():
    with pytest.raises(surfgrav.DomainError):
        surfgrav.force("proposed", 1e-21)
    clamped = surfgrav.force("proposed", 1e-21, cutoff="clamp")
    assert clamped == pytest.approx(surfgrav.force("proposed", 1e-20), rel=1e-12)


def test_pion_and_detectable_range():
    assert surfgrav.pion_energy_mev(1.97327) == pytest.approx(100.0, abs=0.1)
    assert surfgrav.pion_range_fm(surfgrav.pion_energy_mev(1.4)) == pytest.approx(1.4, rel=1e-12)
    s = surfgrav.detectable_range_fm(0.01)
    assert surfgrav.strength_ratio(s) == pytest.approx(1.01, rel=1e-12)


def test_reproduce_paper():
    r = surfgrav.reproduce_paper()
    assert r["mode"] == "paper"
    summary = {row["key"]: row["value"] for row in r["summary"]}
    assert summary["ratio_at_4fm"] == 1.5625
    assert summary["well_depth_at_cutoff"] == pytest.approx(1.8672449500016586e-29, rel=1e-12)
    assert surfgrav.reproduce_paper("codata")["mode"] == "codata"


def test_bind_coulomb():
    b = surfgrav.bind("coulomb")
    assert b["converged"]
    assert b["node_count"] == 0
    r, u = b["r_fm"], b["u"]
    norm = sum(0.5 * (u[i] ** 2 + u[i - 1] ** 2) * (r[i] - r[i - 1]) for i in range(1, len(r)))
    assert norm == pytest.approx(1.0, rel=1e-6)


def test_bind_proposed_has_no_state():
    b = surfgrav.bind("proposed")
    assert not b["converged"]


def test_fit():
    a = surfgrav.fit(2.0, 4.0)
    b = surfgrav.fit(2.0, 10.0)
    assert b["lambda_fm"] > a["lambda_fm"]
    y = surfgrav.fit(0.5, 12.0, target="yukawa", g2=0.8, lambda_fm=1.6)
    assert y["g2"] == pytest.approx(0.8, rel=1e-4)
    assert y["lambda_fm"] == pytest.approx(1.6, rel=1e-4)
    assert surfgrav.fit(2.0, 10.0, seed=7) == surfgrav.fit(2.0, 10.0, seed=7)


def test_errors():
    with pytest.raises(surfgrav.ConfigError):
        surfgrav.force("gluon", 1.0)
    with pytest.raises(surfgrav.ConfigError):
        surfgrav.bind("coulomb", r_min_fm=5.0, r_max_fm=1.0)
    with pytest.raises(surfgrav.Error):
        surfgrav.reproduce_paper("planck")


def test_constants():
    rows = surfgrav.constants("codata")
    g = next(row for row in rows if row["key"] == "G")
    assert math.isclose(g["value"], 6.6743e-11)
