import math

import pytest

import qubeam as q


@pytest.fixture
def figure():
    return q.make_params(2500.0, 3000.0, 0.5, 0.1)


def test_version():
    assert q.__version__.count(".") == 2


def test_params_validation():
    with pytest.raises(q.QubeamError) as info:
        q.make_params(3000.0, 2500.0, 0.5, 0.1)
    assert info.value.code == "UnorderedFrequencies"
    with pytest.raises(q.QubeamError) as info:
        q.make_params(2500.0, 3000.0, 0.5, 0.0)
    assert info.value.code == "NonPositive"


def test_roots_match_reference(figure):
    # 80-digit reference shifts r - kappa_k
    ref = {
        (1, 1): 1.9995999992922105e-5,
        (1, 2): 2.0003999992532287e-5,
        (2, 1): 1.6663889911367895e-5,
        (2, 2): 1.6669445467420083e-5,
    }
    got = q.root_shifts(figure)
    for key, value in ref.items():
        assert got[key] == pytest.approx(value, rel=1e-12)
    for (k, lam), shift in got.items():
        kappa = 2500.0 if k == 1 else 3000.0
        assert abs(q.residual_split(kappa, shift, figure, lam)) <= 1e-12 * kappa
    # Rounding kappa + shift to one double costs ~1e-13 relative in r, which the
    # steep residual near the pole amplifies; only the split form is tight.
    roots = q.exact_roots(figure)
    assert roots[(1, 1)] == pytest.approx(2500.0 + ref[(1, 1)], rel=1e-15)


def test_amplitudes_normalized(figure):
    amps, raw = q.amplitudes(figure, "du")
    assert sum(abs(a) ** 2 for a in amps) == pytest.approx(1.0, abs=1e-14)
    assert raw == pytest.approx(0.99999999999966117819, abs=1e-13)


def test_measures(figure):
    m = q.measures(figure, "du")
    assert m["one_minus_y"] == pytest.approx(3.5557928407099143e-30, rel=1e-9)
    assert m["E_I"] == pytest.approx(1.7827032586683351e-28, rel=1e-9)
    assert m["Phi"] == pytest.approx(6.7502283095724489684e-12, rel=1e-12)
    assert m["E_S_closed"] == pytest.approx(2 * 0.1 * m["Phi"], rel=1e-14)
    uu = q.measures(figure, "uu")
    assert uu["E_S"] == 0.0 and uu["E_I"] == 0.0


def test_info_measure_endpoints():
    assert q.info_measure(1.0) == 0.0
    assert q.info_measure(0.0) == pytest.approx(1.0)
    with pytest.raises(q.QubeamError):
        q.info_measure(1.5)


def test_closed_form_unsupported(figure):
    with pytest.raises(q.QubeamError) as info:
        q.closed_form_ab(figure, "dd")
    assert info.value.code == "UnsupportedConfig"


def test_sweep_small():
    rows = q.sweep({"dk_steps": "3", "omega_steps": "2", "omega_min": "0.1"})
    assert len(rows) == 6
    assert all(r["status"] == "ok" for r in rows)
    assert all(0.0 <= r["E_S"] <= 0.5 for r in rows)
    csv = q.sweep_csv({"dk_steps": "3", "omega_steps": "2", "omega_min": "0.1"})
    body = [l for l in csv.splitlines() if not l.startswith("#")]
    assert len(body) == 7


def test_sweep_rejects_bad_grid():
    with pytest.raises(q.QubeamError) as info:
        q.sweep({"dk_min": "0"})
    assert info.value.code == "ValidationError"


def test_couplings():
    c = q.derive_couplings(1.0, 1, 2, 1.0, 0.0)
    alpha = 1.0 / 137.0
    assert c["eps_raw"] == pytest.approx(alpha / (8 * math.pi ** 3), rel=1e-14)
    assert c["omega"] == 0.0
