import math

import numpy as np
import pytest

import qmem

BELL_ANGLE = math.pi / 4


def test_envelope_reference_value():
    e = qmem.envelope(10.0, 0.0, 1.0)
    assert e.g == pytest.approx(0.62467097834754977, abs=1e-14)
    assert e.abs_g2 == pytest.approx(abs(e.g) ** 2, abs=1e-15)
    assert qmem.envelope(1.0, 0.0, 0.0).decay_rate == 0.0


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError):
        qmem.envelope(-1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        qmem.initial_state(1.5, 0.0)
    with pytest.raises(ValueError):
        qmem.concurrence(np.eye(4))
    with pytest.raises(ValueError):
        qmem.sweep(preset="fig9")


def test_bell_state_correlations():
    rho = qmem.initial_state(1.0, BELL_ANGLE)
    assert rho.shape == (4, 4)
    assert np.allclose(rho, rho.conj().T)
    assert qmem.concurrence(rho) == pytest.approx(1.0, abs=1e-12)
    assert qmem.discord(rho) == pytest.approx(1.0, abs=1e-10)
    assert qmem.mutual_information(rho) == pytest.approx(2.0, abs=1e-12)
    u = qmem.uncertainty(rho)
    assert u["eub"] == pytest.approx(0.0, abs=1e-10)
    assert u["lhs"] == pytest.approx(0.0, abs=1e-10)


def test_evolved_bell_concurrence_equals_abs_g():
    for t in (0.5, 3.0, 12.0):
        rho = qmem.evolved_state(1.0, BELL_ANGLE, 0.1, 2.0, t)
        assert qmem.concurrence(rho) == pytest.approx(abs(qmem.envelope(0.1, 2.0, t).g), abs=1e-7)


def test_sandwich_on_random_states():
    rng = np.random.default_rng(7)
    for _ in range(50):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = g @ g.conj().T
        rho /= np.trace(rho).real
        u = qmem.uncertainty(rho)
        assert u["lhs"] >= u["eub"] - 1e-9
        assert u["eub"] >= u["berta"] - 1e-9


def test_sweep_rows_and_columns():
    rows = qmem.sweep(delta=[0.0, 5.0], points=3, quantities="concurrence,eub")
    assert len(rows) == 6
    assert set(rows[0]) == {"gamma_t", "delta_over_gamma", "lambda_over_gamma", "r", "theta", "concurrence", "eub"}
    assert rows[0]["concurrence"] == pytest.approx(1.0)
    assert rows[3]["delta_over_gamma"] == 5.0


def test_figure_csv_is_deterministic():
    a = qmem.figure_csv("fig2")
    assert a == qmem.figure_csv("fig2")
    assert a.splitlines()[0] == "gamma_t,delta_over_gamma,lambda_over_gamma,r,theta,concurrence,discord"


def test_selfcheck_passes():
    results = qmem.selfcheck()
    assert results
    assert all(passed for _, passed, _ in results), results
