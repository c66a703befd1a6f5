import math

import numpy as np
import pytest

import vacsup


def test_builtin_names_resolve():
    names = vacsup.builtin_names()
    assert "prop4_p1" in names
    spec = vacsup.builtin("prop4_p1")
    assert spec.family == vacsup.Family.bell_depolarizing
    assert spec.noise == [1.0, 1.0]


def test_unknown_scenario_raises():
    with pytest.raises(vacsup.VacsupError):
        vacsup.builtin("no_such_scenario")


def test_prop4_point_reaches_unit_fidelity():
    records = vacsup.evaluate_point("prop4_p1", 1.0, 1.0)
    plus = [r for r in records if r["outcome"] == 0][0]
    assert plus["fidelity"] == pytest.approx(1.0, abs=1e-9)
    assert plus["oracle_fidelity"] == pytest.approx(1.0, abs=1e-9)


def test_sweep_fig6b_red_concurrence_equals_p():
    grid = vacsup.linspace(0.0, 1.0, 21)
    for r in vacsup.sweep("fig6b_red", grid):
        assert r["conc_pairwise"] == pytest.approx(r["p"], abs=1e-6)


def test_grid_sweep_shape():
    records = vacsup.sweep("fig5a", [0.0, 0.5, 1.0], [0.0, 0.5])
    assert len(records) == 6
    assert [(r["p"], r["q"]) for r in records][:2] == [(0.0, 0.0), (0.0, 0.5)]


def test_spec_is_editable():
    spec = vacsup.builtin("bell_bitphase")
    spec.config = vacsup.VacuumConfig([[0, 1, 0, 0], [0, 0, 0, 1]])
    plus = vacsup.evaluate_point(spec, 1.0, 1.0)[0]
    assert plus["fidelity"] == pytest.approx(1.0, abs=1e-12)


def test_verify_propositions_all_pass():
    checks = vacsup.verify_propositions()
    assert checks and all(c["passed"] for c in checks)


def test_optimizer_returns_normalized_config():
    result = vacsup.optimize_amplitudes("bell_bitphase", 0.5, 0.5, seed=3, restarts=3, iterations=150)
    assert result["best_fidelity"] >= 1 - 1e-6
    for vec in result["best_config"]:
        assert sum(abs(a) ** 2 for a in vec) == pytest.approx(1.0, abs=1e-10)


def test_metrics_on_numpy_arrays():
    phi = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    rho = np.outer(phi, phi.conj())
    assert vacsup.concurrence(rho) == pytest.approx(1.0, abs=1e-12)
    assert vacsup.fidelity_pure(rho, phi) == pytest.approx(1.0, abs=1e-12)
    mixed = np.eye(4) / 4
    assert vacsup.fidelity_uhlmann(rho, mixed) == pytest.approx(0.5, abs=1e-9)


def test_hadamard_walk_is_symmetric():
    h = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    dist = vacsup.walk(41, h, 20, 20, np.array([1, 1j]) / math.sqrt(2))
    assert dist.shape == (21, 41)
    assert np.allclose(dist.sum(axis=1), 1.0, atol=1e-12)
    assert np.max(np.abs(dist[-1] - dist[-1][::-1])) < 1e-9


def test_embedding():
    x = np.array([[0, 1], [1, 0]])
    assert vacsup.verify_embedding(x, x)
    assert not vacsup.verify_embedding(x, np.eye(2))
