import cmath
import json
import os

import numpy as np
import pytest

import hbcnp

DATA = os.environ.get("HBCNP_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def test_series_roundtrip():
    b = hbcnp.symbol({"family": "affine", "A": 0.3, "B": 2})
    h, residual = hbcnp.compute_h(b)
    assert residual < 1e-12
    assert abs(h(b(0.25)) - 0.25) < 1e-12
    s = hbcnp.PowerSeries([1, 2, 3])
    assert (s * s)[2] == 10
    assert hbcnp.compose(hbcnp.PowerSeries.identity(4, 1), s).coeffs == [1, 2, 3]


def test_szego_is_cnp():
    rep = hbcnp.cnp_certify(hbcnp.Kernel.szego(), 0, hbcnp.SampleSet.radial_grid(6, 12, 0.9), tol=1e-9)
    assert rep["verdict"] == "PSD"
    assert rep["min_eig"] >= -1e-9


def test_z_squared_counterexample():
    k = hbcnp.Kernel.dbr(hbcnp.symbol({"family": "power", "k": 2}))
    rep = hbcnp.cnp_certify(k, 0, hbcnp.SampleSet.explicit([0.5, -0.5]))
    assert rep["verdict"] == "NOT_PSD"
    assert rep["min_eig"] == pytest.approx(-2 / 15, abs=1e-9)


def test_gram_matches_formula_and_numpy():
    pts = hbcnp.SampleSet.explicit([0, 0.5, 0.3j])
    g = hbcnp.gram(hbcnp.Kernel.szego(), pts)
    z = np.array(pts.points)
    expected = 1 / (1 - np.conj(z)[None, :] * z[:, None])
    assert np.allclose(g, expected, atol=1e-14)
    assert np.allclose(hbcnp.eigenvalues(g), np.linalg.eigvalsh(g), atol=1e-12)


def test_criterion_and_witness():
    spec = {"family": "moebius_over", "A": -1, "B": -2}
    b = hbcnp.symbol(spec)
    rep = hbcnp.evaluate_criterion(b, hbcnp.closed_form_witness(spec))
    assert rep["overall"] == "PASS_WITH_EXTENSION"
    assert hbcnp.evaluate_criterion(hbcnp.symbol({"family": "power", "k": 2}))["overall"] == "FAIL"


def test_pick():
    assert hbcnp.pick_solvable([0], [2])["status"] == "NOT_PSD"
    f = hbcnp.schur_interpolant([0, 0.5], [0, 0.375])
    assert abs(f(0.5) - 0.375) < 1e-8
    assert f.sampled_sup() <= 1 + 1e-6
    with pytest.raises(hbcnp.HbcnpError, match="NOT_STRICTLY_SOLVABLE"):
        hbcnp.schur_interpolant([0, 0.5], [0, 0.5])


def test_errors_surface_as_exceptions():
    with pytest.raises(hbcnp.HbcnpError, match="NOT_SCHUR_CLASS"):
        hbcnp.Kernel.dbr(hbcnp.PowerSeries([0, 1.2]))
    with pytest.raises(hbcnp.HbcnpError, match="PARSE_ERROR"):
        hbcnp.Kernel.from_json({"kind": "bergman"})


def test_kernel_json_and_ball_points():
    k = hbcnp.Kernel.from_json('{"kind": "drury_arveson", "dim": 2}')
    assert k.dim == 2
    assert k([0.1, 0.2j], [0.3, 0]) == pytest.approx(1 / (1 - 0.03))
    assert hbcnp.Kernel.from_json(k.to_json()).dim == 2


def test_cli_gallery():
    code, out, err = hbcnp.run_cli(["gallery", "--suite", os.path.join(DATA, "gallery.json")])
    assert code == 0, err
    rep = json.loads(out)
    assert rep["summary"]["matched"] == rep["summary"]["total"] > 0
