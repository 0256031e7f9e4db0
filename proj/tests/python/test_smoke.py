import math
import random

import pytest

import sphmra


def test_quadrature_weights_small_rules():
    assert sphmra.quadrature_weights(2, 1) == pytest.approx([1 / 3, 4 / 3, 1 / 3], abs=1e-15)
    assert sphmra.quadrature_weights(2, 2) == pytest.approx(
        [math.pi / 16, 3 * math.pi / 8, math.pi / 16], abs=1e-15
    )


def test_gegenbauer_values():
    assert sphmra.gegenbauer(1.0, 2, 0.0) == pytest.approx(-1.0)
    assert sphmra.gegenbauer_at_one(1.0, 2) == pytest.approx(3.0)
    assert sphmra.gegenbauer_norm_1d(1.0, 2) == pytest.approx(math.pi / 2)


def test_dimension_counts():
    assert sphmra.harmonic_count(3, 2) == 9
    assert sphmra.dim_pi(4, 3) == 50
    assert sphmra.grid_size(2, 2) == 40


def test_sampling_round_trip():
    rng = random.Random(3)
    n, j = 2, 3
    values = [0j] * sphmra.grid_size(n, j)
    spectrum = {}
    for key in sphmra.analyze(n, j, values):
        spectrum[key] = complex(rng.gauss(0, 1), rng.gauss(0, 1))
    samples = sphmra.synthesize_on_grid(n, spectrum, j)
    recovered = sphmra.analyze(n, j, samples)
    assert max(abs(recovered[k] - spectrum[k]) for k in spectrum) < 1e-12


def test_pyramid_round_trip():
    n, j = 3, 3
    spectrum = {(0, (0, 0), 1): 1.0, (2, (1, 1), -1): 0.5 - 0.25j, (3, (3, 2), 1): 2.0}
    samples = sphmra.synthesize_on_grid(n, spectrum, j)
    base_level, base, details = sphmra.pyramid_decompose(n, j, samples)
    assert base_level == 1 and len(details) == 2
    back = sphmra.pyramid_reconstruct(n, base_level, base, details)
    assert max(abs(a - b) for a, b in zip(samples, back)) < 1e-12


def test_kernel_closed_forms():
    assert sphmra.scaling_kernel(2, 2, 1.0) == pytest.approx(1.0)
    assert sphmra.scaling_norm_sq(2, 2) == pytest.approx(0.25)
    assert sphmra.wavelet_norm_sq(2, 1) == pytest.approx(0.75)
    assert sphmra.scaling_integral(2, 1) == pytest.approx(2 * math.pi)
    c = sphmra.constants(2, 1)
    assert c["analysis"] == pytest.approx(math.pi / (4 * math.pi * 2))


def test_uncertainty_of_phi_1():
    r = sphmra.phi_m_variances(1, 0.5)
    assert r["var_space"] == pytest.approx(3.0)
    assert r["var_momentum"] == pytest.approx(1.5)
    direct = sphmra.uncertainty_product(0.5, [1.0, 3.0])
    assert direct["product"] == pytest.approx(r["product"], rel=1e-12)
    csv = sphmra.uncertainty_table_csv([1], [0.5])
    assert csv.splitlines()[1].startswith("1,0.5,3,1.5,2.12132034355964")


def test_degenerate_moment_raises():
    with pytest.raises(ValueError):
        sphmra.uncertainty_product(0.5, [1.0])


def test_classify_scaling_function():
    lam = 0.5
    coeffs = [(l + lam) / lam / 4 for l in range(2)]
    c = sphmra.classify(lam, coeffs)
    assert c["semidefinite"] and not c["strictly_pd"]
    assert c["strict_up_to_cardinality"] == 2


def test_certify_level_one():
    passed, text = sphmra.certify(2, 1)
    assert passed, text
