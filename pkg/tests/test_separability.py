import numpy as np
import pytest

from entclone import (
    BadDimensionError,
    BellKind,
    OutOfRangeError,
    bell_state,
    clone_local,
    clone_nonlocal,
    density_from_pure,
    entanglement_interval,
    kron,
    ppt_verdict,
)

from helpers import random_density

LOCAL_LOW = 0.5 - np.sqrt(39.0) / 16.0
LOCAL_HIGH = 0.5 + np.sqrt(39.0) / 16.0
NONLOCAL_LOW = 0.5 - np.sqrt(2.0) / 3.0
NONLOCAL_HIGH = 0.5 + np.sqrt(2.0) / 3.0


def test_singlet_is_entangled():
    rho = density_from_pure(bell_state(BellKind.PSI_MINUS, np.sqrt(0.5)))
    verdict = ppt_verdict(rho)
    assert verdict.entangled
    assert abs(verdict.min_pt_eigenvalue - (-0.5)) < 1e-12


def test_maximally_mixed_is_separable():
    verdict = ppt_verdict(np.eye(4) / 4.0)
    assert not verdict.entangled
    assert abs(verdict.min_pt_eigenvalue - 0.25) < 1e-14


def test_product_states_are_separable():
    rng = np.random.default_rng(30)
    for _ in range(10):
        a = random_density(rng, 2)
        b = random_density(rng, 2)
        assert not ppt_verdict(kron(a, b)).entangled


def test_ppt_verdict_needs_two_qubits():
    with pytest.raises(BadDimensionError):
        ppt_verdict(np.eye(2) / 2.0)


def test_clone_verdicts_flip_at_the_boundaries():
    inside = density_from_pure(bell_state(BellKind.PSI_MINUS, np.sqrt(0.5)))
    outside = density_from_pure(bell_state(BellKind.PSI_MINUS, np.sqrt(0.05)))
    assert ppt_verdict(clone_local(inside)).entangled
    assert not ppt_verdict(clone_local(outside)).entangled
    assert ppt_verdict(clone_nonlocal(inside)).entangled
    assert not ppt_verdict(clone_nonlocal(density_from_pure(bell_state(BellKind.PSI_MINUS, np.sqrt(0.01))))).entangled


def test_local_interval_endpoints():
    interval = entanglement_interval("local")
    assert abs(interval.low - LOCAL_LOW) < 1e-8
    assert abs(interval.high - LOCAL_HIGH) < 1e-8
    assert abs((interval.low + interval.high) - 1.0) < 1e-7


def test_nonlocal_interval_endpoints():
    interval = entanglement_interval("nonlocal")
    assert abs(interval.low - NONLOCAL_LOW) < 1e-8
    assert abs(interval.high - NONLOCAL_HIGH) < 1e-8


def test_pure_interval_covers_everything_but_the_ends():
    interval = entanglement_interval("pure")
    assert interval.low < 1e-7
    assert interval.high > 1.0 - 1e-7


def test_nonlocal_interval_contains_local():
    local = entanglement_interval("local")
    nonlocal_ = entanglement_interval("nonlocal")
    assert nonlocal_.low < local.low
    assert nonlocal_.high > local.high


def test_interval_tolerance_consistency():
    coarse = entanglement_interval("local", tol=1e-4)
    fine = entanglement_interval("local", tol=1e-8)
    assert abs(coarse.low - fine.low) < 1e-4
    assert abs(coarse.high - fine.high) < 1e-4


def test_interval_argument_checks():
    with pytest.raises(ValueError):
        entanglement_interval("global")
    with pytest.raises(OutOfRangeError):
        entanglement_interval("local", tol=0.0)
