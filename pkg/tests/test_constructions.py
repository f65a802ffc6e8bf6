import numpy as np
import pytest

from radsq.constructions import (
    cm_check,
    descend_to_simple,
    stable_hom_ar_check,
    star_sequence_check,
    tau_inverse_delta,
)
from radsq.errors import UsageError
from radsq.quiver import Quiver, delta_quiver, permute
from radsq.rep import build_projective, build_simple, random_module

A2 = Quiver.from_matrix([[0, 1], [0, 0]])
D32 = delta_quiver(3, 2)
D22 = delta_quiver(2, 2)
D21 = delta_quiver(2, 1)
D12 = delta_quiver(1, 2)


@pytest.mark.parametrize("q", [D22, D12, D32, delta_quiver(2, 3)], ids=str)
@pytest.mark.parametrize("p", [2, 5])
def test_tau_inverse_record_passes(q, p):
    rec = tau_inverse_delta(q, p)
    assert rec.ok, rec.checks
    assert len(rec.checks) == 6
    assert rec.length == rec.cokernel_length


def test_tau_inverse_record_details():
    rec = tau_inverse_delta(D32, 5)
    assert rec.c == 1 and rec.d == 2
    assert rec.module.dims == (3, 0, 2)
    assert rec.ext == [2, 0, 0, 0, 3]
    assert rec.reference_length == 19


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("m", [2, 3])
def test_tau_inverse_length_is_m_squared_plus_m_minus_one(n, m):
    # hand count: dim P(n-1) (1 + m) times the number of copies d = m in the top,
    # minus the single S(0) of the syzygy, gives m^2 + m - 1
    rec = tau_inverse_delta(delta_quiver(n, m), 5)
    assert rec.length == m * m + m - 1
    assert rec.d == m and rec.c == 1


def test_tau_inverse_on_relabelled_quiver():
    q = permute(D32, (1, 2, 0))
    rec = tau_inverse_delta(q, 5)
    assert rec.ok
    assert rec.module.dims[rec.shape.vertex0] + rec.module.dims[rec.shape.last] == rec.length


def test_tau_inverse_requires_delta():
    with pytest.raises(UsageError):
        tau_inverse_delta(A2)
    with pytest.raises(UsageError):
        tau_inverse_delta(D21)


@pytest.mark.parametrize(
    "q, cok",
    [(D32, (0, 0, 3)), (delta_quiver(2, 3), (0, 8)), (D21, (0, 0))],
    ids=str,
)
def test_star_sequence_examples(q, cok):
    v = star_sequence_check(q, 5)
    assert v.ok and v.injective and v.cokernel_dims == cok


def test_descend_to_simple_examples():
    assert descend_to_simple(tau_inverse_delta(D32, 5).module, 2) == 0
    assert descend_to_simple(tau_inverse_delta(D12, 5).module, 0) == 0
    with pytest.raises(UsageError):
        descend_to_simple(build_projective(D32, 5, 0), 0)
    with pytest.raises(UsageError):
        descend_to_simple(build_simple(D32, 5, 2), 0)


def test_cm_check_examples():
    for q in (D32, A2):
        for i in range(q.n):
            assert cm_check(build_projective(q, 5, i), q.n + 1).passed
    verdict = cm_check(tau_inverse_delta(D22, 5).module, 3)
    assert not verdict.passed and verdict.ext_module[2] != 0
    rng = np.random.default_rng(8)
    for _ in range(10):
        M = random_module(D21, 5, rng)
        assert cm_check(M, 5).passed
    with pytest.raises(UsageError):
        cm_check(build_simple(D21, 5, 0), 0)


def test_cm_check_full_depth_reports_transpose():
    v = cm_check(build_simple(A2, 5, 0), 3, stop_early=False)
    assert len(v.ext_transpose) == 3 and not v.passed


def test_ar_examples():
    M = tau_inverse_delta(D22, 5).module
    v = stable_hom_ar_check(M, build_projective(D22, 5, 1))
    assert v.ok and v.ext1 == 0 and v.stable_hom == 0
    v = stable_hom_ar_check(build_simple(D32, 5, 2), build_projective(D32, 5, 2))
    assert v.ok and v.ext1 == 3
    S0 = build_simple(D21, 5, 0)
    assert stable_hom_ar_check(S0, S0).ok
    with pytest.raises(UsageError):
        stable_hom_ar_check(build_projective(D32, 5, 0), S0)
