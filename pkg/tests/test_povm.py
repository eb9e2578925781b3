import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entswap import (
    AsymmetricPovmParams,
    BadIndexError,
    BadParamError,
    InvalidPovmError,
    Povm,
    asymmetric_povm,
    bell_state,
    effect_entanglement,
    povm_from_dict,
    povm_to_dict,
    werner_bell_povm,
)
from entswap.povm import validate
from helpers import random_povm, rng

I4 = np.eye(4, dtype=complex)
LAMBDA_GRID = np.linspace(0.0, 1.0, 11)
X_PRESETS = (0.3, 0.725, 0.8)


def test_builder_povms_validate_clean():
    for lam in LAMBDA_GRID:
        assert validate(werner_bell_povm(lam)) == []
        for x in X_PRESETS:
            assert validate(asymmetric_povm(x, lam)) == []


def test_single_outcome_trivial_povm_is_valid():
    assert validate(Povm((I4,), label="trivial")) == []


def test_validate_flags_completeness():
    problems = validate(Povm((I4, I4)))
    assert len(problems) == 1
    assert "completeness" in problems[0]
    assert "1" in problems[0]  # residual magnitude appears in the message


def test_validate_flags_effect_problems():
    problems = validate(Povm((1.5 * I4, -0.5 * I4)))
    assert any(p.startswith("effect 1") and "exceeds 1" in p for p in problems)
    assert any(p.startswith("effect 2") and "negative eigenvalue" in p for p in problems)

    skew = np.zeros((4, 4), dtype=complex)
    skew[0, 1] = 1e-6
    problems = validate(Povm((I4 / 2 + skew, I4 / 2)))
    assert any(p.startswith("effect 1") and "Hermitian" in p for p in problems)


def test_povm_structure_enforced():
    with pytest.raises(InvalidPovmError):
        Povm(())
    with pytest.raises(InvalidPovmError):
        Povm((np.eye(2),))


def test_werner_bell_povm_limits():
    projective = werner_bell_povm(1.0)
    for k, effect in enumerate(projective.effects, start=1):
        v = bell_state(k)
        assert np.abs(effect - np.outer(v, v.conj())).max() < 1e-15
    trivial = werner_bell_povm(0.0)
    for effect in trivial.effects:
        assert np.abs(effect - I4 / 4).max() < 1e-15


def test_werner_bell_povm_bad_param():
    with pytest.raises(BadParamError):
        werner_bell_povm(-0.2)


def test_werner_effects_commute():
    for lam in LAMBDA_GRID:
        effects = werner_bell_povm(lam).effects
        for a in effects:
            for b in effects:
                assert np.abs(a @ b - b @ a).max() < 1e-12


@settings(max_examples=40, deadline=None)
@given(
    st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
    st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
)
def test_asymmetric_povm_valid_everywhere(x, lam):
    assert validate(asymmetric_povm(x, lam)) == []


def test_asymmetric_povm_degenerate_sharpness():
    # at lam = 0 the product-vector weight vanishes
    effect = asymmetric_povm(0.3, 0.0).effects[0]
    expected = 0.3 * np.diag([0, 0, 0, 1]) + 0.7 * np.diag([1, 0, 0, 0])
    assert np.abs(effect - expected).max() < 1e-15


def test_asymmetric_povm_equal_weights_at_full_sharpness():
    params = AsymmetricPovmParams(0.3, 1.0)
    assert abs(params.y1 - 0.25) < 1e-15
    assert abs(params.y2 - 0.25) < 1e-15
    assert abs(params.w1 - 0.35) < 1e-15
    assert abs(params.w2 - 0.35) < 1e-15


def test_asymmetric_params_trace_identity():
    for lam in LAMBDA_GRID:
        for x in X_PRESETS:
            p = AsymmetricPovmParams(x, lam)
            combo = p.e**2 + p.f**2 + p.g**2 + 2 * p.h**2
            assert abs(combo - 1.0) < 1e-12
            assert p.y1 >= 0.0 and p.y2 >= 0.0 and p.y1 + p.y2 > 0.0


def test_asymmetric_params_bad_inputs():
    with pytest.raises(BadParamError):
        AsymmetricPovmParams(1.5, 0.5)
    with pytest.raises(BadParamError):
        asymmetric_povm(0.3, -0.1)


def test_effect_entanglement_thresholds():
    assert abs(effect_entanglement(werner_bell_povm(1.0), 1) - 1.0) < 1e-12
    assert effect_entanglement(werner_bell_povm(0.2), 1) == 0.0
    assert abs(effect_entanglement(werner_bell_povm(0.5), 1) - 0.25) < 1e-12
    for i in range(1, 5):  # separability edge
        assert effect_entanglement(werner_bell_povm(1 / 3), i) < 1e-12
    with pytest.raises(BadIndexError):
        effect_entanglement(werner_bell_povm(0.5), 5)


def test_json_round_trip():
    original = asymmetric_povm(0.725, 0.4)
    payload = json.loads(json.dumps(povm_to_dict(original)))
    rebuilt = povm_from_dict(payload)
    assert rebuilt.label == original.label
    for a, b in zip(rebuilt.effects, original.effects):
        assert np.abs(a - b).max() < 1e-15


def test_json_structural_errors_name_position():
    good = povm_to_dict(werner_bell_povm(0.5))

    broken = json.loads(json.dumps(good))
    broken["effects"][1] = broken["effects"][1][:3]
    with pytest.raises(InvalidPovmError, match="effect 2"):
        povm_from_dict(broken)

    broken = json.loads(json.dumps(good))
    broken["effects"][0][2][3] = [0.1]
    with pytest.raises(InvalidPovmError, match="row 2, column 3"):
        povm_from_dict(broken)

    with pytest.raises(InvalidPovmError, match="label"):
        povm_from_dict({"label": 7, "effects": good["effects"]})
    with pytest.raises(InvalidPovmError, match="effects"):
        povm_from_dict({"label": "x", "effects": []})


def test_random_povms_validate_clean():
    gen = rng(10)
    for _ in range(10):
        assert validate(random_povm(gen)) == []
