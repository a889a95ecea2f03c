# -*- coding: utf-8 -*-

"""
tests.controller.test_causality
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

For testing the functions under cdsvar/controller/causality.py

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import numpy as np
import pytest

from cdsvar.config.reference import StudyReference
from cdsvar.controller.causality import (
    bidirectional_counts,
    cap_weighted_irf,
    cap_weights,
    causality_comparison,
    causality_table,
    cholesky,
    cumulative_response,
    directions,
    granger_test,
    granger_wald,
    impulse_response,
    ma_matrices,
)
from cdsvar.controller.simulate import simulate
from cdsvar.controller.var import fit_var
from cdsvar.models.dgp import DgpSpec
from cdsvar.models.exceptions import (
    EmptyList,
    InvalidOptionError,
    MismatchedShapes,
    NonPositiveCap,
    NotPositiveDefinite,
    SingularCovariance,
)
from cdsvar.models.results import CausalityGrid, GrangerResult
from cdsvar.models.var import VarSpec

from tests.helper.builders import fake_fit, noise_panel, panel

PAIR = ("X1", "X2")
SYSTEM = ("RS", "DBOND", "DCDS")


def coupled_panel(seed: int, coefficient: float = 0.3, length: int = 500):
    """X1 feeds X2 with one lag"""

    return simulate(DgpSpec.var_process([[[0.0, 0.0], [coefficient, 0.0]]], length=length,
                                        seed=seed))


def diagonal_fit(covariance=None):
    return fake_fit(VarSpec(PAIR, 1), coefficients=[[0.0, 0.5, 0.0], [0.0, 0.0, 0.5]],
                    covariance=covariance)


def test_granger_detects_coupling():

    data = coupled_panel(1)
    spec = VarSpec(PAIR, 5)

    forward = granger_test(data, spec, cause="X1", effect="X2")
    backward = granger_test(data, spec, cause="X2", effect="X1")

    assert forward.rejected
    assert forward.dof == (5, 495 - 11)
    assert forward.p_value < 1e-6
    assert backward.f_statistic < forward.f_statistic


def test_granger_exact_fit_gives_zero():

    # X2 follows its own noiseless AR(2); X1 is noise
    x2 = [1.0, 0.0]
    for _ in range(38):
        x2.append(0.1 + 1.0 * x2[-1] - 0.5 * x2[-2])
    values = np.column_stack([noise_panel(2, 40).column("X1"), x2])

    result = granger_test(panel(values), VarSpec(PAIR, 2), cause="X1", effect="X2")

    assert result.f_statistic == 0.0
    assert result.p_value == pytest.approx(1.0)
    assert not result.rejected


def test_granger_ssr_and_wald_forms_agree():

    data = coupled_panel(3, coefficient=0.1, length=300)
    spec = VarSpec(PAIR, 5)
    fit = fit_var(data, spec)

    for cause, effect in directions(list(PAIR)):
        ssr_form = granger_test(data, spec, cause, effect)
        wald_form = granger_wald(fit, cause, effect)

        assert wald_form.f_statistic == pytest.approx(ssr_form.f_statistic, rel=1e-8)
        assert wald_form.dof == ssr_form.dof


def test_granger_is_scale_invariant():

    data = coupled_panel(4, coefficient=0.1, length=300)
    rescaled = panel(data.values * np.array([250.0, 0.01]))
    spec = VarSpec(PAIR, 3)

    for cause, effect in directions(list(PAIR)):
        original = granger_test(data, spec, cause, effect)
        scaled = granger_test(rescaled, spec, cause, effect)

        assert scaled.f_statistic == pytest.approx(original.f_statistic, rel=1e-8)
        assert scaled.rejected == original.rejected


def test_granger_invalid_direction():

    data = noise_panel(5, 100)

    with pytest.raises(InvalidOptionError):
        granger_test(data, VarSpec(PAIR, 2), cause="X1", effect="X1")

    with pytest.raises(InvalidOptionError):
        granger_test(data, VarSpec(PAIR, 2), cause="X3", effect="X1")


def test_directions():

    assert directions(list(SYSTEM)) == [
        ("DBOND", "RS"), ("RS", "DBOND"),
        ("DCDS", "RS"), ("RS", "DCDS"),
        ("DCDS", "DBOND"), ("DBOND", "DCDS"),
    ]
    assert directions(["RS", "DCDS"]) == [("DCDS", "RS"), ("RS", "DCDS")]


def test_causality_table():

    panels = {entity_id: noise_panel(seed, 200, columns=SYSTEM, entity_id=entity_id)
              for seed, entity_id in enumerate(["A", "B", "C"])}

    grid = causality_table(panels, VarSpec(SYSTEM, 5), model="VAR1")

    assert grid.model == "VAR1"
    assert len(grid.directions) == 6
    assert grid.entity_ids == ["A", "B", "C"]
    assert all(0 <= count <= 3 for count in grid.totals().values())
    assert grid.results["B"][("RS", "DCDS")].f_statistic == pytest.approx(
        granger_test(panels["B"], VarSpec(SYSTEM, 5), "RS", "DCDS").f_statistic
    )


def grid_of(p_values: dict, model: str = "VAR2") -> CausalityGrid:
    pairs = directions(["RS", "DCDS"])
    return CausalityGrid(
        model=model,
        directions=tuple(pairs),
        results={
            entity_id: {pair: GrangerResult(*pair, 1.0, value, (5, 90))
                        for pair, value in zip(pairs, values)}
            for entity_id, values in p_values.items()
        },
    )


def test_bidirectional_counts():

    grid = grid_of({"A": (0.01, 0.01), "B": (0.01, 0.5), "C": (0.02, 0.03)})

    assert bidirectional_counts(grid) == {"RS<->DCDS": 2}


def test_causality_comparison():

    grids = {
        ("VAR2", "full"): grid_of({"A": (0.5, 0.01), "B": (0.5, 0.01)}),
        ("VAR2", "sub1"): grid_of({"A": (0.01, 0.01), "B": (0.5, 0.5)}),
    }

    comparison = causality_comparison(grids)

    assert comparison == {
        "VAR2": {
            "full": {"RS cause DCDS": 2, "DCDS cause RS": 0},
            "sub1": {"RS cause DCDS": 1, "DCDS cause RS": 1},
        }
    }
    assert causality_comparison(grids, ("RS", "DBOND")) == {}


def test_cholesky():

    assert np.allclose(cholesky(np.array([[4.0, 2.0], [2.0, 5.0]])), [[2.0, 0.0], [1.0, 2.0]])
    assert np.array_equal(cholesky(np.eye(3)), np.eye(3))

    with pytest.raises(NotPositiveDefinite):
        cholesky(np.array([[1.0, 2.0], [2.0, 1.0]]))

    with pytest.raises(NotPositiveDefinite):
        cholesky(np.array([[1.0, 0.1], [0.0, 1.0]]))

    with pytest.raises(NotPositiveDefinite):
        cholesky(np.ones((2, 3)))


@pytest.mark.parametrize("seed", range(200))
def test_cholesky_reconstructs_random_matrices(seed):

    generator = np.random.Generator(np.random.Philox(seed))
    k = int(generator.integers(1, 7))
    draws = generator.standard_normal((k, k))
    matrix = draws @ draws.T + 0.1 * np.eye(k)

    factor = cholesky(matrix)

    assert np.allclose(factor @ factor.T, matrix, atol=1e-10)
    assert np.array_equal(factor, np.tril(factor))
    assert np.all(np.diag(factor) > 0)


def test_impulse_response_oracle():

    irf = impulse_response(diagonal_fit(), horizon=15)

    assert irf.responses.shape == (16, 2, 2)
    for h in range(16):
        assert np.allclose(irf.responses[h], 0.5 ** h * np.eye(2), atol=1e-10)


def test_impulse_response_impact_is_the_factor():

    covariance = [[4.0, 2.0], [2.0, 5.0]]

    irf = impulse_response(diagonal_fit(covariance), horizon=3)

    assert np.allclose(irf.responses[0], [[2.0, 0.0], [1.0, 2.0]])
    assert np.allclose(irf.shock_scale, [2.0, 2.0])
    assert np.allclose(irf.response("X2", "X1"), [1.0, 0.5, 0.25, 0.125])


def test_impulse_response_ordering():

    fit = diagonal_fit([[2.0, 0.0], [0.0, 3.0]])

    reversed_order = impulse_response(fit, horizon=5, ordering=["X2", "X1"])
    spec_order = impulse_response(fit, horizon=5)

    assert reversed_order.ordering == ("X2", "X1")
    for response in PAIR:
        for shock in PAIR:
            assert np.allclose(reversed_order.response(response, shock),
                               spec_order.response(response, shock))

    # the moving-average matrices do not depend on the ordering
    coupled = fit_var(coupled_panel(6, length=300), VarSpec(PAIR, 2))
    first = impulse_response(coupled, 4)
    second = impulse_response(coupled, 4, ordering=["X2", "X1"])
    phi = ma_matrices(coupled, 4)
    assert np.allclose(first.responses, phi @ cholesky(coupled.residual_covariance))
    assert np.allclose(phi[0], np.eye(2))
    assert not np.allclose(first.response("X2", "X1"), second.response("X2", "X1"))

    reordered = second.responses @ np.linalg.inv(second.responses[0])
    assert np.allclose(first.responses @ np.linalg.inv(first.responses[0]), phi)
    assert np.allclose(reordered[:, ::-1, ::-1], phi)

    with pytest.raises(InvalidOptionError):
        impulse_response(fit, 5, ordering=["X1", "X3"])


def test_impulse_response_singular_covariance():

    with pytest.raises(SingularCovariance):
        impulse_response(diagonal_fit([[1.0, 1.0], [1.0, 1.0]]), horizon=5)


def test_cap_weights_match_reference_percentages():

    firms = StudyReference.firms()

    weights = cap_weights([firm[3] for firm in firms])

    assert weights.sum() == pytest.approx(1.0)
    for weight, firm in zip(weights, firms):
        assert 100.0 * weight == pytest.approx(firm[6], abs=0.01)

    with pytest.raises(NonPositiveCap):
        cap_weights([1.0, 0.0])


def test_cap_weighted_irf():

    first = impulse_response(diagonal_fit(), horizon=4)
    second = impulse_response(diagonal_fit([[4.0, 0.0], [0.0, 4.0]]), horizon=4)

    equal = cap_weighted_irf([(first, 5.0), (second, 5.0)])
    assert np.allclose(equal.responses, (first.responses + second.responses) / 2.0)
    assert np.allclose(equal.shock_scale, [1.5, 1.5])

    weighted = cap_weighted_irf([(first, 3.0), (second, 1.0)])
    assert np.allclose(weighted.responses, 0.75 * first.responses + 0.25 * second.responses)

    same = cap_weighted_irf([(first, 2.0), (first, 7.0)])
    assert np.allclose(same.responses, first.responses)


def test_cap_weighted_irf_errors():

    irf = impulse_response(diagonal_fit(), horizon=4)

    with pytest.raises(EmptyList):
        cap_weighted_irf([])

    with pytest.raises(MismatchedShapes):
        cap_weighted_irf([(irf, 1.0), (impulse_response(diagonal_fit(), horizon=5), 1.0)])

    with pytest.raises(NonPositiveCap):
        cap_weighted_irf([(irf, 1.0), (irf, -2.0)])


def test_cumulative_response():

    irf = impulse_response(diagonal_fit(), horizon=10)

    cumulative = cumulative_response(irf)

    expected = [2.0 * (1.0 - 0.5 ** (h + 1)) for h in range(11)]
    assert np.allclose(cumulative.response("X1", "X1"), expected)
    assert np.allclose(cumulative.response("X2", "X1"), 0.0)
    assert np.array_equal(cumulative.responses[0], irf.responses[0])


@pytest.mark.montecarlo
def test_granger_size_and_power():

    spec = VarSpec(PAIR, 5)

    size = np.mean([
        granger_test(simulate(DgpSpec.ar1([0.5, 0.5], length=500, seed=seed)), spec,
                     "X1", "X2").rejected
        for seed in range(1000)
    ])
    power = np.mean([
        granger_test(coupled_panel(seed), spec, "X1", "X2").rejected
        for seed in range(1000)
    ])

    assert 0.03 <= size <= 0.07
    assert power >= 0.95
