from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from antiseq.algebra import Poly
from antiseq.engine import Decomp
from antiseq.models import ModelError, gargantuan_probe, get_model, list_models, model_ids, weight_sequence

rho = Poly.rho()


def test_catalog_weights():
    assert weight_sequence(get_model("er"), 3) == (rho + 1) ** 3
    assert weight_sequence(get_model("qss"), 2) == 9
    assert weight_sequence(get_model("gem", D=3), 2) == 1
    assert weight_sequence(get_model("triangulations"), 2) == 15
    assert weight_sequence(get_model("p_angulations", P=4), 1) == 3
    assert weight_sequence(get_model("constant_test"), 5) == 120


def test_catalog_listing():
    entries = {m["id"]: m for m in list_models()}
    assert "simple_graphs" in entries
    assert entries["p_angulations"]["params"]["P"]["min"] == 3
    assert entries["p_angulations"]["params"]["P"]["required"]
    assert entries["tournaments_ties"]["kind"] == "SEQ"
    assert entries["connected_graphs"]["kind"] == "CYC"
    assert model_ids() == sorted(entries)


@pytest.mark.parametrize("model", [get_model("p_angulations", P=5), get_model("triangulations"),
                                   get_model("gem", D=2), get_model("gem", D=4)])
def test_stride_two_periodicity(model):
    assert model.stride == 2
    for n in range(21):
        assert (model.weight(n) == 0) == (n % 2 == 1)


def test_even_perimeter_has_stride_one():
    assert get_model("p_angulations", P=4).stride == 1


@given(st.integers(0, 12))
def test_er_specializations(n):
    er = get_model("er")
    assert er.weight(n)(1) == get_model("simple_graphs").weight(n)
    for d in (1, 2, 3):
        assert er.weight(n)(d) == get_model("multigraphs", d=d).weight(n)
    assert er.specialize(Fraction(1, 3)).weight(n) == er.weight(n)(Fraction(1, 3))


@given(st.integers(0, 12))
def test_ties_equipotent_with_graphs(n):
    assert get_model("tournaments_ties").weight(n) == get_model("er").weight(n)


def test_connected_graphs_weights():
    cg = get_model("connected_graphs", rho=1)
    assert [cg.weight(n) for n in range(5)] == [0, 1, 1, 4, 38]
    assert get_model("connected_graphs").weight(3) == rho**3 + 3 * rho**2


def test_parameter_validation():
    with pytest.raises(ModelError, match="unknown model"):
        get_model("hypergraphs")
    with pytest.raises(ModelError, match="requires"):
        get_model("p_angulations")
    with pytest.raises(ModelError, match="does not take"):
        get_model("qss", D=3)
    with pytest.raises(ModelError):
        get_model("p_angulations", P=2)
    with pytest.raises(ModelError):
        get_model("er", rho=0)
    with pytest.raises(ModelError):
        get_model("qss").specialize(2)
    with pytest.raises(ModelError):
        get_model("er").weight(-1)


def test_specialize_symbolic_requires_rho():
    with pytest.raises(ModelError):
        get_model("er").specialize(None)
    assert get_model("er", rho=Fraction(1, 3)).params["rho"] == "1/3"


@pytest.mark.parametrize(
    "model,n_max",
    [
        (get_model("simple_graphs"), 40),
        (get_model("qss"), 40),
        (get_model("gem", D=3), 30),
        (get_model("er"), 30),
        (get_model("tournaments"), 30),
        (get_model("tournaments_ties"), 30),
        (get_model("multigraphs", d=2), 30),
        (get_model("triangulations"), 30),
        (get_model("p_angulations", P=4), 30),
        (get_model("connected_graphs"), 24),
    ],
)
def test_probe_passes(model, n_max):
    report = gargantuan_probe(model, n_max)
    assert report.verdict == "pass", report.to_json()


def test_probe_flags_constant_sequence():
    report = gargantuan_probe(get_model("constant_test"), 10)
    assert report.verdict == "fail"
    assert report.cond_i_flagged
    assert all(r == n for n, r in report.cond_i_ratios)


def test_probe_report_json_and_rho():
    # sparse graphs need a wider window before the tail condition settles
    assert gargantuan_probe(get_model("er"), 12, rho=Fraction(1, 3)).verdict == "fail"
    report = gargantuan_probe(get_model("er"), 20, rho=Fraction(1, 3))
    data = report.to_json()
    assert data["rho"] == "1/3" and data["verdict"] == "pass"
    assert "finite-window" in data["note"]
    with pytest.raises(ModelError):
        gargantuan_probe(get_model("er"), 12, rho=-1)


def test_kinds():
    assert get_model("tournaments").kind is Decomp.SEQ
    assert get_model("qss").kind is Decomp.SET


@pytest.mark.parametrize("model_id", model_ids())
def test_declared_stride_matches_weights(model_id):
    from antiseq.series import infer_stride

    params = {"multigraphs": {"d": 2}, "p_angulations": {"P": 5}, "gem": {"D": 2}}.get(model_id, {})
    model = get_model(model_id, **params)
    model = model.specialize(2) if model.symbolic else model
    assert infer_stride([model.weight(n) for n in range(17)]) == model.stride
