from fractions import Fraction

import pytest

import originlab as ol


def test_wendel_values():
    assert ol.p_exact(5, 2) == Fraction(11, 16)
    assert ol.p_exact(30, 15) == Fraction(1, 2)
    assert ol.p_exact(3, 3) == 0
    assert ol.p_float(5, 2) == pytest.approx(0.6875, rel=1e-15)
    assert ol.window_estimate(10) == 20


def test_classify_origin():
    square = [[1, 1], [1, -1], [-1, 1], [-1, -1]]
    v = ol.classify_origin(square)
    assert v["class"] == "Interior"
    assert v["verified"]
    assert sum(v["witness"]) == 1
    assert ol.classify_origin(square, method="cone")["class"] == "Interior"

    seg = ol.classify_origin([["1/2", "1/2"], [Fraction(-1, 3), Fraction(-1, 3)]])
    assert seg["class"] == "Boundary"
    assert seg["affine_hull_dim"] == 1

    out = ol.classify_origin([[1, 0], [1, 1]], float_guide=False)
    assert out["class"] == "Outside"
    sep = out["separator"]
    assert all(sep[0] * x + sep[1] * y < 0 for x, y in [(1, 0), (1, 1)])


def test_is_bounded():
    b = ol.is_bounded([[1, 0], [0, 1]], [1, 1], sandwich=True)
    assert b["verdict"] == "Bounded"
    assert b["lambda"] == [1, 1]
    assert b["sandwich"]["pass"]
    u = ol.is_bounded([[1, 0], [0, 1]], [-1, 0])
    assert u["verdict"] == "Unbounded"
    assert u["verified"]
    with pytest.raises(ol.OriginlabError):
        ol.is_bounded([[1, 0]], [0, 0])


def test_linear_algebra():
    assert ol.rank([[1, 2], [2, 4]]) == 1
    f = ol.solve_feasibility([[1, 0], [0, 1]], [2, "1/3"])
    assert f["feasible"] and f["lambda"] == [2, Fraction(1, 3)]
    g = ol.solve_feasibility([[1, 1]], [-1])
    assert not g["feasible"] and g["verified"]


def test_experiment_is_reproducible():
    cfg = {
        "schema": "originlab.experiment/1",
        "kind": "hull",
        "spec": {"kind": "gaussian"},
        "n": 8,
        "d": 3,
        "trials": 400,
        "master_seed": 7,
    }
    one = ol.run_experiment(cfg)
    eight = ol.run_experiment(cfg, threads=8)
    assert one == eight
    assert sum(one["counts"][k] for k in ("outside", "boundary", "interior")) == 400
    assert ol.run_experiment(one) == one


def test_enumerate_and_sample():
    e = ol.enumerate_exact({"kind": "rademacher"}, 4, 2)
    assert e["states"] == 256
    assert e["probabilities"]["interior"] == Fraction(3, 32)
    m = ol.sample_matrix({"kind": "rademacher"}, 3, 4, seed=1)
    assert len(m) == 3 and all(abs(x) == 1 for row in m for x in row)
    assert m == ol.sample_matrix({"kind": "rademacher"}, 3, 4, seed=1)


def test_cli():
    code, out, err = ol.cli("pnd", "--n", "5", "--d", "2", "--exact")
    assert code == 0 and out == "11/16\n"
    assert "config_hash=" in err
    assert ol.cli("nope")[0] == 2
