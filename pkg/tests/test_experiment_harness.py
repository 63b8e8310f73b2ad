import io

import pytest

from isogeny_descent import cli
from isogeny_descent.elliptic_curves import TorsionMatrix
from isogeny_descent.experiment_harness import (
    ConfigError,
    ExperimentRecord,
    SweepConfig,
    emit_report,
    mink_hypothesis_matrix,
    quaternion_conditions,
    run_descent_experiments,
    run_isotypic_experiments,
    run_lemma_defined_sweep,
    run_mink_rigidity_tests,
    run_theorem_equiv_experiment,
)
from isogeny_descent.isogenies import Recipe

SMALL = SweepConfig(primes=[7, 11, 13], curves_per_prime=2, n_products=30)


@pytest.fixture(scope="module")
def lemma_records():
    return run_lemma_defined_sweep(SMALL)


@pytest.fixture(scope="module")
def equiv_records():
    return run_theorem_equiv_experiment(SMALL)


@pytest.fixture(scope="module")
def descent_records():
    return run_descent_experiments(SweepConfig(primes=[5, 11, 13], ns=(5, 6, 7)))


def test_config_bounds():
    with pytest.raises(ConfigError):
        SweepConfig(p_max=300)
    with pytest.raises(ConfigError):
        SweepConfig(primes=[4])
    with pytest.raises(ConfigError):
        SweepConfig.from_dict({"bogus": 1})
    cfg = SweepConfig.from_dict({"primes": [5, 7], "ells": [2, 3]})
    assert cfg.ells == (2, 3) and cfg.prime_list() == [5, 7]


def test_empty_report(tmp_path):
    out = tmp_path / "r.jsonl"
    assert emit_report([], str(out)) == {}
    assert out.read_text() == ""


def test_fatal_record_gives_nonzero_exit(tmp_path, monkeypatch):
    bad = ExperimentRecord("mink", "k", "rigidity", {}, {}, False, True)
    monkeypatch.setattr(cli, "run_experiment", lambda name, cfg: [bad])
    assert cli.main(["experiment", "--name", "mink", "--out", str(tmp_path / "x.jsonl")]) == 1
    stream = io.StringIO()
    emit_report([bad], None, stream)
    assert "fatal experiments: mink" in stream.getvalue()


def test_lemma_no_disagreement(lemma_records):
    assert lemma_records and not any(r.fatal for r in lemma_records)
    fod = [r for r in lemma_records if r.kind == "field-of-definition"]
    assert all(r.conclusion for r in fod)


def test_lemma_identity_and_recipe_families(lemma_records):
    ids = [r for r in lemma_records if r.instance.get("kind") == "identity"]
    assert ids and all(r.hypotheses["coeff_test"] for r in ids)
    endo = [r for r in lemma_records if "recipe" in r.instance]
    assert endo
    for r in endo:
        assert r.hypotheses["coeff_test"] == (r.instance["j"] == 2)


def test_equiv_examples(equiv_records):
    assert not any(r.fatal for r in equiv_records)
    velu = [r for r in equiv_records if r.instance["kind"] == "velu"]
    assert velu and all(all(r.witness["conditions"].values()) for r in velu)
    onei = [r for r in equiv_records if r.instance["kind"] == "1+ni"]
    assert onei and all(not any(r.witness["conditions"].values()) for r in onei)
    assert any(r.instance.get("level_structure") == "Z/4" for r in equiv_records)


def test_quaternion_conditions_scalar_and_one_plus_ni():
    assert all(quaternion_conditions(11, Recipe(-5)).values())
    assert not any(quaternion_conditions(11, Recipe(1, 5)).values())


def test_mink_examples():
    n = 5
    assert not mink_hypothesis_matrix(TorsionMatrix.scalar(n, -1))
    assert mink_hypothesis_matrix(TorsionMatrix.scalar(4, -1))
    recs = run_mink_rigidity_tests(SweepConfig(primes=[7, 11], ns=(5, 6, 7)))
    assert not any(r.fatal for r in recs)
    order4 = [r for r in recs if r.instance.get("aut_order") == 4 and r.instance["n"] == 5]
    assert order4 and not any(r.hypotheses["hypothesis_matrix"] for r in order4)
    scanned = [r for r in order4 if r.instance["route"] == "curve"]
    assert scanned and all(r.hypotheses["hypothesis_scan"] is False for r in scanned)
    sharp = [r for r in recs if r.kind == "sharpness"]
    assert sharp and all(r.hypotheses["hypotheses_hold"] and r.conclusion for r in sharp)


def test_descent_trivial_and_cross_stream(descent_records):
    recs = descent_records
    assert not any(r.fatal for r in recs)
    triv = [r for r in recs if r.instance["kind"] == "identity"]
    assert triv and all(r.conclusion for r in triv)
    m3n7 = [r for r in recs if r.instance["m"] == 3 and r.instance["n"] == 7 and r.hypotheses["phi"]]
    assert m3n7
    for r in m3n7:
        assert r.hypotheses["n_not_dividing_m_squared"] == r.hypotheses["cor_m_le_3"]


def test_descent_records_rejections(descent_records):
    rejected = [r for r in descent_records if not r.hypotheses["phi"]]
    assert rejected and all("rejection" in r.witness for r in rejected)


def test_isotypic_small():
    recs = run_isotypic_experiments(SweepConfig(primes=[7, 11, 13], n_products=40))
    assert len([r for r in recs if r.kind == "partition"]) == 40
    assert not any(r.fatal for r in recs)


def test_sweep_is_deterministic(tmp_path):
    cfg = SweepConfig(primes=[7, 11], curves_per_prime=1, n_products=10)
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for path in (a, b):
        emit_report(run_isotypic_experiments(cfg) + run_mink_rigidity_tests(cfg), str(path))
    assert a.read_bytes() == b.read_bytes()
