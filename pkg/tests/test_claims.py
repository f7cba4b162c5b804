import json
from importlib import resources

import jsonschema
import pytest

from fibword import claims
from fibword.claims import (
    CHECKERS,
    PINNED,
    ClaimResult,
    Verdict,
    ledger_from_json,
    ledger_json,
    ledger_markdown,
    pinned_failures,
    run_all,
)
from fibword.indices import fwi_star, irr
from fibword.trees import Tree, tree_from_index


@pytest.fixture(scope="module")
def ledger():
    return run_all(seed=7)


@pytest.fixture(scope="module")
def by_id(ledger):
    return {r.claim_id: r for r in ledger}


@pytest.fixture(scope="module")
def schema():
    return json.loads(resources.files("fibword").joinpath("ledger.schema.json").read_text())


def test_registry_order(ledger):
    assert [r.claim_id for r in ledger] == list(CHECKERS)


def test_schema_valid(ledger, schema):
    jsonschema.validate(json.loads(ledger_json(ledger)), schema)


def test_schema_rejects_refutation_without_witness(schema):
    bad = [{"claim_id": "x", "verdict": "REFUTED", "swept_range": "r", "witness": None,
            "notes": "", "variants": {}}]
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, schema)


def test_result_invariants():
    with pytest.raises(ValueError):
        ClaimResult("x", Verdict.REFUTED, "r")
    with pytest.raises(ValueError):
        ClaimResult("x", Verdict.CONFIRMED, "")
    ClaimResult("x", "UNDETERMINED", "")


def test_every_refutation_has_witness(ledger):
    for r in ledger:
        if r.verdict is Verdict.REFUTED:
            assert r.witness


def test_ledger_round_trip(ledger):
    text = ledger_json(ledger)
    again = ledger_from_json(text)
    assert [r.to_dict() for r in again] == [r.to_dict() for r in ledger]
    assert ledger_json(again) == text


def test_ledger_deterministic(ledger):
    assert ledger_json(run_all(seed=7)) == ledger_json(ledger)


def test_markdown(ledger):
    md = ledger_markdown(ledger)
    assert md.count("\n") == len(ledger) + 2


def test_pinned_all_confirmed(ledger):
    assert set(PINNED) <= set(CHECKERS)
    assert pinned_failures(ledger) == []


def test_pinned_failure_detected():
    fake = [ClaimResult("prop_2_1", Verdict.REFUTED, "r", {"p": 1})]
    assert pinned_failures(fake) == ["prop_2_1"]
    fake = [ClaimResult("prop_2_7", Verdict.REFUTED, "r", {"x": 1}, variants={"standard_lucas": "REFUTED"})]
    assert pinned_failures(fake) == ["prop_2_7[standard_lucas]"]


def test_run_all_selection_errors():
    with pytest.raises(ValueError):
        run_all(claim_ids=[])
    with pytest.raises(KeyError):
        run_all(claim_ids=["nope"])


def test_checker_error_becomes_undetermined(monkeypatch):
    def boom():
        raise RuntimeError("kaput")

    monkeypatch.setitem(CHECKERS, "prop_2_1", boom)
    (r,) = run_all(claim_ids=["prop_2_1"])
    assert r.verdict is Verdict.UNDETERMINED and "kaput" in r.notes


@pytest.mark.parametrize(
    "cid, verdict",
    [
        ("prop_2_1", "CONFIRMED"),
        ("prop_2_7", "REFUTED"),
        ("table_1", "REFUTED"),
        ("figure_1", "REFUTED"),
        ("prop_3_3", "CONFIRMED"),
        ("prop_3_4", "CONFIRMED"),
        ("prop_3_5", "CONFIRMED"),
        ("lemma_3_6", "REFUTED"),
        ("lemma_3_7_thm_3_8", "REFUTED"),
        ("thm_3_9", "CONFIRMED"),
        ("cor_3_10_3_11", "REFUTED"),
        ("thm_4_1", "CONFIRMED"),
        ("remark_4_2", "CONFIRMED"),
        ("lemma_4_3", "CONFIRMED"),
        ("lemma_4_4", "REFUTED"),
        ("lemma_4_5", "CONFIRMED"),
        ("thm_df_grid", "UNDETERMINED"),
        ("binom_series", "REFUTED"),
    ],
)
def test_frozen_verdicts(by_id, cid, verdict):
    assert by_id[cid].verdict.value == verdict


def test_readings(by_id):
    assert by_id["prop_2_7"].variants == {"standard_lucas": "CONFIRMED", "printed_lucas": "REFUTED",
                                         "truncated_k_le_2n": "REFUTED"}
    v36 = by_id["lemma_3_6"].variants
    assert v36["add/proof_gamma"] == "CONFIRMED"
    assert [k for k, s in v36.items() if s == "CONFIRMED"] == ["add/proof_gamma"]
    v37 = by_id["lemma_3_7_thm_3_8"].variants
    assert v37["as_printed"] == "REFUTED" and v37["repaired_cauchy_schwarz"] == "CONFIRMED"
    assert (v37["power_bound_k1"], v37["power_bound_k2"], v37["power_bound_k3"]) == ("CONFIRMED", "CONFIRMED", "REFUTED")
    assert by_id["lemma_4_4"].variants == {"ln_phi": "REFUTED", "2ln2": "CONFIRMED"}
    assert by_id["lemma_4_4"].witness["matching_constant"] == "2 ln 2"
    assert by_id["thm_3_9"].variants["n=2"] == "REFUTED"
    assert by_id["binom_series"].variants == {"x=1/23": "REFUTED", "x=1/8": "CONFIRMED", "x=0": "CONFIRMED"}


def _tree_of(w):
    return Tree(w["n"], tuple(tuple(e) for e in w["edges"]))


def test_replay_lemma_3_7_witnesses(by_id):
    ex = by_id["lemma_3_7_thm_3_8"].witness["examples"]
    w = ex["verbatim"]
    t = _tree_of(w)
    assert t == tree_from_index(w["n"], w["prufer_index"])
    assert irr(t) == w["irr"] and fwi_star(t) == w["fwi_star"]
    rad = w["fwi_star"] - 2 * w["m2"]
    assert rad < 0 or w["irr"] ** 2 > w["m"] * rad
    w3 = ex["power_bound_k3"]
    t3 = _tree_of(w3)
    assert irr(t3) ** 3 > (w3["m"] - 1) ** 2 * fwi_star(t3)


def test_replay_lemma_3_6_witness(by_id):
    from fibword.claims import _lemma_3_6_sides

    first = by_id["lemma_3_6"].witness["first_counterexamples"]
    w = first["add/statement_gamma"]
    t = _tree_of(w)
    plus = list(t.edges) + [(w["alpha"], w["beta"])]
    lhs, rs, _ = _lemma_3_6_sides(list(t.edges), plus, t.n, w["alpha"], w["beta"])
    assert (lhs, rs) == (w["lhs"], w["rhs"]) and lhs != rs


def test_replay_prop_2_7_gap(by_id):
    rows = by_id["prop_2_7"].witness["rows"]
    for r in rows:
        assert float(r["gap_printed"]) > 0.1
        assert float(r["gap_standard"]) < 1e-30


def test_seed_changes_random_claims():
    a = claims.check_lemma_3_6(trials=50, seed=1)
    b = claims.check_lemma_3_6(trials=50, seed=2)
    assert a.swept_range != b.swept_range


def test_lemma_3_6_trials_guard():
    with pytest.raises(ValueError):
        claims.check_lemma_3_6(trials=0)
