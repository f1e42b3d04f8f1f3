"""Fixture corpus loading, strictness, and the seeded property suites."""

import json

import pytest

from qmult.fixtures import (
    FixtureError,
    fixture_dir,
    load_corpus,
    run_corpus,
    run_property_suites,
)


class TestCorpus:
    def test_loads(self):
        corpus = load_corpus()
        names = {fixture["name"] for fixture in corpus}
        assert {
            "hypersurface",
            "xy_r",
            "jst_intersecting_planes",
            "s4_group_cohomology",
            "quantum_ci",
            "theta",
            "serre",
            "two_sided",
        } <= names

    def test_all_checks_pass(self):
        results = run_corpus()
        failures = [r for r in results if not r.ok]
        assert not failures, failures

    def test_every_check_is_tagged(self):
        for fixture in load_corpus():
            for case in fixture["cases"]:
                for check in case["expected"]:
                    assert check["provenance"] in ("published", "derived", "trivial")

    def test_unknown_check_kind_rejected(self, tmp_path):
        bad = {
            "name": "bad",
            "cases": [
                {
                    "label": "x",
                    "expected": [{"check": "frobnicate", "provenance": "trivial"}],
                }
            ],
        }
        (tmp_path / "bad.json").write_text(json.dumps(bad))
        with pytest.raises(FixtureError):
            load_corpus(tmp_path)

    def test_missing_provenance_rejected(self, tmp_path):
        bad = {
            "name": "bad",
            "cases": [{"label": "x", "expected": [{"check": "cx", "value": 1}]}],
        }
        (tmp_path / "bad.json").write_text(json.dumps(bad))
        with pytest.raises(FixtureError):
            load_corpus(tmp_path)

    def test_unknown_expectation_key_rejected(self, tmp_path):
        bad = {
            "name": "bad",
            "cases": [
                {
                    "label": "x",
                    "expected": [
                        {"check": "cx", "value": 1, "provenance": "trivial", "oops": 2}
                    ],
                }
            ],
        }
        (tmp_path / "bad.json").write_text(json.dumps(bad))
        with pytest.raises(FixtureError):
            load_corpus(tmp_path)

    def test_unknown_top_level_field_rejected(self, tmp_path):
        bad = {"name": "bad", "cases": [], "notes": "nope"}
        (tmp_path / "bad.json").write_text(json.dumps(bad))
        with pytest.raises(FixtureError):
            load_corpus(tmp_path)

    def test_env_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("MULT_FIXTURE_DIR", str(tmp_path))
        assert fixture_dir() == tmp_path
        with pytest.raises(FixtureError):
            load_corpus()  # empty directory


class TestPropertySuites:
    def test_seeded_run_passes(self):
        results = run_property_suites(1, cases=40)
        failures = [r for r in results if not r.ok]
        assert not failures, failures[:5]

    def test_deterministic_for_fixed_seed(self):
        a = run_property_suites(7, cases=10)
        b = run_property_suites(7, cases=10)
        assert [(r.key, r.ok) for r in a] == [(r.key, r.ok) for r in b]

    def test_expected_suites_present(self):
        results = run_property_suites(3, cases=5)
        suites = {r.fixture for r in results}
        assert suites == {
            "fit_roundtrip",
            "series_remultiply",
            "shift_alternation",
            "vanishing_above_complexity",
            "convention_bridge",
            "split_additivity",
            "reflection_duality",
        }
