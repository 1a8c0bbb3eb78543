"""End-to-end checks of the python package against the reference corpus."""

import json
import os
import subprocess

import pytest

import bandzeta as bz

DATA = os.environ["BANDZETA_DATA"]
CLI = os.environ.get("BANDZETA_CLI")


@pytest.fixture(scope="module")
def gp23():
    return bz.load_file(os.path.join(DATA, "gp23.json"))


@pytest.fixture(scope="module")
def sb1():
    return bz.load_file(os.path.join(DATA, "sb1.json"))


def test_presentation_properties(gp23):
    assert gp23.vertices == ["v"]
    assert gp23.arrows == ["a", "b"]
    assert gp23.relations == ["aa", "ba", "ab", "bbb"]
    assert gp23.window == 2


def test_validation_dict(gp23):
    report = bz.validate(gp23)
    assert report["admissible"] is True
    assert report["string_algebra"] is True
    assert report["window"] == 2
    assert report["diagnostics"] == []


def test_strings_and_bands(gp23):
    assert bz.strings(gp23, 2, uppercase=True) == [
        "aB", "Ab", "bA", "bb", "Ba", "BB",
    ]
    bands = bz.bands(gp23, 3, uppercase=True)
    assert [(b["length"], b["representative"]) for b in bands] == [
        (2, "aB"), (2, "bA"), (3, "aBB"), (3, "bbA"),
    ]
    assert bands[0]["pair_root"] == bands[1]["pair_root"] == "aB"


def test_graph_summary(gp23):
    g = bz.graph(gp23, uppercase=True)
    assert g["window"] == 2
    assert len(g["vertices"]) == 6
    assert len(g["arrows"]) == 8
    assert [c["period"] for c in g["components"]] == [1, 1]
    rows = bz.adjacency(gp23)
    assert len(rows) == 6
    assert sum(sum(row) for row in rows) == 8


def test_sequences_are_python_ints(gp23):
    n = bz.trace_sequence(gp23, 12)
    assert n == [0, 4, 6, 4, 10, 10, 14, 20, 24, 34, 44, 58]
    assert all(isinstance(v, int) for v in n)
    assert bz.pi_sequence(gp23, 12) == [0, 2, 2, 0, 2, 0, 2, 2, 2, 2, 4, 4]
    assert bz.mu_sequence(gp23, 6) == [0, 1, 1, 1, 1, 2]
    assert bz.zeta_series(gp23, 4) == [1, 0, 2, 2, 3]
    # Far beyond 64 bits: the decimal-string bridge must stay exact.
    big = bz.trace_sequence(gp23, 400)
    assert big[-1] > 2**63


def test_classification(gp23, sb1):
    verdict = bz.classify(gp23)
    assert verdict["verdict"] == "NonDomestic"
    assert verdict["band_class_count"] is None
    assert verdict["exponential_band_growth"] is True

    tame = bz.classify(sb1)
    assert tame["verdict"] == "Domestic"
    assert tame["band_class_count"] == 2
    assert tame["mu_series"] == [{"length": 2, "pairs": 1}]
    assert tame["mu_series_rational"] is True


def test_tilde_replacement(sb1):
    assert sorted(sb1.relations) == ["aa", "ab", "ba", "bb"]
    assert sb1.window == 1


def test_analyze_report(gp23):
    report = bz.analyze(gp23)
    assert report["format"] == "bandzeta-report-v1"
    assert report["window"] == 2
    assert report["N"][:4] == ["0", "4", "6", "4"]
    assert report["classification"]["verdict"] == "NonDomestic"
    assert report["pnt"]["applicable"] is True
    again = bz.analyze(gp23)
    assert report == again


def test_dot_export(gp23):
    dot = bz.dot(gp23, uppercase=True)
    assert dot.startswith("digraph state_graph {")
    assert 'label="bbA"' in dot


def test_exceptions():
    with pytest.raises(bz.ParseError):
        bz.parse("{broken")
    free_loop = json.dumps({
        "vertices": ["v"],
        "arrows": [{"name": "a", "source": "v", "target": "v"}],
        "relations": [],
    })
    with pytest.raises(bz.PreconditionError):
        bz.strings(bz.parse(free_loop), 2)


@pytest.mark.skipif(CLI is None, reason="command line binary not provided")
def test_cli_matches_library(gp23):
    out = subprocess.run(
        [CLI, "report", os.path.join(DATA, "gp23.json"), "--out", "-"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout) == bz.analyze(gp23)
