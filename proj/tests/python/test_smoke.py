import json

import pytest

import pclatt


def test_fixture_tables():
    L = pclatt.Lattice.fixture("fig1a")
    assert L.labels == ["0", "a", "b", "c", "1"]
    assert pclatt.pseudocomplement(L) == {"0": "1", "a": "b", "b": "c", "c": "b", "1": "0"}
    assert pclatt.dense_elements(L) == ["1"]
    assert pclatt.darrow_table(L)["1"] == {"0": "0", "a": "c", "b": "b", "c": "c", "1": "1"}
    assert pclatt.arrow_table(L)["c"]["a"] == "1"


def test_classification():
    assert pclatt.classify(pclatt.Lattice.fixture("fig1b"))["stone"]
    c = pclatt.classify(pclatt.Lattice.fixture("fig1c"))
    assert c["distributive"] and not c["stone_identity"]


def test_deductive_systems_and_filters():
    L = pclatt.Lattice.fixture("fig1b")
    assert ["b", "d", "1"] in pclatt.deductive_systems(L, "first")
    assert pclatt.deductive_systems(L, "second")[0] == ["c", "1"]
    assert pclatt.ds_closure(L, ["d"], "second") == ["b", "c", "d", "1"]
    assert not pclatt.is_filter(L, ["b", "d", "1"])
    verdict = pclatt.is_deductive_system(L, ["b", "d", "1"], "second")
    assert not verdict["holds"]
    assert verdict["counterexample"]["assignment"]["y"] == "c"


def test_theta():
    L = pclatt.Lattice.fixture("fig1b")
    pairs = set(pclatt.theta(L, ["c", "1"]))
    assert ("b", "d") in pairs and ("c", "1") in pairs and ("a", "c") not in pairs
    report = pclatt.theta_report(L, ["c", "1"])
    assert report["passed"] and report["top_class"] == ["c", "1"]


def test_congruences_of_two_chain():
    L = pclatt.Lattice.parse("elements: 0 1\ncover: 0 1\n")
    assert pclatt.congruences(L) == [[["0"], ["1"]], [["0", "1"]]]


def test_laws_and_suite():
    ids = {law["id"] for law in pclatt.laws()}
    assert {"lem1-i", "th1-i", "stone-char", "theta-theorem"} <= ids
    v = pclatt.check_law(pclatt.Lattice.fixture("fig1a"), "lem1-i")
    assert not v["holds"] and not v["hypothesis_met"]
    assert v["counterexample"]["assignment"] == {"a": "c", "b": "a"}
    entries = pclatt.run_suite(max_n=5)
    assert entries and not any(e["fatal"] for e in entries)
    assert json.loads(pclatt.suite_json(max_n=4, include_fixtures=False))


def test_generation():
    assert [len(pclatt.generate(n)) for n in range(1, 8)] == [1, 1, 1, 2, 5, 15, 53]
    stone5 = pclatt.generate(5, filter="stone")
    assert len(stone5) == 2
    fig1c = pclatt.Lattice.fixture("fig1c")
    assert any(pclatt.is_isomorphic(fig1c, L) for L in pclatt.generate(5))


def test_round_trip_and_dot():
    for L in pclatt.generate(6, dedup=False):
        assert pclatt.Lattice.parse(L.serialize()) == L
    assert pclatt.Lattice.fixture("fig1b").to_dot().count("->") == 7


def test_errors():
    with pytest.raises(pclatt.LatticeError) as info:
        pclatt.Lattice.parse("elements: 0 1\ncover: 1 0\ncover: 0 1\n")
    assert info.value.kind == "NotAPoset"
    with pytest.raises(pclatt.LatticeError) as info:
        pclatt.check_law(pclatt.Lattice.fixture("fig1a"), "nope")
    assert info.value.kind == "UnknownLaw"
    with pytest.raises(pclatt.LatticeError):
        pclatt.theta(pclatt.Lattice.fixture("fig1b"), ["1"])
