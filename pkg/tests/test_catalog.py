import pytest

from oracles import determinant

from tribrackets import catalog, tables
from tribrackets.construct import is_alternating, is_prime_diagram, is_reduced
from tribrackets.diagram import build_diagram


def test_every_entry_builds_with_euler_check():
    for entry in catalog.list_entries():
        d = build_diagram(entry.pd)  # raises on any Euler/orientation defect
        assert d.component_count == entry.components, entry.name


def test_corpus_names_resolve():
    for name in tables.corpus("all"):
        assert catalog.get(name).name == name


def test_knot_counts():
    knots = catalog.list_entries(tags={"knot"}, max_crossings=8)
    assert len(knots) == 36  # unknot + 35 prime knots; composites excluded
    assert {e.name for e in knots} == set(tables.KNOTS8)


def test_determinants_match_independent_oracle():
    # the asset det field was produced by the build tool; re-derive it here
    # with the test-side oracle
    for entry in catalog.list_entries():
        if entry.det is None:
            continue
        assert determinant(entry.pd) == entry.det, entry.name


def test_standard_knot_determinants():
    expected = {
        "3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7, "6_1": 9, "6_2": 11,
        "6_3": 13, "7_1": 7, "7_4": 15, "8_8": 25, "8_12": 29, "8_16": 35,
        "8_17": 37, "8_18": 45, "8_19": 3, "8_20": 9, "8_21": 15,
        "SK": 9, "GK": 9, "L2a1": 2, "L4a1": 4, "L5a1": 8,
    }
    for name, det in expected.items():
        assert catalog.get(name).det == det, name


def test_alternating_catalog_diagrams_are_reduced_prime():
    for name in ("4_1", "6_2", "8_12", "8_16", "8_17", "L5a1", "L7a7"):
        pd = catalog.get(name).pd
        assert is_alternating(pd) and is_reduced(pd) and is_prime_diagram(pd)


def test_composites_are_flagged():
    for name in ("SK", "GK"):
        entry = catalog.get(name)
        assert "composite" in entry.tags
        assert entry.crossings == 6
        assert not is_prime_diagram(entry.pd)


def test_get_unknown_name_suggests():
    with pytest.raises(catalog.UnknownNameError) as err:
        catalog.get("9_1")
    assert err.value.suggestion is not None
    with pytest.raises(catalog.UnknownNameError):
        catalog.get("L9zz9")


def test_list_filters():
    knots8 = catalog.list_entries(tags={"knot"}, max_crossings=8)
    assert all(e.crossings <= 8 and "knot" in e.tags for e in knots8)
    fixtures = catalog.list_entries(tags={"fixture"})
    assert len(fixtures) >= 10
    pairs = {}
    for e in fixtures:
        pairs.setdefault(e.pair, []).append(e.name)
    assert all(len(group) >= 2 for group in pairs.values()), pairs
    links7 = catalog.list_entries(tags={"link"}, max_crossings=7)
    assert {e.name for e in links7} >= set(tables.LINKS7)


def test_name_sorting_is_numeric_for_knots():
    ordered = [e.name for e in catalog.list_entries(tags={"knot"})]
    assert ordered.index("8_2") < ordered.index("8_10")


def test_hopf_entry():
    entry = catalog.get("L2a1")
    assert entry.crossings == 2 and entry.components == 2


def test_torus_link_alias():
    t42 = catalog.get("T(4,2)")
    assert t42.crossings == 4 and t42.components == 2
    assert build_diagram(t42.pd).writhe == 4


def test_component_edge_ranges():
    d = build_diagram(catalog.get("L2a1").pd)
    assert d.component_edge_ranges() == [(1, 2), (3, 4)]


@pytest.mark.slow
def test_catalog_regenerates_identically(tmp_path):
    import sys
    from pathlib import Path

    tools = Path(__file__).resolve().parent.parent / "tools"
    sys.path.insert(0, str(tools))
    try:
        import build_catalog

        original = build_catalog.DATA_DIR
        build_catalog.DATA_DIR = tmp_path
        try:
            build_catalog.main()
        finally:
            build_catalog.DATA_DIR = original
    finally:
        sys.path.remove(str(tools))
    committed = Path(__file__).resolve().parent.parent / "src" / "tribrackets" / "data"
    new_files = sorted(p.name for p in tmp_path.glob("*.txt"))
    assert new_files == sorted(p.name for p in committed.glob("*.txt"))
    for name in new_files:
        assert (tmp_path / name).read_text() == (committed / name).read_text(), name


def test_catalog_env_override(tmp_path, monkeypatch):
    (tmp_path / "toy.txt").write_text(
        "name: toy\npd: X(1,1,2,2)\ncomponents: 1\ntags: fixture\n"
    )
    monkeypatch.setenv("TRIBRACKET_CATALOG", str(tmp_path))
    assert catalog.get("toy").crossings == 1
    with pytest.raises(catalog.UnknownNameError):
        catalog.get("3_1")
    monkeypatch.delenv("TRIBRACKET_CATALOG")
    assert catalog.get("3_1").crossings == 3
