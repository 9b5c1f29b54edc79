import json
from fractions import Fraction

import pytest

import mapforge


def test_planar_counts():
    assert [mapforge.count_rooted_maps(n, genus=0) for n in range(1, 5)] == [2, 9, 54, 378]
    assert mapforge.planar_map_formula(4) == 378
    assert mapforge.count_rooted_maps(4) == 706
    assert mapforge.count_rooted_maps(6, genus=0, faces=[3, 3, 3, 3], loopless=True) == 4


def test_other_flavors():
    assert mapforge.count_rooted_bipartite(2, genus=0) == 3
    assert mapforge.count_rooted_constellations(2, 3, genus=0) == mapforge.count_rooted_bipartite(3, genus=0)
    assert mapforge.count_rooted_hypermaps(2, 2) > 0


def test_characters():
    assert mapforge.character([5, 4, 3], [3, 3, 2, 2, 1, 1]) == -2
    assert mapforge.m_core([3, 1], 2) == []
    with pytest.raises(ValueError):
        mapforge.character([3], [2])


def test_tamari():
    assert [mapforge.tamari_interval_count(n) for n in range(1, 5)] == [1, 3, 13, 68]
    assert len(mapforge.sync_intervals(4)) == 22
    assert mapforge.nu_tamari_size("NENENENE") == 14
    lo, up = mapforge.sync_intervals(3)[1]
    assert mapforge.dual_interval(*mapforge.dual_interval(lo, up)) == (lo, up)


def test_map_json_and_bijections():
    maps = mapforge.nonseparable_planar_maps(3)
    assert maps
    for m in maps:
        assert m["schema"] == "mapforge/1"
        assert mapforge.map_genus(m) == 0
        iv = mapforge.map_to_interval(m)
        assert mapforge.root_equivalent(mapforge.interval_to_map(*iv), m)
        tree = mapforge.map_to_tree(m)
        assert mapforge.root_equivalent(mapforge.tree_to_map(tree), m)
        assert mapforge.tree_to_interval(tree) == iv
        assert mapforge.canonical_form(mapforge.canonical_form(m)) == mapforge.canonical_form(m)
    with pytest.raises(ValueError):
        mapforge.map_genus("{not json")


def test_series():
    names, coeffs = mapforge.series("catalan", order=6)
    assert names == ["t"]
    assert [coeffs[(n,)] for n in range(6)] == [1, 1, 2, 5, 14, 42]
    names, coeffs = mapforge.series("l1", order=4, K=4)
    assert len(names) == 6
    assert all(isinstance(c, Fraction) for c in coeffs.values())
    with pytest.raises(ValueError):
        mapforge.series("f7")


def test_verify():
    assert mapforge.verify("littlewood", 2, 2).summary == "all θ ⊢ 4"
    assert mapforge.verify("planar", 3)
    assert mapforge.verify("tamari", 4, 3)
    printed = mapforge.verify("series")
    assert not printed.ok and "F1" in printed.failure
    assert mapforge.verify("series", corrected=True)


def test_jobs_do_not_change_results():
    old = mapforge.jobs()
    try:
        mapforge.set_jobs(1)
        a = mapforge.count_rooted_maps(4)
        mapforge.set_jobs(4)
        assert mapforge.count_rooted_maps(4) == a
    finally:
        mapforge.set_jobs(old)


def test_cli_in_process():
    status, out, _ = mapforge.run_cli("count", "--flavor", "general", "--edges", 3, "--genus", 0)
    assert (status, out) == (0, "54\n")
    status, out, _ = mapforge.run_cli("--format", "json", "char", "--shape", "2,1", "--type", "1,1,1")
    assert status == 0 and json.loads(out)["value"] == "2"
    assert mapforge.run_cli("count")[0] == 2
