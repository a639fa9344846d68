import pytest

from augmis import (
    Graph,
    compute_anatomy,
    subdivided_star,
    verify_extension_bound,
    verify_path_or_cycle,
    verify_star_anatomy,
)
from augmis.verify import anatomy_covers, anatomy_violations


def test_anatomy_on_bare_star():
    t3 = subdivided_star(3)
    a = compute_anatomy(t3, 0, {1, 2, 3}, {4, 5, 6})
    assert not (
        a.leaf_nbrs
        | a.middle_nbrs
        | a.centre_only
        | a.second_middle
        | a.second_leaf
    )
    assert anatomy_violations(t3, a) == []
    assert anatomy_covers(t3, a)


def test_anatomy_strata_examples():
    t3 = subdivided_star(3)
    pendant_on_centre = Graph(8, list(t3.edges()) + [(0, 7)])
    a = compute_anatomy(pendant_on_centre, 0, {1, 2, 3}, {4, 5, 6})
    assert a.centre_only == {7}

    sees_all_leaves = Graph(8, list(t3.edges()) + [(7, 4), (7, 5), (7, 6)])
    a = compute_anatomy(sees_all_leaves, 0, {1, 2, 3}, {4, 5, 6})
    assert 7 in a.leaf_nbrs_full and 7 in a.leaf_nbrs
    assert 7 not in a.leaf_nbrs_single


def test_anatomy_rejects_malformed_star():
    t3 = subdivided_star(3)
    with pytest.raises(ValueError):
        compute_anatomy(t3, 0, {1, 2}, {4, 5, 6})
    with pytest.raises(ValueError):
        compute_anatomy(t3, 1, {0, 2, 3}, {4, 5, 6})


def test_anatomy_flags_statement_breaches():
    # leaf neighbour that misses the centre: its host graph is not
    # spider-free, and the checks report exactly that statement
    t3 = subdivided_star(3)
    g = Graph(8, list(t3.edges()) + [(7, 4)])
    a = compute_anatomy(g, 0, {1, 2, 3}, {4, 5, 6})
    assert "leaf-nbrs-see-centre" in anatomy_violations(g, a)


def test_path_or_cycle_small():
    rep = verify_path_or_cycle(10)
    assert rep.ok
    assert rep.counts == {8: 1, 9: 1, 10: 2}
    assert rep.checked == 4
    payload = rep.to_json()
    assert payload["violations"] == []


def test_star_anatomy_small():
    rep = verify_star_anatomy(9)
    assert rep.ok
    assert rep.counts == {7: 1, 8: 7, 9: 27}
    assert rep.checked == 35


def test_star_anatomy_bound_checks():
    with pytest.raises(ValueError):
        verify_star_anatomy(9, k_min=2)
    with pytest.raises(ValueError):
        verify_star_anatomy(14)


def test_extension_bound_small():
    rep = verify_extension_bound(2, 11)
    assert rep.ok
    # the only qualifying irreducible graphs at this size are the bare
    # subdivided stars of orders 4 and 5
    assert rep.counts == {9: 1, 11: 1}
    assert rep.checked == 2
