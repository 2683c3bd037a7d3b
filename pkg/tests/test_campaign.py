"""Campaign runner: exhaustive results, determinism, and report shape."""

import json

import pytest

from numsgp import campaign
from numsgp.errors import BoundTooLarge, UnknownProperty

# oracle-confirmed per-genus tallies (see subset_oracle.py), g = 0..8
MAXGEN_COUNTS = [1, 1, 2, 3, 3, 6, 8, 7, 15]
SYMMETRIC_COUNTS = [1, 1, 1, 2, 3, 3, 6, 8, 7]


@pytest.fixture(scope="module")
def report12():
    return campaign.run_campaign(12, "all", jobs=1)


def test_all_properties_pass_exhaustively(report12):
    assert report12.passed
    assert report12.property_failures == ()
    assert report12.counts_by_genus == \
        (1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592)


def test_tallies_match_oracle(report12):
    assert list(report12.maxgen_counts_by_genus[:9]) == MAXGEN_COUNTS
    assert list(report12.symmetric_counts_by_genus[:9]) == SYMMETRIC_COUNTS


def test_correspondence_count_identity(report12):
    mg = report12.maxgen_counts_by_genus
    sym = report12.symmetric_counts_by_genus
    for g in range(report12.max_genus):
        assert mg[g] == sym[g + 1]


def test_every_applicable_check_ran(report12):
    checked = dict(report12.checked)
    nontrivial = report12.total - 1
    # the tallies count the trivial semigroup as both max-generated
    # (a_e = 1 = 2g+1) and symmetric (F+1 = 0 = 2g); the per-node checks
    # run on nontrivial semigroups only
    mg_nontrivial = sum(report12.maxgen_counts_by_genus) - 1
    sym_nontrivial = sum(report12.symmetric_counts_by_genus) - 1
    assert checked["wilf"] == nontrivial
    assert checked["apery_reflected_gaps"] == nontrivial
    assert checked["canonical_gens"] == nontrivial
    assert checked["frobenius_formula"] == mg_nontrivial
    assert checked["pf_formula"] == mg_nontrivial
    assert checked["type"] == mg_nontrivial
    assert checked["reflection_bijection"] == mg_nontrivial
    assert checked["closed_gap_wilf"] == mg_nontrivial
    # correspondence covers both families, re-checking the <2, 2g+1>
    # semigroups (which are both) from each side, plus the boundary pair
    # rooted at the trivial semigroup
    assert checked["correspondence"] == 1 + mg_nontrivial + sym_nontrivial


def test_single_property_run():
    rep = campaign.run_campaign(9, ["wilf"], jobs=1)
    assert rep.properties == ("wilf",)
    assert dict(rep.checked).keys() == {"wilf"}
    assert rep.passed


def test_property_subset_and_order():
    rep = campaign.run_campaign(6, ["type", "wilf"], jobs=1)
    # registry order, not request order
    assert rep.properties == ("wilf", "type")
    assert rep.passed


def test_unknown_property():
    with pytest.raises(UnknownProperty):
        campaign.run_campaign(4, ["bogus"])
    with pytest.raises(UnknownProperty):
        campaign.resolve_properties(["wilf", "nope"])


def test_resolve_all():
    assert campaign.resolve_properties("all") == campaign.PROPERTIES
    assert campaign.resolve_properties(None) == campaign.PROPERTIES
    assert campaign.resolve_properties(["all"]) == campaign.PROPERTIES


def test_bad_bounds():
    with pytest.raises(ValueError):
        campaign.run_campaign(-1)
    with pytest.raises(ValueError):
        campaign.run_campaign(4, "all", jobs=0)
    with pytest.raises(BoundTooLarge):
        campaign.run_campaign(99)


def test_parallel_serial_byte_identical():
    rep1 = campaign.run_campaign(12, "all", jobs=1)
    rep4 = campaign.run_campaign(12, "all", jobs=4)
    a = json.dumps(rep1.to_json_dict(include_wall_time=False), sort_keys=True)
    b = json.dumps(rep4.to_json_dict(include_wall_time=False), sort_keys=True)
    assert a == b


def test_parallel_small_bounds():
    # frontier deeper than the whole tree: every subtree is a single leaf
    rep = campaign.run_campaign(3, "all", jobs=2)
    assert rep.counts_by_genus == (1, 1, 2, 4)
    assert rep.passed


def test_report_json_shape(report12):
    d = report12.to_json_dict()
    assert d["max_genus"] == 12
    assert d["passed"] is True
    assert d["property_failures"] == []
    assert set(d["checked"]) == set(campaign.PROPERTIES)
    assert "wall_time" in d
    assert "wall_time" not in report12.to_json_dict(include_wall_time=False)
    # round-trips through json
    assert json.loads(report12.to_json())["counts_by_genus"] == \
        list(report12.counts_by_genus)


def test_wall_time_positive(report12):
    assert report12.wall_time > 0
