import json

import pytest

from k4holo.errors import ConfigurationError, PreconditionError
from k4holo.pipeline import (GOLDEN_PAIRS, GROUP_NAMES, SURVEY_FORMS,
                             builtin_groups, classify_all, enumerate_candidates,
                             klein_four_subgroups, report_to_dict,
                             report_to_markdown, resolve_theta, sigma2_elements,
                             symmetric_pair_survey)
from k4holo.reductive import fixed_subalgebra
from k4holo.rootsys import build_root_system
from k4holo.toral import UnitaryPairData, embed_su6_sp1

E6 = build_root_system("E", 6)
GROUPS = builtin_groups()
REPORT = classify_all(E6)


def test_builtin_groups_structure():
    assert tuple(GROUPS) == GROUP_NAMES
    for g in GROUPS.values():
        assert g.order == 8 and g.rank == 3


def test_builtin_groups_other_modulus():
    alt = builtin_groups(modulus=8)
    for name in GROUP_NAMES:
        assert alt[name].elements == GROUPS[name].elements
    with pytest.raises(ConfigurationError):
        builtin_groups(modulus=6)


def test_realisation_words_match_embedding_data():
    # the generator words carry exactly the diagonal data they were built from
    m22 = embed_su6_sp1(UnitaryPairData(4, (2, 2, 0, 2, 2, 0), 0))
    assert GROUPS["x1x2x4"].element("x4") == m22
    m2_p4 = embed_su6_sp1(UnitaryPairData(4, (2, 2, 0, 0, 0, 0), 0))
    assert GROUPS["x1x4x5"].element("x1x4") == m2_p4
    i3_i3_i = embed_su6_sp1(UnitaryPairData(4, (1, 1, 1, 3, 3, 3), 1))
    assert GROUPS["y1y3y4"].element("y1y4") == i3_i3_i
    minus_one = embed_su6_sp1(UnitaryPairData(4, (0, 0, 0, 0, 0, 0), 2))
    assert GROUPS["y1y3y4"].element("y1y3") == minus_one
    assert GROUPS["y3y4y5"].element("y3y4") == minus_one
    i5_i = embed_su6_sp1(UnitaryPairData(4, (1, 1, 1, 1, 1, 3), 1))
    assert GROUPS["y3y4y5"].element("y3") == i5_i


def test_sigma2_census():
    counts = tuple(len(sigma2_elements(GROUPS[n], E6)) for n in GROUP_NAMES)
    assert counts == (1, 3, 3, 5)


def test_klein_subgroup_enumeration():
    subs = klein_four_subgroups(GROUPS["x1x2x4"])
    assert len(subs) == 7
    theta = GROUPS["x1x2x4"].element("x4")
    avoiding = [s for s in subs if theta not in s.chars]
    assert len(avoiding) == 4


def test_rank3_fixed_types():
    expected = {
        "x1x2x4": ("2su(2)+4c", 10),
        "x1x4x5": ("4su(2)+2c", 14),
        "y1y3y4": ("su(3)+su(2)+3c", 14),
        "y3y4y5": ("su(4)+3c", 18),
    }
    for name, (render, dim) in expected.items():
        chars = [c for _, c in GROUPS[name].nonidentity()]
        fs = fixed_subalgebra(chars, E6)
        assert (fs.rtype.render(), fs.dim) == (render, dim)


RANK2_DUALS = {
    ("x1x2x4", ("x1", "x2")): "2su(3)+2c",
    ("y1y3y4", ("y1y3", "y3y4")): "2su(3)+2c",
    ("x1x4x5", ("x1", "x4")): "su(4)+2su(2)+c",
    ("y1y3y4", ("y1", "y4")): "su(4)+2su(2)+c",
    ("y3y4y5", ("y3y4", "y5")): "su(4)+2su(2)+c",
    ("y1y3y4", ("y1y3", "y4")): "su(5)+2c",
    ("y3y4y5", ("y3", "y4")): "su(5)+2c",
    ("y3y4y5", ("y4", "y3y5")): "su(5)+2c",
    ("y3y4y5", ("y4", "y5")): "so(8)+2c",
}


def test_rank2_compact_duals_with_stated_groupings():
    for (gname, labels), expected in RANK2_DUALS.items():
        g = GROUPS[gname]
        fs = fixed_subalgebra([g.element(l) for l in labels], E6)
        assert fs.rtype.render() == expected, (gname, labels)


def test_group_without_sigma2_elements():
    # every rank-3 toral group turns out to contain a sigma2 element, so the
    # empty-candidate path can only be witnessed at rank 2
    from k4holo.toral import generate_group
    g1 = GROUPS["x1x2x4"]
    sub = generate_group([("x1", g1.element("x1")), ("x2", g1.element("x2"))])
    assert sigma2_elements(sub, E6) == ()


def test_candidate_multiplicities():
    assert REPORT.counts == {"x1x2x4": 4, "x1x4x5": 12, "y1y3y4": 12, "y3y4y5": 20}
    assert len(REPORT.candidates) == 48


def test_group_i_candidates_all_same_form():
    cands = [c for c in REPORT.candidates if c.group_name == "x1x2x4"]
    assert len(cands) == 4
    assert {c.theta_label for c in cands} == {"x4"}
    assert {c.real_form.render() for c in cands} == {"2su(2,1)+2c"}
    assert {c.gamma_labels for c in cands} == {
        ("x1", "x2"), ("x1", "x2x4"), ("x2", "x1x4"), ("x1x2", "x1x4")}


def test_named_candidate_from_y1y3y4():
    match = [c for c in REPORT.candidates
             if c.group_name == "y1y3y4" and c.theta_label == "y3"
             and c.gamma_labels == ("y1", "y4")]
    assert len(match) == 1
    cand = match[0]
    assert cand.compact_dual.render() == "su(4)+2su(2)+c"
    assert cand.real_form.render() == "su(3,1)+su(1,1)+su(2)+c"
    assert cand.maximal_compact.render() == "su(3)+su(2)+3c"


def test_candidate_invariants():
    for c in REPORT.candidates:
        assert c.real_form.complexification() == c.compact_dual
        assert c.gamma.order == 4
        theta = GROUPS[c.group_name].element(c.theta_label)
        assert theta not in c.gamma.elements
        # maximal compact dimension equals the compact parts of the form
        compact = sum(l.compact_part_dim for l in c.real_form.ideals)
        compact += len(c.real_form.center)
        assert c.maximal_compact.dim == compact


def test_distinct_pairs_match_golden_list():
    assert REPORT.verified
    assert len(REPORT.distinct_pairs) == 8
    assert set(REPORT.distinct_pairs) == set(GOLDEN_PAIRS)
    assert REPORT.missing == () and REPORT.unexpected == ()


def test_report_deterministic():
    again = classify_all(E6)
    assert report_to_dict(again, E6) == report_to_dict(REPORT, E6)


def test_report_dict_schema():
    doc = report_to_dict(REPORT, E6)
    assert set(doc) == {"groups", "candidates", "distinct_pairs",
                        "verified_against_theorem24"}
    assert doc["verified_against_theorem24"] is True
    assert len(doc["groups"]) == 4
    for c in doc["candidates"]:
        assert set(c) == {"group", "theta", "gamma", "compact_dual",
                          "real_form", "maximal_compact"}
        assert len(c["gamma"]) == 2
    json.dumps(doc)  # JSON-serialisable with no further conversion


def test_report_markdown_layout():
    text = report_to_markdown(REPORT)
    for pair in GOLDEN_PAIRS:
        assert pair in text
    assert "verified: true" in text
    assert "MISSING" not in text and "UNEXPECTED" not in text


def test_enumerate_rejects_wrong_rank():
    from k4holo.toral import generate_group
    g = GROUPS["x1x2x4"]
    small = generate_group([("x1", g.element("x1")), ("x2", g.element("x2"))])
    with pytest.raises(PreconditionError):
        enumerate_candidates(small, E6)


def test_resolve_theta():
    name, label, char = resolve_theta("x4", GROUPS, E6)
    assert (name, label) == ("x1x2x4", "x4")
    name, label, char = resolve_theta("x1x4x5:x4", GROUPS, E6)
    assert (name, label) == ("x1x4x5", "x4")
    with pytest.raises(PreconditionError):
        resolve_theta("x1", GROUPS, E6)  # sigma1-class element
    with pytest.raises(PreconditionError):
        resolve_theta("nope", GROUPS, E6)


def test_survey_values_and_coverage():
    seen = set()
    for gname in GROUP_NAMES:
        for theta in sigma2_elements(GROUPS[gname], E6):
            res = symmetric_pair_survey(f"{gname}:{theta}", E6)
            assert res.theta_group == gname
            for g, per in res.values.items():
                assert len(per) == 7
                for form in per.values():
                    rendered = form.render("survey")
                    assert rendered in SURVEY_FORMS
                    seen.add(rendered)
            # theta's own fixed algebra is all compact
            own = res.values[gname][theta]
            assert own.render("survey") == "so(10)+so(2)"
    assert seen == set(SURVEY_FORMS)


def test_survey_sigma1_values_hit_both_forms_for_every_theta():
    from k4holo.reductive import ConjClass, classify_involution
    for gname in GROUP_NAMES:
        for theta in sigma2_elements(GROUPS[gname], E6):
            res = symmetric_pair_survey(f"{gname}:{theta}", E6)
            sigma1_values = set()
            for g in GROUP_NAMES:
                for label, form in res.values[g].items():
                    char = GROUPS[g].element(label)
                    if classify_involution(char, E6) is ConjClass.SIGMA1:
                        sigma1_values.add(form.render("survey"))
            assert sigma1_values == {"su(4,2)+su(2)", "su(5,1)+sl(2,R)"}
