"""Count criteria, cycle witnesses, splits, and the decision pipeline."""
from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from strategies import ideals, normalized_pairs, pairs
from verifiers import check_koszul_witness
from sqfdepth import (
    FactorPair,
    InstanceParams,
    Monomial,
    check_corollary_str,
    check_theorem_main,
    check_theorem_main1,
    depth_factor,
    depth_ideal,
    depth_quotient,
    koszul_witness,
    minimalize,
    monomial,
    normalize_pair,
    parse_ideal,
    quick_certificates,
    random_pair,
    reference,
    stanley_min_pipeline,
)
from sqfdepth.core import enumerate_degree, format_ideal, rho, sum_ideals
from sqfdepth.errors import (
    DegenerateReductionError,
    NoLastVariableMultiplesError,
    NotApplicableError,
    NotEquigeneratedError,
    NotNormalizedError,
    PrincipalIdealError,
    SqfdepthError,
)
from sqfdepth.linalg import RATIONALS, FieldSpec
from sqfdepth.theorems import (
    decompose_last_variable,
    is_normalized,
    join_last_variable,
)

GF2 = FieldSpec.prime(2)


# ----------------------------------------------------------- normalization

def test_is_normalized():
    assert is_normalized(reference.witness_pair())
    assert is_normalized(reference.crossing_pair())
    assert not is_normalized(reference.principal_pair_extended())
    assert is_normalized(FactorPair(parse_ideal("x1*x2", 3), parse_ideal("0", 3)))


def test_normalize_identity_on_normalized_input():
    out = normalize_pair(reference.witness_pair())
    assert not out.changed
    assert out.pair == reference.witness_pair()
    assert out.d == 2


def test_normalize_strips_high_degrees():
    out = normalize_pair(reference.principal_pair_extended())
    assert out.changed
    assert format_ideal(out.pair.J) == "x2*x4"
    assert [str(g) for g in out.dropped_j] == ["x1*x2*x3"]
    mixed = FactorPair(
        parse_ideal("x1*x2, x3*x4*x5", 5), parse_ideal("x1*x2*x3", 5)
    )
    out = normalize_pair(mixed)
    assert format_ideal(out.pair.I) == "x1*x2"
    assert [str(g) for g in out.dropped_i] == ["x3*x4*x5"]


def test_normalize_degenerate_cases():
    # J reaches the bottom degree of I
    with pytest.raises(DegenerateReductionError):
        normalize_pair(FactorPair(parse_ideal("x1, x2", 3), parse_ideal("x2", 3)))
    # nonzero J with no monomials one degree up
    with pytest.raises(DegenerateReductionError):
        normalize_pair(
            FactorPair(parse_ideal("x1", 4), parse_ideal("x1*x2*x3", 4))
        )
    # the degree-(d+1) part of J escapes the bottom-degree ideal of I
    with pytest.raises(DegenerateReductionError):
        normalize_pair(
            FactorPair(
                parse_ideal("x1*x2, x3*x4*x5", 5), parse_ideal("x3*x4*x5", 5)
            )
        )


@given(pairs(min_n=3, max_n=5))
@settings(max_examples=25)
def test_normalization_preserves_the_bottom_degree_question(pair):
    try:
        out = normalize_pair(pair)
    except DegenerateReductionError:
        return
    d = out.d
    original = depth_factor(pair.I, pair.J).depth
    reduced = depth_factor(out.pair.I, out.pair.J).depth
    assert (original == d) == (reduced == d)


# --------------------------------------------------------- count criterion

def test_count_criterion_reference_values():
    chk = check_theorem_main(reference.witness_pair())
    assert (chk.d, chk.r, chk.s, chk.applies) == (2, 5, 4, True)
    chk = check_theorem_main(reference.slack_pair())
    assert (chk.r, chk.s, chk.applies) == (6, 6, False)
    assert chk.to_json() == {
        "rule": "theorem_main",
        "applies": False,
        "data": {"d": 2, "r": 6, "s": 6},
    }


@given(normalized_pairs(max_n=6))
@settings(max_examples=25)
def test_count_criterion_matches_bruteforce_counts(pair):
    chk = check_theorem_main(pair)
    ig = list(pair.I.gen_masks())
    jg = list(pair.J.gen_masks())
    d = pair.d()
    assert chk.r == oracles.rho_count(ig, pair.n, d)
    assert chk.s == oracles.rho_count(ig, pair.n, d + 1) - oracles.rho_count(
        jg, pair.n, d + 1
    )
    assert chk.applies == (chk.r > chk.s)


def test_count_criterion_rejects_unnormalized_input():
    with pytest.raises(NotNormalizedError):
        check_theorem_main(reference.principal_pair_extended())


@given(normalized_pairs(max_n=6, force_r_gt_s=True), st.sampled_from(["q", "fp:2", "fp:32003"]))
@settings(max_examples=25)
def test_count_criterion_pins_depth_in_every_characteristic(pair, label):
    chk = check_theorem_main(pair)
    assert chk.applies
    assert depth_factor(pair.I, pair.J, FieldSpec.parse(label)).depth == chk.d


# ------------------------------------------------------------ cycle witness

def test_witness_reference_cycle():
    pair = reference.witness_pair()
    for field in (RATIONALS, GF2, FieldSpec.prime(32003)):
        wit = koszul_witness(pair, field)
        assert [str(f) for f in wit.generators] == [
            "x1*x3", "x2*x4", "x3*x4", "x1*x5", "x1*x6",
        ]
        assert wit.homological_degree == 4
        check_koszul_witness(pair, wit)
        # complements really are the complements of the generators
        for f, sigma in zip(wit.generators, wit.complements):
            assert set(sigma) == set(range(1, 7)) - set(f.variables)
    wit = koszul_witness(pair, RATIONALS)
    y = wit.coefficients
    v = (-1, 1, -1, -1, 1)
    assert all(y[a] * v[b] == y[b] * v[a] for a in range(5) for b in range(5))


def test_witness_refused_when_counts_fail():
    with pytest.raises(NotApplicableError):
        koszul_witness(reference.tight_pair())
    with pytest.raises(NotApplicableError):
        koszul_witness(reference.slack_pair(), RATIONALS)


@given(normalized_pairs(max_n=6, force_r_gt_s=True), st.sampled_from(["q", "fp:2"]))
@settings(max_examples=25)
def test_witness_verifies_on_forced_instances(pair, label):
    field = FieldSpec.parse(label)
    wit = koszul_witness(pair, field)
    check_koszul_witness(pair, wit)
    doc = wit.to_json()
    assert doc["field"] == field.label
    assert len(doc["terms"]) == pair.I.mu
    assert doc["homological_degree"] == pair.n - pair.d()


# ------------------------------------------------------- quick certificates

def _rules(pair):
    return {r.rule: r for r in quick_certificates(pair)}


def test_rule_lemma_eq_and_corollary_1():
    # the single generator has every multiple covered
    pair = FactorPair(
        parse_ideal("x1*x2", 4), parse_ideal("x1*x2*x3, x1*x2*x4", 4)
    )
    rules = _rules(pair)
    assert rules["lemma_eq"].applies
    assert rules["lemma_eq"].data == {"generator": [1, 2]}
    assert rules["corollary_1"].applies  # r=1 > s=0
    assert rules["prop_p"].applies
    assert not rules["prop_3"].applies  # d=2
    assert depth_factor(pair.I, pair.J).depth == 2


def test_rule_lemma_g_isolated():
    """Shared unique lcm without any of the count rules firing."""
    I = parse_ideal("x1*x2, x1*x3, x4*x5", 5)
    J = parse_ideal("x1*x2*x4, x1*x2*x5, x1*x3*x4, x1*x3*x5, x1*x4*x5", 5)
    pair = FactorPair(I, J)
    rules = _rules(pair)
    assert rules["lemma_g"].applies
    assert rules["lemma_g"].data["lcm"] == [1, 2, 3]
    assert not rules["lemma_eq"].applies
    assert not rules["prop_p"].applies  # x4*x5 keeps two multiples
    assert not rules["corollary_1"].applies and not rules["prop_2"].applies
    assert not rules["prop_3"].applies  # r = s = 3
    assert depth_factor(pair.I, pair.J).depth == 2
    assert oracles.depth_factor_naive(
        5, list(I.gen_masks()), list(J.gen_masks()), 0
    ) == 2


def test_rule_prop_p_with_three_targets():
    I = parse_ideal("x1*x2, x3*x4, x5*x6, x7*x8", 8)
    keep = {
        monomial(1, 2, 3, n=8).mask,
        monomial(3, 4, 5, n=8).mask,
        monomial(5, 6, 7, n=8).mask,
    }
    J = minimalize(
        (m for m in enumerate_degree(I, 3) if m.mask not in keep), 8
    )
    pair = FactorPair(I, J)
    rules = _rules(pair)
    assert rules["prop_p"].applies
    assert rules["prop_p"].data == {"r": 4, "s": 3}
    assert not rules["corollary_1"].applies and not rules["prop_2"].applies
    assert depth_factor(pair.I, pair.J).depth == 2


def test_rule_prop_2_and_prop_3_reference():
    rules = _rules(reference.crossing_pair())
    assert rules["prop_2"].applies and not rules["prop_3"].applies
    rules = _rules(reference.simplex_vertices_pair())
    assert rules["prop_3"].applies
    assert rules["prop_3"].data == {"r": 3, "s": 2, "d": 1}


@given(normalized_pairs(max_n=6))
@settings(max_examples=40)
def test_applicable_rules_pin_the_depth(pair):
    reports = quick_certificates(pair)
    assert [r.rule for r in reports] == [
        "lemma_eq", "lemma_g", "prop_p", "corollary_1", "prop_2", "prop_3",
    ]
    if any(r.applies for r in reports):
        assert depth_factor(pair.I, pair.J).depth == pair.d()
    for r in reports:
        doc = r.to_json()
        assert set(doc) == {"rule", "applies", "data"}


# ------------------------------------------------------ last-variable split

@given(ideals(min_n=2, max_n=6))
def test_split_and_join_roundtrip(ideal):
    split = decompose_last_variable(ideal)
    n = ideal.n
    if split.u_is_unit:
        assert split.u is None
        rebuilt = minimalize(
            [monomial(n, n=n)] + [Monomial(g.mask) for g in split.v.gens], n
        )
    else:
        assert split.u is not None
        rebuilt = join_last_variable(split.u, split.v)
    assert rebuilt == ideal


@given(ideals(min_n=2, max_n=5), ideals(min_n=2, max_n=5))
def test_join_then_split_recovers_the_free_part(u, v):
    if u.n != v.n or u.is_zero:
        return
    joined = join_last_variable(u, v)
    if joined.is_zero:
        return
    split = decompose_last_variable(joined)
    assert not split.u_is_unit
    assert split.v == minimalize(v.gens, v.n)


def test_join_reconstructs_reference_ideal():
    tight = reference.tight_pair()
    assert join_last_variable(tight.I, tight.J) == reference.joined_ideal()


# -------------------------------------------------- last-variable criterion

def test_main1_on_triangle():
    chk = check_theorem_main1(reference.triangle_ideal())
    assert (chk.d, chk.r, chk.rho_u, chk.rho_u_cap_v) == (2, 2, 1, 1)
    assert chk.applies and not chk.u_is_unit
    assert depth_quotient(reference.triangle_ideal()).depth == 1
    split_depth = depth_factor(sum_ideals(chk.u, chk.v), chk.v).depth
    assert split_depth == 1
    assert chk.to_json()["data"]["r"] == 2


def test_main1_on_joined_ideal():
    chk = check_theorem_main1(reference.joined_ideal())
    assert (chk.r, chk.rho_u, chk.rho_u_cap_v) == (3, 4, 1)
    assert not chk.applies


def test_main1_unit_split():
    chk = check_theorem_main1(parse_ideal("x3, x1*x2", 3))
    assert chk.u_is_unit and not chk.applies
    assert chk.u is None
    assert format_ideal(chk.v) == "x1*x2"


def test_main1_requires_last_variable_multiples():
    with pytest.raises(NoLastVariableMultiplesError):
        check_theorem_main1(parse_ideal("x1*x2", 3))
    with pytest.raises(SqfdepthError):
        check_theorem_main1(parse_ideal("0", 3))
    with pytest.raises(SqfdepthError):
        check_theorem_main1(parse_ideal("x1", 1))


@given(ideals(min_n=3, max_n=6))
@settings(max_examples=40)
def test_main1_conclusions_hold_when_it_applies(ideal):
    try:
        chk = check_theorem_main1(ideal)
    except NoLastVariableMultiplesError:
        return
    if not chk.applies or chk.u_is_unit:
        return
    assert depth_quotient(ideal).depth == chk.d - 1
    assert depth_factor(sum_ideals(chk.u, chk.v), chk.v).depth == chk.d - 1


# --------------------------------------------------- equigenerated criterion

def test_corollary_reference_values():
    chk = check_corollary_str(reference.joined_ideal())
    assert (chk.mu, chk.rho_next, chk.applies) == (4, 5, False)
    full = minimalize(enumerate_degree(parse_ideal("x1, x2, x3, x4", 4), 2), 4)
    chk = check_corollary_str(full)
    assert (chk.d, chk.mu, chk.rho_next, chk.applies) == (2, 6, 4, True)
    assert depth_ideal(full).depth == 2
    assert oracles.depth_ideal_naive(4, list(full.gen_masks()), 0) == 2


def test_corollary_refusals():
    with pytest.raises(NotEquigeneratedError):
        check_corollary_str(parse_ideal("x1, x2*x3", 3))
    with pytest.raises(PrincipalIdealError):
        check_corollary_str(parse_ideal("x1*x2", 3))
    with pytest.raises(SqfdepthError):
        check_corollary_str(parse_ideal("0", 3))


@given(st.integers(0, 400))
@settings(max_examples=30)
def test_corollary_pins_ideal_depth(seed):
    params = InstanceParams(n=5, d=3, k_min=5, k_max=10, seed=seed, count=1)
    ideal = random_pair(params, 0).I
    if ideal.mu <= 1:
        return
    chk = check_corollary_str(ideal)
    if chk.applies:
        assert depth_ideal(ideal).depth == chk.d
        assert depth_ideal(ideal, GF2).depth == chk.d


# ------------------------------------------------------------------ pipeline

def test_pipeline_on_reference_pairs():
    result = stanley_min_pipeline(reference.witness_pair())
    assert result.sdepth_is_d and result.depths_agree is True
    assert result.witness_ideal is not None
    doc = result.to_json()
    assert doc["sdepth_equals_indeg"] is True
    assert doc["certificate"]["type"] == "violator"
    assert doc["depth"]["depth"] == 2

    result = stanley_min_pipeline(reference.tight_pair())
    assert not result.sdepth_is_d
    assert result.depths_agree is None
    assert result.witness_ideal is None
    assert "witness_ideal" not in result.to_json()


def test_pipeline_accepts_normalized_wrapper_and_rejects_raw():
    out = normalize_pair(reference.principal_pair_extended())
    result = stanley_min_pipeline(out)
    assert result.d == 1
    with pytest.raises(NotNormalizedError):
        stanley_min_pipeline(reference.principal_pair_extended())


@given(normalized_pairs(max_n=5))
@settings(max_examples=20)
def test_pipeline_consistency(pair):
    result = stanley_min_pipeline(pair)
    d = pair.d()
    assert result.d == d
    assert result.depth_report.depth >= d
    if result.sdepth_is_d:
        assert result.depths_agree == (result.depth_report.depth == d)
        witness = result.witness_ideal
        assert witness is not None
        lhs = rho(witness, d)
        assert lhs == oracles.rho_count(list(witness.gen_masks()), pair.n, d)
