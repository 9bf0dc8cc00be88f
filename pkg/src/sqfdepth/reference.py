"""Named reference instances with frozen expected values.

The instances are small factors with known depth, Stanley depth and
certificate data, wired into verify_examples() as a regression table.
Every expected value here was computed independently (by hand on the
small cases, by exhaustive enumeration elsewhere) before being frozen,
so the table guards the homology engine, the count criteria and the
matching certificates against regressions in one sweep.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    FactorPair,
    MonomialIdeal,
    colon_by_variable,
    format_ideal,
    parse_ideal,
)
from .errors import SqfdepthError
from .homology import depth_factor, depth_ideal, depth_quotient
from .linalg import RATIONALS, FieldSpec
from .stanley import brute_force_sdepth, hall_certificate, build_graph, sdepth_equals_indeg
from .theorems import (
    check_corollary_str,
    check_theorem_main,
    check_theorem_main1,
    join_last_variable,
    koszul_witness,
    normalize_pair,
    quick_certificates,
)

GF2 = FieldSpec.prime(2)


# ------------------------------------------------------------- the instances

def witness_pair() -> FactorPair:
    """Five generators against eleven, one target short: r=5 > s=4.

    The smallest pair in the collection where the count criterion needs
    a genuinely mixed cycle (all five generators carry a coefficient).
    """
    I = parse_ideal("x1*x6, x1*x5, x1*x3, x3*x4, x2*x4", 6)
    J = parse_ideal(
        "x1*x2*x4, x1*x2*x5, x1*x2*x3, x1*x2*x6, x1*x3*x6, x1*x4*x5,"
        " x1*x4*x6, x2*x4*x5, x2*x4*x6, x3*x4*x5, x3*x4*x6",
        6,
    )
    return FactorPair(I, J)


def tight_pair() -> FactorPair:
    """r = s = 3 and depth d+1: the count criterion is tight."""
    I = parse_ideal("x1*x3, x2*x4, x1*x4", 4)
    J = parse_ideal("x2*x3*x4", 4)
    return FactorPair(I, J)


def slack_pair() -> FactorPair:
    """r = s = 6 yet depth d: the converse of the criterion fails."""
    I = parse_ideal("x1*x5, x2*x3, x3*x4, x1*x6, x1*x4, x1*x2", 6)
    J = parse_ideal(
        "x1*x2*x4, x1*x2*x5, x1*x3*x5, x1*x3*x6, x1*x4*x6, x2*x3*x5,"
        " x2*x3*x6, x3*x4*x5, x3*x4*x6",
        6,
    )
    return FactorPair(I, J)


def principal_pair() -> FactorPair:
    """Principal ideal modulo one degree-2 multiple, depth 3 over n=4."""
    return FactorPair(parse_ideal("x2", 4), parse_ideal("x2*x4", 4))


def principal_pair_extended() -> FactorPair:
    """Same with an extra degree-3 generator in J; the depth drops to 2,
    showing the higher-degree part of J cannot simply be discarded."""
    return FactorPair(parse_ideal("x2", 4), parse_ideal("x2*x4, x1*x2*x3", 4))


def joined_ideal() -> MonomialIdeal:
    """tight_pair joined along a fifth variable: x5*I + J as one ideal."""
    p = tight_pair()
    return join_last_variable(p.I, p.J)


def simplex_vertices_pair() -> FactorPair:
    """All three variables modulo one quadric, depth 1 over n=3."""
    return FactorPair(parse_ideal("x1, x2, x3", 3), parse_ideal("x1*x2", 3))


def crossing_pair() -> FactorPair:
    """Three quadrics modulo two cubics with r=3 > s=2, depth 2 over n=4."""
    return FactorPair(
        parse_ideal("x1*x4, x2*x3, x3*x4", 4),
        parse_ideal("x1*x2*x3, x1*x2*x4", 4),
    )


def triangle_ideal() -> MonomialIdeal:
    """Edge ideal of the triangle; the last-variable criterion applies."""
    return parse_ideal("x1*x2, x1*x3, x2*x3", 3)


def projective_plane_ideal() -> MonomialIdeal:
    """Stanley-Reisner ideal of the 6-vertex triangulation of the real
    projective plane: ten cubic non-faces, depth sensitive to char 2."""
    return parse_ideal(
        "x1*x2*x3, x1*x2*x4, x1*x3*x6, x1*x4*x5, x1*x5*x6,"
        " x2*x3*x5, x2*x4*x6, x2*x5*x6, x3*x4*x5, x3*x4*x6",
        6,
    )


def named_instances() -> dict[str, object]:
    """Instances by name, for the CLI and the tests."""
    return {
        "witness_pair": witness_pair(),
        "tight_pair": tight_pair(),
        "slack_pair": slack_pair(),
        "principal_pair": principal_pair(),
        "principal_pair_extended": principal_pair_extended(),
        "joined_ideal": joined_ideal(),
        "simplex_vertices_pair": simplex_vertices_pair(),
        "crossing_pair": crossing_pair(),
        "triangle_ideal": triangle_ideal(),
        "projective_plane_ideal": projective_plane_ideal(),
    }


# --------------------------------------------------------- regression table

@dataclass(frozen=True, slots=True)
class ExampleResult:
    name: str
    passed: bool
    expected: object
    actual: object

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass(frozen=True, slots=True)
class ExamplesReport:
    results: tuple[ExampleResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "all_passed": self.all_passed,
            "results": [r.to_json() for r in self.results],
        }


def _check_witness_depth():
    return 2, depth_factor(witness_pair().I, witness_pair().J).depth


def _check_witness_counts():
    chk = check_theorem_main(witness_pair())
    return {"r": 5, "s": 4, "applies": True}, {
        "r": chk.r, "s": chk.s, "applies": chk.applies,
    }


def _check_witness_targets():
    from .core import factor_monomials

    got = [str(b) for b in factor_monomials(witness_pair(), 3)]
    return ["x1*x3*x4", "x2*x3*x4", "x1*x3*x5", "x1*x5*x6"], got


def _check_witness_cycle():
    wit = koszul_witness(witness_pair(), RATIONALS)
    y = wit.coefficients
    order = [str(f) for f in wit.generators]
    expected_order = ["x1*x3", "x2*x4", "x3*x4", "x1*x5", "x1*x6"]
    v = (Fraction(-1), Fraction(1), Fraction(-1), Fraction(-1), Fraction(1))
    proportional = (
        any(c != 0 for c in y)
        and all(y[a] * v[b] == y[b] * v[a] for a in range(5) for b in range(5))
    )
    return (
        {"order": expected_order, "proportional_to_-1,1,-1,-1,1": True},
        {"order": order, "proportional_to_-1,1,-1,-1,1": proportional},
    )


def _check_witness_sdepth():
    decision = sdepth_equals_indeg(witness_pair())
    brute = brute_force_sdepth(witness_pair())
    return {"sdepth_equals_indeg": True, "sdepth": 2}, {
        "sdepth_equals_indeg": decision.answer, "sdepth": brute,
    }


def _check_tight_depth():
    p = tight_pair()
    return 3, depth_factor(p.I, p.J).depth


def _check_tight_counts():
    chk = check_theorem_main(tight_pair())
    return {"r": 3, "s": 3, "applies": False}, {
        "r": chk.r, "s": chk.s, "applies": chk.applies,
    }


def _check_tight_sdepth():
    cert = hall_certificate(build_graph(tight_pair()))
    brute = brute_force_sdepth(tight_pair())
    return {"complete_matching": True, "sdepth": 3}, {
        "complete_matching": cert.complete, "sdepth": brute,
    }


def _check_slack_depth():
    p = slack_pair()
    rep = depth_factor(p.I, p.J)
    return {"depth": 2, "pd": 4}, {"depth": rep.depth, "pd": rep.pd}


def _check_slack_counts():
    chk = check_theorem_main(slack_pair())
    return {"r": 6, "s": 6, "applies": False}, {
        "r": chk.r, "s": chk.s, "applies": chk.applies,
    }


def _check_principal_depths():
    a = principal_pair()
    b = principal_pair_extended()
    return {"modulo_one": 3, "modulo_two": 2}, {
        "modulo_one": depth_factor(a.I, a.J).depth,
        "modulo_two": depth_factor(b.I, b.J).depth,
    }


def _check_principal_reduction():
    np_ = normalize_pair(principal_pair_extended())
    return {"J": "x2*x4", "dropped": ["x1*x2*x3"]}, {
        "J": format_ideal(np_.pair.J),
        "dropped": [str(g) for g in np_.dropped_j],
    }


def _check_joined_depth():
    return 4, depth_ideal(joined_ideal()).depth


def _check_joined_corollary():
    chk = check_corollary_str(joined_ideal())
    return {"mu": 4, "rho_next": 5, "applies": False}, {
        "mu": chk.mu, "rho_next": chk.rho_next, "applies": chk.applies,
    }


def _check_joined_main1():
    chk = check_theorem_main1(joined_ideal())
    return (
        {"r": 3, "rho_u": 4, "rho_u_cap_v": 1, "applies": False},
        {"r": chk.r, "rho_u": chk.rho_u, "rho_u_cap_v": chk.rho_u_cap_v,
         "applies": chk.applies},
    )


def _check_joined_colon():
    got = format_ideal(colon_by_variable(joined_ideal(), 5))
    return "x1*x3, x1*x4, x2*x4", got


def _check_simplex_vertices():
    p = simplex_vertices_pair()
    rules = {r.rule: r.applies for r in quick_certificates(p)}
    return {"depth": 1, "prop_3": True}, {
        "depth": depth_factor(p.I, p.J).depth, "prop_3": rules["prop_3"],
    }


def _check_crossing():
    p = crossing_pair()
    chk = check_theorem_main(p)
    rules = {r.rule: r.applies for r in quick_certificates(p)}
    return (
        {"depth": 2, "r": 3, "s": 2, "applies": True, "prop_2": True},
        {"depth": depth_factor(p.I, p.J).depth, "r": chk.r, "s": chk.s,
         "applies": chk.applies, "prop_2": rules["prop_2"]},
    )


def _check_triangle_main1():
    from .core import sum_ideals

    ideal = triangle_ideal()
    chk = check_theorem_main1(ideal)
    quotient_depth = depth_quotient(ideal).depth
    assert chk.u is not None and chk.v is not None
    split_depth = depth_factor(sum_ideals(chk.u, chk.v), chk.v).depth
    return (
        {"r": 2, "rho_u": 1, "rho_u_cap_v": 1, "applies": True,
         "quotient_depth": 1, "split_factor_depth": 1},
        {"r": chk.r, "rho_u": chk.rho_u, "rho_u_cap_v": chk.rho_u_cap_v,
         "applies": chk.applies, "quotient_depth": quotient_depth,
         "split_factor_depth": split_depth},
    )


def _check_projective_plane():
    ideal = projective_plane_ideal()
    return {"q": 3, "fp:2": 2}, {
        "q": depth_quotient(ideal, RATIONALS).depth,
        "fp:2": depth_quotient(ideal, GF2).depth,
    }


_CASES = {
    "witness_pair_depth": _check_witness_depth,
    "witness_pair_counts": _check_witness_counts,
    "witness_pair_targets": _check_witness_targets,
    "witness_pair_cycle": _check_witness_cycle,
    "witness_pair_sdepth": _check_witness_sdepth,
    "tight_pair_depth": _check_tight_depth,
    "tight_pair_counts": _check_tight_counts,
    "tight_pair_sdepth": _check_tight_sdepth,
    "slack_pair_depth": _check_slack_depth,
    "slack_pair_counts": _check_slack_counts,
    "principal_pair_depths": _check_principal_depths,
    "principal_pair_reduction": _check_principal_reduction,
    "joined_ideal_depth": _check_joined_depth,
    "joined_ideal_corollary": _check_joined_corollary,
    "joined_ideal_main1": _check_joined_main1,
    "joined_ideal_colon": _check_joined_colon,
    "simplex_vertices_depth": _check_simplex_vertices,
    "crossing_pair_depth": _check_crossing,
    "triangle_main1": _check_triangle_main1,
    "projective_plane_depths": _check_projective_plane,
}


def example_names() -> list[str]:
    return list(_CASES)


def verify_examples(names: list[str] | None = None) -> ExamplesReport:
    """Run the regression table, all cases or a selection by name."""
    selected = example_names() if names is None else names
    results = []
    for name in selected:
        try:
            case = _CASES[name]
        except KeyError:
            raise SqfdepthError(f"unknown example {name!r}") from None
        expected, actual = case()
        results.append(ExampleResult(name, expected == actual, expected, actual))
    return ExamplesReport(tuple(results))
