"""Depth criteria from monomial counts, with certifying witnesses.

The central criterion: for a normalized pair (I equigenerated in degree
d, J inside I generated in degree d+1), let r count the degree-d
monomials of I and s the degree-(d+1) monomials of I not in J.  When
r > s the depth of I/J is exactly d, in every characteristic, and the
proof is constructive: a cycle z = sum y_i f_i e_{sigma_i} in the top
multidegree of the Koszul complex whose class in homology is nonzero
for free degree reasons.  koszul_witness builds z and verifies both
facts with exact arithmetic.

check_theorem_main1 is the last-variable form for quotients S/I, and
check_corollary_str the equigenerated corollary bounding depth of an
ideal by its own count data.  stanley_min_pipeline ties the matching
certificate for minimal Stanley depth to the depth engine.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bitset import iter_bits
from .core import (
    FactorPair,
    Monomial,
    MonomialIdeal,
    ModulePredicate,
    enumerate_degree,
    factor_monomials,
    intersect,
    minimalize,
    restrict_to_subring,
    rho,
    zero_ideal,
)
from .errors import (
    DegenerateReductionError,
    NoLastVariableMultiplesError,
    NotApplicableError,
    NotEquigeneratedError,
    NotNormalizedError,
    PrincipalIdealError,
    SqfdepthError,
)
from .homology import DepthReport, build_complex, depth_factor
from .linalg import DEFAULT_FIELD, FieldSpec, element_to_str, kernel_vector


# ---------------------------------------------------------------- reduction

@dataclass(frozen=True, slots=True)
class NormalizedPair:
    """A pair reduced to its bottom two degrees, with the parts dropped.

    pair.I is generated by all degree-d monomials of the original I and
    pair.J by the degree-(d+1) monomials of the original J.  The
    reduction preserves the bottom-degree question, not the depth value:
    the reduced factor has depth d exactly when the original one does.
    """

    original: FactorPair
    pair: FactorPair
    d: int
    dropped_i: tuple[Monomial, ...]
    dropped_j: tuple[Monomial, ...]

    @property
    def changed(self) -> bool:
        return bool(self.dropped_i or self.dropped_j)


def is_normalized(pair: FactorPair) -> bool:
    """True when I is equigenerated and J is zero or equigenerated at d+1."""
    if not pair.I.is_equigenerated():
        return False
    if pair.J.is_zero:
        return True
    return pair.J.is_equigenerated() and pair.J.indeg() == pair.I.indeg() + 1


def normalize_pair(pair: FactorPair) -> NormalizedPair:
    """Strip generators above the bottom two degrees.

    The reduction keeps "depth equals the bottom degree d" invariant in
    both directions, which is all the downstream criteria conclude.

    Raises DegenerateReductionError when the reduction does not apply:
    a nonzero J with no degree-(d+1) part, a degree-(d+1) part that
    leaves the ideal of bottom-degree monomials, or J reaching down to
    degree d (then the pair has indeg J <= indeg I and a different
    bottom structure; no reduction is attempted).
    """
    d = pair.d()
    if not pair.J.is_zero and pair.J.indeg() <= d:
        raise DegenerateReductionError(
            "J has a generator at or below the bottom degree of I"
        )
    bottom = enumerate_degree(pair.I, d)
    ideal_i = minimalize(bottom, pair.n)
    dropped_i = tuple(g for g in pair.I.gens if g.degree > d)
    if pair.J.is_zero:
        return NormalizedPair(pair, FactorPair(ideal_i, zero_ideal(pair.n)), d, dropped_i, ())
    next_monos = enumerate_degree(pair.J, d + 1)
    if not next_monos:
        raise DegenerateReductionError(
            f"J is nonzero but has no degree-{d + 1} monomials"
        )
    outside = [b for b in next_monos if not ideal_i.contains(b)]
    if outside:
        raise DegenerateReductionError(
            f"degree-{d + 1} part of J is not inside the bottom-degree "
            f"ideal of I: {outside[0]}"
        )
    ideal_j = minimalize(next_monos, pair.n)
    dropped_j = tuple(g for g in pair.J.gens if g.degree > d + 1)
    return NormalizedPair(pair, FactorPair(ideal_i, ideal_j), d, dropped_i, dropped_j)


def _as_normalized(pair: FactorPair | NormalizedPair) -> tuple[FactorPair, int]:
    if isinstance(pair, NormalizedPair):
        return pair.pair, pair.d
    if not is_normalized(pair):
        raise NotNormalizedError(
            "pair is not reduced to its bottom two degrees; run normalize_pair"
        )
    return pair, pair.d()


# ----------------------------------------------------------- count criterion

@dataclass(frozen=True, slots=True)
class TheoremMainCheck:
    """Counts r, s for a normalized pair and whether r > s."""

    d: int
    r: int
    s: int
    applies: bool

    def to_json(self) -> dict:
        return {"rule": "theorem_main", "applies": self.applies,
                "data": {"d": self.d, "r": self.r, "s": self.s}}


def check_theorem_main(pair: FactorPair | NormalizedPair) -> TheoremMainCheck:
    """r = count of degree-d monomials of I, s = degree-(d+1) count of I
    minus that of J; r > s forces depth I/J = d in every characteristic."""
    p, d = _as_normalized(pair)
    r = rho(p.I, d)
    s = rho(p.I, d + 1) - rho(p.J, d + 1)
    return TheoremMainCheck(d, r, s, r > s)


# ------------------------------------------------------------ Koszul witness

@dataclass(frozen=True, slots=True)
class KoszulWitness:
    """An explicit nonzero homology class pinning the depth to d.

    The cycle is z = sum_i y_i f_i e_{sigma_i} where f_i runs over the
    degree-d generators, sigma_i is the complement of the support of
    f_i, and y solves the sign system epsilon y = 0 (one row per
    degree-(d+1) monomial of I outside J).  Verified on construction:
    y is nonzero, all residuals vanish, and the boundary of z in the
    full-multidegree complex is zero.  The class is nonzero because the
    complex has no cells at homological degree n - d + 1 in that
    multidegree, so z bounds nothing.
    """

    field: FieldSpec
    n: int
    d: int
    generators: tuple[Monomial, ...]
    complements: tuple[tuple[int, ...], ...]
    targets: tuple[Monomial, ...]
    epsilon: tuple[tuple[int, ...], ...]
    coefficients: tuple
    homological_degree: int

    def to_json(self) -> dict:
        return {
            "field": self.field.label,
            "d": self.d,
            "homological_degree": self.homological_degree,
            "terms": [
                {
                    "generator": list(f.variables),
                    "complement": list(sig),
                    "coefficient": element_to_str(y, self.field),
                }
                for f, sig, y in zip(
                    self.generators, self.complements, self.coefficients
                )
            ],
            "sign_rows": [list(row) for row in self.epsilon],
            "targets": [list(b.variables) for b in self.targets],
        }


def _epsilon_matrix(
    gens: tuple[Monomial, ...], targets: list[Monomial], n: int
) -> list[list[int]]:
    """Sign matrix of the cycle condition, one row per target monomial.

    Entry (k, i) is the signed coefficient with which generator f_i
    feeds the Koszul boundary term at target b_k: zero unless f_i
    divides b_k, otherwise the alternating sign of the missing variable
    inside the complement of f_i.
    """
    rows = []
    for b in targets:
        row = [0] * len(gens)
        for i, f in enumerate(gens):
            if f.mask & b.mask != f.mask:
                continue
            j_bit = b.mask ^ f.mask
            sigma = ((1 << n) - 1) ^ f.mask
            below = (sigma & (j_bit - 1)).bit_count()
            row[i] = 1 if below % 2 == 0 else -1
        rows.append(row)
    return rows


def koszul_witness(
    pair: FactorPair | NormalizedPair, field: FieldSpec = DEFAULT_FIELD
) -> KoszulWitness:
    """Construct and verify the depth-pinning cycle for a pair with r > s."""
    p, d = _as_normalized(pair)
    check = check_theorem_main(p)
    if not check.applies:
        raise NotApplicableError(
            f"count criterion fails: r={check.r} <= s={check.s}"
        )
    gens = p.I.gens
    n = p.n
    full = (1 << n) - 1
    targets = factor_monomials(p, d + 1)
    eps = _epsilon_matrix(gens, targets, n)
    y = kernel_vector(eps, len(gens), field)
    zero = Fraction(0) if field.is_rational else 0
    for k, row in enumerate(eps):
        acc = zero
        for c, v in zip(row, y):
            if field.is_rational:
                acc += c * v
            else:
                acc = (acc + c * v) % field.p
        if acc != zero:
            raise SqfdepthError(f"cycle residual nonzero at target {k}")

    level = n - d
    module = ModulePredicate.for_factor(p)
    cx = build_complex(module, full, field)
    basis = cx.bases[level]
    if len(basis) != len(gens):
        raise SqfdepthError("full-multidegree cell count does not match r")
    if level + 1 <= n and cx.bases[level + 1]:
        raise SqfdepthError("unexpected cells one level up; class could bound")
    position = {sig: t for t, sig in enumerate(basis)}
    vec = [zero] * len(basis)
    sigmas = []
    for i, f in enumerate(gens):
        sig = full ^ f.mask
        sigmas.append(tuple(b + 1 for b in iter_bits(sig)))
        vec[position[sig]] = y[i]
    if level > 0:
        columns = cx.boundaries[level]
        out = [zero] * len(cx.bases[level - 1])
        for c, value in enumerate(vec):
            if value == zero:
                continue
            for rpos, sign in columns[c]:
                if field.is_rational:
                    out[rpos] += sign * value
                else:
                    out[rpos] = (out[rpos] + sign * value) % field.p
        if any(v != zero for v in out):
            raise SqfdepthError("witness is not a cycle in the complex")

    return KoszulWitness(
        field=field,
        n=n,
        d=d,
        generators=gens,
        complements=tuple(sigmas),
        targets=tuple(targets),
        epsilon=tuple(tuple(row) for row in eps),
        coefficients=tuple(y),
        homological_degree=level,
    )


# -------------------------------------------------------- quick certificates

@dataclass(frozen=True, slots=True)
class RuleReport:
    """Outcome of one certificate rule on a normalized pair."""

    rule: str
    applies: bool
    data: dict

    def to_json(self) -> dict:
        return {"rule": self.rule, "applies": self.applies, "data": self.data}


def quick_certificates(pair: FactorPair | NormalizedPair) -> list[RuleReport]:
    """Cheap sufficient conditions that pin depth I/J to d.

    lemma_eq: some degree-d generator has no degree-(d+1) multiple
    outside J.  lemma_g: two generators whose lcm has degree d+1 and is
    the only such multiple of either.  prop_p: r > s and every
    generator has at most one multiple.  corollary_1 / prop_2: r > s
    with s <= 1 or s = 2.  prop_3: r > s in bottom degree 1.
    """
    p, d = _as_normalized(pair)
    gens = p.I.gens
    n = p.n
    full = (1 << n) - 1
    target_masks = {b.mask for b in factor_monomials(p, d + 1)}
    r = len(gens)
    s = len(target_masks)
    multiples = []
    for f in gens:
        ms = []
        for j in iter_bits(full ^ f.mask):
            cand = f.mask | (1 << j)
            if cand in target_masks:
                ms.append(cand)
        multiples.append(ms)

    reports = []

    hit = next((i for i, ms in enumerate(multiples) if not ms), None)
    reports.append(
        RuleReport(
            "lemma_eq",
            hit is not None,
            {"generator": list(gens[hit].variables)} if hit is not None else {},
        )
    )

    g_data: dict = {}
    g_applies = False
    for i in range(r):
        for j in range(i + 1, r):
            u = gens[i].mask | gens[j].mask
            if u.bit_count() != d + 1 or u not in target_masks:
                continue
            if set(multiples[i]) | set(multiples[j]) == {u}:
                g_applies = True
                g_data = {
                    "generators": [
                        list(gens[i].variables),
                        list(gens[j].variables),
                    ],
                    "lcm": list(Monomial(u).variables),
                }
                break
        if g_applies:
            break
    reports.append(RuleReport("lemma_g", g_applies, g_data))

    reports.append(
        RuleReport(
            "prop_p",
            r > s and all(len(ms) <= 1 for ms in multiples),
            {"r": r, "s": s},
        )
    )
    reports.append(
        RuleReport("corollary_1", r > s and s <= 1, {"r": r, "s": s})
    )
    reports.append(RuleReport("prop_2", r > s and s == 2, {"r": r, "s": s}))
    reports.append(RuleReport("prop_3", r > s and d == 1, {"r": r, "s": s, "d": d}))
    return reports


# ------------------------------------------------------ last-variable split

@dataclass(frozen=True, slots=True)
class LastVariableSplit:
    """I = U*x_n + V over the subring without x_n.

    u is the colon of I by x_n restricted to the first n-1 variables
    (None when that colon is the unit ideal, i.e. x_n itself is in I);
    v collects the generators of I that avoid x_n.
    """

    u: MonomialIdeal | None
    v: MonomialIdeal
    u_is_unit: bool
    n: int


def decompose_last_variable(ideal: MonomialIdeal) -> LastVariableSplit:
    """Split off the last variable: I = x_n*U + V with U, V over n-1 vars."""
    n = ideal.n
    if n < 2:
        raise SqfdepthError("need at least two variables to split one off")
    bit = 1 << (n - 1)
    if any(g.mask == bit for g in ideal.gens):
        v = restrict_to_subring(
            MonomialIdeal(n, tuple(g for g in ideal.gens if g.mask != bit)),
            range(1, n),
        ).ideal
        return LastVariableSplit(None, v, True, n)
    u_gens = [Monomial(g.mask & ~bit) for g in ideal.gens if g.mask & bit]
    v_gens = [g for g in ideal.gens if not g.mask & bit]
    u = minimalize(u_gens, n - 1)
    v = MonomialIdeal(n - 1, tuple(v_gens))
    return LastVariableSplit(u, v, False, n)


def join_last_variable(u: MonomialIdeal, v: MonomialIdeal) -> MonomialIdeal:
    """Inverse of the split: x_m*U + V over one more variable."""
    if u.n != v.n:
        raise SqfdepthError("U and V must live in the same subring")
    m = u.n + 1
    bit = 1 << (m - 1)
    gens = [Monomial(g.mask | bit) for g in u.gens] + list(v.gens)
    return minimalize(gens, m)


@dataclass(frozen=True, slots=True)
class Main1Check:
    """Last-variable count criterion for a quotient S/I.

    r counts the degree-d monomials of I divisible by the last
    variable; u and v are the split parts over the subring, and the
    criterion compares r against rho_d(U) - rho_d of the intersection,
    both counted in the subring.  When it applies, depth S/I = d - 1
    and the subring factor (U+V)/V has depth d - 1 as well.
    """

    d: int
    r: int
    rho_u: int | None
    rho_u_cap_v: int | None
    applies: bool
    u_is_unit: bool
    u: MonomialIdeal | None
    v: MonomialIdeal | None

    def to_json(self) -> dict:
        return {
            "rule": "theorem_main1",
            "applies": self.applies,
            "data": {
                "d": self.d,
                "r": self.r,
                "rho_u": self.rho_u,
                "rho_u_cap_v": self.rho_u_cap_v,
                "u_is_unit": self.u_is_unit,
            },
        }


def check_theorem_main1(ideal: MonomialIdeal) -> Main1Check:
    """Count criterion on the last-variable split of an ideal.

    Requires some degree-d monomial of I divisible by x_n, where d is
    the initial degree.  All counts are taken over the subring in the
    first n-1 variables.
    """
    if ideal.is_zero:
        raise SqfdepthError("zero ideal has no initial degree")
    n = ideal.n
    if n < 2:
        raise SqfdepthError("need at least two variables")
    d = ideal.indeg()
    bit = 1 << (n - 1)
    tops = [m for m in enumerate_degree(ideal, d) if m.mask & bit]
    r = len(tops)
    if r == 0:
        raise NoLastVariableMultiplesError(
            f"no degree-{d} monomial of the ideal is divisible by x{n}"
        )
    stripped = [Monomial(m.mask ^ bit) for m in tops]
    if any(f.mask == 0 for f in stripped):
        v = restrict_to_subring(
            MonomialIdeal(n, tuple(g for g in ideal.gens if g.mask != bit)),
            range(1, n),
        ).ideal
        return Main1Check(d, r, None, None, False, True, None, v)
    u = minimalize(stripped, n - 1)
    v_gens = [g for g in ideal.gens if not g.mask & bit]
    v = MonomialIdeal(n - 1, tuple(v_gens))
    rho_u = rho(u, d)
    rho_cap = rho(intersect(u, v), d)
    return Main1Check(d, r, rho_u, rho_cap, r > rho_u - rho_cap, False, u, v)


@dataclass(frozen=True, slots=True)
class CorollaryStrCheck:
    """Equigenerated criterion: mu >= rho_{d+1} forces depth I = d."""

    d: int
    mu: int
    rho_next: int
    applies: bool

    def to_json(self) -> dict:
        return {"rule": "corollary_str", "applies": self.applies,
                "data": {"d": self.d, "mu": self.mu,
                         "rho_next": self.rho_next}}


def check_corollary_str(ideal: MonomialIdeal) -> CorollaryStrCheck:
    """Compare the number of generators against the next-degree count."""
    if ideal.is_zero:
        raise SqfdepthError("zero ideal")
    if not ideal.is_equigenerated():
        raise NotEquigeneratedError("criterion needs an equigenerated ideal")
    if ideal.mu <= 1:
        raise PrincipalIdealError("criterion needs at least two generators")
    d = ideal.indeg()
    rho_next = rho(ideal, d + 1)
    return CorollaryStrCheck(d, ideal.mu, rho_next, ideal.mu >= rho_next)


# ------------------------------------------------------------------ pipeline

@dataclass(frozen=True, slots=True)
class PipelineResult:
    """Joint minimal-Stanley-depth and depth answer for a normalized pair."""

    d: int
    sdepth_is_d: bool
    certificate: object
    witness_ideal: MonomialIdeal | None
    depth_report: DepthReport
    depths_agree: bool | None

    def to_json(self) -> dict:
        doc = {
            "d": self.d,
            "sdepth_equals_indeg": self.sdepth_is_d,
            "certificate": self.certificate.to_json(),
            "depth": self.depth_report.to_json(),
            "depths_agree": self.depths_agree,
        }
        if self.witness_ideal is not None:
            doc["witness_ideal"] = [
                list(g.variables) for g in self.witness_ideal.gens
            ]
        return doc


def stanley_min_pipeline(
    pair: FactorPair | NormalizedPair, field: FieldSpec = DEFAULT_FIELD
) -> PipelineResult:
    """Decide sdepth = d by matching, compute depth, compare the two.

    When the Hall violator pins the Stanley depth to d, its witness
    ideal I' is re-checked against the count inequality rho_d(I') >
    rho_{d+1}(I') - rho_{d+1}(I' cap J), and depths_agree records
    whether the homology depth equals d as well.
    """
    from .stanley import sdepth_equals_indeg

    p, d = _as_normalized(pair)
    decision = sdepth_equals_indeg(p)
    report = depth_factor(p.I, p.J, field)
    agree: bool | None = None
    if decision.answer:
        witness = decision.witness_ideal
        assert witness is not None
        lhs = rho(witness, d)
        rhs = rho(witness, d + 1) - rho(intersect(witness, p.J), d + 1)
        if not lhs > rhs:
            raise SqfdepthError("pipeline witness fails its count inequality")
        agree = report.depth == d
    return PipelineResult(
        d=d,
        sdepth_is_d=decision.answer,
        certificate=decision.certificate,
        witness_ideal=decision.witness_ideal,
        depth_report=report,
        depths_agree=agree,
    )
