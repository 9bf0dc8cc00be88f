"""Seeded random instances and property scans with JSONL reports.

Instances are generated deterministically from (params, index), so any
record can be replayed bit-for-bit later; each record also embeds the
full instance, making report files self-contained.  A scan evaluates
one named rule over a stream of instances and collects hypothesis,
conclusion and violation flags per instance.  A violation means the
hypothesis held but the conclusion failed, i.e. a genuine counterexample
to the property under test.
"""
from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Callable

from .core import (
    FactorPair,
    Monomial,
    MonomialIdeal,
    enumerate_degree,
    minimalize,
    pair_from_json,
    pair_to_json,
    sum_ideals,
)
from .bitset import fixed_popcount_masks
from .errors import (
    GuardExceededError,
    NoLastVariableMultiplesError,
    SqfdepthError,
    UnsatisfiableError,
)
from .homology import depth_factor, depth_ideal, depth_quotient
from .linalg import DEFAULT_FIELD, RATIONALS, FieldSpec
from .stanley import brute_force_sdepth, sdepth_equals_indeg
from .theorems import (
    check_corollary_str,
    check_theorem_main,
    check_theorem_main1,
    stanley_min_pipeline,
)

SCAN_N_GUARD = 12
GF2 = FieldSpec.prime(2)


@dataclass(frozen=True, slots=True)
class InstanceParams:
    """Shape of the random instances: ambient size, degrees, counts.

    force_r_gt_s biases the subideal so that the count criterion's
    hypothesis r > s holds on every instance, for stratified scans of
    rules that are vacuous otherwise.
    """

    n: int = 6
    d: int = 2
    k_min: int = 2
    k_max: int = 5
    density: float = 0.5
    seed: int = 0
    count: int = 100
    force_r_gt_s: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.d < self.n:
            raise SqfdepthError(f"need 1 <= d < n, got d={self.d} n={self.n}")
        if self.n > 63:
            raise SqfdepthError("ambient limited to 63 variables")
        if not 1 <= self.k_min <= self.k_max:
            raise SqfdepthError("need 1 <= k_min <= k_max")
        if not 0.0 <= self.density <= 1.0:
            raise SqfdepthError("density must lie in [0, 1]")
        if self.count < 0:
            raise SqfdepthError("count must be nonnegative")
        if self.k_min > math.comb(self.n, self.d):
            raise UnsatisfiableError(
                f"cannot pick {self.k_min} distinct degree-{self.d} "
                f"monomials in {self.n} variables"
            )

    def to_json(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_json(cls, obj: dict) -> "InstanceParams":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in obj.items() if k in known})


def _rng(params: InstanceParams, index: int) -> random.Random:
    key = (
        f"{params.seed}:{index}:{params.n}:{params.d}:{params.k_min}:"
        f"{params.k_max}:{params.density!r}:{params.force_r_gt_s}"
    )
    return random.Random(key)


def random_pair(params: InstanceParams, index: int) -> FactorPair:
    """Deterministic normalized pair number `index` of the stream.

    I is generated by k random degree-d monomials; J collects a random
    subset of the degree-(d+1) monomials of I, each joining with
    probability `density` (or just few enough to force r > s).
    """
    rng = _rng(params, index)
    pool = list(fixed_popcount_masks(params.n, params.d))
    k = rng.randint(params.k_min, min(params.k_max, len(pool)))
    ideal_i = minimalize(
        (Monomial(m) for m in rng.sample(pool, k)), params.n
    )
    multiples = enumerate_degree(ideal_i, params.d + 1)
    if params.force_r_gt_s:
        r = ideal_i.mu
        low = max(0, len(multiples) - (r - 1))
        take = rng.randint(low, len(multiples))
        chosen = rng.sample(multiples, take)
    else:
        chosen = [b for b in multiples if rng.random() < params.density]
    ideal_j = minimalize(chosen, params.n)
    return FactorPair(ideal_i, ideal_j)


def random_ideal(params: InstanceParams, index: int) -> MonomialIdeal:
    """The ideal half of the pair stream, for ideal-level rules."""
    return random_pair(params, index).I


# -------------------------------------------------------------------- rules
#
# A rule maps (pair, field) to (hypothesis, conclusion, data).  The
# conclusion is None when the hypothesis fails; data carries whatever
# counts were computed along the way, for reports and figures.

RuleFn = Callable[[FactorPair, FieldSpec], tuple[bool, bool | None, dict]]


def _rule_theorem_main(pair: FactorPair, field: FieldSpec):
    chk = check_theorem_main(pair)
    data = {"d": chk.d, "r": chk.r, "s": chk.s}
    report = depth_factor(pair.I, pair.J, field)
    data["depth"] = report.depth
    if not chk.applies:
        return False, None, data
    return True, report.depth == chk.d, data


def _rule_theorem_main1(pair: FactorPair, field: FieldSpec):
    ideal = pair.I
    if ideal.n < 2:
        return False, None, {}
    try:
        chk = check_theorem_main1(ideal)
    except NoLastVariableMultiplesError:
        return False, None, {"r": 0}
    data = {"d": chk.d, "r": chk.r, "rho_u": chk.rho_u,
            "rho_u_cap_v": chk.rho_u_cap_v, "u_is_unit": chk.u_is_unit}
    if chk.u_is_unit or not chk.applies:
        return False, None, data
    assert chk.u is not None and chk.v is not None
    quotient = depth_quotient(ideal, field).depth
    split = depth_factor(sum_ideals(chk.u, chk.v), chk.v, field).depth
    data["depth"] = quotient
    data["split_factor_depth"] = split
    return True, quotient == chk.d - 1 and split == chk.d - 1, data


def _rule_corollary_str(pair: FactorPair, field: FieldSpec):
    ideal = pair.I
    if ideal.is_zero or not ideal.is_equigenerated() or ideal.mu <= 1:
        return False, None, {}
    chk = check_corollary_str(ideal)
    data = {"d": chk.d, "mu": chk.mu, "rho_next": chk.rho_next}
    if not chk.applies:
        return False, None, data
    depth = depth_ideal(ideal, field).depth
    data["depth"] = depth
    return True, depth == chk.d, data


def _rule_stanley_min(pair: FactorPair, field: FieldSpec):
    result = stanley_min_pipeline(pair, field)
    data = {"d": result.d, "sdepth_equals_indeg": result.sdepth_is_d,
            "depth": result.depth_report.depth}
    if not result.sdepth_is_d:
        return False, None, data
    return True, result.depths_agree is True, data


def _rule_lemma_d(pair: FactorPair, field: FieldSpec):
    d = pair.d()
    report = depth_factor(pair.I, pair.J, field)
    data = {"d": d, "depth": report.depth}
    return True, report.depth >= d, data


def _rule_depth_ideal_vs_quotient(pair: FactorPair, field: FieldSpec):
    ideal = pair.I
    di = depth_ideal(ideal, field).depth
    dq = depth_quotient(ideal, field).depth
    data = {"depth": di, "quotient_depth": dq}
    return True, di == dq + 1, data


def _rule_char_independence(pair: FactorPair, field: FieldSpec):
    chk = check_theorem_main(pair)
    data = {"d": chk.d, "r": chk.r, "s": chk.s}
    if not chk.applies:
        return False, None, data
    depths = {}
    for f in (RATIONALS, GF2, DEFAULT_FIELD):
        depths[f.label] = depth_factor(pair.I, pair.J, f).depth
    data["depths"] = depths
    data["depth"] = depths[DEFAULT_FIELD.label]
    return True, all(v == chk.d for v in depths.values()), data


def _rule_nice_vs_bruteforce(pair: FactorPair, field: FieldSpec):
    size = 0
    for deg in range(pair.n + 1):
        for mask in fixed_popcount_masks(pair.n, deg):
            if pair.I.contains_mask(mask) and not pair.J.contains_mask(mask):
                size += 1
                if size > 20:
                    return False, None, {"poset_size": ">20"}
    decision = sdepth_equals_indeg(pair)
    brute = brute_force_sdepth(pair)
    data = {"d": decision.d, "matching_answer": decision.answer,
            "brute_sdepth": brute, "poset_size": size}
    return True, (brute == decision.d) == decision.answer, data


RULES: dict[str, RuleFn] = {
    "theorem_main": _rule_theorem_main,
    "theorem_main1": _rule_theorem_main1,
    "corollary_str": _rule_corollary_str,
    "stanley_min": _rule_stanley_min,
    "lemma_d": _rule_lemma_d,
    "depth_ideal_vs_quotient": _rule_depth_ideal_vs_quotient,
    "char_independence": _rule_char_independence,
    "nice_vs_bruteforce": _rule_nice_vs_bruteforce,
}


# ------------------------------------------------------------------ records

@dataclass(frozen=True, slots=True)
class InstanceRecord:
    index: int
    rule: str
    instance: dict
    hypothesis: bool
    conclusion: bool | None
    violation: bool
    data: dict
    elapsed_ms: float

    def to_json(self) -> dict:
        return {
            "type": "record",
            "index": self.index,
            "rule": self.rule,
            "instance": self.instance,
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "violation": self.violation,
            "data": self.data,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass(frozen=True, slots=True)
class ScanReport:
    rule: str
    params: InstanceParams
    field_label: str
    records: tuple[InstanceRecord, ...]
    elapsed_ms: float

    @property
    def violations(self) -> list[InstanceRecord]:
        return [r for r in self.records if r.violation]

    @property
    def hypothesis_count(self) -> int:
        return sum(1 for r in self.records if r.hypothesis)

    def header_json(self) -> dict:
        return {
            "type": "header",
            "rule": self.rule,
            "field": self.field_label,
            "params": self.params.to_json(),
        }

    def summary_json(self) -> dict:
        return {
            "type": "summary",
            "rule": self.rule,
            "count": len(self.records),
            "hypothesis_count": self.hypothesis_count,
            "violation_count": len(self.violations),
            "violations": [r.index for r in self.violations],
            "elapsed_ms": self.elapsed_ms,
        }


def evaluate_rule(
    rule: str, pair: FactorPair, field: FieldSpec, index: int = 0
) -> InstanceRecord:
    """Run one rule on one pair and wrap the outcome as a record."""
    try:
        fn = RULES[rule]
    except KeyError:
        raise SqfdepthError(f"unknown rule {rule!r}") from None
    start = time.perf_counter()
    hypothesis, conclusion, data = fn(pair, field)
    elapsed = (time.perf_counter() - start) * 1000.0
    return InstanceRecord(
        index=index,
        rule=rule,
        instance=pair_to_json(pair),
        hypothesis=hypothesis,
        conclusion=conclusion,
        violation=bool(hypothesis) and conclusion is False,
        data=data,
        elapsed_ms=round(elapsed, 3),
    )


def scan(
    rule: str,
    params: InstanceParams,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    force: bool = False,
) -> ScanReport:
    """Evaluate a rule over the deterministic instance stream."""
    if rule not in RULES:
        raise SqfdepthError(f"unknown rule {rule!r}")
    if params.n > SCAN_N_GUARD and not force:
        raise GuardExceededError(
            f"scan over n={params.n} > {SCAN_N_GUARD} needs force=True"
        )
    start = time.perf_counter()
    records = []
    for index in range(params.count):
        pair = random_pair(params, index)
        records.append(evaluate_rule(rule, pair, field, index))
    elapsed = (time.perf_counter() - start) * 1000.0
    return ScanReport(rule, params, field.label, tuple(records), round(elapsed, 3))


def replay_record(record: dict, field: FieldSpec) -> InstanceRecord:
    """Re-evaluate a stored record from its embedded instance."""
    if record.get("type") != "record":
        raise SqfdepthError("not a record line")
    pair = pair_from_json(record["instance"])
    return evaluate_rule(record["rule"], pair, field, int(record["index"]))


# -------------------------------------------------------------------- JSONL

def write_report(report: ScanReport, path: str | Path) -> Path:
    """One header line, one line per record, one summary line."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        fh.write(json.dumps(report.header_json(), sort_keys=True) + "\n")
        for record in report.records:
            fh.write(json.dumps(record.to_json(), sort_keys=True) + "\n")
        fh.write(json.dumps(report.summary_json(), sort_keys=True) + "\n")
    return path


def read_report(path: str | Path) -> dict:
    """Parse a JSONL report into {'header': ..., 'records': [...],
    'summary': ...}; tolerates a missing summary (interrupted scan)."""
    header = None
    records = []
    summary = None
    with Path(path).open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            kind = obj.get("type")
            if kind == "header":
                header = obj
            elif kind == "record":
                records.append(obj)
            elif kind == "summary":
                summary = obj
            else:
                raise SqfdepthError(f"unknown report line type {kind!r}")
    if header is None:
        raise SqfdepthError("report has no header line")
    return {"header": header, "records": records, "summary": summary}
