"""Square-free monomials, monomial ideals, factor pairs and module predicates.

Conventions, used consistently across the package:

* variables are 1-based in every public interface; internally a monomial is
  a bitset with bit j-1 standing for x_j;
* the ambient ring always has n <= 63 variables so a monomial fits in one
  machine word;
* generating sets are kept canonical: minimal (an antichain under
  divisibility), sorted by (degree, bitset value) ascending;
* the zero ideal is the empty generating set, the unit ideal is rejected.

All types here are immutable, so they are safe to share between threads
and to use as dictionary keys.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .bitset import (
    fixed_popcount_masks,
    indices_from_mask,
    iter_bits,
    mask_from_indices,
)
from .errors import (
    IndexOutOfRangeError,
    ParseError,
    SqfdepthError,
    UnitIdealError,
)

MAX_VARS = 63


@dataclass(frozen=True, slots=True)
class Monomial:
    """A square-free monomial, stored as a variable-index bitset."""

    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError("negative monomial mask")

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def variables(self) -> tuple[int, ...]:
        """1-based variable indices, ascending."""
        return indices_from_mask(self.mask)

    def divides(self, other: "Monomial") -> bool:
        return self.mask & other.mask == self.mask

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(self.mask | other.mask)

    def sort_key(self) -> tuple[int, int]:
        """Canonical order: degree first, then bitset value."""
        return (self.degree, self.mask)

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.mask == 0:
            return "1"
        return "*".join(f"x{j}" for j in self.variables)


def monomial(*variables: int, n: int = MAX_VARS) -> Monomial:
    """Convenience constructor from 1-based variable indices."""
    return Monomial(mask_from_indices(variables, n))


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """An ideal generated by square-free monomials, in canonical form.

    Construct through minimalize()/parse_ideal(); the constructor only
    verifies canonical form rather than repairing it.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VARS:
            raise IndexOutOfRangeError(
                f"ambient variable count {self.n} outside [1..{MAX_VARS}]"
            )
        top = 1 << self.n
        prev: Monomial | None = None
        for g in self.gens:
            if g.mask == 0:
                raise UnitIdealError("degree-0 generator makes the unit ideal")
            if g.mask >= top:
                raise IndexOutOfRangeError(
                    f"generator {g} does not fit in {self.n} variables"
                )
            if prev is not None and not prev.sort_key() < g.sort_key():
                raise ValueError("generators not in canonical order")
            prev = g
        for g in self.gens:
            for h in self.gens:
                if g is not h and g.divides(h):
                    raise ValueError("generators are not an antichain")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def mu(self) -> int:
        """Number of minimal generators."""
        return len(self.gens)

    def indeg(self) -> int:
        """Smallest generator degree; undefined for the zero ideal."""
        if not self.gens:
            raise SqfdepthError("the zero ideal has no initial degree")
        return self.gens[0].degree

    def gen_masks(self) -> tuple[int, ...]:
        return tuple(g.mask for g in self.gens)

    def contains_mask(self, mask: int) -> bool:
        return any(g.mask & mask == g.mask for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        """Membership of a square-free monomial."""
        return self.contains_mask(m.mask)

    def is_equigenerated(self) -> bool:
        return bool(self.gens) and self.gens[0].degree == self.gens[-1].degree

    def __str__(self) -> str:
        return format_ideal(self)


def minimalize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Canonical ideal from an arbitrary generating set.

    Drops duplicates and non-minimal generators, sorts canonically and
    validates variable ranges.  An empty set yields the zero ideal.
    """
    top = 1 << n  # n validated by the MonomialIdeal constructor below
    masks = []
    for g in gens:
        if g.mask >= top:
            raise IndexOutOfRangeError(
                f"generator {g} does not fit in {n} variables"
            )
        if g.mask == 0:
            raise UnitIdealError("degree-0 generator makes the unit ideal")
        masks.append(g.mask)
    masks.sort(key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in masks:
        if not any(k & m == k for k in kept):
            kept.append(m)
    kept.sort(key=lambda m: (m.bit_count(), m))
    return MonomialIdeal(n, tuple(Monomial(m) for m in kept))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    """Membership test: some minimal generator divides m."""
    return ideal.contains(m)


def enumerate_degree(ideal: MonomialIdeal, d: int) -> list[Monomial]:
    """All degree-d square-free monomials of the ideal, canonical order."""
    if d < 0:
        return []
    return [
        Monomial(m)
        for m in fixed_popcount_masks(ideal.n, d)
        if ideal.contains_mask(m)
    ]


def rho(ideal: MonomialIdeal, d: int) -> int:
    """Count of degree-d square-free monomials in the ideal."""
    if d < 0:
        return 0
    return sum(1 for m in fixed_popcount_masks(ideal.n, d) if ideal.contains_mask(m))


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection ideal, generated by pairwise least common multiples."""
    if a.n != b.n:
        raise SqfdepthError("intersection needs a common ambient ring")
    if a.is_zero or b.is_zero:
        return zero_ideal(a.n)
    return minimalize((g.lcm(h) for g in a.gens for h in b.gens), a.n)


def sum_ideals(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Ideal sum, i.e. the union of the generating sets minimalized."""
    if a.n != b.n:
        raise SqfdepthError("sum needs a common ambient ring")
    return minimalize(list(a.gens) + list(b.gens), a.n)


def colon_by_variable(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """The colon ideal (I : x_j), still inside the same ambient ring.

    For square-free input this just strips x_j from every generator.
    Raises UnitIdealError when x_j itself generates, since the colon would
    be the whole ring.
    """
    if not 1 <= j <= ideal.n:
        raise IndexOutOfRangeError(f"variable index {j} outside [1..{ideal.n}]")
    bit = 1 << (j - 1)
    out = []
    for g in ideal.gens:
        stripped = g.mask & ~bit
        if stripped == 0:
            raise UnitIdealError(f"colon by x{j} gives the unit ideal")
        out.append(Monomial(stripped))
    return minimalize(out, ideal.n)


@dataclass(frozen=True, slots=True)
class Restriction:
    """Result of restricting an ideal to a subring: the re-indexed ideal
    plus the record of which original variable each new index came from."""

    ideal: MonomialIdeal
    variables: tuple[int, ...]  # variables[k] = original index of x_{k+1}


def restrict_to_subring(ideal: MonomialIdeal, variables: Iterable[int]) -> Restriction:
    """Keep the generators supported inside the given variable subset.

    The subset is re-indexed to [1..m] in ascending original order; the
    mapping is recorded on the result.
    """
    subset = sorted(set(variables))
    if not subset:
        raise SqfdepthError("cannot restrict to an empty variable set")
    sub_mask = mask_from_indices(subset, ideal.n)
    position = {v: k for k, v in enumerate(subset)}
    kept = []
    for g in ideal.gens:
        if g.mask & ~sub_mask:
            continue
        new_mask = 0
        for p in iter_bits(g.mask):
            new_mask |= 1 << position[p + 1]
        kept.append(Monomial(new_mask))
    return Restriction(minimalize(kept, len(subset)), tuple(subset))


@dataclass(frozen=True, slots=True)
class FactorPair:
    """An ordered pair of ideals J strictly inside I, the data of I/J.

    J may be zero.  Every generator of J must belong to I and the two
    ideals must differ, so the factor module is nonzero.
    """

    I: MonomialIdeal
    J: MonomialIdeal

    def __post_init__(self) -> None:
        if self.I.n != self.J.n:
            raise SqfdepthError("pair needs a common ambient ring")
        for g in self.J.gens:
            if not self.I.contains(g):
                raise SqfdepthError(f"generator {g} of J lies outside I")
        if self.I == self.J:
            raise SqfdepthError("I and J coincide, the factor is zero")

    @property
    def n(self) -> int:
        return self.I.n

    def d(self) -> int:
        """Initial degree of I, the reference degree of the pair."""
        return self.I.indeg()


def factor_pair(I: MonomialIdeal, J: MonomialIdeal | None = None) -> FactorPair:
    if J is None:
        J = zero_ideal(I.n)
    return FactorPair(I, J)


def factor_monomials(pair: FactorPair, d: int) -> list[Monomial]:
    """Degree-d square-free monomials lying in I but not in J."""
    return [
        Monomial(m)
        for m in fixed_popcount_masks(pair.n, d)
        if pair.I.contains_mask(m) and not pair.J.contains_mask(m)
    ]


class Role(str, Enum):
    IDEAL = "ideal"
    QUOTIENT = "quotient"
    FACTOR = "factor"


@dataclass(frozen=True, slots=True)
class ModulePredicate:
    """A square-free module given by its multidegree membership function.

    member(b) answers whether the component at square-free multidegree b
    is nonzero.  The three roles cover the ideal I, the quotient S/I and
    the factor I/J; each is convex on the subset lattice (membership of
    a and c with a <= b <= c forces membership of b), which is what makes
    the per-multidegree complexes in the homology module actual complexes.
    """

    n: int
    role: Role
    ideal: MonomialIdeal
    sub: MonomialIdeal | None = None

    def __post_init__(self) -> None:
        if self.ideal.n != self.n:
            raise SqfdepthError("predicate ambient mismatch")
        if self.role is Role.FACTOR:
            if self.sub is None:
                raise SqfdepthError("factor predicate needs the subideal")
            if self.sub.n != self.n:
                raise SqfdepthError("predicate ambient mismatch")
        elif self.sub is not None:
            raise SqfdepthError("subideal only makes sense for factors")

    @classmethod
    def for_ideal(cls, ideal: MonomialIdeal) -> "ModulePredicate":
        return cls(ideal.n, Role.IDEAL, ideal)

    @classmethod
    def for_quotient(cls, ideal: MonomialIdeal) -> "ModulePredicate":
        return cls(ideal.n, Role.QUOTIENT, ideal)

    @classmethod
    def for_factor(cls, pair: FactorPair) -> "ModulePredicate":
        return cls(pair.n, Role.FACTOR, pair.I, pair.J)

    def member_mask(self, mask: int) -> bool:
        if self.role is Role.IDEAL:
            return self.ideal.contains_mask(mask)
        if self.role is Role.QUOTIENT:
            return not self.ideal.contains_mask(mask)
        return self.ideal.contains_mask(mask) and not self.sub.contains_mask(mask)

    def member(self, m: Monomial) -> bool:
        if m.mask >= 1 << self.n:
            raise IndexOutOfRangeError(f"{m} does not fit in {self.n} variables")
        return self.member_mask(m.mask)

    @property
    def is_zero_module(self) -> bool:
        if self.role is Role.IDEAL:
            return self.ideal.is_zero
        if self.role is Role.QUOTIENT:
            return False  # the unit ideal is unrepresentable
        return all(self.sub.contains(g) for g in self.ideal.gens)

    def support_masks(self) -> tuple[int, ...]:
        """Generator supports; used to skip irrelevant multidegrees."""
        return self.ideal.gen_masks()


# ---------------------------------------------------------------------------
# text and JSON grammars


_MONOMIAL_TOKEN = re.compile(r"^x(\d+)$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse 'x1*x6' style monomial text."""
    factors = [t.strip() for t in text.split("*")]
    indices = []
    for tok in factors:
        m = _MONOMIAL_TOKEN.match(tok)
        if m is None:
            raise ParseError(f"bad monomial factor {tok!r} in {text!r}")
        indices.append(int(m.group(1)))
    if len(set(indices)) != len(indices):
        raise ParseError(f"repeated variable in square-free monomial {text!r}")
    try:
        return Monomial(mask_from_indices(indices, n))
    except IndexOutOfRangeError as exc:
        raise ParseError(str(exc)) from exc


def parse_ideal(text: str, n: int) -> MonomialIdeal:
    """Parse comma-separated generator text; '0' denotes the zero ideal."""
    body = text.strip()
    if body == "0":
        return zero_ideal(n)
    if not body:
        raise ParseError("empty ideal text (use '0' for the zero ideal)")
    gens = [parse_monomial(part, n) for part in body.split(",")]
    return minimalize(gens, n)


def format_ideal(ideal: MonomialIdeal) -> str:
    if ideal.is_zero:
        return "0"
    return ", ".join(str(g) for g in ideal.gens)


def ideal_to_lists(ideal: MonomialIdeal) -> list[list[int]]:
    return [list(g.variables) for g in ideal.gens]


def ideal_from_lists(lists: Iterable[Iterable[int]], n: int) -> MonomialIdeal:
    gens = []
    for entry in lists:
        try:
            indices = [int(v) for v in entry]
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad generator entry {entry!r}") from exc
        try:
            gens.append(Monomial(mask_from_indices(indices, n)))
        except IndexOutOfRangeError as exc:
            raise ParseError(str(exc)) from exc
    return minimalize(gens, n)


def pair_to_json(pair: FactorPair) -> dict:
    return {
        "n": pair.n,
        "I": ideal_to_lists(pair.I),
        "J": ideal_to_lists(pair.J),
    }


def pair_from_json(obj: dict) -> FactorPair:
    """Read {'n': ..., 'I': [[...], ...], 'J': [[...], ...]} (J optional)."""
    if not isinstance(obj, dict):
        raise ParseError("pair JSON must be an object")
    try:
        n = int(obj["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("pair JSON needs an integer 'n'") from exc
    if "I" not in obj:
        raise ParseError("pair JSON needs an 'I' generator list")
    I = ideal_from_lists(obj["I"], n)
    J = ideal_from_lists(obj.get("J") or [], n)
    try:
        return FactorPair(I, J)
    except SqfdepthError as exc:
        raise ParseError(str(exc)) from exc


def load_pair_text(text: str) -> FactorPair:
    """Parse a JSON pair document from a string."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return pair_from_json(obj)
