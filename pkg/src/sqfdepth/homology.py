"""Depth via homology of square-free multidegree complexes.

For a square-free module M (ideal, quotient, or factor, given as a
ModulePredicate) and a square-free multidegree a, the component of the
Koszul homology in multidegree a is computed from a finite complex whose
basis at homological index i is

    { sigma subset of a : |sigma| = i and M has a nonzero component
      at multidegree a minus sigma }

with boundary entry (sigma minus {j}, sigma) equal to (-1)**(k+1), k the
1-based rank of j among the elements of sigma, and zero whenever the
target multidegree has no component.  Convexity of the membership
predicate makes these genuine complexes.  Homology of square-free modules
is concentrated in square-free multidegrees, so the projective dimension
is the largest i with a nonzero component over some a, and depth is n
minus that, by the usual Auslander-Buchsbaum count.

The search runs i from n downward and stops at the first nonzero
homology, scanning multidegrees smallest-first so the reported witness is
deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bitset import (
    fixed_popcount_masks,
    indices_from_mask,
    iter_bits,
    mask_from_indices,
    subsets_of_mask,
)
from .core import FactorPair, ModulePredicate, MonomialIdeal, Role, zero_ideal
from .errors import GuardExceededError, SqfdepthError, ZeroModuleError
from .linalg import DEFAULT_FIELD, FieldSpec, SparseColumns, rank_sparse_columns

N_GUARD = 20


@dataclass(frozen=True, slots=True)
class Witness:
    """Location of nonzero homology: index i, multidegree a, dimension."""

    i: int
    multidegree: tuple[int, ...]
    homology_dim: int


@dataclass(frozen=True, slots=True)
class DepthReport:
    """Outcome of a depth computation, with its certifying witness."""

    pd: int
    depth: int
    witness: Witness
    field: str
    role: str
    n: int

    def to_json(self) -> dict:
        return {
            "pd": self.pd,
            "depth": self.depth,
            "witness": {"i": self.witness.i, "a": list(self.witness.multidegree)},
            "homology_dim": self.witness.homology_dim,
            "field": self.field,
        }


def _basis(module: ModulePredicate, a_mask: int, i: int) -> list[int]:
    if i < 0 or i > a_mask.bit_count():
        return []
    return [
        s for s in subsets_of_mask(a_mask, i) if module.member_mask(a_mask ^ s)
    ]


def _columns(basis_i: list[int], index_prev: dict[int, int]) -> SparseColumns:
    cols: SparseColumns = []
    for sigma in basis_i:
        col = []
        for k, pos in enumerate(iter_bits(sigma)):
            row = index_prev.get(sigma ^ (1 << pos))
            if row is not None:
                col.append((row, 1 - 2 * (k & 1)))
        cols.append(col)
    return cols


def _relevant(module: ModulePredicate, a_mask: int, supports: tuple[int, ...]) -> bool:
    # Multidegrees that see no generator support carry a free component:
    # nothing in positive index, and index 0 only at the empty multidegree.
    if any(g & a_mask == g for g in supports):
        return True
    return module.role is Role.QUOTIENT and a_mask == 0


@dataclass(frozen=True, slots=True)
class MultidegreeComplex:
    """All bases and boundary maps of one multidegree component."""

    n: int
    multidegree: tuple[int, ...]
    bases: tuple[tuple[int, ...], ...]
    boundaries: tuple[SparseColumns | None, ...]  # boundaries[i]: C_i -> C_{i-1}
    field: FieldSpec

    def dim(self, i: int) -> int:
        if 0 <= i < len(self.bases):
            return len(self.bases[i])
        return 0

    def homology(self) -> list[int]:
        """Dimension vector h[i] = dim C_i - rank d_i - rank d_{i+1}.

        The Euler characteristic identity is asserted on every call.
        """
        k = len(self.bases) - 1
        ranks = [0] * (k + 2)
        for i in range(1, k + 1):
            cols = self.boundaries[i]
            if cols:
                ranks[i] = rank_sparse_columns(self.dim(i - 1), cols, self.field)
        h = [self.dim(i) - ranks[i] - ranks[i + 1] for i in range(k + 1)]
        euler_dims = sum((-1) ** i * self.dim(i) for i in range(k + 1))
        euler_hom = sum((-1) ** i * h[i] for i in range(k + 1))
        if euler_dims != euler_hom:
            raise SqfdepthError("Euler characteristic mismatch, rank bug")
        return h

    def validate(self) -> None:
        """Assert that consecutive boundary maps compose to zero over Z."""
        for i in range(2, len(self.bases)):
            upper = self.boundaries[i]
            lower = self.boundaries[i - 1]
            if not upper or lower is None:
                continue
            for col in upper:
                acc: dict[int, int] = {}
                for mid, s1 in col:
                    for bottom, s0 in lower[mid]:
                        acc[bottom] = acc.get(bottom, 0) + s1 * s0
                if any(acc.values()):
                    raise SqfdepthError("boundary composition is nonzero")


def build_complex(
    module: ModulePredicate,
    a,
    field: FieldSpec = DEFAULT_FIELD,
) -> MultidegreeComplex:
    """Assemble the full complex at multidegree a (1-based index iterable)."""
    a_mask = _as_mask(a, module.n)
    k = a_mask.bit_count()
    bases = [_basis(module, a_mask, i) for i in range(k + 1)]
    boundaries: list[SparseColumns | None] = [None]
    for i in range(1, k + 1):
        index_prev = {m: r for r, m in enumerate(bases[i - 1])}
        boundaries.append(_columns(bases[i], index_prev))
    cx = MultidegreeComplex(
        module.n,
        indices_from_mask(a_mask),
        tuple(tuple(b) for b in bases),
        tuple(boundaries),
        field,
    )
    if __debug__ and sum(len(b) for b in bases) <= 256:
        cx.validate()
    return cx


def homology_dims(
    module: ModulePredicate,
    a,
    field: FieldSpec = DEFAULT_FIELD,
) -> list[int]:
    """Homology dimension vector of the complex at multidegree a."""
    return build_complex(module, a, field).homology()


def _as_mask(a, n: int) -> int:
    if isinstance(a, int):
        mask = a
        if mask < 0 or mask >= 1 << n:
            raise SqfdepthError(f"multidegree mask {a} does not fit in {n} bits")
        return mask
    return mask_from_indices(a, n)


def _boundary_rank(
    module: ModulePredicate,
    a_mask: int,
    i: int,
    field: FieldSpec,
    cache: dict,
    basis_i: list[int] | None = None,
) -> int:
    """Rank of d_i at multidegree a, memoized on (a, i)."""
    key = (a_mask, i)
    hit = cache.get(key)
    if hit is not None:
        return hit
    rank = 0
    if 1 <= i <= a_mask.bit_count():
        bi = _basis(module, a_mask, i) if basis_i is None else basis_i
        if bi:
            prev = _basis(module, a_mask, i - 1)
            if prev:
                index_prev = {m: r for r, m in enumerate(prev)}
                cols = _columns(bi, index_prev)
                rank = rank_sparse_columns(len(prev), cols, field)
    cache[key] = rank
    return rank


def projective_dimension(
    module: ModulePredicate,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    force: bool = False,
) -> tuple[int, Witness]:
    """Largest homological index with nonzero homology, plus its witness.

    Scans i = n down to 0 and, inside each level, multidegrees in
    canonical order (size, then bitset value), so the first hit is both
    the projective dimension and the canonically smallest witness there.
    """
    if module.is_zero_module:
        raise ZeroModuleError("projective dimension of the zero module")
    n = module.n
    if n > N_GUARD and not force:
        raise GuardExceededError(
            f"depth search with n={n} exceeds the cap {N_GUARD}; use force"
        )
    supports = module.support_masks()
    cache: dict = {}
    for i in range(n, -1, -1):
        for size in range(i, n + 1):
            for a_mask in fixed_popcount_masks(n, size):
                if not _relevant(module, a_mask, supports):
                    continue
                bi = _basis(module, a_mask, i)
                if not bi:
                    continue
                h = (
                    len(bi)
                    - _boundary_rank(module, a_mask, i, field, cache, bi)
                    - _boundary_rank(module, a_mask, i + 1, field, cache)
                )
                if h > 0:
                    return i, Witness(i, indices_from_mask(a_mask), h)
    raise SqfdepthError("no homology found for a nonzero module, engine bug")


def depth(
    module: ModulePredicate,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    force: bool = False,
) -> DepthReport:
    """Depth of the module: n minus projective dimension."""
    pd, witness = projective_dimension(module, field, force=force)
    return DepthReport(
        pd=pd,
        depth=module.n - pd,
        witness=witness,
        field=field.label,
        role=module.role.value,
        n=module.n,
    )


def depth_factor(
    I: MonomialIdeal,
    J: MonomialIdeal | None = None,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    force: bool = False,
) -> DepthReport:
    """Depth of the factor I/J (J defaults to zero, giving the ideal)."""
    pair = FactorPair(I, J if J is not None else zero_ideal(I.n))
    return depth(ModulePredicate.for_factor(pair), field, force=force)


def depth_ideal(
    I: MonomialIdeal,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    force: bool = False,
) -> DepthReport:
    return depth(ModulePredicate.for_ideal(I), field, force=force)


def depth_quotient(
    I: MonomialIdeal,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    force: bool = False,
) -> DepthReport:
    return depth(ModulePredicate.for_quotient(I), field, force=force)
