"""Minimal Stanley depth of a factor: matching certificates and brute force.

For a pair with bottom degree d, the question "is the minimal Stanley
depth exactly d" reduces to a bipartite matching problem between the
degree-d monomials of I and the degree-(d+1) monomials of I outside J:
the Stanley depth exceeds d exactly when the degree-d side has a
complete matching into its divisibility neighbors.  A maximum matching
therefore yields either a complete-matching certificate or a Hall
violator A with fewer neighbors than elements, and the violator
generates an ideal witnessing the failure through a count inequality.

brute_force_sdepth is the independent oracle: exact optimum over all
partitions of the monomial poset of I minus J into divisibility
intervals, by memoized branch and bound.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bitset import fixed_popcount_masks
from .core import (
    FactorPair,
    Monomial,
    MonomialIdeal,
    enumerate_degree,
    intersect,
    minimalize,
    rho,
)
from .errors import (
    EmptyLeftSideError,
    NotNormalizedError,
    SqfdepthError,
    TooLargeError,
)

POSET_LIMIT = 30
ENUMERATION_CAP = 25  # poset collection scans all 2**n masks


@dataclass(frozen=True, slots=True)
class DivisibilityGraph:
    """Bipartite divisibility graph between two consecutive degrees.

    left holds the degree-d monomials of I, right the degree-(d+1)
    monomials of I that are not in J; adjacency is divisibility, with
    neighbor lists sorted so everything downstream is deterministic.
    """

    n: int
    d: int
    left: tuple[Monomial, ...]
    right: tuple[Monomial, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency)


def build_graph(pair: FactorPair, d: int | None = None) -> DivisibilityGraph:
    """Assemble the divisibility graph at the bottom degree of the pair."""
    if d is None:
        d = pair.d()
    if not pair.J.is_zero and pair.J.indeg() <= d:
        raise NotNormalizedError(
            "J has generators at or below the bottom degree; run normalize_pair"
        )
    left = enumerate_degree(pair.I, d)
    if not left:
        raise EmptyLeftSideError(f"no degree-{d} monomials in I")
    right = [
        b for b in enumerate_degree(pair.I, d + 1) if not pair.J.contains(b)
    ]
    r_index = {b.mask: k for k, b in enumerate(right)}
    adjacency = []
    for f in left:
        row = []
        for b in right:
            if f.mask & b.mask == f.mask:
                row.append(r_index[b.mask])
        adjacency.append(tuple(row))
    return DivisibilityGraph(pair.n, d, tuple(left), tuple(right), tuple(adjacency))


def _hopcroft_karp(
    adjacency: tuple[tuple[int, ...], ...], n_right: int
) -> tuple[list[int], list[int]]:
    """Maximum matching; deterministic because neighbor lists are sorted."""
    n_left = len(adjacency)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    infinity = n_left + n_right + 1
    while True:
        dist = [infinity] * n_left
        queue = [u for u in range(n_left) if match_l[u] == -1]
        for u in queue:
            dist[u] = 0
        reachable_free = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in adjacency[u]:
                w = match_r[v]
                if w == -1:
                    reachable_free = True
                elif dist[w] == infinity:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not reachable_free:
            break

        def dfs(u: int) -> bool:
            for v in adjacency[u]:
                w = match_r[v]
                if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                    match_l[u] = v
                    match_r[v] = u
                    return True
            dist[u] = infinity
            return False

        for u in range(n_left):
            if match_l[u] == -1:
                dfs(u)
    return match_l, match_r


@dataclass(frozen=True, slots=True)
class Matching:
    """Left-to-right matched pairs (vertex indices into the graph)."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)


def max_matching(graph: DivisibilityGraph) -> Matching:
    match_l, _ = _hopcroft_karp(graph.adjacency, len(graph.right))
    return Matching(
        tuple((u, v) for u, v in enumerate(match_l) if v != -1)
    )


@dataclass(frozen=True, slots=True)
class HallCertificate:
    """Either a complete matching of the left side, or a violator.

    The violator A (left vertex indices) has neighborhood gamma with
    |gamma| = |A| minus the matching deficiency, so |gamma| < |A|.
    """

    graph: DivisibilityGraph
    complete: bool
    pairs: tuple[tuple[int, int], ...]
    violator: tuple[int, ...]
    gamma: tuple[int, ...]

    def to_json(self) -> dict:
        if self.complete:
            return {
                "type": "matching",
                "pairs": [
                    [
                        list(self.graph.left[u].variables),
                        list(self.graph.right[v].variables),
                    ]
                    for u, v in self.pairs
                ],
            }
        return {
            "type": "violator",
            "A": [list(self.graph.left[u].variables) for u in self.violator],
            "gamma": [list(self.graph.right[v].variables) for v in self.gamma],
        }


def hall_certificate(graph: DivisibilityGraph) -> HallCertificate:
    """Complete matching, or a Hall violator from alternating reachability."""
    match_l, match_r = _hopcroft_karp(graph.adjacency, len(graph.right))
    pairs = tuple((u, v) for u, v in enumerate(match_l) if v != -1)
    unmatched = [u for u, v in enumerate(match_l) if v == -1]
    if not unmatched:
        return HallCertificate(graph, True, pairs, (), ())
    seen_l = [False] * len(graph.left)
    seen_r = [False] * len(graph.right)
    queue = list(unmatched)
    for u in queue:
        seen_l[u] = True
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v in graph.adjacency[u]:
            if seen_r[v]:
                continue
            seen_r[v] = True
            w = match_r[v]
            if w == -1:
                raise SqfdepthError("augmenting path past a maximum matching")
            if not seen_l[w]:
                seen_l[w] = True
                queue.append(w)
    violator = tuple(u for u, s in enumerate(seen_l) if s)
    gamma = tuple(v for v, s in enumerate(seen_r) if s)
    neighborhood = sorted(
        {v for u in violator for v in graph.adjacency[u]}
    )
    if list(gamma) != neighborhood:
        raise SqfdepthError("alternating reachability missed a neighbor")
    if len(gamma) != len(violator) - len(unmatched):
        raise SqfdepthError("violator size bookkeeping is off")
    return HallCertificate(graph, False, pairs, violator, gamma)


@dataclass(frozen=True, slots=True)
class SdepthDecision:
    """Answer to 'is the minimal Stanley depth of I/J equal to d'."""

    answer: bool
    d: int
    certificate: HallCertificate
    witness_ideal: MonomialIdeal | None

    def to_json(self) -> dict:
        doc = {
            "sdepth_equals_indeg": self.answer,
            "d": self.d,
            "certificate": self.certificate.to_json(),
        }
        if self.witness_ideal is not None:
            doc["witness_ideal"] = [
                list(g.variables) for g in self.witness_ideal.gens
            ]
        return doc


def sdepth_equals_indeg(pair: FactorPair) -> SdepthDecision:
    """Decide sdepth I/J = d and certify the answer either way.

    A complete matching certifies sdepth > d; a Hall violator A gives
    sdepth = d, and the ideal generated by A satisfies the count
    inequality rho_d > rho_{d+1} - rho_{d+1 of the intersection}, which
    is asserted before returning.
    """
    d = pair.d()
    graph = build_graph(pair, d)
    cert = hall_certificate(graph)
    if cert.complete:
        return SdepthDecision(False, d, cert, None)
    witness = minimalize((graph.left[u] for u in cert.violator), pair.n)
    lhs = rho(witness, d)
    rhs = rho(witness, d + 1) - rho(intersect(witness, pair.J), d + 1)
    if not lhs > rhs:
        raise SqfdepthError("violator ideal fails its count inequality")
    return SdepthDecision(True, d, cert, witness)


def _poset(pair: FactorPair, limit: int) -> list[int]:
    """Monomials of I minus J as masks, canonical order, capped size."""
    if pair.n > ENUMERATION_CAP:
        raise TooLargeError(
            f"poset enumeration scans 2**{pair.n} masks, over the cap"
        )
    out: list[int] = []
    for deg in range(pair.n + 1):
        for mask in fixed_popcount_masks(pair.n, deg):
            if pair.I.contains_mask(mask) and not pair.J.contains_mask(mask):
                out.append(mask)
                if len(out) > limit:
                    raise TooLargeError(
                        f"poset has more than {limit} elements"
                    )
    return out


def brute_force_sdepth(pair: FactorPair, limit: int = POSET_LIMIT) -> int:
    """Exact minimal Stanley depth by optimizing over interval partitions.

    Each partition of the poset into divisibility intervals [u, v] is
    scored by the smallest top degree; the Stanley depth is the maximum
    score.  The search always covers the canonically smallest uncovered
    element next, branching over interval tops; memoization on the
    uncovered subset makes repeated states cheap.
    """
    elements = _poset(pair, limit)
    size = len(elements)
    index = {m: i for i, m in enumerate(elements)}
    degrees = [m.bit_count() for m in elements]

    # interval [u, v] as a bitmask over poset positions; convexity of the
    # membership predicate keeps every w between u and v inside the poset
    cover: list[dict[int, int]] = [dict() for _ in range(size)]
    for i, u in enumerate(elements):
        for j in range(i, size):
            v = elements[j]
            if u & v != u:
                continue
            extra = v & ~u
            mask = 0
            ok = True
            for s in _all_submasks(extra):
                w = index.get(u | s)
                if w is None:
                    ok = False
                    break
                mask |= 1 << w
            if not ok:
                raise SqfdepthError("poset is not convex, pair invariant broken")
            cover[i][j] = mask

    full = (1 << size) - 1
    top = pair.n + 1
    memo: dict[int, int] = {}

    def best_value(uncovered: int) -> int:
        if uncovered == 0:
            return top
        hit = memo.get(uncovered)
        if hit is not None:
            return hit
        u = (uncovered & -uncovered).bit_length() - 1
        best = -1
        for j, interval in cover[u].items():
            if interval & ~uncovered:
                continue
            value = min(degrees[j], best_value(uncovered & ~interval))
            if value > best:
                best = value
        memo[uncovered] = best
        return best

    return best_value(full)


def _all_submasks(mask: int):
    """Every subset of a mask, including 0 and the mask itself."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask
