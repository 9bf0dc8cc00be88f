"""Independent oracles for the test suite.

Everything in this file is reimplemented directly from definitions:
explicit combination bases, textbook Gaussian elimination over Fraction
or a prime field, full multidegree scans with no relevance filter and
no early exit, exhaustive interval partitions without memoization, and
Kuhn's augmenting-path matching.  None of it calls into the package's
linear algebra, homology, matching, or enumeration code; tests pass raw
bitmasks in and compare answers coming out.

Masks encode square-free monomials: bit j-1 set means variable j
divides.  char=0 means rationals, char=p a prime field.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

# ----------------------------------------------------------- membership

def divides(a: int, b: int) -> bool:
    return a & b == a


def in_ideal(gens: list[int], mask: int) -> bool:
    return any(divides(g, mask) for g in gens)


def in_factor(igens: list[int], jgens: list[int], mask: int) -> bool:
    return in_ideal(igens, mask) and not in_ideal(jgens, mask)


def rho_count(gens: list[int], n: int, e: int) -> int:
    """Number of square-free degree-e monomials inside the ideal."""
    total = 0
    for combo in itertools.combinations(range(n), e):
        mask = 0
        for c in combo:
            mask |= 1 << c
        if in_ideal(gens, mask):
            total += 1
    return total


# ------------------------------------------------------------------ rank

def frac_rank(rows: list[list]) -> int:
    """Row-echelon rank over the rationals, no pivoting tricks."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    n_cols = len(m[0])
    rank = 0
    row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def modp_rank(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    if not m:
        return 0
    n_cols = len(m[0])
    rank = 0
    row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row, len(m)):
            if m[r][col] % p != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [(x * inv) % p for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] % p != 0:
                factor = m[r][col]
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def rank(rows: list[list[int]], char: int) -> int:
    return frac_rank(rows) if char == 0 else modp_rank(rows, char)


# ------------------------------------------------ Koszul homology, naively

def _mask_of(combo: tuple[int, ...]) -> int:
    mask = 0
    for c in combo:
        mask |= 1 << c
    return mask


def koszul_homology(n: int, member, a_mask: int, char: int) -> list[int]:
    """Homology dimension vector of the multidegree-a component.

    Basis at index i: all i-subsets sigma of the support of a with
    member(a minus sigma).  Boundary sends sigma to its facets that
    still index a member multidegree, with the alternating sign of the
    removed position.  Dimensions are convention independent.
    """
    support = [j for j in range(n) if a_mask >> j & 1]
    k = len(support)
    bases: list[list[tuple[int, ...]]] = []
    for i in range(k + 1):
        level = [
            combo
            for combo in itertools.combinations(support, i)
            if member(a_mask ^ _mask_of(combo))
        ]
        bases.append(level)

    ranks = [0] * (k + 2)
    for i in range(1, k + 1):
        if not bases[i] or not bases[i - 1]:
            continue
        index_prev = {combo: r for r, combo in enumerate(bases[i - 1])}
        matrix = []
        for combo in bases[i]:
            col = [0] * len(bases[i - 1])
            for pos in range(len(combo)):
                facet = combo[:pos] + combo[pos + 1:]
                row = index_prev.get(facet)
                if row is not None:
                    col[row] = (-1) ** pos
            matrix.append(col)
        # columns were built; transpose so rows index C_{i-1}
        transposed = [list(r) for r in zip(*matrix)]
        ranks[i] = rank(transposed, char)
    return [len(bases[i]) - ranks[i] - ranks[i + 1] for i in range(k + 1)]


def pd_scan(n: int, member, char: int) -> int:
    """Largest index with nonzero homology over every multidegree.

    Scans all 2**n multidegrees and every index, keeping the maximum;
    deliberately free of the filters and the top-down early exit used
    by the engine.
    """
    best = -1
    for a_mask in range(1 << n):
        h = koszul_homology(n, member, a_mask, char)
        for i, dim in enumerate(h):
            if dim > 0 and i > best:
                best = i
    if best < 0:
        raise ValueError("zero module")
    return best


def depth_factor_naive(n, igens, jgens, char) -> int:
    member = lambda mask: in_factor(igens, jgens, mask)
    return n - pd_scan(n, member, char)


def depth_ideal_naive(n, igens, char) -> int:
    member = lambda mask: in_ideal(igens, mask)
    return n - pd_scan(n, member, char)


def depth_quotient_naive(n, igens, char) -> int:
    member = lambda mask: not in_ideal(igens, mask)
    return n - pd_scan(n, member, char)


# ------------------------------------- simplicial homology and Hochster

def reduced_homology_dims(faces: set[frozenset[int]], char: int) -> dict[int, int]:
    """Reduced simplicial homology of a complex given by its face set.

    The empty face participates: C_{-1} is one dimensional whenever the
    complex is nonempty, and the boundary of every vertex hits it.
    Returns {p: dim} for p from -1 up to the dimension of the complex.
    """
    if not faces:
        return {}
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for face in faces:
        by_dim.setdefault(len(face) - 1, []).append(tuple(sorted(face)))
    for level in by_dim.values():
        level.sort()
    top = max(by_dim)
    ranks: dict[int, int] = {}
    for p in range(top + 1):
        upper = by_dim.get(p, [])
        lower = by_dim.get(p - 1, [])
        if not upper or not lower:
            ranks[p] = 0
            continue
        index_lower = {f: r for r, f in enumerate(lower)}
        matrix = [[0] * len(upper) for _ in lower]
        for c, face in enumerate(upper):
            for pos in range(len(face)):
                facet = face[:pos] + face[pos + 1:]
                matrix[index_lower[facet]][c] = (-1) ** pos
        ranks[p] = rank(matrix, char)
    ranks[top + 1] = 0
    return {
        p: len(by_dim.get(p, [])) - ranks.get(p, 0) - ranks.get(p + 1, 0)
        for p in range(-1, top + 1)
    }


def induced_faces(n: int, igens: list[int], w: tuple[int, ...]) -> set[frozenset[int]]:
    """Faces of the ideal's vanishing complex restricted to vertex set w.

    A subset is a face exactly when its product monomial is outside the
    ideal; the empty set is always a face of a proper ideal.
    """
    faces = set()
    for size in range(len(w) + 1):
        for combo in itertools.combinations(w, size):
            if not in_ideal(igens, _mask_of(combo)):
                faces.add(frozenset(combo))
    return faces


def hochster_pd_quotient(n: int, igens: list[int], char: int) -> int:
    """Projective dimension of the quotient via vertex-set homology.

    For each vertex subset W the graded Betti number in squarefree
    degree W at homological index i equals the reduced homology of the
    induced complex in dimension |W| - i - 1.  The maximum index with a
    nonzero Betti number over all W is the projective dimension.
    """
    best = 0
    for size in range(n + 1):
        for w in itertools.combinations(range(n), size):
            dims = reduced_homology_dims(induced_faces(n, igens, w), char)
            for p, dim in dims.items():
                if dim > 0:
                    i = size - p - 1
                    if i > best:
                        best = i
    return best


def depth_quotient_hochster(n: int, igens: list[int], char: int) -> int:
    return n - hochster_pd_quotient(n, igens, char)


# --------------------------------------------------- exhaustive sdepth

def sdepth_exhaustive(n: int, igens: list[int], jgens: list[int]) -> int:
    """Best worst interval top over all partitions, no memoization.

    Exponential: keep the poset below roughly a dozen elements.
    """
    poset = [
        mask for mask in range(1 << n) if in_factor(igens, jgens, mask)
    ]
    poset.sort(key=lambda m: (bin(m).count("1"), m))
    position = {mask: i for i, mask in enumerate(poset)}
    full = len(poset)

    def interval(a: int, b: int) -> list[int] | None:
        cells = []
        missing = a ^ b
        sub = missing
        while True:
            mask = a | sub
            if mask not in position:
                return None
            cells.append(position[mask])
            if sub == 0:
                break
            sub = (sub - 1) & missing
        return cells

    def best(covered: int) -> int:
        if covered == (1 << full) - 1:
            return n + 1
        low = next(i for i in range(full) if not covered >> i & 1)
        a = poset[low]
        result = -1
        for b in range(1 << n):
            if not divides(a, b):
                continue
            cells = interval(a, b)
            if cells is None or any(covered >> c & 1 for c in cells):
                continue
            add = covered
            for c in cells:
                add |= 1 << c
            value = min(bin(b).count("1"), best(add))
            if value > result:
                result = value
        return result

    if not poset:
        raise ValueError("empty factor")
    return min(best(0), n)


# ----------------------------------------------------- cycle sign matrix

def independent_epsilon(gen_vars, target_vars, n: int) -> list[list[int]]:
    """Sign matrix of the cycle condition, rebuilt from its definition.

    Entry (k, i) is zero unless generator i divides target k with a
    single quotient variable; otherwise the sign alternates with the
    position of that variable inside the ascending complement of the
    generator's support.
    """
    rows = []
    for tv in target_vars:
        t = set(tv)
        row = []
        for gv in gen_vars:
            g = set(gv)
            diff = t - g
            if not g <= t or len(diff) != 1:
                row.append(0)
                continue
            (j,) = diff
            complement = sorted(set(range(1, n + 1)) - g)
            row.append((-1) ** complement.index(j))
        rows.append(row)
    return rows


# ------------------------------------------------------------- matching

def kuhn_matching_size(adjacency: list[list[int]], n_right: int) -> int:
    match_r = [-1] * n_right

    def try_augment(u: int, seen: list[bool]) -> bool:
        for v in adjacency[u]:
            if seen[v]:
                continue
            seen[v] = True
            if match_r[v] == -1 or try_augment(match_r[v], seen):
                match_r[v] = u
                return True
        return False

    size = 0
    for u in range(len(adjacency)):
        if try_augment(u, [False] * n_right):
            size += 1
    return size


def neighborhood(adjacency: list[list[int]], subset: list[int]) -> set[int]:
    out: set[int] = set()
    for u in subset:
        out.update(adjacency[u])
    return out
