"""Hypothesis strategies for random ideals and factor pairs.

Generation leans on the package's containers (that is what is under
test); every property asserted about the generated objects is checked
against the independent oracles instead.
"""
from __future__ import annotations

import math

from hypothesis import assume, strategies as st

from sqfdepth import FactorPair, InstanceParams, Monomial, minimalize, random_pair


@st.composite
def ideals(draw, min_n: int = 2, max_n: int = 5, max_gens: int = 5):
    """Nonzero square-free ideals with small ambient size."""
    n = draw(st.integers(min_n, max_n))
    masks = draw(
        st.sets(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_gens)
    )
    return minimalize((Monomial(m) for m in masks), n)


@st.composite
def pairs(draw, min_n: int = 2, max_n: int = 5, max_gens: int = 4, max_sub: int = 5):
    """Factor pairs I/J with J an arbitrary proper subideal of I."""
    ideal = draw(ideals(min_n, max_n, max_gens))
    n = ideal.n
    candidates = draw(st.sets(st.integers(1, (1 << n) - 1), max_size=max_sub))
    inside = [m for m in candidates if ideal.contains_mask(m)]
    sub = minimalize((Monomial(m) for m in inside), n)
    assume(sub != ideal)
    return FactorPair(ideal, sub)


@st.composite
def normalized_pairs(draw, min_n: int = 3, max_n: int = 6, force_r_gt_s: bool = False):
    """Normalized pairs from the deterministic harness stream."""
    n = draw(st.integers(min_n, max_n))
    d = draw(st.integers(1, min(3, n - 1)))
    params = InstanceParams(
        n=n,
        d=d,
        k_min=1,
        k_max=min(6, math.comb(n, d)),
        density=draw(st.sampled_from([0.0, 0.25, 0.5, 0.75, 1.0])),
        seed=draw(st.integers(0, 2**20)),
        count=1,
        force_r_gt_s=force_r_gt_s,
    )
    return random_pair(params, draw(st.integers(0, 63)))
