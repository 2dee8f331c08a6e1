"""Seeded instance generators and the small connected-graph census.

Everything takes an explicit ``random.Random`` so corpus runs reproduce
bit-for-bit from a seed.  The graph census enumerates one representative
per isomorphism class: orbits under vertex permutations are cheap to walk
at six vertices and below, where the class counts are tiny compared to the
2^15 labeled graphs.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from .groebner import MonomialOrder, Polynomial
from .monomials import Monomial, MonomialIdeal
from .symbolic import Graph


def rng_from_seed(seed):
    return random.Random(seed)


def random_monomial(rng, ring, max_degree):
    """A monomial of degree 1..max_degree, degree split uniformly at random."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    exps = [0] * ring.n
    for _ in range(rng.randint(1, max_degree)):
        exps[rng.randrange(ring.n)] += 1
    return Monomial(ring, tuple(exps))


def random_ideal(rng, ring, max_generators, max_degree):
    """A proper nonzero monomial ideal with up to max_generators generators.

    Draws resample a few times to dodge divisibility collisions, otherwise
    low-degree draws swallow the rest and almost every ideal collapses to
    one or two generators.
    """
    count = rng.randint(1, max_generators)
    gens = []
    for _ in range(count):
        for _attempt in range(6):
            cand = random_monomial(rng, ring, max_degree)
            if all(not g.divides(cand) and not cand.divides(g) for g in gens):
                gens.append(cand)
                break
    if not gens:
        gens.append(random_monomial(rng, ring, max_degree))
    return MonomialIdeal.from_generators(ring, gens)


def random_squarefree_ideal(rng, ring, max_generators):
    count = rng.randint(1, max_generators)
    gens = []
    for _ in range(count):
        size = rng.randint(1, ring.n)
        support = rng.sample(range(ring.n), size)
        exps = tuple(1 if i in support else 0 for i in range(ring.n))
        gens.append(Monomial(ring, exps))
    return MonomialIdeal.from_generators(ring, gens)


def _weighted_exponents(weights, target):
    """All exponent tuples with sum(w_i * e_i) == target."""
    if len(weights) == 1:
        w = weights[0]
        if target % w == 0:
            yield (target // w,)
        return
    w = weights[0]
    for e in range(target // w + 1):
        for rest in _weighted_exponents(weights[1:], target - e * w):
            yield (e,) + rest


def random_weighted_homogeneous(
    rng, ring, field, weights, weighted_degree, max_terms=4, order=None
):
    """A random polynomial with every term of the same weighted degree.

    Distinct monomials and nonzero coefficients, so the result is nonzero
    and genuinely quasi-homogeneous for the given weights.
    """
    if order is None:
        order = MonomialOrder.grevlex(ring)
    if len(weights) != ring.n or any(w < 1 for w in weights):
        raise ValueError("need one positive weight per variable")
    pool = list(_weighted_exponents(tuple(weights), weighted_degree))
    if not pool:
        raise ValueError(
            f"no monomials of weighted degree {weighted_degree} for {weights}"
        )
    chosen = rng.sample(pool, rng.randint(1, min(max_terms, len(pool))))
    terms = {}
    for exps in chosen:
        coeff = rng.choice([c for c in range(-5, 6) if c != 0])
        terms[exps] = coeff
    return Polynomial(ring, field, order, terms)


def random_homogeneous(rng, ring, field, degree, max_terms=4, order=None):
    """A random nonzero homogeneous polynomial of the given degree."""
    return random_weighted_homogeneous(
        rng, ring, field, (1,) * ring.n, degree, max_terms, order
    )


def _edge_permutation_maps(n):
    """For each vertex permutation, the induced map on edge-slot indices."""
    slots = list(combinations(range(n), 2))
    index = {e: i for i, e in enumerate(slots)}
    maps = []
    for perm in permutations(range(n)):
        maps.append(
            tuple(index[tuple(sorted((perm[u], perm[v])))] for u, v in slots)
        )
    return slots, maps


def _is_connected(n, edges):
    if n == 1:
        return True
    adjacency = {v: [] for v in range(n)}
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def connected_graph_reps(n):
    """One representative per isomorphism class of connected graphs on n vertices.

    Walks edge-set bitmasks in increasing order; the first unseen mask of
    each orbit is the representative, and its whole orbit is marked before
    moving on.  Only orbit representatives pay the permutation loop, so the
    census stays fast even at n = 6.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    slots, maps = _edge_permutation_maps(n)
    m = len(slots)
    seen = bytearray(1 << m)
    reps = []
    for mask in range(1 << m):
        if seen[mask]:
            continue
        for edge_map in maps:
            image = 0
            rest = mask
            while rest:
                low = rest & -rest
                image |= 1 << edge_map[low.bit_length() - 1]
                rest ^= low
            seen[image] = 1
        edges = tuple(slots[i] for i in range(m) if mask >> i & 1)
        if _is_connected(n, edges):
            reps.append(Graph(n, edges))
    return reps
