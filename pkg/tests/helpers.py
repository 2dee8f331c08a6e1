"""Brute-force oracles shared across the test modules.

Each routine recomputes an answer by direct enumeration, so the fast
implementations have something independent to disagree with.
"""

from idealkit import minimal_primes, parse_ring


def numbered_ring(n):
    return parse_ring(", ".join(f"x{i}" for i in range(1, n + 1)))


def compositions(total, parts):
    """Exponent tuples of length parts summing to total."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def scan_member(ideal, exps):
    # raw divisibility against the generator list, no pruning tricks
    return any(
        all(a <= b for a, b in zip(gen.exponents, exps))
        for gen in ideal.generators
    )


def standard_count(ideal, degree):
    """Count the degree-d monomials outside the ideal one at a time."""
    return sum(
        1
        for exps in compositions(degree, ideal.ring.n)
        if not scan_member(ideal, exps)
    )


def intersect_fold(ideals):
    acc = ideals[0]
    for other in ideals[1:]:
        acc = acc.intersect(other)
    return acc


def symbolic_by_intersection(ideal, k):
    """The defining intersection of k-th prime powers, folded pairwise."""
    return intersect_fold([p.ideal().power(k) for p in minimal_primes(ideal)])


def closure_certificate(ideal, exps, m_max):
    """Bounded search for a power certificate (x^a)^m in I^m.

    A hit proves x^a lies in the integral closure; misses below m_max
    prove nothing on their own.
    """
    for m in range(1, m_max + 1):
        scaled = tuple(e * m for e in exps)
        if scan_member(ideal.power(m), scaled):
            return True
    return False
