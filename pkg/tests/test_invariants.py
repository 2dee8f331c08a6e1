"""Hilbert data, graded Betti numbers, and the identities tying them together."""

from fractions import Fraction
from math import comb

import pytest

from idealkit import (
    MonomialIdeal,
    dimension_multiplicity,
    graded_betti,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
    is_cohen_macaulay,
    minimal_primes,
    codim,
    parse_field,
    parse_ideal,
    parse_ring,
    pure_resolution_multiplicity,
    random_ideal,
    random_squarefree_ideal,
    rng_from_seed,
    stillman_monomial_check,
    verify_betti_hilbert_identity,
)
from helpers import numbered_ring, standard_count

R2 = parse_ring("x, y")
R3 = parse_ring("x, y, z")
TRIANGLE = parse_ideal(R3, "x*y, x*z, y*z")


def test_hilbert_function_goldens():
    zero = MonomialIdeal.zero(R3)
    assert hilbert_function(zero, 2) == comb(4, 2)
    for d in (1, 2, 5):
        assert hilbert_function(TRIANGLE, d) == 3
    maximal = parse_ideal(R3, "x, y, z")
    assert hilbert_function(maximal, 0) == 1
    for d in (1, 2, 3):
        assert hilbert_function(maximal, d) == 0


def test_hilbert_function_matches_enumeration():
    rng = rng_from_seed("idealkit:invariants:hilbert")
    for _ in range(80):
        ring = numbered_ring(rng.randint(1, 4))
        ideal = random_ideal(rng, ring, max_generators=8, max_degree=5)
        for d in range(0, 7):
            assert hilbert_function(ideal, d) == standard_count(ideal, d)


def test_hilbert_series_goldens():
    assert hilbert_series(MonomialIdeal.zero(R3)).numerator == (1,)
    assert hilbert_series(parse_ideal(R3, "x^2*y")).numerator == (1, 0, 0, -1)
    series = hilbert_series(TRIANGLE)
    assert series.numerator == (1, 0, -3, 2)
    assert str(series) == "(1 - 3*z^2 + 2*z^3) / (1 - z)^3"
    for d in range(0, 8):
        assert series.coefficient(d) == hilbert_function(TRIANGLE, d)


def test_hilbert_polynomial_goldens():
    line = hilbert_polynomial(MonomialIdeal.zero(R2))
    assert line.stability == 0
    assert [line(d) for d in (0, 1, 5)] == [1, 2, 6]
    assert line.coefficients() == (Fraction(1), Fraction(1))

    constant = hilbert_polynomial(TRIANGLE)
    assert constant(10) == 3 and constant.coefficients() == (Fraction(3),)

    finite = hilbert_polynomial(parse_ideal(R2, "x^2, x*y, y^2"))
    assert finite(5) == 0
    assert finite.stability == 2
    assert hilbert_function(parse_ideal(R2, "x^2, x*y, y^2"), 0) == 1
    assert hilbert_function(parse_ideal(R2, "x^2, x*y, y^2"), 1) == 2


def test_polynomial_agrees_with_function_past_stability():
    rng = rng_from_seed("idealkit:invariants:stability")
    for _ in range(50):
        ring = numbered_ring(rng.randint(1, 3))
        ideal = random_ideal(rng, ring, max_generators=5, max_degree=4)
        poly = hilbert_polynomial(ideal)
        for d in range(poly.stability, poly.stability + 6):
            assert poly(d) == hilbert_function(ideal, d)


def test_dimension_and_multiplicity():
    assert dimension_multiplicity(TRIANGLE) == (1, 3)
    assert dimension_multiplicity(parse_ideal(R2, "x^3")) == (1, 3)
    cube = parse_ideal(R2, "x^3, x^2*y, x*y^2, y^3")
    assert dimension_multiplicity(cube) == (0, 6)
    with pytest.raises(ValueError):
        dimension_multiplicity(MonomialIdeal.unit(R2))


def test_multiplicity_counts_minimal_primes_for_squarefree():
    rng = rng_from_seed("idealkit:invariants:mult")
    for _ in range(40):
        ring = numbered_ring(rng.randint(2, 4))
        ideal = random_squarefree_ideal(rng, ring, max_generators=5)
        dim, mult = dimension_multiplicity(ideal)
        c = codim(ideal)
        expected = sum(1 for p in minimal_primes(ideal) if len(p.names) == c)
        assert dim == ring.n - c
        assert mult == expected


def test_koszul_betti_table():
    for n in range(1, 6):
        ring = numbered_ring(n)
        table = graded_betti(ring.ideal(", ".join(ring.variables)))
        assert table.as_dict() == {(i, i): comb(n, i) for i in range(n + 1)}
        assert table.proj_dim() == n
        assert table.regularity() == 0


def test_triangle_betti_table():
    table = graded_betti(TRIANGLE)
    assert table.as_dict() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert table.proj_dim() == 2
    assert table.regularity() == 1
    over_f2 = graded_betti(TRIANGLE, parse_field("fp:2"))
    assert over_f2.as_dict() == table.as_dict()


def test_cube_betti_table_is_pure():
    cube = parse_ideal(R2, "x^3, x^2*y, x*y^2, y^3")
    table = graded_betti(cube)
    assert table.as_dict() == {(0, 0): 1, (1, 3): 4, (2, 4): 3}
    assert pure_resolution_multiplicity(table, 2) == Fraction(6)


def test_pure_resolution_multiplicity():
    assert pure_resolution_multiplicity(graded_betti(TRIANGLE), 2) == Fraction(3)
    koszul = graded_betti(parse_ideal(R3, "x, y, z"))
    assert pure_resolution_multiplicity(koszul, 3) == Fraction(1)
    mixed = graded_betti(parse_ideal(R2, "x^2, x*y"))
    assert pure_resolution_multiplicity(mixed, 1) is None


def test_betti_hilbert_identity_on_corpus():
    rng = rng_from_seed("idealkit:invariants:identity")
    f2 = parse_field("fp:2")
    for _ in range(60):
        ring = numbered_ring(rng.randint(1, 4))
        ideal = random_ideal(rng, ring, max_generators=8, max_degree=5)
        assert verify_betti_hilbert_identity(ideal)
        assert verify_betti_hilbert_identity(ideal, field=f2)


def test_cohen_macaulay_verdicts():
    assert is_cohen_macaulay(TRIANGLE)
    assert not is_cohen_macaulay(parse_ideal(R3, "x*y, x*z"))
    assert is_cohen_macaulay(parse_ideal(R3, "x"))


def test_bound_chain_on_corpus():
    rng = rng_from_seed("idealkit:invariants:bounds")
    for _ in range(50):
        ring = numbered_ring(rng.randint(2, 4))
        ideal = random_ideal(rng, ring, max_generators=6, max_degree=4)
        table = graded_betti(ideal)
        assert codim(ideal.radical()) <= table.proj_dim() <= ring.n
        assert stillman_monomial_check(ideal)


def test_table_render_and_json():
    table = graded_betti(TRIANGLE)
    text = table.render()
    assert "3" in text and "2" in text and "." in text
    payload = table.to_json()
    assert payload["field"] == "QQ"
    assert payload["proj_dim"] == 2 and payload["regularity"] == 1
    assert [1, 2, 3] in payload["entries"]
