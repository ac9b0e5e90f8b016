from fractions import Fraction
from math import gcd, isqrt

import pytest
from hypothesis import assume, given, settings, strategies as st

from selfisogeny.arith import IntMatrix2, InvalidInput
from selfisogeny.isogeny import (
    SubgroupGen,
    build_matrix,
    degree,
    find_pairs,
    has_self_isogeny,
    subgroup_generator,
)
from selfisogeny.lattice import Lattice, hnf_rows, lattice_hnf, verify_self_isogeny_oracle
from selfisogeny.smith import smith_decompose
from selfisogeny.tau import TauPoly, is_isomorphic, reduce_to_G, transform_tau

from conftest import taus
from oracles import cyclic_subgroups

P = TauPoly.parse


# --- matrix and degree -------------------------------------------------------

@pytest.mark.parametrize("spec, a, bp, M, n", [
    ("0,-1", 1, 1, (1, -1, 1, 1), 2),
    ("0,-2", 0, 1, (0, -2, 1, 0), 2),
    ("-1,-2", 1, 1, (1, -2, 1, 0), 2),
])
def test_build_matrix(spec, a, bp, M, n):
    iso = build_matrix(P(spec), a, bp)
    assert iso.M == IntMatrix2(*M)
    assert iso.n == n


@pytest.mark.parametrize("spec, a, bp, n", [
    ("0,-1", 1, 1, 2),
    ("-1,-1", 2, 1, 3),
    ("0,-1", 1, 0, 1),
])
def test_degree(spec, a, bp, n):
    assert degree(P(spec), a, bp) == n


@pytest.mark.parametrize("a, bp", [(0, 0), (2, 2), (3, 0), (0, 2)])
def test_bad_pairs_rejected(a, bp):
    with pytest.raises(InvalidInput):
        build_matrix(P("0,-1"), a, bp)
    with pytest.raises(InvalidInput):
        degree(P("0,-1"), a, bp)


coprime = st.tuples(st.integers(-50, 50), st.integers(-50, 50)).filter(
    lambda p: gcd(*p) == 1)


@given(taus(), coprime)
def test_det_equals_closed_form(tau, pair):
    iso = build_matrix(tau, *pair)
    assert iso.n == degree(tau, *pair) > 0
    assert iso.M.content() == 1


@given(taus(), st.integers(-40, 40), st.integers(-40, 40))
def test_entry_gcd_iff_pair_gcd(tau, a, bp):
    assume((a, bp) != (0, 0))
    # build the matrix entries directly so the non-coprime side is reachable
    d2 = tau.d2
    entries = (a, tau.u2 * tau.v1 // d2 * bp, tau.u2 * tau.v2 // d2 * bp,
               a + tau.u1 * tau.v2 // d2 * bp)
    assert (gcd(*entries) == 1) == (gcd(a, bp) == 1)


# --- find_pairs --------------------------------------------------------------

@pytest.mark.parametrize("spec, n, pairs", [
    ("0,-1", 2, {(1, 1), (-1, 1)}),
    ("0,-1", 3, set()),
    ("0,-2", 3, {(1, 1), (-1, 1)}),
    ("0,-1", 1, {(1, 0)}),
])
def test_find_pairs_examples(spec, n, pairs):
    assert set(find_pairs(P(spec), n)) == pairs


def pairs_brute(tau, n):
    """Every coprime (a, b') with b' > 0 in a box far beyond the search bound."""
    bmax = isqrt(4 * n) + 2
    amax = 2 * n + abs(tau.k) * bmax + 2
    out = set()
    for bp in range(1, bmax + 1):
        for a in range(-amax, amax + 1):
            if gcd(a, bp) == 1 and build_matrix(tau, a, bp).n == n:
                out.add((a, bp))
    return out


@settings(max_examples=40, deadline=None)
@given(taus(umax=6, dmax=4, extra_max=10), st.integers(2, 40))
def test_find_pairs_is_exhaustive(tau, n):
    assert set(find_pairs(tau, n)) == pairs_brute(tau, n)


@given(taus(umax=6, dmax=4, extra_max=10), st.integers(2, 60),
       st.lists(st.sampled_from(["T", "T^-1", "S"]), max_size=6))
def test_has_self_isogeny_is_isomorphism_invariant(tau, n, steps):
    other = tau
    for s in steps:
        other = transform_tau(other, s)
    assert has_self_isogeny(tau, n) == has_self_isogeny(other, n)


@pytest.mark.parametrize("spec, n, expected", [
    ("0,-1", 2, True),
    ("0,-1", 3, False),
    ("-1,-2", 2, True),
])
def test_has_self_isogeny(spec, n, expected):
    assert has_self_isogeny(P(spec), n) is expected


# --- Smith decomposition -----------------------------------------------------

@pytest.mark.parametrize("M, U", [
    ((1, 0, 0, 5), (1, 0, 0, 1)),
    ((1, -2, 1, 0), (1, 0, 1, 1)),
    ((0, -3, 1, 0), (0, 1, 1, 0)),
])
def test_smith_examples(M, U):
    M = IntMatrix2(*M)
    sd = smith_decompose(M)
    assert sd.U == IntMatrix2(*U)
    assert sd.product() == M
    assert abs(sd.V.det()) == 1


def test_smith_identity_factors():
    sd = smith_decompose(IntMatrix2(1, 0, 0, 5))
    assert sd.V == IntMatrix2.identity() and sd.n == 5


def test_smith_rejects_content():
    with pytest.raises(InvalidInput):
        smith_decompose(IntMatrix2(2, 4, 6, 2))


big = st.integers(-10**6, 10**6)


@given(big, big, big, big)
def test_smith_roundtrip(a, A, b, B):
    M = IntMatrix2(a, A, b, B)
    assume(M.content() == 1 and M.det() != 0)
    sd = smith_decompose(M)
    assert sd.n == abs(M.det())
    assert abs(sd.U.det()) == 1 and abs(sd.V.det()) == 1
    assert sd.U @ IntMatrix2.diag(1, sd.n) @ sd.V == M


def test_smith_deterministic():
    M = IntMatrix2(7, 12, -5, 3)
    assert smith_decompose(M) == smith_decompose(M)


# --- generators --------------------------------------------------------------

@pytest.mark.parametrize("spec, a, bp, gen", [
    ("0,-1", 1, 1, (1, 1, 2)),
    ("0,-3", 0, 1, (0, 1, 3)),
    ("-1,-2", 1, 1, (1, 1, 2)),
])
def test_subgroup_generator_examples(spec, a, bp, gen):
    assert subgroup_generator(P(spec), a, bp) == SubgroupGen(*gen)


def test_subgroup_generator_rejects_degree_one():
    with pytest.raises(InvalidInput):
        subgroup_generator(P("0,-1"), 1, 0)


def test_subgroup_gen_requires_exact_order():
    with pytest.raises(InvalidInput):
        SubgroupGen(2, 4, 6)


def canonical_brute(x, y, n):
    return min(((k * x) % n, (k * y) % n) for k in range(1, n + 1) if gcd(k, n) == 1)


@given(st.integers(-500, 500), st.integers(-500, 500), st.integers(1, 300))
def test_canonical_matches_brute_force(x, y, n):
    assume(gcd(gcd(x, y), n) == 1)
    g = SubgroupGen(x, y, n).canonical()
    assert (g.u11, g.u21) == (canonical_brute(x, y, n) if n > 1 else (0, 0))


@settings(deadline=None)
@given(taus(umax=10, dmax=6, extra_max=40), coprime)
def test_generator_spans_the_image_lattice(tau, pair):
    """L + Z g must equal lambda L, whose coordinates are the columns of M."""
    iso = build_matrix(tau, *pair)
    assume(iso.n >= 2)
    gen = subgroup_generator(tau, *pair)
    assert gcd(gen.u11, gen.u21, gen.n) == 1
    M = iso.M
    lam = hnf_rows([(M.a, M.b), (M.A, M.B)])
    via_gen = hnf_rows([(iso.n, 0), (0, iso.n), (gen.u11, gen.u21)])
    assert lam == via_gen


# --- lattices and the oracle -------------------------------------------------

def test_lattice_hnf_examples():
    tau = P("0,-1")
    L = Lattice.standard(tau)
    assert lattice_hnf(L, 1) == IntMatrix2.identity()
    L2 = L.extend(tau.element(Fraction(1, 2), Fraction(1, 2)))
    assert lattice_hnf(L2, 2) == IntMatrix2(1, 1, 0, 2)
    t3 = P("0,-3")
    L3 = Lattice.standard(t3).extend(SubgroupGen(0, 1, 3).element(t3))
    assert lattice_hnf(L3, 3) == IntMatrix2(3, 0, 0, 1)


def test_lattice_rank_deficient():
    tau = P("0,-1")
    L = Lattice(tau, (tau.element(1, 0), tau.element(2, 0)))
    with pytest.raises(InvalidInput):
        lattice_hnf(L, 1)


def test_lattice_rejects_fractional_coords():
    tau = P("0,-1")
    L = Lattice.standard(tau).extend(tau.element(0, 1) * tau.element(1, 0) / 3)
    with pytest.raises(InvalidInput):
        lattice_hnf(L, 2)


@pytest.mark.parametrize("spec, gen, expected", [
    ("0,-1", (1, 1, 2), True),
    ("0,-3", (0, 1, 3), True),
    ("0,-1", (1, 0, 3), False),
])
def test_oracle_examples(spec, gen, expected):
    assert verify_self_isogeny_oracle(P(spec), SubgroupGen(*gen)) is expected


@settings(deadline=None)
@given(taus(umax=10, dmax=6, extra_max=40), coprime)
def test_certificates_pass_oracle(tau, pair):
    assume(build_matrix(tau, *pair).n >= 2)
    assert verify_self_isogeny_oracle(tau, subgroup_generator(tau, *pair))


@settings(max_examples=60, deadline=None)
@given(taus(umax=4, dmax=3, extra_max=6), st.integers(2, 13))
def test_existence_matches_subgroup_scan(tau, n):
    """Some cyclic C of order n has C/L' ~ C/L exactly when find_pairs finds a pair."""
    red = reduce_to_G(tau)[0]
    good = {SubgroupGen(x, y, n).canonical() for x, y in cyclic_subgroups(n)
            if verify_self_isogeny_oracle(red, SubgroupGen(x, y, n))}
    pairs = find_pairs(red, n)
    assert bool(good) == bool(pairs)
    # and the certified subgroups are among the ones the scan finds
    assert {subgroup_generator(red, a, bp) for a, bp in pairs} <= good
