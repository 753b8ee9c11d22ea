import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from affhecke.errors import ConfigurationError, DomainError
from affhecke.root_system import build_root_system, weight_grid

TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4"]


def closure_by_reflection(rs):
    """Positive roots by reflecting simple roots with the Cartan matrix, independently of the class."""
    d = rs.rank
    C = rs.cartan_matrix
    roots = {tuple(int(i == j) for j in range(d)) for i in range(d)}
    changed = True
    while changed:
        changed = False
        for b in list(roots):
            for j in range(d):
                c = sum(b[i] * C[i][j] for i in range(d))
                for sgn in (1, -1):
                    r = tuple(sgn * (b[i] - (c if i == j else 0)) for i in range(d))
                    r2 = tuple(sgn * x for x in b)
                    for cand in (r, r2):
                        if cand not in roots:
                            roots.add(cand)
                            changed = True
    return {r for r in roots if all(x >= 0 for x in r)}


@pytest.mark.parametrize("label", TYPES)
def test_positive_roots_match_reflection_closure(label):
    rs = build_root_system(label)
    assert set(rs.positive_roots) == closure_by_reflection(rs)


@pytest.mark.parametrize("label", TYPES)
def test_pairings_with_fundamental_weights(label):
    rs = build_root_system(label)
    for k in range(rs.n_positive):
        vals = [rs.pair_k(rs.fundamental_weight(i), k) for i in range(rs.rank)]
        assert all(v >= 0 for v in vals) and any(vals)
    for i in range(rs.rank):
        assert rs.pair_k(rs.rho, i) == 1


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "C2", "G2", "A3", "B3"])
def test_longest_length_and_group_order(label):
    rs = build_root_system(label)
    orders = {"A1": 2, "A2": 6, "B2": 8, "C2": 8, "G2": 12, "A3": 24, "B3": 48}
    assert len(rs.weyl_group) == orders[label]
    assert rs.length(rs.longest) == rs.n_positive
    assert rs.length(rs.identity) == 0
    assert len({rs.act(rs.rho, w) for w in rs.weyl_group}) == len(rs.weyl_group)


def test_rank_one():
    rs = build_root_system("A", 1)
    assert rs.positive_roots == [(1,)]
    assert rs.cartan_matrix == [[2]]


def test_g2_has_six_positive_roots():
    assert build_root_system("G2").n_positive == 6


def test_b2_cartan_product():
    rs = build_root_system("B2")
    assert rs.n_positive == 4
    assert rs.cartan_matrix[0][1] * rs.cartan_matrix[1][0] == 2


def test_unknown_type_rejected():
    with pytest.raises(ConfigurationError):
        build_root_system("H3")
    with pytest.raises(ConfigurationError):
        build_root_system("G", 3)
    with pytest.raises(ConfigurationError):
        build_root_system("A9")


def test_pairing_kronecker_and_errors():
    rs = build_root_system("B2")
    for i, j in itertools.product(range(2), repeat=2):
        assert rs.pairing(rs.fundamental_weight(i), rs.simple_roots[j]) == int(i == j)
    assert rs.pairing((1, 1), (-1, 0)) == -1
    with pytest.raises(DomainError):
        rs.pairing((1, 1), (2, 0))


def test_rho_against_highest_coroot():
    for label in TYPES:
        rs = build_root_system(label)
        top = rs.coroot(rs.highest_coroot_root)
        assert rs.pair_k(rs.rho, rs.highest_coroot_root) == sum(top) == rs.coxeter_bound - 1


def test_g2_pairings_with_tau():
    rs = build_root_system("G2")
    assert sum(rs.pair_k((0, 1), k) for k in range(rs.n_positive)) == 10


def test_g2_reflection_of_highest_root():
    rs = build_root_system("G2")
    d4 = rs.root_to_weight((3, 2))
    d6 = rs.root_index((0, 1))
    assert rs.reflection(d6).act(d4) == rs.root_to_weight((3, 1))
    assert d4 == (0, 1)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_reflections_are_involutions(label):
    rs = build_root_system(label)
    for k in range(rs.n_positive):
        r = rs.reflection(k)
        assert r * r == rs.identity
        for x in weight_grid(rs.rank, -2, 2):
            assert rs.reflect(rs.reflect(x, rs.positive_roots[k]), rs.positive_roots[k]) == x


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_right_action_and_contravariance(label):
    rs = build_root_system(label)
    x = (2, -1)
    for u, v in itertools.product(rs.weyl_group, repeat=2):
        assert rs.act(x, u * v) == rs.act(rs.act(x, u), v)
    for u in rs.weyl_group:
        for b in rs.positive_roots:
            bw = rs.root_to_weight(b)
            image = u.inverse().act(bw)
            k, sign = rs.identify_weight(image)
            assert rs.pairing(u.act(x), b) == sign * rs.pair_k(x, k)


@pytest.mark.parametrize("label", ["A2", "B2", "C2", "G2", "A3"])
def test_bruhat_cover_dichotomy(label):
    rs = build_root_system(label)
    for w in rs.weyl_group:
        for k in range(rs.n_positive):
            lw = rs.length(rs.reflection(k) * w)
            assert lw != rs.length(w)


def test_bruhat_covers_of_identity_are_simple():
    rs = build_root_system("G2")
    for k in range(rs.n_positive):
        cover = rs.bruhat_cover(rs.identity, k)
        assert (cover is not None) == (k < rs.rank)


def test_bruhat_covers_g2_chain():
    rs = build_root_system("G2")
    d6, d5, d4 = (rs.root_index(b) for b in [(0, 1), (1, 1), (3, 2)])
    s6 = rs.reflection(d6)
    c1 = rs.bruhat_cover(s6, d5)
    assert c1 == rs.reflection(d5) * s6
    c2 = rs.bruhat_cover(c1, d4)
    assert c2 == rs.reflection(d4) * rs.reflection(d5) * s6
    assert rs.length(c2) == 3


def test_saturated_chains_climb_by_one():
    rs = build_root_system("B2")
    for w in rs.weyl_group:
        for k in range(rs.n_positive):
            c = rs.bruhat_cover(w, k)
            if c is not None:
                assert rs.length(c) == rs.length(w) + 1


def test_star():
    a1 = build_root_system("A1")
    assert a1.star((1,)) == (-1,)
    a2 = build_root_system("A2")
    assert a2.star((1, 0)) == (0, -1)
    for label in ["A2", "B2", "G2", "A3"]:
        rs = build_root_system(label)
        for x in weight_grid(rs.rank, 0, 2):
            assert rs.star(rs.star(x)) == x
            assert all(c <= 0 for c in rs.star(x))
        for u, v in itertools.product(rs.weyl_group, repeat=2):
            assert rs.star_elt(u * v) == rs.star_elt(u) * rs.star_elt(v)


def test_reduced_word_round_trip():
    for label in ["A2", "B2", "G2", "A3"]:
        rs = build_root_system(label)
        for w in rs.weyl_group:
            word = rs.reduced_word(w)
            assert len(word) == rs.length(w)
            assert rs.from_word(word) == w


def test_dominant_representative_sign():
    rs = build_root_system("A2")
    dom, sign = rs.dominant_representative((-1, 0))
    assert dom == (0, 1) and sign == 1
    dom, sign = rs.dominant_representative((-1, 2))
    assert dom == (1, 1) and sign == -1


def test_inner_product_normalisation():
    rs = build_root_system("B2")
    for k, b in enumerate(rs.positive_roots):
        bw = rs.root_to_weight(b)
        for x in weight_grid(2, -1, 1):
            assert Fraction(2) * rs.inner(x, bw) / rs.inner(bw, bw) == rs.pair_k(x, k)


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=2), st.sampled_from(["A2", "B2", "C2", "G2"]))
def test_pairing_is_linear(x, label):
    rs = build_root_system(label)
    y = (1, -2)
    s = tuple(a + b for a, b in zip(x, y))
    for b in rs.positive_roots:
        assert rs.pairing(s, b) == rs.pairing(x, b) + rs.pairing(y, b)


def test_formatting():
    rs = build_root_system("B2")
    assert rs.format_root((1, 2)) == "a1+2a2"
    assert rs.format_root((0, 1)) == "a2"
    assert rs.format_weight((1, -2)) == "1,-2"
