"""Brute-force ground truth: signed-term counts, ball searches,
relator-insertion certificates."""

import random

import pytest

import baumslag.oracle as O
import baumslag.powersum as ps
import baumslag.tower as TW
import baumslag.words as W
from baumslag.gersten import DEFAULT as BG

P = W.parse_word
pw = W.print_word

G1 = TW.TowerContext(1)
G2 = TW.TowerContext(2)


# --- signed power-of-two sums ------------------------------------------------

def test_brute_terms_small_values():
    assert O.brute_min_signed_terms(0) == 0
    assert O.brute_min_signed_terms(1) == 1
    assert O.brute_min_signed_terms(2) == 1
    assert O.brute_min_signed_terms(3) == 2
    assert O.brute_min_signed_terms(5) == 2
    assert O.brute_min_signed_terms(7) == 2
    assert O.brute_min_signed_terms(-7) == 2
    assert O.brute_min_signed_terms(11) == 3


def test_brute_terms_alternating_value():
    # 21845 = 0b0101010101010101, the worst case at 16 bits
    assert O.brute_min_signed_terms(21845) == 8


def test_brute_terms_agrees_with_naf_counter():
    table = O.signed_term_table(512)
    for k in range(-512, 513):
        assert table[k] == ps.min_term_count(ps.from_int(k)), k


def test_table_matches_single_queries():
    table = O.signed_term_table(64, max_exp=8)
    rng = random.Random(201)
    for _ in range(20):
        k = rng.randint(-64, 64)
        assert table[k] == O.brute_min_signed_terms(k, max_exp=8)


def test_brute_terms_domain_checks():
    with pytest.raises(ValueError):
        O.brute_min_signed_terms(1 << 16, max_exp=16)
    with pytest.raises(ValueError):
        O.brute_min_signed_terms(3, max_exp=30)


# --- ball searches -----------------------------------------------------------

def test_conjugator_search_matches_known_answer():
    g = O.bounded_conjugator_search(P("s1^2"), P("s0^3 s1^2"), G2)
    assert pw(g) == "s0^-1"


def test_conjugator_search_equal_words():
    g = O.bounded_conjugator_search(P("s0"), P("s0"), G2)
    assert g == W.EMPTY


def test_conjugator_search_doubling():
    g = O.bounded_conjugator_search(P("s0"), P("s0^2"), G2)
    assert pw(g) == "s1"


def test_conjugator_search_negative():
    budget = O.SearchBudget(max_conjugator_length=4, node_cap=500000)
    assert O.bounded_conjugator_search(P("s0"), P("s0^3"), G2, budget) is None


def test_conjugator_search_is_monotone_in_depth():
    # anything found at depth d is found at depth d+1, with the same
    # shortlex-first answer
    u, v = P("s1^2"), P("s0^3 s1^2")
    g3 = O.bounded_conjugator_search(u, v, G2,
                                     O.SearchBudget(max_conjugator_length=3))
    g4 = O.bounded_conjugator_search(u, v, G2,
                                     O.SearchBudget(max_conjugator_length=4))
    assert g3 == g4


def test_conjugator_search_node_cap():
    with pytest.raises(O.BudgetExceeded):
        O.bounded_conjugator_search(
            P("s0"), P("s0^3"), G2,
            O.SearchBudget(max_conjugator_length=6, node_cap=10))


def test_conjugator_search_gersten_group():
    g = O.bounded_conjugator_search(P("s0"), P("s1"), BG)
    assert pw(g) == "t"


def test_min_word_length_small_powers():
    assert O.min_word_length(W.EMPTY, G1) == 0
    assert O.min_word_length(P("s0^2"), G1) == 2
    assert O.min_word_length(P("s0^4"), G1) == 4
    # a disguised square
    assert O.min_word_length(P("s1 s0 s1^-1"), G1) == 2


def test_min_word_length_ball_too_small():
    assert O.min_word_length(
        P("s0^5"), G1, O.SearchBudget(max_conjugator_length=3)) is None


# --- conjugation orbits ------------------------------------------------------

def test_orbit_contains_one_step_conjugates():
    orbit = O.conjugate_orbit(P("s0"), G2, depth=1)
    keys = {O._orbit_key(s) for s in orbit}
    assert O._orbit_key(TW._word_syls(P("s0"))) in keys
    assert O._orbit_key(TW._word_syls(P("s0^2"))) in keys
    assert len(keys) == len(orbit)  # no duplicate values


def test_orbit_elements_stay_conjugate():
    orbit = O.conjugate_orbit(P("s1"), G2, depth=2)
    u = P("s1")
    for syls in orbit:
        w = W.as_word(TW._syls_word(syls, G2))
        out = TW.conj_gm(u, w, G2)
        assert out.status == TW.CONJUGATE


def test_orbit_rejects_non_tower_context():
    with pytest.raises(TypeError):
        O.conjugate_orbit(P("s0"), BG, depth=1)


# --- relator-based triviality -----------------------------------------------

def test_random_trivial_words_are_trivial():
    rng = random.Random(202)
    for _ in range(50):
        w = O.random_trivial_word(G2, rng)
        assert TW.is_identity(w, G2)
    from baumslag import gersten
    for _ in range(50):
        w = O.random_trivial_word(BG, rng)
        assert gersten.is_identity(w)


def test_insertion_confirms_single_conjugated_relator():
    rng = random.Random(203)
    for _ in range(20):
        w = O.random_trivial_word(G2, rng, factors=1, conj_len=2)
        assert O.confirm_trivial_by_insertion(w, G2)


def test_insertion_rejects_nontrivial():
    assert not O.confirm_trivial_by_insertion(
        P("s0"), G2, O.SearchBudget(max_relator_insertions=2, node_cap=100000))


# --- pinch scanner -----------------------------------------------------------

def test_scanner_flags_raw_pinch():
    found = O.scan_tower_pinches(P("s2 s1 s2^-1"), G2)
    assert found and found[0][0] == "pinch"


def test_scanner_flags_even_descending_pinch():
    found = O.scan_tower_pinches(P("s2^-1 s1^2 s2"), G2)
    assert found and found[0][0] == "pinch"


def test_scanner_accepts_odd_descending_content():
    assert O.scan_tower_pinches(P("s2^-1 s1 s2"), G2) == []


def test_scanner_accepts_reduced_outputs():
    rng = random.Random(204)
    for _ in range(300):
        letters = tuple(
            W.S(rng.randrange(3), rng.choice((1, -1))) for _ in range(10))
        r = TW.britton_reduce(W.Word(letters), G2)
        assert O.scan_tower_pinches(r, G2) == []
