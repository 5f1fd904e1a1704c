"""Stable-letter reduction, cyclic alignment conjugacy, and power
compression over the two-generator base group."""

import random

import pytest

import baumslag.gersten as G
import baumslag.oracle as O
import baumslag.tower as TW
import baumslag.words as W
from baumslag import powersum as ps

P = W.parse_word
pw = W.print_word

ALPHA = ["s0", "s0^-1", "s1", "s1^-1", "t", "t^-1"]


def rand_bg_word(rng, n):
    return P(" ".join(rng.choice(ALPHA) for _ in range(n)))


# --- presentation rewriting --------------------------------------------------

def test_to_original_expands_the_defining_relation():
    w = G.to_original(P("s1 s0 s1^-1 s0^-2"))
    assert pw(w) == "t s0 t^-1 s0 t s0^-1 t^-1 s0^-2"
    assert G.word_problem_bg(w)


def test_to_original_preserves_value():
    rng = random.Random(301)
    for _ in range(50):
        w = rand_bg_word(rng, rng.randint(0, 8))
        assert G.word_problem_bg(w * G.to_original(w).inverse())


def test_from_original_accepts_the_two_letter_alphabet():
    assert G.from_original(P("t a t^-1 a^-2")) == P("t s0 t^-1 s0^-2")


def test_from_original_rejects_other_letters():
    with pytest.raises(ValueError):
        G.from_original(P("s1"))


# --- shifting into the index-shifted subgroup chain --------------------------

def test_shift_reindexes_by_prefix_exponent():
    assert pw(G.shift_to_subgroup(P("t s0 t^-1 s0"))) == "s1 s0"
    assert pw(G.shift_to_subgroup(P("t^-1 s1 t"))) == "s0"
    assert pw(G.shift_to_subgroup(P("s0^3"))) == "s0^3"


def test_shift_requires_balanced_t():
    with pytest.raises(ValueError):
        G.shift_to_subgroup(P("t s0"))


def test_shift_preserves_value_and_never_lengthens():
    rng = random.Random(302)
    done = 0
    while done < 10000:
        w = rand_bg_word(rng, rng.randint(0, 10))
        if W.t_exponent_sum(w) != 0:
            continue
        done += 1
        out = G.shift_to_subgroup(w)
        assert len(out) <= len(w)
        assert G.word_problem_bg(w * out.inverse())


def test_embed_recentres_indices():
    emb, ctx = G.embed_in_G2M(P("s1 s0"), 1)
    assert pw(emb) == "s2 s1" and ctx.m == 2
    emb, _ = G.embed_in_G2M(P("s-1"), 1)
    assert pw(emb) == "s0"


def test_embed_rejects_stable_letters_and_overflow():
    with pytest.raises(ValueError):
        G.embed_in_G2M(P("t"))
    with pytest.raises(ValueError):
        G.embed_in_G2M(P("s2"), 1)


# --- word problem -------------------------------------------------------------

def test_word_problem_on_relators():
    for r in G.relators():
        assert G.word_problem_bg(r)
        assert G.word_problem_bg(r.inverse())


def test_word_problem_negatives():
    assert not G.word_problem_bg(P("t"))
    assert not G.word_problem_bg(P("s0"))
    assert not G.word_problem_bg(P("t s1 t^-1 s1^-1"))
    # s0 and s1 do not commute
    assert not G.word_problem_bg(P("s0 s1 s0^-1 s1^-1"))


def test_word_problem_empty():
    assert G.word_problem_bg(W.EMPTY)
    assert G.is_identity(W.EMPTY)


def test_word_problem_reads_general_indices():
    # an index-j letter abbreviates a j-fold stable-letter conjugate
    assert G.word_problem_bg(P("s2") * P("t^2 s0 t^-2").inverse())
    assert G.word_problem_bg(P("s-1") * P("t^-1 s0 t").inverse())


# --- reduction ----------------------------------------------------------------

def test_reduce_crossing_down():
    assert pw(G.britton_reduce_bg(P("t s0^2 t^-1"))) == "s1^2"


def test_reduce_crossing_up():
    assert pw(G.britton_reduce_bg(P("t^-1 s1^4 t"))) == "s0^4"


def test_reduce_blocked_crossing_stays():
    out = G.britton_reduce_bg(P("t^-1 s0 t"))
    assert pw(out) == "t^-1 s0 t"


def test_reduce_soundness_random():
    rng = random.Random(303)
    for _ in range(500):
        w = rand_bg_word(rng, rng.randint(0, 10))
        r = G.britton_reduce_bg(w)
        assert isinstance(r, W.Word)
        assert G.word_problem_bg(w * r.inverse())


def test_reduce_invariant_under_relator_insertion():
    rng = random.Random(304)
    rels = G.relators()
    for _ in range(300):
        w = rand_bg_word(rng, rng.randint(0, 8))
        rel = rng.choice(rels)
        if rng.random() < 0.5:
            rel = rel.inverse()
        pos = rng.randint(0, len(w))
        w2 = W.Word(w.letters[:pos] + rel.letters + w.letters[pos:])
        assert G.word_problem_bg(w * w2.inverse())


# --- cyclic reduction ---------------------------------------------------------

def test_cyclic_reduce_closes_the_seam():
    w2, g = G.cyclic_britton_reduce(P("t s0^2 t^-1 s1"))
    assert pw(w2) == "s1^3" and len(g) == 0


def test_cyclic_reduce_rotates_wrap_pinch():
    w = P("t^-1 s0 t s0")
    w2, g = G.cyclic_britton_reduce(w)
    assert pw(w2) == "s0 s1"
    assert pw(g) == "t^-1"
    assert G.word_problem_bg(g.inverse() * w * g * w2.inverse())


def test_cyclic_reduce_leaves_reduced_words_alone():
    w2, g = G.cyclic_britton_reduce(P("s0 t"))
    assert pw(w2) == "s0 t" and len(g) == 0


def test_cyclic_outputs_scan_clean_in_every_rotation():
    rng = random.Random(305)
    for _ in range(300):
        w = rand_bg_word(rng, rng.randint(1, 8))
        w2, g = G.cyclic_britton_reduce(w)
        assert G.word_problem_bg(g.inverse() * w * g * w2.inverse())
        for k in range(max(1, len(w2))):
            assert G.scan_t_pinches(W.rotate(w2, k)) == []


# --- independent scanner ------------------------------------------------------

def test_scanner_clean_word():
    assert G.scan_t_pinches(P("s0 t")) == []


def test_scanner_sees_both_cyclic_pinches():
    found = G.scan_t_pinches(P("t s0^3 t^-1"))
    assert len(found) == 2
    down = [p for p in found if p.delta == 1]
    assert len(down) == 1
    assert ps.to_int(down[0].content_exponent) == 3
    assert down[0].content_base == 0


def test_scanner_sees_wrap_only():
    found = G.scan_t_pinches(P("t^-1 s0 t s0"))
    assert len(found) == 1
    assert found[0].delta == 1


def test_scanner_respects_subgroup_membership():
    # t^-1 (s0^2) t crosses only from powers of s1, so no finding
    assert G.scan_t_pinches(P("t^-1 s0^2 t s1")) == []
    # but a power of s1 between opposite stable letters is flagged
    found = G.scan_t_pinches(P("t^-1 s1^2 t s0"))
    assert any(p.delta == -1 for p in found)


# --- conjugacy ----------------------------------------------------------------

def test_conj_aligns_rotations_with_a_power_candidate():
    out = G.conj_bg(P("s1 t"), P("s0^2 s1^-1 t"))
    assert out.status == G.CONJUGATE
    assert pw(out.certificate.gamma) == "s0^2"
    assert out.certificate.verified
    d = out.certificate.detail
    assert d["exponent"] == 2 and d["inverted"] is True
    assert abs(d["exponent"]) <= abs(d["m"]) + abs(d["q"])


def test_conj_across_one_crossing():
    out = G.conj_bg(P("s0"), P("s1"))
    assert out.status == G.CONJUGATE and pw(out.certificate.gamma) == "t"


def test_conj_bottom_doubling():
    out = G.conj_bg(P("s0"), P("s0^2"))
    assert out.status == G.CONJUGATE and pw(out.certificate.gamma) == "s1"


def test_conj_separates_odd_translation_parts():
    assert G.conj_bg(P("s0"), P("s0^3")).status == G.NOT_CONJUGATE
    assert G.conj_bg(P("s0^3"), P("s1^2")).status == G.NOT_CONJUGATE


def test_conj_mixed_t_content_separates():
    assert G.conj_bg(P("s0 t"), P("s0")).status == G.NOT_CONJUGATE


def test_conj_twist_doubling():
    out = G.conj_bg(P("s1"), P("s1^2"))
    assert out.status == G.CONJUGATE
    assert pw(out.certificate.gamma) == "t s1 t^-1"
    out = G.conj_bg(P("s1^2"), P("s1^4"))
    assert out.status == G.CONJUGATE and out.certificate.verified
    assert out.certificate.method == "RING_SHIFT"


def test_conj_twist_odd_parts_separate():
    assert G.conj_bg(P("s1"), P("s1^3")).status == G.NOT_CONJUGATE


def test_conj_one_crossing_both_directions():
    out = G.conj_bg(P("s0^2"), P("s1^2"))
    assert out.status == G.CONJUGATE and out.certificate.verified
    assert out.certificate.method == "RING_SHIFT"
    assert out.certificate.detail["crossings"] == 1
    flipped = G.conj_bg(P("s1^2"), P("s0^2"))
    assert flipped.status == G.CONJUGATE and flipped.certificate.verified
    assert flipped.certificate.detail.get("flipped") is True


def test_conj_power_conjugated_word():
    u = P("t s0 t s0^3")
    out = G.conj_bg(u, P("s0^5") * u * P("s0^-5"))
    assert out.status == G.CONJUGATE
    assert pw(out.certificate.gamma) == "s0^5"
    assert out.certificate.verified


def test_conj_constructed_pairs_with_t_content():
    rng = random.Random(306)
    done = 0
    while done < 40:
        w = rand_bg_word(rng, rng.randint(2, 8))
        w2, _ = G.cyclic_britton_reduce(w)
        if not isinstance(w2, W.Word) or len(w2) == 0 or len(w2) > 8:
            continue
        if not any(l.base == W.T for l in w2.letters):
            continue
        done += 1
        k = rng.randint(-16, 16)
        v = P(f"s0^{k}") * w2 * P(f"s0^{-k}") if k else w2
        out = G.conj_bg(w2, v)
        assert out.status == G.CONJUGATE, (pw(w2), k, out.reason)
        cert = out.certificate
        assert cert.verified
        # stable-letter exponent sums of conjugate words agree
        assert W.t_exponent_sum(w2) == W.t_exponent_sum(v)
        if cert.method == "POWER_SHIFT":
            d = cert.detail
            assert abs(d["exponent"]) <= abs(d["m"]) + abs(d["q"])


def test_conj_pattern_shape_gate():
    # same t-sum, different cyclic sign patterns
    u = P("t s0 t^-1 s1 t s0 t^-1 s1")
    v = P("t t s0 t^-1 t^-1 s1 s0")
    out = G.conj_bg(u, v)
    assert out.status == G.NOT_CONJUGATE


# --- power compression --------------------------------------------------------

def test_power_witness_small():
    wit = G.power_witness_bg(16)
    assert pw(wit) == "s1^4 s0 s1^-4"
    assert len(wit) == 9
    assert G.word_problem_bg(wit * P("s0^-16"))


def test_length_bounds_small():
    assert G.length_bounds_bg(16) == (0, 9)
    assert G.length_bounds_bg(1) == (0, 1)


def test_length_bounds_alternating_value():
    lo, hi = G.length_bounds_bg(21845)
    assert lo == 4
    assert hi == 36
    wit = G.power_witness_bg(21845)
    assert G.word_problem_bg(wit * P("s0^-21845"))


def test_power_witness_zero():
    assert G.power_witness_bg(0) == W.EMPTY


# --- cross-checks against the tower pipeline ----------------------------------

def test_word_problem_matches_tower_pipeline():
    rng = random.Random(307)
    done = 0
    while done < 2000:
        w = rand_bg_word(rng, rng.randint(1, 10))
        if W.t_exponent_sum(w) != 0:
            continue
        done += 1
        shifted = G.shift_to_subgroup(w)
        emb, tctx = G.embed_in_G2M(shifted)
        assert G.word_problem_bg(w) == TW.is_identity(emb, tctx)


def test_oracle_search_works_over_this_group():
    b = O.SearchBudget(max_conjugator_length=3, node_cap=100000)
    found = O.bounded_conjugator_search(P("s0"), P("s1"), G.DEFAULT, b)
    assert found is not None
    assert G.word_problem_bg(found * P("s0") * found.inverse() * P("s1^-1"))
