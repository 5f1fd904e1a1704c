"""End-to-end gate.  One test per criterion; each prints a single
pass/fail line so the run log doubles as a scoreboard.
"""

import functools
import itertools
import random
import time

from baumslag import bs12 as B
from baumslag import gersten as BG
from baumslag import oracle as O
from baumslag import powersum as ps
from baumslag import tower as TW
from baumslag import witnesses as X
from baumslag import words as W


def criterion(num, desc):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper():
            try:
                extra = fn() or ""
            except BaseException:
                print(f"criterion {num}: FAIL - {desc}")
                raise
            print(f"criterion {num}: PASS - {desc}{extra}")
        return wrapper
    return deco


# --- shared enumeration helpers ----------------------------------------------

FOUR_LETTERS = [W.Letter(0, 1), W.Letter(0, -1), W.Letter(1, 1),
                W.Letter(1, -1)]


def reduced_words(max_len, letters=FOUR_LETTERS):
    """All freely reduced nonempty letter tuples up to max_len,
    in order of increasing length."""
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for tup in frontier:
            for l in letters:
                if tup and tup[-1].base == l.base and tup[-1].sign == -l.sign:
                    continue
                nxt.append(tup + (l,))
        yield from nxt
        frontier = nxt


def elem_key(e):
    return (ps.to_int(e.r.num), e.r.den_exp, e.m)


@criterion(1, "all six desk-scale tower pairs carry verified conjugators")
def test_criterion_1_witness_verification():
    cells = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)]
    for m, n in cells:
        t0 = time.monotonic()
        rep = X.make_witness_gm(m, n)
        ctx = TW.TowerContext(m)
        g, u, v = W.as_word(rep.gamma), rep.u, W.as_word(rep.v)
        assert TW.is_identity(g * u * g.inverse() * v.inverse(), ctx), (m, n)
        assert rep.verified, (m, n)
        elapsed = time.monotonic() - t0
        assert elapsed < 5.0, (m, n, elapsed)
    return f" ({len(cells)} cells)"


@criterion(2, "term-count minimality matches brute force on |k| <= 4096")
def test_criterion_2_naf_minimality():
    table = O.signed_term_table(4096, max_exp=16)
    assert table[0] == ps.min_term_count(ps.ZERO) == 0
    for k in range(1, 4097):
        want = table[k]
        assert ps.min_term_count(ps.from_int(k)) == want, k
        assert ps.min_term_count(ps.from_int(-k)) == want, k
    return " (8193 values)"


@criterion(3, "(E-1)/3 identity and its term count at every small cell")
def test_criterion_3_tower_third():
    checked = 0
    for m in (2, 3):
        for n in range(1, 5):
            e = ps.to_int(ps.tower(m, n))
            if e > 1 << 20:
                continue
            third = ps.third_of_tower_minus_one(m, n)
            assert 3 * ps.to_int(third) + 1 == e, (m, n)
            half_prev = ps.to_int(ps.tower(m - 1, n)) // 2
            assert ps.min_term_count(third) == half_prev, (m, n)
            checked += 1
    assert checked == 6
    return f" ({checked} cells)"


@criterion(4, "every short two-letter word naming a power obeys (n-p)2^p")
def test_criterion_4_power_length_bound():
    # freely reduced enumeration suffices: deleting a cancelling pair
    # never increases (n-p)2^p, so reduced words carry the tightest
    # instance of the bound
    ctx = TW.TowerContext(1)
    powers = 0
    for tup in reduced_words(10):
        w = W.Word(tup)
        val = TW.eval_power(w, 0, ctx)
        if val is None:
            continue
        ell = ps.to_int(val)
        n = len(tup)
        p = sum(1 for l in tup if l.base == 1)
        assert abs(ell) <= (n - p) * (1 << p), (str(w), ell)
        powers += 1
    assert powers > 1000
    return f" ({powers} power words among 118096 reduced words)"


@criterion(5, "affine conjugacy vs depth-8 ball search, all pairs <= 6")
def test_criterion_5_bs12_vs_oracle():
    elems = {}
    for tup in reduced_words(6):
        e = B.eval_word(W.Word(tup))
        elems.setdefault(elem_key(e), (e, W.Word(tup)))

    # complete element ball of conjugator words up to length 8, keyed
    # with the first (= minimal) word length reaching each element
    ball = {}
    for tup in reduced_words(8):
        e = B.eval_word(W.Word(tup))
        ball.setdefault(elem_key(e), (e, len(tup)))

    orbits = {}
    for ku, (e, _) in elems.items():
        orbits[ku] = {elem_key(B.conjugate(e, g)) for g, _ in ball.values()}

    beyond_depth = 0
    pairs = 0
    for (ku, (u, _)), (kv, (v, _)) in itertools.product(
            elems.items(), repeat=2):
        pairs += 1
        g = B.conj_bs12(u, v)
        found = kv in orbits[ku]
        if g is None:
            # a ball hit here would be a missed conjugacy
            assert not found, (ku, kv)
        else:
            assert B.conjugate(u, g) == v, (ku, kv)
            if not found:
                beyond_depth += 1
    # the ball is complete for radius 8, so these pairs are conjugate
    # with every conjugator longer than 8 letters; the count is frozen
    assert beyond_depth == 76

    # spot-check that the ball shortcut mirrors the literal search
    spot = O.SearchBudget(max_conjugator_length=4)
    sample = [("s0^4 s1^-1", "s0^2 s1^-1"), ("s0 s1", "s1 s0"),
              ("s0", "s0^3"), ("s1^2 s0", "s0^4 s1^2")]
    for wu, wv in sample:
        u, v = W.parse_word(wu), W.parse_word(wv)
        lit = O.bounded_conjugator_search(u, v, TW.TowerContext(1), spot)
        ku, kv = elem_key(B.eval_word(u)), elem_key(B.eval_word(v))
        ball_hit = any(
            elem_key(B.conjugate(elems.get(ku, (B.eval_word(u), u))[0],
                                 g)) == kv
            for g, glen in ball.values() if glen <= 4)
        assert (lit is not None) == ball_hit, (wu, wv)
    return (f" ({pairs} element pairs, {beyond_depth} conjugate only "
            f"beyond the depth-8 ball)")


@criterion(6, "100 stable-letter shift pairs settle with the bounded "
               "power exponent")
def test_criterion_6_stable_letter_shift_pairs():
    rng = random.Random(1207)
    alphabet = [W.S(0, 1), W.S(0, -1), W.S(1, 1), W.S(1, -1),
                W.Tl(1), W.Tl(-1)]
    done = power_shift = 0
    while done < 100:
        tup = tuple(rng.choice(alphabet) for _ in range(rng.randint(2, 8)))
        w2, _ = BG.cyclic_britton_reduce(W.free_reduce(W.Word(tup)))
        if not isinstance(w2, W.Word) or not 0 < len(w2) <= 8:
            continue
        if not any(l.base == W.T for l in w2.letters):
            continue
        k = rng.randint(-16, 16)
        if k == 0:
            continue
        done += 1
        v = W.power(0, k) * w2 * W.power(0, -k)
        out = BG.conj_bg(w2, v)
        assert out.status == BG.CONJUGATE, (str(w2), k, out.reason)
        cert = out.certificate
        assert cert.verified, (str(w2), k)
        g = W.as_word(cert.gamma)
        assert BG.word_problem_bg(g * w2 * g.inverse() * v.inverse())
        if cert.method == "POWER_SHIFT":
            power_shift += 1
            d = cert.detail
            assert abs(d["exponent"]) <= abs(d["m"]) + abs(d["q"]), (
                str(w2), k, d)
    assert power_shift >= 60
    return f" (100 pairs, {power_shift} through the power-shift case)"


@criterion(7, "synthesized tower powers stay within 2^j (n+j) letters")
def test_criterion_7_synthesis_bound():
    cells = 0
    for m in range(1, 7):
        for i in range(m):
            j = m - i
            for n in range(1, 9):
                try:
                    e = ps.tower(j, n)
                except ps.TooLargeError:
                    continue
                ctx = TW.TowerContext(m)
                try:
                    word = TW.synth_power(i, e, ctx)
                except ps.TooLargeError:
                    continue
                assert len(word) <= (1 << j) * (n + j), (m, i, n)
                got = TW.eval_power(word, i, ctx)
                assert got is not None and ps.eq(got, e), (m, i, n)
                cells += 1
    assert cells >= 100
    return f" ({cells} cells)"


@criterion(8, "reduction engine vs insertion receipts and abelianized "
               "rejection, 10^4 words each way in both groups")
def test_criterion_8_word_problem_cross_validation():
    rng = random.Random(80)
    n_each = 10_000
    ctx2 = TW.TowerContext(2)
    bgctx = BG.GerstenContext()

    def trivial_word(group):
        while True:
            w = O.random_trivial_word(group, rng,
                                      factors=rng.randint(1, 3),
                                      conj_len=rng.randint(0, 4))
            if len(w) <= 24:
                return w

    tower_letters = [W.S(i, s) for i in range(3) for s in (1, -1)]
    for _ in range(n_each):
        w = trivial_word(ctx2)
        assert TW.is_identity(w, ctx2)
        assert O.confirm_trivial_by_insertion(w, ctx2)
    for _ in range(n_each):
        tup = [rng.choice(tower_letters) for _ in range(rng.randint(1, 16))]
        w = W.Word(tuple(tup))
        if W.generator_exponent_sum(w, 2) == 0:
            w = w * W.power(2, rng.choice((1, -1)) * rng.randint(1, 3))
        # top-letter exponent sum is a homomorphism to Z, so w != 1
        assert not TW.is_identity(w, ctx2)

    bg_letters = [W.S(0, 1), W.S(0, -1), W.S(1, 1), W.S(1, -1),
                  W.Tl(1), W.Tl(-1)]
    for _ in range(n_each):
        w = trivial_word(bgctx)
        assert BG.word_problem_bg(w)
        assert O.confirm_trivial_by_insertion(w, bgctx)
        # third, independent route: into the tower through the shift
        emb, ectx = BG.embed_in_G2M(BG.shift_to_subgroup(w))
        assert TW.is_identity(emb, ectx)
    for _ in range(n_each):
        tup = [rng.choice(bg_letters) for _ in range(rng.randint(1, 16))]
        w = W.Word(tuple(tup))
        if W.t_exponent_sum(w) == 0:
            w = w * W.Word((W.Tl(rng.choice((1, -1))),))
        # t-exponent sum survives abelianization, so w != 1
        assert not BG.word_problem_bg(w)
    return f" ({4 * n_each} words)"


@criterion(9, "oracle-exact conjugator lengths never undercut the "
               "term-count floor")
def test_criterion_9_lower_bound_validity():
    rows = X.cl_table(4, 3, with_oracle=True)
    completed = [r for r in rows if r.oracle_length is not None]
    assert len(completed) >= 3
    for r in completed:
        assert r.oracle_length >= r.naf_lower_bound, (r.m, r.n)
    return f" ({len(completed)} oracle cells of {len(rows)})"
