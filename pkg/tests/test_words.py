import random

import pytest

from baumslag import words as W
from baumslag.powersum import TooLargeError, from_int, tower
from baumslag.words import Letter, T, Word, parse_word, print_word


def lt(base, sign=1):
    return Letter(base, sign)


def test_parse_expands_literally():
    w = parse_word("s1 s0^-2 t")
    assert w.letters == (lt(1), lt(0, -1), lt(0, -1), lt(T))


def test_parse_empty():
    assert parse_word("") == W.EMPTY
    assert len(parse_word("   ")) == 0


def test_parse_alias_a():
    assert parse_word("a^2").letters == (lt(0), lt(0))
    assert parse_word("a^-1").letters == (lt(0, -1),)


def test_parse_negative_generator_index():
    w = parse_word("s-2^3")
    assert w.letters == (lt(-2),) * 3


def test_parse_rejects_bad_tokens():
    for bad in ["s", "x1", "s1^0", "t^0", "s1^^2", "s1^", "2", "ss1"]:
        with pytest.raises(ValueError):
            parse_word(bad)


def test_parse_guards_huge_exponents():
    with pytest.raises(TooLargeError):
        parse_word("s0^99999999")


def test_free_reduce_examples():
    assert not W.free_reduce(parse_word("s0 s0^-1"))
    assert not W.free_reduce(parse_word("s1 s0 s0^-1 s1^-1"))
    w = parse_word("s1 s0 s1^-1")
    assert W.free_reduce(w) == w


def test_free_reduce_idempotent_and_shrinking():
    rng = random.Random(11)
    for _ in range(300):
        letters = tuple(
            Letter(rng.choice([0, 1, 2, T]), rng.choice([1, -1]))
            for _ in range(rng.randint(0, 30)))
        w = Word(letters)
        r = W.free_reduce(w)
        assert len(r) <= len(w)
        assert W.free_reduce(r) == r


def test_cyclic_reduce_examples():
    core, prefix = W.cyclic_reduce(parse_word("s0 s1 s0^-1"))
    assert core == parse_word("s1")
    assert prefix == parse_word("s0")

    core, prefix = W.cyclic_reduce(W.EMPTY)
    assert not core and not prefix

    w = parse_word("s1 s0")
    core, prefix = W.cyclic_reduce(w)
    assert core == w and not prefix


def test_cyclic_reduce_reassembles():
    rng = random.Random(17)
    for _ in range(300):
        letters = tuple(
            Letter(rng.choice([0, 1, T]), rng.choice([1, -1]))
            for _ in range(rng.randint(0, 24)))
        w = Word(letters)
        core, prefix = W.cyclic_reduce(w)
        doubled = core * core
        assert W.free_reduce(doubled) == doubled  # cyclically reduced
        rebuilt = prefix * core * prefix.inverse()
        assert W.free_reduce(rebuilt) == W.free_reduce(w)


def test_t_exponent_sum():
    assert W.t_exponent_sum(parse_word("t s0 t^-1 s0")) == 0
    assert W.t_exponent_sum(parse_word("t t s1")) == 2
    assert W.t_exponent_sum(parse_word("t^-3")) == -3


def test_print_round_trip():
    rng = random.Random(23)
    for _ in range(300):
        letters = tuple(
            Letter(rng.choice([-1, 0, 1, 5, T]), rng.choice([1, -1]))
            for _ in range(rng.randint(0, 20)))
        w = Word(letters)
        assert parse_word(print_word(w)) == w


def test_print_coalesces_runs():
    w = parse_word("s0 s0 s0 t^-1")
    assert print_word(w) == "s0^3 t^-1"
    # unreduced neighbors stay split so the round trip is exact
    w2 = Word((lt(0), lt(0, -1)))
    assert print_word(w2) == "s0 s0^-1"
    assert parse_word(print_word(w2)) == w2


def test_inverse_and_rotate():
    w = parse_word("s1 s0^2 t")
    assert print_word(w.inverse()) == "t^-1 s0^-2 s1^-1"
    assert W.rotate(w, 1).letters == w.letters[1:] + w.letters[:1]
    assert W.rotate(w, len(w)) == w
    assert not W.free_reduce(w * w.inverse())


def test_syllables_round_trip():
    w = parse_word("s1^3 s0^-2 s1 t^2")
    syls = W.to_syllables(w)
    assert syls == [(1, 3), (0, -2), (1, 1), (T, 2)]
    assert W.from_syllables(syls) == w
    # syllable view reduces freely first
    assert W.to_syllables(parse_word("s1 s0 s0^-1 s1")) == [(1, 2)]


def test_from_syllables_guard():
    with pytest.raises(TooLargeError):
        W.from_syllables([(0, from_int(1 << 30))])
    with pytest.raises(TooLargeError):
        W.from_syllables([(0, 5)], max_letters=3)


def test_syl_word_printing():
    sw = W.syl_word([(1, tower(4, 2)), (0, from_int(-2))])
    assert "s1^{term(1,65536)}" in str(sw)
    assert "s0^-2" in str(sw)
    sw2 = W.syl_word([(0, from_int(3)), (T, from_int(1))])
    assert str(sw2) == "s0^3 t"


def test_syl_word_letter_count():
    sw = W.syl_word([(1, from_int(5)), (0, from_int(-7))])
    from baumslag import powersum as ps
    assert ps.to_int(sw.letter_count()) == 12
