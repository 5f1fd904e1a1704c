"""Generator alphabet, literal words, parsing and printing, free and
cyclic reduction.

Letters are generators s<i> (i any integer; negative indices name the
shifted conjugates used when splitting a word over a subgroup chain)
and the stable letter t.  Words are plain letter sequences: nothing
reduces implicitly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Tuple, Union

from . import powersum as ps

T = "t"  # stable-letter marker used as a Letter base

MAX_LITERAL_LETTERS = 1 << 20  # refuse to expand words longer than this


class Letter(NamedTuple):
    base: Union[int, str]  # generator index, or T
    sign: int              # +1 or -1

    def inverse(self) -> "Letter":
        return Letter(self.base, -self.sign)


def S(i: int, sign: int = 1) -> Letter:
    return Letter(i, sign)


def Tl(sign: int = 1) -> Letter:
    return Letter(T, sign)


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...] = ()

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        got = self.letters[i]
        return Word(got) if isinstance(i, slice) else got

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __bool__(self):
        return bool(self.letters)

    def inverse(self) -> "Word":
        return Word(tuple(l.inverse() for l in reversed(self.letters)))

    def __str__(self):
        return print_word(self)


EMPTY = Word()


def word(*letters: Letter) -> Word:
    return Word(tuple(letters))


def from_letters(letters: Iterable[Letter]) -> Word:
    return Word(tuple(letters))


def power(letter_base, exp: int) -> Word:
    """letter_base raised to a literal integer power."""
    if abs(exp) > MAX_LITERAL_LETTERS:
        raise ps.TooLargeError(
            f"literal power of {abs(exp)} letters exceeds the expansion guard",
            height=exp)
    sign = 1 if exp > 0 else -1
    return Word(tuple(Letter(letter_base, sign) for _ in range(abs(exp))))


_TOKEN_RE = re.compile(r"^(?:s(?P<idx>-?\d+)|(?P<t>t)|(?P<a>a))(?:\^(?P<exp>-?\d+))?$")


def parse_word(text: str) -> Word:
    """Tokens `s<int>`, `t`, `a` (alias for s0), each optionally raised
    by `^<int>` with a nonzero machine-scale exponent; whitespace
    separated.  Returns the literal expansion, unreduced."""
    letters: List[Letter] = []
    for tok in text.split():
        m = _TOKEN_RE.match(tok)
        if not m:
            raise ValueError(f"bad token {tok!r}")
        if m.group("t"):
            base: Union[int, str] = T
        elif m.group("a"):
            base = 0
        else:
            base = int(m.group("idx"))
        exp = 1 if m.group("exp") is None else int(m.group("exp"))
        if exp == 0:
            raise ValueError(f"zero exponent in token {tok!r}")
        if len(letters) + abs(exp) > MAX_LITERAL_LETTERS:
            raise ps.TooLargeError(
                "word too long to expand literally", height=abs(exp))
        sign = 1 if exp > 0 else -1
        letters.extend(Letter(base, sign) for _ in range(abs(exp)))
    return Word(tuple(letters))


def _fmt_base(base) -> str:
    return "t" if base == T else f"s{base}"


def print_word(w: Word) -> str:
    """Coalesces maximal runs of one repeated letter: `s0^3 t^-1 s0`.
    Parsing the output restores the exact letter sequence."""
    out = []
    i = 0
    letters = w.letters
    while i < len(letters):
        j = i
        while j + 1 < len(letters) and letters[j + 1] == letters[i]:
            j += 1
        n = (j - i + 1) * letters[i].sign
        tok = _fmt_base(letters[i].base)
        out.append(tok if n == 1 else f"{tok}^{n}")
        i = j + 1
    return " ".join(out)


def free_reduce(w: Word) -> Word:
    stack: List[Letter] = []
    for l in w.letters:
        if stack and stack[-1].base == l.base and stack[-1].sign == -l.sign:
            stack.pop()
        else:
            stack.append(l)
    return Word(tuple(stack))


def cyclic_reduce(w: Word) -> Tuple[Word, Word]:
    """(core, prefix) with w = prefix * core * prefix^-1 as free words
    and core cyclically reduced."""
    core = list(free_reduce(w).letters)
    prefix: List[Letter] = []
    while len(core) >= 2 and core[0].base == core[-1].base \
            and core[0].sign == -core[-1].sign:
        prefix.append(core[0])
        core = core[1:-1]
    return Word(tuple(core)), Word(tuple(prefix))


def rotate(w: Word, k: int) -> Word:
    """Cyclic left shift by k letters."""
    if not w.letters:
        return w
    k %= len(w.letters)
    return Word(w.letters[k:] + w.letters[:k])


def t_exponent_sum(w: Word) -> int:
    return sum(l.sign for l in w.letters if l.base == T)


def generator_exponent_sum(w: Word, base) -> int:
    return sum(l.sign for l in w.letters if l.base == base)


# ---------------------------------------------------------------------------
# syllable form: maximal powers of one generator

Syllable = Tuple[Union[int, str], ps.IntLike]


def to_syllables(w: Word) -> List[Syllable]:
    """Syllables of the free reduction: (base, nonzero int exponent),
    adjacent bases distinct."""
    syls: List[List] = []
    for l in w.letters:
        if syls and syls[-1][0] == l.base:
            syls[-1][1] += l.sign
            if syls[-1][1] == 0:
                syls.pop()
        else:
            syls.append([l.base, l.sign])
    return [(b, e) for b, e in syls]


def _exp_as_int(e: ps.IntLike) -> int:
    return e if isinstance(e, int) else ps.to_int(e)


def from_syllables(syls: Iterable[Syllable],
                   max_letters: int = MAX_LITERAL_LETTERS) -> Word:
    """Expand syllables into a literal word; exponents may be PowerSum.
    Raises TooLargeError beyond max_letters."""
    letters: List[Letter] = []
    for base, e in syls:
        n = _exp_as_int(e)
        if n == 0:
            continue
        if len(letters) + abs(n) > max_letters:
            raise ps.TooLargeError(
                "syllable expansion exceeds the letter guard", height=n)
        sign = 1 if n > 0 else -1
        letters.extend(Letter(base, sign) for _ in range(abs(n)))
    return Word(tuple(letters))


@dataclass(frozen=True)
class SylWord:
    """Compressed word: syllables whose exponents are PowerSum values,
    for results too long to spell letter by letter.  Print-only."""

    syllables: Tuple[Tuple[Union[int, str], ps.PowerSum], ...]

    def __len__(self):
        return len(self.syllables)

    def __str__(self):
        out = []
        for base, e in self.syllables:
            tok = _fmt_base(base)
            try:
                n = ps.to_int(e)
            except ps.TooLargeError:
                n = None
            if n is not None and abs(n).bit_length() <= 64:
                out.append(tok if n == 1 else f"{tok}^{n}")
            else:
                out.append(f"{tok}^{{{ps.format_power_sum(e)}}}")
        return " ".join(out)

    def letter_count(self) -> ps.IntLike:
        total: ps.IntLike = 0
        for _, e in self.syllables:
            e = ps.as_power_sum(e)
            total = ps.add(total, e if ps.sign(e) >= 0 else ps.negate(e))
        return total


def syl_word(syls: Iterable[Syllable]) -> SylWord:
    packed = tuple((b, ps.as_power_sum(e)) for b, e in syls
                   if not ps.is_zero(ps.as_power_sum(e)))
    return SylWord(packed)


def as_word(w: Union[Word, SylWord],
            max_letters: int = MAX_LITERAL_LETTERS) -> Word:
    """Literal form of a possibly compressed word."""
    if isinstance(w, Word):
        return w
    return from_syllables(w.syllables, max_letters)
