"""Exact model of the solvable two-generator group with relation
s1 s0 s1^-1 = s0^2, realized on pairs (r, m) with r a dyadic fraction
and m an integer:

    (r, m) * (s, q) = (r + 2^m * s, m + q)

s0 maps to (1, 0), s1 to (0, 1).  Numerators live as PowerSum values,
so contents with tower-sized exponents evaluate exactly.  Conjugacy is
decided completely, with a verified conjugating element on success.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple, Union

from . import powersum as ps
from . import words as W
from .powersum import PowerSum, TooLargeError
from .words import T, Word

MAX_TWIST = 1 << 16  # largest |m| the conjugacy residue scan will walk


@dataclass(frozen=True, eq=False)
class Dyadic:
    """num / 2^den_exp in lowest terms: den_exp >= 0, and num is odd
    whenever den_exp > 0 (plain integers keep den_exp = 0)."""

    num: PowerSum = ps.ZERO
    den_exp: int = 0

    def __eq__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.den_exp == other.den_exp and ps.eq(self.num, other.num)

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return ps.is_zero(self.num)

    def is_integer(self) -> bool:
        return self.den_exp == 0

    def v2(self) -> int:
        return ps.v2(self.num) - self.den_exp

    def sign(self) -> int:
        return ps.sign(self.num)

    def __str__(self):
        if self.den_exp == 0:
            try:
                return ps.fmt_int(ps.to_int(self.num))
            except TooLargeError:
                return ps.format_power_sum(self.num)
        try:
            top = ps.fmt_int(ps.to_int(self.num))
        except TooLargeError:
            top = ps.format_power_sum(self.num)
        return f"{top}/2^{self.den_exp}"


DY_ZERO = Dyadic()


def dyadic(num: ps.IntLike, den_exp: int = 0) -> Dyadic:
    if den_exp < 0:
        return dy_shift(dyadic(num, 0), -den_exp)
    num = ps.normalize(ps.as_power_sum(num))
    if ps.is_zero(num):
        return DY_ZERO
    drop = min(ps.v2(num), den_exp)
    if drop > 0:
        num = ps.shift(num, -drop)
        den_exp -= drop
    return Dyadic(num, den_exp)


def dy_add(a: Dyadic, b: Dyadic) -> Dyadic:
    d = max(a.den_exp, b.den_exp)
    na = ps.shift(a.num, d - a.den_exp)
    nb = ps.shift(b.num, d - b.den_exp)
    return dyadic(ps.add(na, nb), d)


def dy_neg(a: Dyadic) -> Dyadic:
    return Dyadic(ps.negate(a.num), a.den_exp)


def dy_sub(a: Dyadic, b: Dyadic) -> Dyadic:
    return dy_add(a, dy_neg(b))


def dy_shift(a: Dyadic, k: int) -> Dyadic:
    """Multiply by 2^k, any integer k."""
    if a.is_zero() or k == 0:
        return a
    d = a.den_exp - k
    if d >= 0:
        return Dyadic(a.num, d)  # num odd already, still lowest terms
    return Dyadic(ps.shift(a.num, -d), 0)


def dy_odd_part(a: Dyadic) -> PowerSum:
    if a.is_zero():
        raise ValueError("zero has no odd part")
    return ps.shift(a.num, -ps.v2(a.num))


def dy_mod(a: Dyadic, d: int) -> int:
    """Value of the dyadic modulo odd d (2 is invertible)."""
    if d % 2 == 0:
        raise ValueError("modulus must be odd")
    return ps.mod_int(a.num, d) * pow(2, -a.den_exp, d) % d if d > 1 else 0


@dataclass(frozen=True, eq=False)
class BSElem:
    r: Dyadic = DY_ZERO
    m: int = 0

    def __eq__(self, other):
        if not isinstance(other, BSElem):
            return NotImplemented
        return self.m == other.m and self.r == other.r

    def is_identity(self) -> bool:
        return self.m == 0 and self.r.is_zero()

    def __str__(self):
        return f"({self.r}, {ps.fmt_int(self.m)})"


IDENTITY = BSElem()


def mul(x: BSElem, y: BSElem) -> BSElem:
    return BSElem(dy_add(x.r, dy_shift(y.r, x.m)), x.m + y.m)


def inv(x: BSElem) -> BSElem:
    return BSElem(dy_shift(dy_neg(x.r), -x.m), -x.m)


def conjugate(x: BSElem, g: BSElem) -> BSElem:
    """g * x * g^-1."""
    return mul(mul(g, x), inv(g))


# ---------------------------------------------------------------------------
# words <-> elements

def eval_syllables(syls: Iterable[Tuple[Union[int, str], ps.IntLike]]) -> BSElem:
    out = IDENTITY
    for base, e in syls:
        if base == 0:
            piece = BSElem(dyadic(e), 0)
        elif base == 1:
            piece = BSElem(DY_ZERO, e if isinstance(e, int) else ps.to_int(e))
        else:
            raise ValueError(f"letter s{base} is outside the two-generator group"
                             if base != T else
                             "stable letter t is outside the two-generator group")
        out = mul(out, piece)
    return out


def eval_word(w: Word) -> BSElem:
    """Homomorphic image: s0 -> (1, 0), s1 -> (0, 1)."""
    return eval_syllables(W.to_syllables(w))


def normal_form_syllables(x: BSElem) -> List[Tuple[int, ps.IntLike]]:
    """Syllables of s1^-p s0^r' s1^q with p = max(den_exp, -m, 0),
    q = p + m, r' = r * 2^p.  Exponents stay symbolic."""
    p = max(x.r.den_exp, -x.m, 0)
    shifted = dy_shift(x.r, p)
    assert shifted.is_integer()
    out: List[Tuple[int, ps.IntLike]] = []
    if p:
        out.append((1, -p))
    if not shifted.is_zero():
        out.append((0, shifted.num))
    if p + x.m:
        out.append((1, p + x.m))
    return out


def normal_form(x: BSElem) -> Word:
    """Literal word for the element; guarded against unprintably long
    middle powers."""
    return W.from_syllables(normal_form_syllables(x))


# ---------------------------------------------------------------------------
# conjugacy, complete at this level

def conj_bs12(u: BSElem, v: BSElem) -> Optional[BSElem]:
    """A verified g with g*u*g^-1 = v, or None when no conjugator
    exists.  Conjugation by (x, k) sends (r, m) to
    (2^k r + x (1 - 2^m), m), which drives both cases:

    m = 0: the orbit of (r, 0) is {(2^k r, 0)}, so odd parts decide.
    m != 0: x absorbs any multiple of 1 - 2^m, so the test is
    s = 2^k r modulo D = 2^|m| - 1, and 2^k mod D cycles within
    k in [0, |m|).  On a hit, x = (s - 2^k r) / (1 - 2^m) exactly.
    """
    if u.m != v.m:
        return None  # m survives abelianization, no conjugator can fix it
    m = u.m
    if m == 0:
        if u.r.is_zero() or v.r.is_zero():
            return IDENTITY if u.r.is_zero() and v.r.is_zero() else None
        if not ps.eq(dy_odd_part(u.r), dy_odd_part(v.r)):
            return None
        g = BSElem(DY_ZERO, v.r.v2() - u.r.v2())
        assert conjugate(u, g) == v
        return g
    if abs(m) > MAX_TWIST:
        raise TooLargeError(
            "conjugacy residue scan over |m| candidates is out of reach",
            height=m)
    d = (1 << abs(m)) - 1
    ru = dy_mod(u.r, d)
    rv = dy_mod(v.r, d)
    for k in range(abs(m)):
        if (rv - pow(2, k, d) * ru) % d:
            continue
        # exact witness: x = (s - 2^k r) / (1 - 2^m)
        diff = dy_sub(v.r, dy_shift(u.r, k))
        if m > 0:
            num = ps.div_int_exact(ps.negate(diff.num), d)
            x = dyadic(num, diff.den_exp)
        else:
            # 1 - 2^m = (2^|m| - 1) / 2^|m|
            num = ps.div_int_exact(diff.num, d)
            x = dy_shift(dyadic(num, diff.den_exp), abs(m))
        g = BSElem(x, k)
        assert conjugate(u, g) == v
        return g
    return None


def conjugator_word(g: BSElem) -> Word:
    """Literal word spelling the conjugator (guarded expansion)."""
    return normal_form(g)
