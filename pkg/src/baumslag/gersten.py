"""The one-relator group on a and t where t a t^-1 conjugates a to a
square, presented with a shorthand generator s1 = t s0 t^-1 (s0 is a):
relations s1 s0 s1^-1 = s0^2 and t s0 t^-1 = s1.

Structurally this is an HNN extension over the two-generator affine
group: the stable letter t carries the cyclic subgroup on s0 onto the
one on s1.  Between consecutive t letters a word is just an affine
element, so pinch detection is exact arithmetic, not search.  General
indices are allowed on input and read as stable-letter conjugates:
s_j means t^j s0 t^-j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from . import bs12 as B
from . import powersum as ps
from . import tower as TW
from . import words as W
from .powersum import PowerSum, TooLargeError
from .tower import CONJUGATE, NOT_CONJUGATE, UNDECIDED, ConjCertificate, ConjOutcome
from .words import SylWord, Word


class GerstenContext:
    """Carries the output-materialization guard; the group itself has
    no parameters."""

    def __init__(self, max_letters: int = W.MAX_LITERAL_LETTERS):
        self.max_letters = max_letters

    def __repr__(self):
        return "GerstenContext()"


DEFAULT = GerstenContext()


def relators(ctx: GerstenContext = DEFAULT) -> List[Word]:
    return [W.parse_word("s1 s0 s1^-1 s0^-2"),
            W.parse_word("t s0 t^-1 s1^-1")]


def check_word(w: Word):
    for l in w.letters:
        if l.base not in (0, 1, W.T):
            raise ValueError(
                f"letter {W.print_word(W.Word((l,)))!r} is outside s0, s1, t")


# ---------------------------------------------------------------------------
# presentation rewriting

def from_original(w: Word) -> Word:
    """Words over the one-relator alphabet {a, t} read directly: a is
    s0.  Parsing already aliases a to s0, so this only validates."""
    for l in w.letters:
        if l.base not in (0, W.T):
            raise ValueError("expected letters over a and t only")
    return w


def to_original(w: Word) -> Word:
    """Substitute s1 -> t s0 t^-1, landing back on the {a, t} alphabet."""
    check_word(w)
    out: List[W.Letter] = []
    for l in w.letters:
        if l.base == 1:
            out.extend((W.Tl(1), W.S(0, l.sign), W.Tl(-1)))
        else:
            out.append(l)
    return W.free_reduce(W.Word(tuple(out)))


def shift_to_subgroup(w: Word) -> Word:
    """For words with zero t-exponent sum: delete the t letters and
    move each s-letter's index by the t-exponent of the prefix before
    it.  The result equals w in the group and is never longer."""
    if W.t_exponent_sum(w) != 0:
        raise ValueError("t-exponent sum must be zero")
    out: List[W.Letter] = []
    sigma = 0
    for l in w.letters:
        if l.base == W.T:
            sigma += l.sign
        else:
            out.append(W.Letter(l.base + sigma, l.sign))
    return W.Word(tuple(out))


def embed_in_G2M(w: Word, M: Optional[int] = None
                 ) -> Tuple[Word, TW.TowerContext]:
    """Shift indices up by M, so a word over S(-M)..S(M) becomes a word
    in the height-2M tower, where the whole tower toolkit applies.
    Letter-for-letter, so lengths match."""
    top = 0
    for l in w.letters:
        if l.base == W.T:
            raise ValueError("shift stable letters out first")
        top = max(top, abs(l.base))
    if M is None:
        M = top
    if top > M:
        raise ValueError(f"index {top} outside -{M}..{M}")
    shifted = W.Word(tuple(W.Letter(l.base + M, l.sign) for l in w.letters))
    return shifted, TW.TowerContext(2 * M)


# ---------------------------------------------------------------------------
# reduction over the stable letter

# state: alternating affine elements and t-letter signs,
# len(elems) == len(tsigns) + 1, no pinch anywhere inside
State = Tuple[List[B.BSElem], List[int]]

Item = Tuple[str, object]  # ("e", BSElem) or ("t", +1/-1)


def _phi_down(x: B.BSElem) -> Optional[B.BSElem]:
    # t x t^-1 for x on the s0 line: s0^r -> s1^r, integer r only
    if x.m != 0 or not x.r.is_integer():
        return None
    if x.r.is_zero():
        return B.IDENTITY
    return B.BSElem(B.DY_ZERO, ps.to_int(x.r.num))


def _phi_up(x: B.BSElem) -> Optional[B.BSElem]:
    # t^-1 x t for x on the s1 line: s1^m -> s0^m
    if not x.r.is_zero():
        return None
    return B.BSElem(B.dyadic(ps.from_int(x.m)), 0)


def _push_elem(state: State, x: B.BSElem):
    elems, _ = state
    elems[-1] = B.mul(elems[-1], x)


def _push_t(state: State, d: int):
    elems, tsigns = state
    if tsigns and tsigns[-1] == -d:
        top = elems[-1]
        image = _phi_down(top) if d == -1 else _phi_up(top)
        if image is not None:
            elems.pop()
            tsigns.pop()
            _push_elem(state, image)
            return  # the incoming letter is consumed by the pinch
    tsigns.append(d)
    elems.append(B.IDENTITY)


def _bg_items(w) -> List[Item]:
    items: List[Item] = []
    if isinstance(w, Word):
        syls = W.to_syllables(w)
    elif isinstance(w, SylWord):
        syls = list(w.syllables)
    else:
        syls = list(w)

    def emit_t(n: int):
        step = 1 if n > 0 else -1
        for _ in range(abs(n)):
            items.append(("t", step))

    for base, e in syls:
        e = ps.as_power_sum(e)
        if ps.is_zero(e):
            continue
        if base == W.T:
            emit_t(ps.to_int(e))
        elif base == 0:
            items.append(("e", B.BSElem(B.dyadic(e), 0)))
        elif base == 1:
            items.append(("e", B.BSElem(B.DY_ZERO, ps.to_int(e))))
        elif isinstance(base, int):
            # general index: s_j is t^j s0 t^-j
            if base:
                emit_t(base)
            items.append(("e", B.BSElem(B.dyadic(e), 0)))
            if base:
                emit_t(-base)
        else:
            raise ValueError(f"unknown letter base {base!r}")
    return items


def _treduce_items(items) -> State:
    state: State = ([B.IDENTITY], [])
    for kind, val in items:
        if kind == "e":
            _push_elem(state, val)
        else:
            _push_t(state, val)
    return state


def _treduce(w) -> State:
    return _treduce_items(_bg_items(w))


def _state_items(state: State) -> List[Item]:
    items: List[Item] = []
    elems, tsigns = state
    for j, e in enumerate(elems):
        items.append(("e", e))
        if j < len(tsigns):
            items.append(("t", tsigns[j]))
    return items


def _inv_items(items) -> List[Item]:
    out: List[Item] = []
    for kind, val in reversed(items):
        if kind == "e":
            out.append(("e", B.inv(val)))
        else:
            out.append(("t", -val))
    return out


def _state_syls(state: State) -> List[Tuple[object, PowerSum]]:
    elems, tsigns = state
    out: List[Tuple[object, PowerSum]] = []
    for j, e in enumerate(elems):
        if not e.is_identity():
            out.extend((b, x) for b, x in B.normal_form_syllables(e))
        if j < len(tsigns):
            if out and out[-1][0] == W.T:
                prev = out.pop()
                merged = ps.add(prev[1], ps.from_int(tsigns[j]))
                if not ps.is_zero(merged):
                    out.append((W.T, merged))
            else:
                out.append((W.T, ps.from_int(tsigns[j])))
    return out


def _state_word(state: State, ctx: GerstenContext) -> Union[Word, SylWord]:
    syls = _state_syls(state)
    try:
        return W.from_syllables(syls, max_letters=ctx.max_letters)
    except TooLargeError:
        return W.syl_word(syls)


def _items_word(items, ctx: GerstenContext) -> Union[Word, SylWord]:
    return _state_word(_treduce_items(items), ctx)


def _concat_trivial(*item_lists) -> bool:
    merged: List[Item] = []
    for il in item_lists:
        merged.extend(il)
    elems, tsigns = _treduce_items(merged)
    return not tsigns and elems[0].is_identity()


def word_problem_bg(w, ctx: GerstenContext = DEFAULT) -> bool:
    """True iff w is trivial: the stable-letter exponent sum must
    vanish, the reduction must consume every t, and the affine residue
    must be the identity."""
    if isinstance(w, Word) and W.t_exponent_sum(w) != 0:
        return False
    elems, tsigns = _treduce(w)
    return not tsigns and elems[0].is_identity()


def is_identity(w, ctx: GerstenContext = DEFAULT) -> bool:
    return word_problem_bg(w, ctx)


def britton_reduce_bg(w, ctx: GerstenContext = DEFAULT) -> Union[Word, SylWord]:
    """Pinch-free form, equal to w in the group; affine stretches come
    back in normal form."""
    return _state_word(_treduce(w), ctx)


# ---------------------------------------------------------------------------
# cyclic reduction

def _cyclic_step(state: State) -> Optional[Tuple[List[Item], State]]:
    """One wrap-around fix: when the last and first t letters pinch
    around the wrapped segment, rotate the leading segment and t letter
    to the back and re-reduce.  Returns (rotation prefix items, new
    state), or None when every cyclic conjugate is pinch-free."""
    elems, tsigns = state
    if not tsigns:
        return None
    wrap = B.mul(elems[-1], elems[0])
    d_last, d_first = tsigns[-1], tsigns[0]
    if d_last == -d_first:
        image = _phi_down(wrap) if d_last == 1 else _phi_up(wrap)
        if image is not None:
            prefix: List[Item] = [("e", elems[0]), ("t", tsigns[0])]
            items: List[Item] = []
            for j in range(1, len(elems)):
                items.append(("e", elems[j]))
                if j < len(tsigns):
                    items.append(("t", tsigns[j]))
            items.append(("e", elems[0]))
            items.append(("t", tsigns[0]))
            return prefix, _treduce_items(items)
    return None


def cyclic_britton_reduce(w, ctx: GerstenContext = DEFAULT
                          ) -> Tuple[Union[Word, SylWord], Union[Word, SylWord]]:
    """(w2, gamma) with gamma^-1 w gamma = w2 and no cyclic conjugate
    of w2 carrying a pinch; gamma is a prefix of a cyclic rotation."""
    state = _treduce(w)
    gamma_items: List[Item] = []
    guard = 0
    while True:
        guard += 1
        if guard > 100000:
            raise RuntimeError("cyclic reduction did not settle")
        step = _cyclic_step(state)
        if step is None:
            break
        prefix, state = step
        gamma_items.extend(prefix)
    return _state_word(state, ctx), _items_word(gamma_items, ctx)


# ---------------------------------------------------------------------------
# independent pinch scanner

@dataclass(frozen=True)
class TPinch:
    """A cyclic adjacency t^delta (segment) t^-delta whose segment sits
    in the subgroup the crossing needs: with delta +1 the segment is a
    power of s0, with delta -1 a power of s1."""
    delta: int
    span: Tuple[int, int]  # syllable indices of the two t syllables
    content_exponent: PowerSum
    content_base: int


def scan_t_pinches(w) -> List[TPinch]:
    """Syllable-level scanner for cyclic t-pinches, sharing no code
    with the reduction engine: segment contents are evaluated with
    plain rational arithmetic."""
    if isinstance(w, Word):
        syls = W.to_syllables(w)
    elif isinstance(w, SylWord):
        syls = list(w.syllables)
    else:
        syls = list(w)
    syls = [(b, ps.as_power_sum(e)) for b, e in syls
            if not ps.is_zero(ps.as_power_sum(e))]
    t_pos = [i for i, (b, _) in enumerate(syls) if b == W.T]
    found: List[TPinch] = []
    if not t_pos:
        return found
    n = len(syls)
    for a_idx, i in enumerate(t_pos):
        j = t_pos[(a_idx + 1) % len(t_pos)]
        ei = ps.to_int(syls[i][1])
        ej = ps.to_int(syls[j][1])
        d = 1 if ei > 0 else -1
        if (1 if ej > 0 else -1) != -d:
            continue
        if i == j and abs(ei) < 2:
            continue
        r = Fraction(0)
        m = 0
        ok = True
        k = (i + 1) % n
        while k != j:
            b, e = syls[k]
            if b == 0:
                r += Fraction(ps.to_int(e)) * Fraction(2) ** m
            elif b == 1:
                m += ps.to_int(e)
            else:
                ok = False
                break
            k = (k + 1) % n
        if not ok:
            continue
        if d == 1:
            if m == 0 and r.denominator == 1:
                found.append(TPinch(1, (i, j), ps.from_int(int(r)), 0))
        else:
            if r == 0:
                found.append(TPinch(-1, (i, j), ps.from_int(m), 1))
    return found


# ---------------------------------------------------------------------------
# conjugacy

def _rotation(state: State, shift: int) -> Tuple[List[Item], State]:
    """Prefix items P and the reduced state of P^-1 w P, where P ends
    just before t letter number `shift`, so the rotation starts with
    that t letter."""
    elems, tsigns = state
    n = len(tsigns)
    prefix: List[Item] = [("e", elems[0])]
    for j in range(shift):
        prefix.append(("t", tsigns[j]))
        prefix.append(("e", elems[j + 1]))
    items: List[Item] = []
    for j in range(shift, n):
        items.append(("t", tsigns[j]))
        items.append(("e", elems[j + 1]))
    items.extend(prefix)
    return prefix, _treduce_items(items)


def _odd_part(n: int) -> int:
    return n >> ((n & -n).bit_length() - 1) if n else 0


def _v2i(n: int) -> int:
    return (n & -n).bit_length() - 1


def _pure_s1_conjugator(x: B.BSElem) -> Optional[B.BSElem]:
    # g with g x g^-1 = s1^(x.m), when x meets the s1 line
    if x.m == 0:
        return None
    if abs(x.m) > B.MAX_TWIST:
        raise TooLargeError("twist guard exceeded", height=abs(x.m))
    return B.conj_bs12(x, B.BSElem(B.DY_ZERO, x.m))


def _bs12_items(g: B.BSElem) -> List[Item]:
    return [("e", g)]


def _conj_t_case(su: State, sv: State) -> Optional[Tuple[List[Item], dict]]:
    """Both sides keep t letters.  Align cyclic rotations that start at
    a t^-1 letter (inverting both words first when no t^-1 exists: a
    conjugator for the inverses conjugates the originals) and test
    power-of-s0 candidates computed from the leading affine segments."""
    tu, tv = su[1], sv[1]
    n = len(tu)
    inverted = False
    if all(d == 1 for d in tu):
        su = _treduce_items(_inv_items(_state_items(su)))
        sv = _treduce_items(_inv_items(_state_items(sv)))
        tu, tv = su[1], sv[1]
        inverted = True
    u_items, v_items = _state_items(su), _state_items(sv)
    r_shift = next(i for i, d in enumerate(tv) if d == -1)
    # one v-side anchor is enough: u-side rotations realize every
    # cyclic offset against it
    p_v, rot_v = _rotation(sv, r_shift)
    q_part = rot_v[0][1].m
    for s_shift in range(n):
        if tu[s_shift] != -1:
            continue
        if any(tu[(s_shift + i) % n] != tv[(r_shift + i) % n]
               for i in range(n)):
            continue
        p_u, rot_u = _rotation(su, s_shift)
        m_part = rot_u[0][1].m
        cands: List[int] = []
        for k in (0, -m_part, q_part - m_part, m_part - q_part,
                  m_part, q_part, -q_part):
            if k not in cands:
                cands.append(k)
        for k in cands:
            twist: List[Item] = []
            if k:
                twist = [("e", B.BSElem(B.dyadic(ps.from_int(k)), 0))]
            mid = p_v + twist + _inv_items(p_u)
            if _concat_trivial(mid, u_items, _inv_items(mid),
                               _inv_items(v_items)):
                return mid, {"rotation": (s_shift, r_shift),
                             "exponent": k, "m": m_part, "q": q_part,
                             "inverted": inverted}
    return None


def conj_bg(u, v, ctx: GerstenContext = DEFAULT, budget=None) -> ConjOutcome:
    """Conjugacy with certificates.  Both sides are cyclically reduced
    first; words that keep stable letters are aligned by their cyclic
    t-sign patterns and settled by power-of-s0 candidates from the
    leading affine segments; stable-letter-free words are settled
    inside the affine group, then across one or two ring crossings.
    Positive answers always carry a verified conjugator."""
    from .oracle import BudgetExceeded, SearchBudget
    if budget is None:
        budget = SearchBudget()
    u2s, gu = cyclic_britton_reduce(u, ctx)
    v2s, gv = cyclic_britton_reduce(v, ctx)
    su = _treduce(u2s)
    sv = _treduce(v2s)
    gu_items = _bg_items(gu)
    gv_items = _bg_items(gv)

    def finish(mid_items, method: str, detail=None) -> ConjOutcome:
        gamma_items = gv_items + mid_items + _inv_items(gu_items)
        ok = _concat_trivial(gamma_items, _bg_items(u),
                             _inv_items(gamma_items),
                             _inv_items(_bg_items(v)))
        if not ok:
            raise RuntimeError(
                f"internal error: {method} conjugator failed verification")
        cert = ConjCertificate(u=u, v=v, gamma=_items_word(gamma_items, ctx),
                               method=method, verified=True,
                               detail=detail or {})
        return ConjOutcome(status=CONJUGATE, certificate=cert)

    tu, tv = su[1], sv[1]
    if bool(tu) != bool(tv):
        return ConjOutcome(
            NOT_CONJUGATE,
            reason="only one side keeps stable letters after cyclic "
                   "reduction, and the reduced t-pattern is a conjugacy "
                   "invariant")

    if tu:
        if len(tu) != len(tv) or sum(tu) != sum(tv):
            return ConjOutcome(
                NOT_CONJUGATE,
                reason="cyclic t-sign patterns have different shapes")
        try:
            hit = _conj_t_case(su, sv)
        except TooLargeError as exc:
            return ConjOutcome(
                UNDECIDED, reason=f"materialization guard: {exc}")
        if hit is None:
            return ConjOutcome(
                NOT_CONJUGATE,
                reason="t-sign patterns align but no power-of-s0 "
                       "candidate from the leading segments works")
        mid, detail = hit
        return finish(mid, "POWER_SHIFT", detail)

    # stable-letter-free: everything happens in the affine group and
    # the rings around it
    U, V = su[0][0], sv[0][0]
    try:
        g = B.conj_bs12(U, V)
        if g is not None:
            return finish(_bs12_items(g), "BS12")
        if U.is_identity() or V.is_identity():
            return ConjOutcome(NOT_CONJUGATE,
                               reason="only one side is trivial")

        def meets_s1(x: B.BSElem) -> bool:
            # x conjugates onto the s1 line iff its translation part
            # vanishes modulo 2^|m| - 1
            if x.m == 0:
                return False
            if abs(x.m) > B.MAX_TWIST:
                raise TooLargeError("twist guard exceeded", height=abs(x.m))
            return B.dy_mod(x.r, (1 << abs(x.m)) - 1) == 0

        def s0_odd(x: B.BSElem) -> Optional[PowerSum]:
            if x.m != 0 or x.r.is_zero():
                return None
            return ps.shift(x.r.num, -ps.v2(x.r.num))

        mu, mv = U.m, V.m
        if mu == 0 and mv != 0:
            # one crossing: u must land on the s0 line with the right
            # exponent, v must land on the s1 line
            ou = s0_odd(U)
            if ou is None or not meets_s1(V):
                return ConjOutcome(
                    NOT_CONJUGATE,
                    reason="one ring crossing needs a translation on one "
                           "side and an s1 power on the other")
            c = mv
            if not ps.eq(ou, ps.from_int(_odd_part(c))):
                return ConjOutcome(
                    NOT_CONJUGATE,
                    reason="translation odd part differs from the twist "
                           "exponent's across the ring")
            g1 = B.conj_bs12(U, B.BSElem(B.dyadic(ps.from_int(c)), 0))
            g0 = _pure_s1_conjugator(V)
            assert g1 is not None and g0 is not None
            mid = _inv_items(_bs12_items(g0)) + [("t", 1)] + _bs12_items(g1)
            return finish(mid, "RING_SHIFT", {"crossings": 1})
        if mu != 0 and mv == 0:
            flipped = conj_bg(v, u, ctx, budget)
            if flipped.status == CONJUGATE:
                cert = flipped.certificate
                # invert the found conjugator; finish re-verifies it
                # against the original order
                mid = (_inv_items(gv_items)
                       + _inv_items(_bg_items(cert.gamma)) + gu_items)
                return finish(mid, cert.method,
                              dict(cert.detail, flipped=True))
            return flipped
        if mu != 0 and mv != 0:
            # two crossings: both sides reach the s1 line, the middle
            # ring scales the exponent by a power of 2
            if not meets_s1(U) or not meets_s1(V):
                return ConjOutcome(
                    NOT_CONJUGATE,
                    reason="a side never meets the s1 line, and "
                           "stable-letter crossings need it")
            if (mu > 0) != (mv > 0) or _odd_part(mu) != _odd_part(mv):
                return ConjOutcome(
                    NOT_CONJUGATE,
                    reason="twist exponents are not related by doubling")
            j = _v2i(abs(mv)) - _v2i(abs(mu))
            g2 = _pure_s1_conjugator(U)
            g0 = _pure_s1_conjugator(V)
            assert g2 is not None and g0 is not None
            mid = (_inv_items(_bs12_items(g0)) + [("t", 1)]
                   + _bs12_items(B.BSElem(B.DY_ZERO, j)) + [("t", -1)]
                   + _bs12_items(g2))
            return finish(mid, "RING_SHIFT", {"crossings": 2, "doubling": j})
    except TooLargeError as exc:
        if isinstance(u2s, Word) and isinstance(v2s, Word):
            from . import oracle
            try:
                found = oracle.bounded_conjugator_search(u2s, v2s, ctx, budget)
            except BudgetExceeded:
                found = None
            if found is not None:
                return finish(_bg_items(found), "BOUNDED_SEARCH",
                              {"fallback": True})
        return ConjOutcome(UNDECIDED, reason=f"materialization guard: {exc}")

    # both translations with distinct odd parts: the affine decision is
    # already complete for translations, and ring crossings cannot help
    return ConjOutcome(
        NOT_CONJUGATE,
        reason="affine conjugacy is complete for translations and found "
               "nothing")


# ---------------------------------------------------------------------------
# powers of s0

def _translate_from_tower(w: Word) -> Word:
    """Tower letters become stable-letter conjugates: level i maps to
    t^(i-1) s1 t^(1-i) for i >= 1, and level 0 stays s0."""
    out: List[W.Letter] = []
    for l in w.letters:
        if l.base == 0:
            out.append(l)
            continue
        k = l.base - 1
        out.extend([W.Tl(1)] * k)
        out.append(W.S(1, l.sign))
        out.extend([W.Tl(-1)] * k)
    return W.free_reduce(W.Word(tuple(out)))


def power_witness_bg(k: ps.IntLike, max_height: int = 8) -> Word:
    """A short word over s0, s1, t equal to s0^k, synthesized in the
    best tower of height up to max_height and pushed through the
    stable letter."""
    k = ps.as_power_sum(k)
    if ps.is_zero(k):
        return W.EMPTY
    best: Optional[Word] = None
    try:
        best = W.from_syllables(((0, k),), W.MAX_LITERAL_LETTERS)
    except TooLargeError:
        pass
    for m in range(1, max_height + 1):
        try:
            cand = _translate_from_tower(
                TW.synth_power(0, k, TW.TowerContext(m)))
        except TooLargeError:
            continue
        if best is None or len(cand) < len(best):
            best = cand
    if best is None:
        raise TooLargeError(
            "no tower height up to the cap materializes this power",
            height=max_height)
    return best


def length_bounds_bg(k: ps.IntLike, ctx: GerstenContext = DEFAULT
                     ) -> Tuple[int, int]:
    """(lo, hi): the compact-representation lower bound and the length
    of an actual witness word."""
    k = ps.as_power_sum(k)
    lo = ps.length_lower_bound(k)
    hi = len(power_witness_bg(k))
    return lo, hi
