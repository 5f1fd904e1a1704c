"""The iterated tower of ascending HNN extensions over the integers:
generators s0..sm with s_i s_{i-1} s_i^-1 = s_{i-1}^2 for each i.

Reduction works on syllable lists whose exponents are PowerSum values,
because collapsing a pinch doubles an exponent and a handful of letters
can encode doubly exponential powers.  Literal words are materialized
only under a letter guard; otherwise results stay in compressed form.

A pinch is s_i^d w s_i^-d with w a power of s_{i-1} (d = +1) or an even
power (d = -1); collapsing multiplies or divides the inner exponent by
2 per absorbed letter, batched here per syllable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import bs12 as B
from . import powersum as ps
from . import words as W
from .powersum import PowerSum, TooLargeError
from .words import SylWord, Word

Syls = Tuple[Tuple[int, PowerSum], ...]

CONJUGATE = "conjugate"
NOT_CONJUGATE = "not_conjugate"
UNDECIDED = "undecided_within_budget"


class TowerContext:
    """Height m tower; words must use S(0)..S(m) only."""

    def __init__(self, m: int, max_letters: int = W.MAX_LITERAL_LETTERS):
        if m < 0:
            raise ValueError("height must be >= 0")
        self.m = m
        self.max_letters = max_letters
        self._rcache: Dict[Syls, Syls] = {}

    def __repr__(self):
        return f"TowerContext(m={self.m})"

    def check_word(self, w):
        if isinstance(w, SylWord):
            bases = [b for b, _ in w.syllables]
        else:
            bases = [l.base for l in w.letters]
        for b in bases:
            if b == W.T or not 0 <= b <= self.m:
                name = "t" if b == W.T else f"s{b}"
                raise ValueError(f"letter {name!r} is outside s0..s{self.m}")


def relators(ctx: TowerContext) -> List[Word]:
    out = []
    for i in range(1, ctx.m + 1):
        out.append(W.parse_word(f"s{i} s{i-1} s{i}^-1 s{i-1}^-2"))
    return out


# ---------------------------------------------------------------------------
# syllable plumbing

def _pack(syls: Iterable[Tuple[int, ps.IntLike]]) -> Syls:
    out: List[Tuple[int, PowerSum]] = []
    for b, e in syls:
        e = ps.as_power_sum(e)
        if ps.is_zero(e):
            continue
        if out and out[-1][0] == b:
            merged = ps.add(out[-1][1], e)
            out.pop()
            if not ps.is_zero(merged):
                out.append((b, merged))
        else:
            out.append((b, e))
    return tuple(out)


def _word_syls(w: Word) -> Syls:
    return _pack(W.to_syllables(w))


def _syls_word(syls: Syls, ctx: TowerContext) -> Union[Word, SylWord]:
    try:
        return W.from_syllables(syls, max_letters=ctx.max_letters)
    except TooLargeError:
        return W.syl_word(syls)


def _inv_syls(syls: Sequence[Tuple[int, PowerSum]]) -> Syls:
    return tuple((b, ps.negate(e)) for b, e in reversed(tuple(syls)))


def _as_syls(w) -> Syls:
    if isinstance(w, Word):
        return _word_syls(w)
    if isinstance(w, SylWord):
        return _pack(w.syllables)
    return _pack(w)


def _ps_min(a: PowerSum, b: PowerSum) -> PowerSum:
    return a if ps.compare(a, b) <= 0 else b


def _syls_eq(a: Syls, b: Syls) -> bool:
    # value equality: normalized PowerSums may still differ structurally
    return len(a) == len(b) and all(
        x[0] == y[0] and ps.eq(x[1], y[1]) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# reduction engine

def _reduce(syls: Syls, ctx: TowerContext) -> Syls:
    syls = _pack(syls)
    if not syls:
        return ()
    hit = ctx._rcache.get(syls)
    if hit is not None:
        return hit
    t = max(b for b, _ in syls)
    if t == 0:
        total = ps.ZERO
        for _, e in syls:
            total = ps.add(total, e)
        out: Syls = () if ps.is_zero(total) else ((0, total),)
        ctx._rcache[syls] = out
        return out

    # alternate lower segments and top-level exponents
    pending: List[Tuple[PowerSum, List[Tuple[int, PowerSum]]]] = []
    cur: List[Tuple[int, PowerSum]] = []
    first: List[Tuple[int, PowerSum]] = []
    seen_top = False
    for b, e in syls:
        if b == t:
            if not seen_top:
                first = cur
                seen_top = True
            else:
                pending.append((last_e, cur))  # noqa: F821
            last_e = e
            cur = []
        else:
            cur.append((b, e))
    pending.append((last_e, cur))
    segs: List[List[Tuple[int, PowerSum]]] = [list(_reduce(tuple(first), ctx))]
    exps: List[PowerSum] = []

    def merge_top(extra: Sequence[Tuple[int, PowerSum]]):
        segs[-1] = list(_reduce(tuple(segs[-1]) + tuple(extra), ctx))

    for e, g in pending:
        g = list(_reduce(tuple(g), ctx))
        while not ps.is_zero(e):
            if not exps:
                break
            seg = segs[-1]
            prev = exps[-1]
            if not seg:
                # free cancellation across an empty window
                exps.pop()
                segs.pop()
                e = ps.add(prev, e)
                continue
            sp, se = ps.sign(prev), ps.sign(e)
            if sp == se:
                break
            l = _eval_power_syls(tuple(seg), t - 1, ctx)
            if l is None:
                break
            assert not ps.is_zero(l)
            if sp > 0:
                d = _ps_min(prev, ps.negate(e))
                shift_by = ps.to_int(d)
                prev2 = ps.sub(prev, d)
                e2 = ps.add(e, d)
                content = ps.shift(l, shift_by)
            else:
                v = ps.v2(l)
                d = _ps_min(ps.negate(prev), e)
                if ps.compare(d, ps.from_int(v)) > 0:
                    d = ps.from_int(v)
                if ps.is_zero(d):
                    break  # inner exponent is odd: blocked for good
                shift_by = ps.to_int(d)
                prev2 = ps.add(prev, d)
                e2 = ps.sub(e, d)
                content = ps.shift(l, -shift_by)
            exps.pop()
            segs.pop()
            inner = [(t - 1, content)] if not ps.is_zero(content) else []
            if ps.is_zero(prev2):
                merge_top(inner)
            else:
                exps.append(prev2)
                segs.append(list(_reduce(tuple(inner), ctx)))
            e = e2
        if ps.is_zero(e):
            merge_top(g)
        else:
            exps.append(e)
            segs.append(g)

    flat: List[Tuple[int, PowerSum]] = list(segs[0])
    for j, e in enumerate(exps):
        flat.append((t, e))
        flat.extend(segs[j + 1])
    out = _pack(flat)
    ctx._rcache[syls] = out
    return out


def _exp_sum(syls: Syls, base: int) -> PowerSum:
    total = ps.ZERO
    for b, e in syls:
        if b == base:
            total = ps.add(total, e)
    return total


def _bs12_project(syls: Syls, j: int) -> Optional[B.BSElem]:
    """Image under the retraction killing s0..s_{j-2} and sending
    s_{j-1}, s_j to the two-generator pair.  None when a t-exponent
    refuses to materialize."""
    pairs = []
    for b, e in syls:
        if b < j - 1:
            continue
        pairs.append((b - (j - 1), e))
    try:
        return B.eval_syllables(pairs)
    except TooLargeError:
        return None


def _eval_power_syls(syls: Syls, j: int, ctx: TowerContext) -> Optional[PowerSum]:
    """For reduced syls over S(0)..S(j): the l with syls = s_j^l, else
    None.  The exponent sum at level j is the only candidate, since
    every relator at or below level j has zero s_j-exponent sum."""
    if not syls:
        return ps.ZERO
    if len(syls) == 1 and syls[0][0] == j:
        return syls[0][1]
    cand = _exp_sum(syls, j)
    proj = _bs12_project(syls, j)
    if proj is not None:
        if not proj.r.is_zero():
            return None
        if all(b >= j - 1 for b, _ in syls):
            # faithful two-generator image: the test is exact
            return cand if ps.eq(ps.from_int(proj.m), cand) else None
        if not ps.eq(ps.from_int(proj.m), cand):
            return None
    check = _reduce(syls + ((j, ps.negate(cand)),), ctx)
    return cand if not check else None


# ---------------------------------------------------------------------------
# public word problem API

def britton_reduce(w: Word, ctx: TowerContext) -> Union[Word, SylWord]:
    """Pinch-free form of w, equal to w in the group.  Compressed
    syllables come back when the literal word would blow the guard."""
    ctx.check_word(w)
    return _syls_word(_reduce(_word_syls(w), ctx), ctx)


def is_identity(w: Word, ctx: TowerContext) -> bool:
    ctx.check_word(w)
    return not _reduce(_word_syls(w), ctx)


def is_identity_syls(syls, ctx: TowerContext) -> bool:
    return not _reduce(_as_syls(syls), ctx)


def retract(w: Word, ctx: TowerContext) -> Word:
    """s0 dies, s_i drops to s_{i-1}: the standard projection one
    level down the tower."""
    ctx.check_word(w)
    out = []
    for l in w.letters:
        if l.base == 0:
            continue
        out.append(W.Letter(l.base - 1, l.sign))
    return Word(tuple(out))


def lift(w: Word, ctx: TowerContext) -> Word:
    """s_i climbs to s_{i+1}; composes with retract to the identity."""
    for l in w.letters:
        if l.base == W.T or not 0 <= l.base <= ctx.m - 1:
            raise ValueError("lift needs letters below the top level")
    return Word(tuple(W.Letter(l.base + 1, l.sign) for l in w.letters))


def eval_power(w, i: int, ctx: TowerContext) -> Optional[PowerSum]:
    """l such that w = s_i^l in the group, or None.  Letters above
    level i in the reduced form rule membership out.  Accepts literal
    and compressed words."""
    ctx.check_word(w)
    syls = _reduce(_as_syls(w), ctx)
    if any(b > i for b, _ in syls):
        return None
    return _eval_power_syls(syls, i, ctx)


# ---------------------------------------------------------------------------
# rank: conjugating down the tower

@dataclass
class RankResult:
    rank: int
    conjugator: Union[Word, SylWord]
    reduced: Union[Word, SylWord]
    verified: bool


def _rank_syls(w_syls: Syls, ctx: TowerContext) -> Tuple[int, Syls, Syls]:
    """(rank, conjugator syls, reduced syls): conj^-1 * w * conj equals
    the reduced form, which is pinch-free under every cyclic rotation."""
    cur = _reduce(w_syls, ctx)
    conj: Syls = ()
    guard = 0
    while cur:
        guard += 1
        if guard > 100000:
            raise RuntimeError("rank descent did not settle")
        t = max(b for b, _ in cur)
        if t == 0:
            return 0, conj, cur
        tops = [k for k, (b, _) in enumerate(cur) if b == t]
        t_letters = ps.ZERO
        for k in tops:
            e = cur[k][1]
            t_letters = ps.add(t_letters, e if ps.sign(e) > 0 else ps.negate(e))
        progressed = False
        for k in tops:
            prefix = cur[:k]
            rotated = _reduce(cur[k:] + prefix, ctx)
            if not rotated or max(b for b, _ in rotated) < t:
                cur = rotated
                conj = _reduce(conj + prefix, ctx)
                progressed = True
                break
            letters = ps.ZERO
            for b, e in rotated:
                if b == t:
                    letters = ps.add(letters,
                                     e if ps.sign(e) > 0 else ps.negate(e))
            if ps.compare(letters, t_letters) < 0:
                cur = rotated
                conj = _reduce(conj + prefix, ctx)
                progressed = True
                break
        if not progressed:
            return t, conj, cur
    return 0, conj, cur


def rank(w: Word, ctx: TowerContext) -> RankResult:
    ctx.check_word(w)
    r, conj, red = _rank_syls(_word_syls(w), ctx)
    check = _reduce(
        _inv_syls(conj) + _word_syls(w) + conj + _inv_syls(red), ctx)
    return RankResult(
        rank=r,
        conjugator=_syls_word(conj, ctx),
        reduced=_syls_word(red, ctx),
        verified=not check)


# ---------------------------------------------------------------------------
# powers of a generator

def synth_power(i: int, k: ps.IntLike, ctx: TowerContext) -> Word:
    """A short word over S(i)..S(m) equal to s_i^k: the non-adjacent
    form of k is laid out Horner-style with s_{i+1}-powers built by the
    same scheme one level up.  Logarithmic in |k| whenever the tower is
    tall enough."""
    if not 0 <= i <= ctx.m:
        raise ValueError(f"level {i} outside 0..{ctx.m}")
    k = ps.as_power_sum(k)
    letters = _synth_letters(i, k, ctx)
    return Word(tuple(letters))


def _naf_unit_list(k: PowerSum) -> List[Tuple[int, int]]:
    n = ps.naf(k)
    if n.runs:
        raise TooLargeError(
            "power too long to lay out: its non-adjacent form does not "
            "materialize", height=None)
    return [(c, e) for c, e in n.terms]  # ascending exponents


def _synth_letters(i: int, k: PowerSum, ctx: TowerContext) -> List[W.Letter]:
    if ps.is_zero(k):
        return []
    if i == ctx.m:
        n = ps.to_int(k)
        if abs(n) > ctx.max_letters:
            raise TooLargeError(
                "literal top-level power exceeds the letter guard", height=n)
        sign = 1 if n > 0 else -1
        return [W.Letter(i, sign)] * abs(n)
    units = _naf_unit_list(k)
    out: List[W.Letter] = []
    prev_exp = 0
    for c, e in units:
        gap = e - prev_exp
        out.extend(_synth_letters(i + 1, ps.from_int(gap), ctx))
        out.append(W.Letter(i, c))
        prev_exp = e
    out.extend(_synth_letters(i + 1, ps.from_int(-prev_exp), ctx))
    if len(out) > ctx.max_letters:
        raise TooLargeError("assembled power exceeds the letter guard",
                            height=len(out))
    return out


def _synth_cost(i: int, k: PowerSum, ctx: TowerContext) -> PowerSum:
    if ps.is_zero(k):
        return ps.ZERO
    if i == ctx.m:
        return k if ps.sign(k) > 0 else ps.negate(k)
    units = _naf_unit_list(k)
    total = ps.from_int(len(units))
    prev_exp = 0
    for _, e in units:
        total = ps.add(total, _synth_cost(i + 1, ps.from_int(e - prev_exp), ctx))
        prev_exp = e
    return ps.add(total, _synth_cost(i + 1, ps.from_int(prev_exp), ctx))


def length_bounds_power(i: int, k: ps.IntLike, ctx: TowerContext
                        ) -> Tuple[int, ps.IntLike]:
    """(lo, hi) with lo <= |s_i^k| <= hi: lo counts the non-adjacent
    form, hi measures the synthesized word."""
    k = ps.as_power_sum(k)
    lo = ps.length_lower_bound(k)
    hi = _synth_cost(i, k, ctx)
    try:
        return lo, ps.to_int(hi)
    except TooLargeError:
        return lo, hi


# ---------------------------------------------------------------------------
# conjugacy

@dataclass
class ConjCertificate:
    u: Word
    v: Word
    gamma: Union[Word, SylWord]
    method: str  # BS12 | POWER_SHIFT | RING_SHIFT | BOUNDED_SEARCH
    verified: bool
    detail: dict = field(default_factory=dict)


@dataclass
class ConjOutcome:
    status: str  # conjugate | not_conjugate | undecided_within_budget
    certificate: Optional[ConjCertificate] = None
    reason: str = ""


def _verify_gamma(u: Word, v: Word, gamma_syls: Syls, ctx: TowerContext) -> bool:
    return is_identity_syls(
        tuple(gamma_syls) + _word_syls(u) + _inv_syls(gamma_syls)
        + _inv_syls(_word_syls(v)), ctx)


def _finish(u, v, gamma_syls, method, ctx, detail=None) -> ConjOutcome:
    ok = _verify_gamma(u, v, gamma_syls, ctx)
    if not ok:
        raise RuntimeError(
            f"internal error: {method} conjugator failed verification")
    cert = ConjCertificate(u=u, v=v, gamma=_syls_word(_reduce(gamma_syls, ctx), ctx),
                           method=method, verified=True, detail=detail or {})
    return ConjOutcome(status=CONJUGATE, certificate=cert)


def _sign_runs(syls: Syls, t: int) -> List[Tuple[int, PowerSum]]:
    # cyclic runs of top-letter signs, adjacent same-sign merged
    runs: List[Tuple[int, PowerSum]] = []
    for b, e in syls:
        if b != t:
            continue
        sg = ps.sign(e)
        mag = e if sg > 0 else ps.negate(e)
        if runs and runs[-1][0] == sg:
            runs[-1] = (sg, ps.add(runs[-1][1], mag))
        else:
            runs.append((sg, mag))
    if len(runs) >= 2 and runs[0][0] == runs[-1][0]:
        runs[0] = (runs[0][0], ps.add(runs[0][1], runs[-1][1]))
        runs.pop()
    return runs


def _runs_match_cyclically(a, b) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    for shift in range(len(a)):
        if all(a[(shift + j) % len(a)][0] == b[j][0]
               and ps.eq(a[(shift + j) % len(a)][1], b[j][1])
               for j in range(len(b))):
            return True
    return False


def _bs12_word_syls(g: B.BSElem) -> Syls:
    return _pack(B.normal_form_syllables(g))


def _pure_power(syls: Syls, t: int) -> Optional[PowerSum]:
    if len(syls) == 1 and syls[0][0] == t:
        return syls[0][1]
    return None


def conj_gm(u: Word, v: Word, ctx: TowerContext,
            budget=None) -> ConjOutcome:
    """Conjugacy with a checkable certificate.  Complete for elements
    of rank <= 1; at rank >= 2 a positive answer always carries a
    verified conjugator, a negative answer is only issued off a
    separating invariant, and everything else is undecided within the
    given search budget."""
    from .oracle import SearchBudget
    if budget is None:
        budget = SearchBudget()
    ctx.check_word(u)
    ctx.check_word(v)
    ru = _rank_syls(_word_syls(u), ctx)
    rv = _rank_syls(_word_syls(v), ctx)
    if ru[0] != rv[0]:
        return ConjOutcome(
            status=NOT_CONJUGATE,
            reason=f"rank {ru[0]} vs {rv[0]}: rank is a conjugacy invariant")
    r = ru[0]
    _, cu, u2 = ru
    _, cv, v2 = rv

    def assemble(mid: Syls) -> Syls:
        # gamma = cv * mid * cu^-1 sends u to v when mid sends u2 to v2
        return _reduce(cv + mid + _inv_syls(cu), ctx)

    if r == 0:
        a = u2[0][1] if u2 else ps.ZERO
        b = v2[0][1] if v2 else ps.ZERO
        if ps.is_zero(a) != ps.is_zero(b):
            return ConjOutcome(NOT_CONJUGATE, reason="only one side is trivial")
        if ps.is_zero(a):
            return _finish(u, v, assemble(()), "POWER_SHIFT", ctx,
                           {"note": "both trivial"})
        if ctx.m == 0:
            if ps.eq(a, b):
                return _finish(u, v, assemble(()), "POWER_SHIFT", ctx)
            return ConjOutcome(NOT_CONJUGATE,
                               reason="the height-0 group is free abelian")
        oa = ps.shift(a, -ps.v2(a))
        ob = ps.shift(b, -ps.v2(b))
        if not ps.eq(oa, ob):
            return ConjOutcome(
                NOT_CONJUGATE,
                reason="bottom powers are conjugate only across doubling, "
                       "and the odd parts differ")
        j = ps.v2(b) - ps.v2(a)
        return _finish(u, v, assemble(((1, ps.from_int(j)),) if j else ()),
                       "POWER_SHIFT", ctx, {"doubling": j})

    if r == 1:
        U = B.eval_syllables(u2)
        V = B.eval_syllables(v2)
        g = B.conj_bs12(U, V)
        if g is not None:
            return _finish(u, v, assemble(_bs12_word_syls(g)), "BS12", ctx)
        if ctx.m == 1:
            return ConjOutcome(
                NOT_CONJUGATE,
                reason="two-generator conjugacy is complete and found nothing")
        # the only other road passes through pure powers of s1
        cU, cV = U.m, V.m
        assert cU != 0 and cV != 0  # mixed-sign cyclic words always pinch
        if max(abs(cU), abs(cV)) > B.MAX_TWIST:
            raise TooLargeError(
                "conjugacy scan modulus beyond the twist guard",
                height=max(abs(cU), abs(cV)))
        dU = (1 << abs(cU)) - 1
        dV = (1 << abs(cV)) - 1
        if B.dy_mod(U.r, dU) != 0 or B.dy_mod(V.r, dV) != 0:
            return ConjOutcome(
                NOT_CONJUGATE,
                reason="not two-generator conjugate, and at least one side "
                       "never meets the cyclic subgroup the next stable "
                       "letter twists")
        if (cU > 0) != (cV > 0) or \
                (abs(cU) >> _v2i(abs(cU))) != (abs(cV) >> _v2i(abs(cV))):
            return ConjOutcome(
                NOT_CONJUGATE,
                reason="pure-power exponents are not related by doubling")
        j = _v2i(abs(cV)) - _v2i(abs(cU))
        gU = B.conj_bs12(U, B.BSElem(B.DY_ZERO, cU))
        gV = B.conj_bs12(V, B.BSElem(B.DY_ZERO, cV))
        assert gU is not None and gV is not None
        mid = _reduce(
            _inv_syls(_bs12_word_syls(gV)) + ((2, ps.from_int(j)),)
            + _bs12_word_syls(gU), ctx) if j else _reduce(
            _inv_syls(_bs12_word_syls(gV)) + _bs12_word_syls(gU), ctx)
        return _finish(u, v, assemble(mid), "RING_SHIFT", ctx,
                       {"doubling": j})

    # rank >= 2
    pu = _pure_power(u2, r)
    pv = _pure_power(v2, r)
    if pu is not None and pv is not None:
        if ps.eq(pu, pv):
            return _finish(u, v, assemble(()), "POWER_SHIFT", ctx)
        if r == ctx.m:
            return ConjOutcome(
                NOT_CONJUGATE,
                reason="top-level powers have an invariant exponent sum")
        su, sv = ps.sign(pu), ps.sign(pv)
        if su != sv or not ps.eq(ps.shift(pu, -ps.v2(pu)),
                                 ps.shift(pv, -ps.v2(pv))):
            return ConjOutcome(
                NOT_CONJUGATE,
                reason="pure powers are conjugate only across doubling, "
                       "and the odd parts differ")
        j = ps.v2(pv) - ps.v2(pu)
        return _finish(u, v, assemble(((r + 1, ps.from_int(j)),)),
                       "POWER_SHIFT", ctx, {"doubling": j})

    patterns_match = _runs_match_cyclically(_sign_runs(u2, r),
                                            _sign_runs(v2, r))
    if not patterns_match:
        # conjugacy inside level r is ruled out; the only other road
        # needs both sides conjugate to pure powers with matching odd
        # parts of the exponent sums
        su = _exp_sum(u2, r)
        sv = _exp_sum(v2, r)
        if ps.is_zero(su) or ps.is_zero(sv):
            return ConjOutcome(
                NOT_CONJUGATE,
                reason="sign patterns differ and a zero exponent sum cannot "
                       "reach a pure power")
        if ps.sign(su) != ps.sign(sv) or not ps.eq(
                ps.shift(su, -ps.v2(su)), ps.shift(sv, -ps.v2(sv))):
            return ConjOutcome(
                NOT_CONJUGATE,
                reason="sign patterns differ and exponent sums are not "
                       "related by doubling")

    # guided candidates: cyclic rotations, optionally twisted by a
    # power of the next generator down
    tops = [k for k, (b, _) in enumerate(u2) if b == r]
    twist_range = range(-budget.max_conjugator_length,
                        budget.max_conjugator_length + 1)
    for k in tops:
        prefix = u2[:k]
        rotated = _reduce(u2[k:] + prefix, ctx)
        for e in twist_range:
            twist: Syls = ((r - 1, ps.from_int(-e)),) if e else ()
            cand = _reduce(twist + rotated + _inv_syls(twist), ctx)
            if _syls_eq(cand, v2):
                mid = _reduce(twist + _inv_syls(prefix), ctx)
                return _finish(u, v, assemble(mid), "POWER_SHIFT", ctx,
                               {"rotation": k, "twist": e})

    from . import oracle
    try:
        found = oracle.bounded_conjugator_search(u, v, ctx, budget)
    except oracle.BudgetExceeded:
        return ConjOutcome(
            UNDECIDED,
            reason="guided candidates failed and the bounded search ran "
                   "out of budget")
    if found is not None:
        return _finish(u, v, _word_syls(found), "BOUNDED_SEARCH", ctx)
    return ConjOutcome(
        UNDECIDED,
        reason="no separating invariant and no conjugator within budget")


def _v2i(n: int) -> int:
    return (n & -n).bit_length() - 1
