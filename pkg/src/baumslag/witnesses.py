"""Conjugate pairs whose shortest conjugators are provably long.

The tower family pairs u = s1^2 with v = s0^(E-1) s1^2, where E is an
iterated exponential: u and v stay a few dozen letters once powers are
spelled compactly, while every conjugator is a power of s0 whose
exponent has a long non-adjacent form.  The stable-letter family plays
the same game inside the two-generator group, with the power of s0
compressed through t.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Union

from . import gersten as BG
from . import oracle as O
from . import powersum as ps
from . import tower as TW
from . import words as W
from .powersum import TooLargeError
from .words import SylWord, Word


@dataclass
class WitnessReport:
    group: str                 # "gm" | "bg"
    m: Optional[int]           # tower height; None for the bg family
    n: int
    u: Word
    v: Optional[Union[Word, SylWord]]
    gamma: Optional[Union[Word, SylWord]]
    size: Optional[int]        # |u| + |v| in literal letters
    size_bound: Optional[int]  # 4 + 2^m (n + m), tower family only
    slack: Optional[int]       # size_bound - size
    cl_lower_bound: int        # floored conjugator-length lower bound
    cl_lower_bound_exact: str  # the same bound as an exact fraction
    naf_lower_bound: int       # from the conjugator exponent's term count
    oracle_length: Optional[int] = None
    verified: bool = False
    check: str = "none"        # "word_problem" | "symbolic" | "none"
    note: str = ""


def _u() -> Word:
    return W.parse_word("s1^2")


def _render_power(i: int, k: ps.PowerSum, ctx: TW.TowerContext
                  ) -> Optional[Word]:
    """Shorter of the literal spelling and the compressed layout."""
    try:
        # run-form exponents only synthesize once flattened; past a few
        # dozen units the layout is hopeless anyway, keep them symbolic
        if ps.min_term_count(k) <= 64:
            k = ps.from_int(ps.to_int(k))
    except TooLargeError:
        pass
    best: Optional[Word] = None
    try:
        best = W.from_syllables(((i, k),), ctx.max_letters)
    except TooLargeError:
        pass
    try:
        cand = TW.synth_power(i, k, ctx)
        if best is None or len(cand) < len(best):
            best = cand
    except TooLargeError:
        pass
    return best


def make_witness_gm(m: int, n: int) -> WitnessReport:
    """The height-m pair at scale n, with a verified conjugator
    s0^(-(E-1)/3) and the bound arithmetic spelled out."""
    if m < 2:
        raise ValueError("the construction needs height at least 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = TW.TowerContext(m)
    E = ps.tower(m, n)
    E1 = ps.add(E, ps.from_int(-1))
    beta = ps.third_of_tower_minus_one(m, n)
    neg_beta = ps.negate(beta)
    u = _u()

    v_power = _render_power(0, E1, ctx)
    v: Union[Word, SylWord]
    if v_power is not None:
        v = v_power * u
    else:
        v = W.syl_word(((0, E1), (1, ps.from_int(2))))
    gamma = _render_power(0, neg_beta, ctx)
    if gamma is None:
        gamma = W.syl_word(((0, neg_beta),))

    size = size_bound = slack = None
    if isinstance(v, Word):
        size = len(u) + len(v)
        size_bound = 4 + (1 << m) * (n + m)
        slack = size_bound - size

    if isinstance(v, Word) and isinstance(gamma, Word):
        ok = TW.is_identity(gamma * u * gamma.inverse() * v.inverse(), ctx)
        check = "word_problem"
    else:
        # compressed exponents verify through the syllable engine
        syls = ((0, neg_beta), (1, ps.from_int(2)), (0, beta),
                (1, ps.from_int(-2)), (0, ps.negate(E1)))
        ok = TW.is_identity_syls(syls, ctx)
        check = "symbolic"

    em1 = ps.to_int(ps.tower(m - 1, n))
    lb_num = em1 - 1
    return WitnessReport(
        group="gm", m=m, n=n, u=u, v=v, gamma=gamma,
        size=size, size_bound=size_bound, slack=slack,
        cl_lower_bound=lb_num // 8,
        cl_lower_bound_exact=f"{ps.fmt_int(lb_num)}/8",
        naf_lower_bound=ps.length_lower_bound(beta),
        verified=ok, check=check)


def _bg_scale(n: int) -> int:
    # largest k with 2^(3k) <= n, i.e. floor(log2 of the cube root)
    k = 0
    while 8 ** (k + 1) <= n:
        k += 1
    return k


def make_witness_bg(n: int) -> WitnessReport:
    """The stable-letter pair at input scale n: u = s1^2 against
    v = s1^2 s0^(eps-1) with eps an iterated exponential in log n.
    The conjugator is s1^alpha s0^beta solving -3 beta 2^alpha =
    4 (eps - 1); when 3 does not divide the right side no conjugator
    of that shape exists (the pair is not conjugate at all), and the
    report says so instead of pretending."""
    if n < 8:
        raise ValueError(
            "need n >= 8: smaller n makes the tower exponent 1 and the "
            "pair collapses")
    k = _bg_scale(n)
    eps = ps.to_int(ps.tower(k, 1))
    u = _u()
    tail = BG.power_witness_bg(eps - 1) if eps > 1 else W.EMPTY
    v = u * tail
    rhs = 4 * (eps - 1)

    gamma: Optional[Word] = None
    ok = False
    check = "none"
    if rhs % 3 == 0:
        base = -(rhs // 3)
        best = None
        for alpha in range(0, -65, -1):
            beta = base << (-alpha)
            est = -alpha + ps.min_term_count(ps.from_int(beta))
            if best is None or est < best[0]:
                best = (est, alpha, beta)
        _, alpha, beta = best
        head = W.power(1, alpha) if alpha else W.EMPTY
        gamma = head * BG.power_witness_bg(beta)
        ok = BG.word_problem_bg(gamma * u * gamma.inverse() * v.inverse())
        check = "word_problem"
        note = f"solver picked alpha={alpha}, beta={beta}"
        naf_lb = ps.length_lower_bound(ps.from_int(beta))
    else:
        sep = BG.conj_bg(u, v)
        note = (f"no conjugator of shape s1^a s0^b exists: 3 does not "
                f"divide 4*(eps-1) = {rhs}; independent check says the "
                f"pair is {sep.status}")
        naf_lb = 0

    em1 = ps.to_int(ps.tower(k - 1, 1)) if k >= 1 else 1
    lb_num = em1 - 1
    return WitnessReport(
        group="bg", m=None, n=n, u=u, v=v, gamma=gamma,
        size=len(u) + len(v), size_bound=None, slack=None,
        cl_lower_bound=lb_num // 4,
        cl_lower_bound_exact=f"{ps.fmt_int(lb_num)}/4",
        naf_lower_bound=naf_lb,
        verified=ok, check=check, note=note)


def _attach_oracle(rep: WitnessReport, ctx: TW.TowerContext,
                   budget: O.SearchBudget) -> None:
    try:
        beta = ps.to_int(ps.third_of_tower_minus_one(rep.m, rep.n))
    except TooLargeError:
        beta = None
    if beta is None or beta > budget.max_conjugator_length \
            or not isinstance(rep.v, Word):
        rep.note = (rep.note + " " if rep.note else "") + \
            "oracle skipped: shortest conjugator beyond the ball cap"
        return
    radius = min(budget.max_conjugator_length, beta)
    small = O.SearchBudget(max_conjugator_length=radius,
                           max_relator_insertions=budget.max_relator_insertions,
                           node_cap=budget.node_cap)
    try:
        found = O.bounded_conjugator_search(rep.u, rep.v, ctx, small)
    except O.BudgetExceeded:
        rep.note = (rep.note + " " if rep.note else "") + \
            "oracle aborted: node cap"
        return
    if found is None:
        rep.note = (rep.note + " " if rep.note else "") + \
            f"oracle found nothing within radius {radius}"
    else:
        rep.oracle_length = len(found)


def cl_table(max_m: int, max_n: int, with_oracle: bool = True,
             budget: Optional[O.SearchBudget] = None) -> List[WitnessReport]:
    """One report per (m, n) with 2 <= m <= max_m, 1 <= n <= max_n,
    oracle-exact conjugator lengths attached where the ball search is
    small enough to finish."""
    if budget is None:
        budget = O.SearchBudget()
    out: List[WitnessReport] = []
    for m in range(2, max_m + 1):
        for n in range(1, max_n + 1):
            try:
                rep = make_witness_gm(m, n)
            except TooLargeError as exc:
                out.append(WitnessReport(
                    group="gm", m=m, n=n, u=_u(), v=None, gamma=None,
                    size=None, size_bound=None, slack=None,
                    cl_lower_bound=0, cl_lower_bound_exact="?",
                    naf_lower_bound=0, verified=False, check="none",
                    note=f"guard: {exc}"))
                continue
            if with_oracle:
                _attach_oracle(rep, TW.TowerContext(m), budget)
            out.append(rep)
    return out


def report_fields(rep: WitnessReport) -> dict:
    """Flat printable mapping, in a stable field order."""
    def w(x):
        return "" if x is None else str(x)
    return {
        "group": rep.group,
        "m": w(rep.m),
        "n": str(rep.n),
        "u": str(rep.u),
        "v": w(rep.v),
        "gamma": w(rep.gamma),
        "size": w(rep.size),
        "size_bound": w(rep.size_bound),
        "slack": w(rep.slack),
        "cl_lower_bound": str(rep.cl_lower_bound),
        "cl_lower_bound_exact": rep.cl_lower_bound_exact,
        "naf_lower_bound": str(rep.naf_lower_bound),
        "oracle_length": w(rep.oracle_length),
        "verified": str(rep.verified).lower(),
        "check": rep.check,
        "note": rep.note,
    }
