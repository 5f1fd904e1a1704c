"""Exact integers kept as signed sums of powers of two.

A value is a small collection of (coeff, exp) terms plus optional
geometric runs ``run(sign, start, step, count)`` standing for
``sign * (2^start + 2^(start+step) + ... )`` with ``count`` entries.
Exponents are plain Python ints, so quantities like 2**65536 cost a few
kilobytes to carry around.  Runs exist so that numbers whose binary
expansion has astronomically many digits (for instance a third of a
power tower minus one) still admit exact term counts and arithmetic.

Materializing a plain int is guarded: anything wider than MAX_INT_BITS
bits raises TooLargeError instead of grinding the machine down.

Structural equality (==, hashing) distinguishes a run from its expanded
term list even when the values agree; use eq() for value equality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple, Union

MAX_INT_BITS = 1 << 26     # widest plain int we agree to build
RUN_EXPAND_LIMIT = 1 << 16  # max run entries expanded into explicit terms

Term = Tuple[int, int]           # (coeff, exp); canonical: coeff odd, nonzero
Run = Tuple[int, int, int, int]  # (sign, start, step, count)

IntLike = Union[int, "PowerSum"]


class TooLargeError(Exception):
    """An operation would materialize an integer wider than the guard.

    ``height`` carries a symbolic description of the offending size when
    one is available (for tower values: ("tower", m, n)).
    """

    def __init__(self, message: str, height=None):
        super().__init__(message)
        self.height = height


@dataclass(frozen=True)
class PowerSum:
    """Signed sum of powers of two, possibly with geometric runs.

    terms: ((coeff, exp), ...), exponents strictly increasing; after
    normalize() every coeff is odd and nonzero.  runs: ((sign, start,
    step, count), ...) with sign +-1, step >= 1, count >= 2; after
    normalize() run exponent sets are pairwise disjoint and disjoint
    from the term exponents.  The value is the sum of everything.
    """

    terms: Tuple[Term, ...] = ()
    runs: Tuple[Run, ...] = ()

    def __bool__(self):
        return bool(self.terms or self.runs)

    def __add__(self, other: IntLike) -> "PowerSum":
        return add(self, other)

    def __sub__(self, other: IntLike) -> "PowerSum":
        return add(self, negate(as_power_sum(other)))

    def __neg__(self) -> "PowerSum":
        return negate(self)

    def __str__(self):
        return format_power_sum(self)


ZERO = PowerSum()


def as_power_sum(x: IntLike) -> PowerSum:
    if isinstance(x, PowerSum):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected int or PowerSum, got {type(x).__name__}")
    return from_int(x)


def from_int(k: int) -> PowerSum:
    if k == 0:
        return ZERO
    return normalize(PowerSum(terms=((k, 0),)))


def pow2(e: int) -> PowerSum:
    """2**e as a single unit term."""
    return PowerSum(terms=((1, e),))


# ---------------------------------------------------------------------------
# canonical form

def _v2_int(c: int) -> int:
    return (c & -c).bit_length() - 1


def _brief(n: int) -> str:
    # safe to embed in messages: huge ints are described, not printed
    if abs(n).bit_length() <= 64:
        return str(n)
    return f"{'-' if n < 0 else ''}~2^{abs(n).bit_length() - 1}"


def fmt_int(n: int) -> str:
    # decimal-to-string is quadratic; beyond ~14k bits emit hex
    if abs(n).bit_length() <= 14000:
        return str(n)
    return ("-0x" + format(-n, "x")) if n < 0 else "0x" + format(n, "x")


def _settle(pairs: Iterable[Term]) -> Tuple[Term, ...]:
    # merge equal exponents, pull 2-adic factors out of even coefficients
    acc = {}
    for c, e in pairs:
        acc[e] = acc.get(e, 0) + c
    dirty = [e for e, c in acc.items() if c == 0 or c % 2 == 0]
    while dirty:
        e = dirty.pop()
        c = acc.get(e, 0)
        if c == 0:
            acc.pop(e, None)
            continue
        if c % 2:
            continue
        v = _v2_int(c)
        del acc[e]
        ne = e + v
        nc = acc.get(ne, 0) + (c >> v)
        acc[ne] = nc
        if nc == 0 or nc % 2 == 0:
            dirty.append(ne)
    return tuple(sorted(((c, e) for e, c in acc.items()), key=lambda t: t[1]))


def _run_end(r: Run) -> int:
    sg, a, st, c = r
    return a + st * (c - 1)


def _run_index(r: Run, e: int) -> Optional[int]:
    sg, a, st, c = r
    if e < a:
        return None
    q, rem = divmod(e - a, st)
    if rem or q >= c:
        return None
    return q


def _ap_first_common(a, s, c, b, t, d) -> Optional[int]:
    # smallest exponent shared by the progressions a+s*j (j<c) and
    # b+t*k (k<d), or None
    g = math.gcd(s, t)
    if (b - a) % g:
        return None
    tg = t // g
    if tg > 1:
        u = ((b - a) // g * pow(s // g, -1, tg)) % tg
    else:
        u = 0
    x = a + s * u
    period = s // g * t
    lo = max(a, b)
    if x < lo:
        x += (lo - x + period - 1) // period * period
    hi = min(a + s * (c - 1), b + t * (d - 1))
    return x if x <= hi else None


def _runs_collide(r1: Run, r2: Run) -> bool:
    return _ap_first_common(r1[1], r1[2], r1[3], r2[1], r2[2], r2[3]) is not None


def _push_run(terms: list, runs: list, r: Run):
    sg, a, st, c = r
    if c <= 0:
        return
    if c == 1:
        terms.append((sg, a))
    else:
        runs.append(r)


def _merge_runs(terms: list, runs: list, r1: Run, r2: Run):
    s1, a1, st1, c1 = r1
    s2, a2, st2, c2 = r2
    if st1 == st2:
        st = st1
        lo = max(a1, a2)
        hi = min(_run_end(r1), _run_end(r2))
        # colliding same-step runs share the residue class, so the
        # overlap window [lo, hi] lies in both
        first = r1 if a1 <= a2 else r2
        _push_run(terms, runs, (first[0], first[1], st, (lo - first[1]) // st))
        tail = _run_end(r1) if _run_end(r1) >= _run_end(r2) else _run_end(r2)
        owner = r1 if _run_end(r1) >= _run_end(r2) else r2
        _push_run(terms, runs, (owner[0], hi + st, st, (tail - hi) // st))
        n_overlap = (hi - lo) // st + 1
        if s1 != s2:
            return  # opposite signs cancel across the window
        _push_run(terms, runs, (s1, lo + 1, st, n_overlap))  # 2*2^e = 2^(e+1)
        return
    # mismatched steps: no symbolic rule, expand the smaller run
    small, big = (r1, r2) if c1 <= c2 else (r2, r1)
    if small[3] > RUN_EXPAND_LIMIT:
        raise TooLargeError(
            "cannot reconcile overlapping runs with different steps "
            f"(smaller count {_brief(small[3])})", height=small[3])
    runs.append(big)
    sg, a, st, c = small
    terms.extend((sg, a + st * j) for j in range(c))


def _collide_runs_once(terms: list, runs: list) -> bool:
    for i in range(len(runs)):
        for k in range(i + 1, len(runs)):
            if _runs_collide(runs[i], runs[k]):
                r2 = runs.pop(k)
                r1 = runs.pop(i)
                _merge_runs(terms, runs, r1, r2)
                return True
    return False


def _mesh_runs_once(terms: list, runs: list) -> bool:
    # Same-sign runs with one even step st, phase-shifted by st/2, mesh
    # into a single run of step st/2 (plus stubs).  Without this rule a
    # later carry would crawl across the comb one exponent at a time.
    for i in range(len(runs)):
        for k in range(len(runs)):
            if i == k:
                continue
            sL, aL, st, cL = runs[i]
            sH, aH, stH, cH = runs[k]
            if sL != sH or st != stH or st % 2 or aL >= aH:
                continue
            if (aH - aL) % st != st // 2:
                continue
            q = (aH - aL) // st
            if q >= cL:
                continue
            mesh = min(cL - q, cH)
            runs.pop(max(i, k))
            runs.pop(min(i, k))
            _push_run(terms, runs, (sL, aL, st, q))
            _push_run(terms, runs, (sL, aL + q * st, st // 2, 2 * mesh))
            if cL - q <= cH:
                _push_run(terms, runs, (sL, aH + mesh * st, st, cH - mesh))
            else:
                _push_run(terms, runs,
                          (sL, aL + (q + mesh) * st, st, cL - q - mesh))
            return True
    return False


def _absorb_terms_once(terms: list, runs: list) -> bool:
    for c, e in terms:
        for ri, r in enumerate(runs):
            j = _run_index(r, e)
            if j is None:
                continue
            sg, a, st, cnt = r
            terms.remove((c, e))
            runs.pop(ri)
            if st == 1 and (c > 0) == (sg > 0):
                # a unit of matching sign telescopes the run from e up:
                # 2^e + (2^e + ... + 2^top) = 2^(top+1)
                _push_run(terms, runs, (sg, a, 1, e - a))
                terms.append((sg, a + cnt))
                if c != sg:
                    terms.append((c - sg, e))
                return True
            _push_run(terms, runs, (sg, a, st, j))
            _push_run(terms, runs, (sg, a + st * (j + 1), st, cnt - j - 1))
            terms.append((c + sg, e))
            return True
    return False


def normalize(x: PowerSum) -> PowerSum:
    """Canonical form: odd coefficients, one term per exponent, runs
    exponent-disjoint from everything.  Value preserved."""
    terms = list(x.terms)
    runs: List[Run] = []
    for r in x.runs:
        sg, a, st, c = r
        if sg not in (1, -1):
            raise ValueError(f"run sign must be +1 or -1, got {sg}")
        if st < 1:
            raise ValueError(f"run step must be >= 1, got {st}")
        _push_run(terms, runs, r)

    for _ in range(100000):
        terms = list(_settle(terms))
        if _collide_runs_once(terms, runs):
            continue
        if _mesh_runs_once(terms, runs):
            continue
        if _absorb_terms_once(terms, runs):
            continue
        break
    else:
        raise RuntimeError("normalization did not settle")
    runs.sort(key=lambda r: r[1])
    return PowerSum(terms=tuple(terms), runs=tuple(runs))


# ---------------------------------------------------------------------------
# arithmetic

def add(x: IntLike, y: IntLike) -> PowerSum:
    x = as_power_sum(x)
    y = as_power_sum(y)
    return normalize(PowerSum(x.terms + y.terms, x.runs + y.runs))


def negate(x: IntLike) -> PowerSum:
    x = as_power_sum(x)
    return PowerSum(
        tuple((-c, e) for c, e in x.terms),
        tuple((-sg, a, st, c) for sg, a, st, c in x.runs))


def sub(x: IntLike, y: IntLike) -> PowerSum:
    return add(x, negate(y))


def shift(x: IntLike, e: int) -> PowerSum:
    """Multiply by 2**e.  e may be negative only when every exponent
    stays nonnegative (the value must remain an integer)."""
    x = as_power_sum(x)
    if e == 0 or not x:
        return x
    for _, ex in x.terms:
        if ex + e < 0:
            raise ValueError(
                f"shift by {_brief(e)} drops exponent {_brief(ex)} below zero")
    for _, a, _, _ in x.runs:
        if a + e < 0:
            raise ValueError(
                f"shift by {_brief(e)} drops run start {_brief(a)} below zero")
    return PowerSum(
        tuple((c, ex + e) for c, ex in x.terms),
        tuple((sg, a + e, st, c) for sg, a, st, c in x.runs))


def mul_int(x: IntLike, k: int) -> PowerSum:
    """Multiply by a machine-scale integer via its binary expansion."""
    if abs(k).bit_length() > 64:
        raise ValueError("multiplier too wide; only small factors supported")
    if k == 0:
        return ZERO
    x = as_power_sum(x)
    acc = ZERO
    for i, bit in enumerate(bin(abs(k))[:1:-1]):
        if bit == "1":
            acc = add(acc, shift(x, i))
    return negate(acc) if k < 0 else acc


def is_zero(x: IntLike) -> bool:
    return not as_power_sum(x)


def eq(x: IntLike, y: IntLike) -> bool:
    """Value equality.  Works because a normalized nonempty sum has a
    well-defined lowest exponent carrying an odd coefficient, so it
    cannot vanish; the difference normalizes to empty iff x == y."""
    return not sub(x, y)


def v2(x: IntLike) -> int:
    """2-adic valuation.  Undefined for zero."""
    x = normalize(as_power_sum(x))
    if not x:
        raise ValueError("v2(0) is undefined")
    candidates = [e for _, e in x.terms] + [a for _, a, _, _ in x.runs]
    return min(candidates)


def max_exp(x: IntLike) -> int:
    x = as_power_sum(x)
    if not x:
        raise ValueError("empty sum has no top exponent")
    tops = [e for _, e in x.terms] + [_run_end(r) for r in x.runs]
    return max(tops)


def sign(x: IntLike) -> int:
    x = normalize(as_power_sum(x))
    if not x:
        return 0
    u = to_signed_units(x)
    top = max_exp(u)
    for c, e in u.terms:
        if e == top:
            return 1 if c > 0 else -1
    for sg, a, st, c in u.runs:
        if _run_end((sg, a, st, c)) == top:
            return sg
    raise RuntimeError("top exponent lost")  # unreachable


def compare(x: IntLike, y: IntLike) -> int:
    return sign(sub(x, y))


def parity(x: IntLike) -> int:
    return mod_int(x, 2)


def _geom_mod(r: int, n: int, d: int) -> int:
    # sum_{j<n} r^j mod d, no division; binary of n, high bit first
    g, p = 0, 1  # invariant: g = sum_{j<m} r^j, p = r^m for the prefix m
    for bit in bin(n)[2:]:
        g = g * (1 + p) % d
        p = p * p % d
        if bit == "1":
            g = (g + p) % d
            p = p * r % d
    return g


def div_int_exact(x: IntLike, d: int) -> PowerSum:
    """Exact quotient x / d for odd d.  The value is materialized, so
    this is a desk-scale operation; symbolic callers must build their
    quotients directly."""
    if d == 0 or d % 2 == 0:
        raise ValueError("divisor must be odd and nonzero")
    v = to_int(x)
    q, rem = divmod(v, d)
    if rem:
        raise ValueError(f"{_brief(v)} is not divisible by {_brief(d)}")
    return from_int(q)


def mod_int(x: IntLike, d: int) -> int:
    """Value modulo d (any d >= 1), without materializing the value."""
    if d < 1:
        raise ValueError("modulus must be >= 1")
    x = as_power_sum(x)
    total = 0
    for c, e in x.terms:
        total += c * pow(2, e, d)
    for sg, a, st, c in x.runs:
        total += sg * pow(2, a, d) * _geom_mod(pow(2, st, d), c, d)
    return total % d


def to_int(x: IntLike) -> int:
    """Materialize as a plain int; guarded by MAX_INT_BITS."""
    if isinstance(x, int):
        return x
    total = 0
    for c, e in x.terms:
        if e < 0:
            raise ValueError("negative exponent: value is not an integer")
        if e + abs(c).bit_length() > MAX_INT_BITS:
            raise TooLargeError(
                f"term coeff*2^{_brief(e)} exceeds the {MAX_INT_BITS}-bit guard",
                height=e)
        total += c << e
    for sg, a, st, c in x.runs:
        if a < 0:
            raise ValueError("negative exponent: value is not an integer")
        if a + st * c > MAX_INT_BITS:
            raise TooLargeError(
                f"run of {_brief(c)} entries up to 2^{_brief(_run_end((sg, a, st, c)))} "
                f"exceeds the {MAX_INT_BITS}-bit guard",
                height=_run_end((sg, a, st, c)))
        total += sg * ((((1 << (st * c)) - 1) // ((1 << st) - 1)) << a)
    return total


# ---------------------------------------------------------------------------
# signed-unit and non-adjacent forms

def _int_naf_digits(v: int) -> List[Term]:
    # non-adjacent form of a plain int, lowest exponent first
    out = []
    e = 0
    while v:
        if v & 1:
            d = 2 - (v & 3)  # +1 when v = 1 mod 4, else -1
            out.append((d, e))
            v -= d
        v >>= 1
        e += 1
    return out


def to_signed_units(x: IntLike) -> PowerSum:
    """Rewrite so every coefficient is +1 or -1.  The output has at
    most 2*sum(|coeff|) + 1 terms.  Runs already carry unit signs and
    pass through untouched."""
    x = normalize(as_power_sum(x))
    for _ in range(10000):
        wide = [(c, e) for c, e in x.terms if abs(c) != 1]
        if not wide:
            return x
        pieces = [(c, e) for c, e in x.terms if abs(c) == 1]
        for c, e in wide:
            if abs(c).bit_length() > RUN_EXPAND_LIMIT:
                raise TooLargeError(
                    "coefficient too wide to split into units",
                    height=abs(c).bit_length())
            pieces.extend((d, e + k) for d, k in _int_naf_digits(c))
        x = normalize(PowerSum(tuple(pieces), x.runs))
    raise RuntimeError("unit conversion did not settle")


def _cluster_naf(terms: Tuple[Term, ...]):
    # Rewrite unit terms cluster by cluster.  Clusters are split at
    # exponent gaps >= 3: rewriting raises a cluster's top by at most
    # one and never lowers its bottom, so distant clusters stay
    # non-adjacent and the concatenation is the non-adjacent form.
    out: List[Term] = []
    changed = False
    i = 0
    n = len(terms)
    while i < n:
        j = i
        while j + 1 < n and terms[j + 1][1] - terms[j][1] <= 2:
            j += 1
        group = list(terms[i:j + 1])
        base = group[0][1]
        if group[-1][1] - base > MAX_INT_BITS:
            raise TooLargeError("cluster too wide for non-adjacent form",
                                height=group[-1][1] - base)
        v = 0
        for c, e in group:
            v += c << (e - base)
        digits = [(d, e + base) for d, e in _int_naf_digits(v)]
        if digits != group:
            changed = True
        out.extend(digits)
        i = j + 1
    return tuple(out), changed


def _adjacent_run(terms, runs) -> Optional[Run]:
    # a run whose support sits at distance exactly 1 from some other
    # support point; None when everything is non-adjacent
    for idx, r in enumerate(runs):
        for _, te in terms:
            if _run_index(r, te - 1) is not None or _run_index(r, te + 1) is not None:
                return r
        for r2 in runs[idx + 1:]:
            sg, a, st, c = r
            s2, a2, st2, c2 = r2
            if (_ap_first_common(a, st, c, a2 + 1, st2, c2) is not None
                    or _ap_first_common(a, st, c, a2 - 1, st2, c2) is not None):
                return r if c <= c2 else r2
    return None


def naf(x: IntLike) -> PowerSum:
    """Non-adjacent form: unit coefficients, no two exponents differing
    by one.  Unique, and minimal in term count among all signed binary
    representations.  Runs with step >= 2 are already non-adjacent
    internally and stay symbolic; a run is expanded only when its
    support crowds the rest, and only below RUN_EXPAND_LIMIT."""
    x = to_signed_units(as_power_sum(x))
    for _ in range(1000):
        step1 = [r for r in x.runs if r[2] == 1]
        if step1:
            # a step-1 run is geometric with ratio 2: 2^(a+c) - 2^a
            nt = list(x.terms)
            nr = [r for r in x.runs if r[2] != 1]
            for sg, a, _, c in step1:
                nt += [(sg, a + c), (-sg, a)]
            x = to_signed_units(normalize(PowerSum(tuple(nt), tuple(nr))))
            continue
        terms, changed = _cluster_naf(x.terms)
        if changed:
            x = to_signed_units(normalize(PowerSum(terms, x.runs)))
            continue
        bad = _adjacent_run(terms, x.runs)
        if bad is None:
            return PowerSum(terms, x.runs)
        if bad[3] > RUN_EXPAND_LIMIT:
            raise TooLargeError(
                "support too large to rewrite in non-adjacent form",
                height=bad[3])
        sg, a, st, c = bad
        nt = list(terms) + [(sg, a + st * j) for j in range(c)]
        nr = tuple(r for r in x.runs if r != bad)
        x = to_signed_units(normalize(PowerSum(tuple(nt), nr)))
    raise RuntimeError("non-adjacent rewrite did not settle")


def min_term_count(x: IntLike) -> int:
    """Number of terms in the non-adjacent form; run counts enter
    symbolically, so astronomically long forms still answer."""
    n = naf(x)
    return len(n.terms) + sum(c for _, _, _, c in n.runs)


def length_lower_bound(x: IntLike) -> int:
    """ceil((p - 1) / 2) for p = min_term_count(x): no word shorter than
    this spells the x-th power of a stable letter in any of the groups
    here."""
    p = min_term_count(x)
    return p // 2


# ---------------------------------------------------------------------------
# power towers

def tower(m: int, n: int) -> PowerSum:
    """Iterated exponential: height 0 gives n, height m gives
    2**(tower(m-1, n)).  The exponent is materialized (guarded); the
    value itself stays symbolic as a single unit term."""
    if m < 0:
        raise ValueError("height must be >= 0")
    if n < 1:
        raise ValueError("base must be >= 1")
    if m == 0:
        return from_int(n)
    e = n
    for level in range(m - 1):
        if e >= MAX_INT_BITS:
            raise TooLargeError(
                f"tower({m},{n}) needs the exponent tower({m - 1},{n}), "
                f"which exceeds the bit guard at height {level + 1}",
                height=("tower", m - 1, n))
        e = 1 << e
    return PowerSum(terms=((1, e),))


def third_of_tower_minus_one(m: int, n: int) -> PowerSum:
    """(tower(m, n) - 1) / 3 for m >= 2, where the tower value is
    4^(tower(m-1, n)/2) so the quotient is exact.  Returned as
    run(+, 0, 2, tower(m-1, n)/2): the count is materialized even when
    the value has astronomically many digits."""
    if m < 2:
        raise ValueError("need height >= 2 for divisibility by three")
    if n < 1:
        raise ValueError("base must be >= 1")
    half = to_int(tower(m - 1, n))  # 2^(something >= 1), always even
    count = half // 2
    return normalize(PowerSum(runs=((1, 0, 2, count),)))


# ---------------------------------------------------------------------------
# text form

_NUM = r"[+-]?(?:0x[0-9A-Fa-f]+|\d+)"
_PIECE_RE = re.compile(
    rf"""term\(\s*(?P<tc>{_NUM})\s*,\s*(?P<te>{_NUM})\s*\)
      | run\(\s*(?P<rs>[+-]1?)\s*,\s*(?P<ra>{_NUM})\s*,\s*(?P<rt>{_NUM})\s*,\s*(?P<rc>{_NUM})\s*\)
      | (?P<int>{_NUM})
    """, re.VERBOSE)


def _parse_int(s: str) -> int:
    s = s.strip()
    neg = s.startswith("-")
    if s.startswith(("+", "-")):
        s = s[1:]
    v = int(s, 16) if s.lower().startswith("0x") else int(s)
    return -v if neg else v


def parse_power_sum(text: str) -> PowerSum:
    """Parse 'term(c,e)' and 'run(+,a,step,count)' pieces joined by '+'.
    A bare integer is accepted anywhere a piece is."""
    terms: List[Term] = []
    runs: List[Run] = []
    plain = 0
    pos = 0
    text = text.strip()
    if not text:
        raise ValueError("empty input")
    expecting_piece = True
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if not expecting_piece:
            if text[pos] != "+":
                raise ValueError(f"expected '+' at position {pos} of {text!r}")
            pos += 1
            expecting_piece = True
            continue
        m = _PIECE_RE.match(text, pos)
        if not m:
            raise ValueError(f"cannot read a term at position {pos} of {text!r}")
        if m.group("tc") is not None:
            terms.append((_parse_int(m.group("tc")), _parse_int(m.group("te"))))
        elif m.group("rs") is not None:
            sg = 1 if m.group("rs").startswith("+") else -1
            runs.append((sg, _parse_int(m.group("ra")), _parse_int(m.group("rt")),
                         _parse_int(m.group("rc"))))
        else:
            plain += _parse_int(m.group("int"))
        pos = m.end()
        expecting_piece = False
    if expecting_piece:
        raise ValueError(f"dangling '+' in {text!r}")
    out = normalize(PowerSum(tuple(terms), tuple(runs)))
    if plain:
        out = add(out, from_int(plain))
    return out


def format_power_sum(x: IntLike) -> str:
    x = as_power_sum(x)
    pieces = [f"term({fmt_int(c)},{fmt_int(e)})" for c, e in x.terms]
    pieces += [f"run({'+' if sg > 0 else '-'},{fmt_int(a)},{fmt_int(st)},{fmt_int(c)})"
               for sg, a, st, c in x.runs]
    return " + ".join(pieces) if pieces else "0"
