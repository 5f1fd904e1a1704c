"""Independent brute-force ground truth.

Everything here answers by exhaustion: breadth-first search over signed
power-of-two sums, over generator balls, over conjugator candidates.
Slow and honest, for cross-checking the clever code at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional


@dataclass(frozen=True)
class SearchBudget:
    max_conjugator_length: int = 6
    max_relator_insertions: int = 4
    node_cap: int = 2_000_000

    def __post_init__(self):
        if (self.max_conjugator_length <= 0 or self.max_relator_insertions <= 0
                or self.node_cap <= 0):
            raise ValueError("budget fields must be positive")


class BudgetExceeded(Exception):
    """Search ran out of budget; distinct from a definite 'none found'."""


# ---------------------------------------------------------------------------
# signed power-of-two representations

def _signed_term_bfs(bound: int, max_exp: int, stop=None) -> bytearray:
    # dist[v + bound] = fewest +-2^e summands reaching v, 255 = unseen.
    # Any sum of such terms can be ordered so partial sums stay within
    # max(2^max_exp, |target|) + 2^max_exp: pick a term against the sign
    # of the running sum while both signs remain, then the tail moves
    # monotonically toward the target.
    size = 2 * bound + 1
    dist = bytearray([255]) * size
    dist[bound] = 0
    frontier = [0]
    moves = [1 << e for e in range(max_exp + 1)]
    moves += [-m for m in moves]
    layer = 0
    while frontier:
        layer += 1
        if layer > 250:
            raise RuntimeError("signed-term search did not close")
        nxt = []
        for v in frontier:
            for m in moves:
                w = v + m
                if -bound <= w <= bound and dist[w + bound] == 255:
                    dist[w + bound] = layer
                    nxt.append(w)
        if stop is not None and dist[stop + bound] != 255:
            return dist
        frontier = nxt
    return dist


def brute_min_signed_terms(k: int, max_exp: int = 16) -> int:
    """Exact minimum number of terms +-2^e with e <= max_exp summing
    to k, found by breadth-first search over partial sums."""
    if not 0 <= max_exp <= 20:
        raise ValueError("max_exp must be between 0 and 20")
    if abs(k) >= 1 << max_exp:
        raise ValueError(f"|k| must be below 2^{max_exp}")
    if k == 0:
        return 0
    bound = (1 << max_exp) + abs(k)
    dist = _signed_term_bfs(bound, max_exp, stop=k)
    d = dist[k + bound]
    if d == 255:
        raise RuntimeError("target unreachable; bound argument is wrong")
    return d


def signed_term_table(limit: int, max_exp: int = 16) -> Dict[int, int]:
    """brute_min_signed_terms for every |k| <= limit, in one search."""
    if not 0 <= max_exp <= 20:
        raise ValueError("max_exp must be between 0 and 20")
    if limit >= 1 << max_exp:
        raise ValueError(f"limit must be below 2^{max_exp}")
    bound = (1 << max_exp) + limit
    dist = _signed_term_bfs(bound, max_exp)
    return {k: dist[k + bound] for k in range(-limit, limit + 1)}

# ---------------------------------------------------------------------------
# generator-ball searches
#
# These work for any context exposing a word-problem decider: the tower
# contexts and the Gersten-group context both do.  Shortlex order is
# fixed as generator index ascending, positive letter before negative,
# with the extra stable letter last, so results are deterministic.

def _group_ops(group):
    from . import words as W
    from . import tower
    if isinstance(group, tower.TowerContext):
        letters = []
        for i in range(group.m + 1):
            letters.append(W.S(i, 1))
            letters.append(W.S(i, -1))
        return letters, (lambda w: tower.is_identity(w, group))
    from . import gersten
    if isinstance(group, gersten.GerstenContext):
        letters = [W.S(0, 1), W.S(0, -1), W.S(1, 1), W.S(1, -1),
                   W.Tl(1), W.Tl(-1)]
        return letters, (lambda w: gersten.is_identity(w, group))
    raise TypeError(f"no word-problem decider for {group!r}")


def _abel_invariant(w, group):
    # the only exponent sum surviving abelianization: the top generator
    # for a tower, the stable letter for the Gersten group
    from . import words as W
    from . import tower
    if isinstance(group, tower.TowerContext):
        return W.generator_exponent_sum(w, group.m)
    return W.t_exponent_sum(w)


def _shortlex_freely_reduced(letters, max_len):
    from . import words as W
    yield W.EMPTY
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for pref in frontier:
            for l in letters:
                if pref and pref[-1] == l.inverse():
                    continue
                cand = pref + (l,)
                yield W.Word(cand)
                nxt.append(cand)
        frontier = nxt


def bounded_conjugator_search(u, v, group, budget: SearchBudget = SearchBudget()):
    """First word gamma in shortlex order, up to the budgeted length,
    with gamma u gamma^-1 v^-1 trivial; None if no such word exists at
    that depth.  Raises BudgetExceeded past node_cap."""
    letters, is_id = _group_ops(group)
    if _abel_invariant(u, group) != _abel_invariant(v, group):
        return None  # conjugation preserves the abelianized image
    nodes = 0
    vi = v.inverse()
    for gamma in _shortlex_freely_reduced(letters,
                                          budget.max_conjugator_length):
        nodes += 1
        if nodes > budget.node_cap:
            raise BudgetExceeded(
                f"conjugator search hit node cap {budget.node_cap}")
        if is_id(gamma * u * gamma.inverse() * vi):
            return gamma
    return None


def min_word_length(g, group, budget: SearchBudget = SearchBudget()
                    ) -> Optional[int]:
    """Exact word-metric length of g, by shortlex enumeration of the
    ball of radius max_conjugator_length.  None when the ball is too
    small to reach g."""
    letters, is_id = _group_ops(group)
    nodes = 0
    gi = g.inverse()
    for cand in _shortlex_freely_reduced(letters,
                                         budget.max_conjugator_length):
        nodes += 1
        if nodes > budget.node_cap:
            raise BudgetExceeded(
                f"length search hit node cap {budget.node_cap}")
        if is_id(cand * gi):
            return len(cand)
    return None


def _orbit_key(syls):
    # structurally distinct PowerSums can hold the same value, so the
    # dedup key materializes exponents whenever they fit
    from . import powersum as ps
    out = []
    for b, e in syls:
        try:
            out.append((b, ps.to_int(e)))
        except ps.TooLargeError:
            out.append((b, e))
    return tuple(out)


def conjugate_orbit(u, group, depth: int, node_cap: int = 2_000_000):
    """All reduced syllable forms reachable as gamma u gamma^-1 with
    |gamma| <= depth, found by conjugating one letter at a time.  A
    depth-k conjugate is a letter-conjugate of a depth-(k-1) one, so
    plain BFS over frontier elements is exhaustive."""
    from . import powersum as ps
    from . import tower
    if not isinstance(group, tower.TowerContext):
        raise TypeError("orbit search is tower-only")
    letters, _ = _group_ops(group)
    start = tower._reduce(tower._word_syls(u), group)
    seen = {_orbit_key(start)}
    out = [start]
    frontier = [start]
    nodes = 0
    for _ in range(depth):
        nxt = []
        for syls in frontier:
            for l in letters:
                nodes += 1
                if nodes > node_cap:
                    raise BudgetExceeded("orbit search hit node cap")
                wrap = ((l.base, ps.from_int(l.sign)),)
                unwrap = ((l.base, ps.from_int(-l.sign)),)
                conj = tower._reduce(wrap + syls + unwrap, group)
                key = _orbit_key(conj)
                if key not in seen:
                    seen.add(key)
                    out.append(conj)
                    nxt.append(conj)
        frontier = nxt
    return out


# ---------------------------------------------------------------------------
# triviality from the defining relations, independent of the reducer

def random_trivial_word(group, rng, factors: int = 3, conj_len: int = 3):
    """Product of conjugated relators: trivial by construction, useful
    as ground truth against any word-problem decider."""
    from . import words as W
    from . import tower
    if isinstance(group, tower.TowerContext):
        rels = tower.relators(group)
        letters, _ = _group_ops(group)
    else:
        from . import gersten
        rels = gersten.relators(group)
        letters, _ = _group_ops(group)
    out = W.EMPTY
    for _ in range(factors):
        r = rng.choice(rels)
        if rng.random() < 0.5:
            r = r.inverse()
        g = W.Word(tuple(rng.choice(letters)
                         for _ in range(rng.randrange(conj_len + 1))))
        out = out * g * r * g.inverse()
    return W.free_reduce(out)


def confirm_trivial_by_insertion(w, group, budget: SearchBudget = SearchBudget()
                                 ) -> bool:
    """Tries to cancel w down to the empty word using only free
    reduction and insertion of defining relators, breadth-first up to
    max_relator_insertions.  True means w is certainly trivial; False
    only means the bounded search failed."""
    from . import words as W
    from . import tower
    if isinstance(group, tower.TowerContext):
        rels = tower.relators(group)
    else:
        from . import gersten
        rels = gersten.relators(group)
    moves = []
    for r in rels:
        moves.append(r)
        moves.append(r.inverse())
    start = W.free_reduce(w)
    if not start:
        return True
    seen = {start.letters}
    frontier = [start]
    nodes = 0
    for _ in range(budget.max_relator_insertions):
        nxt = []
        for cur in frontier:
            for pos in range(len(cur) + 1):
                head, tail = cur[:pos], cur[pos:]
                for r in moves:
                    nodes += 1
                    if nodes > budget.node_cap:
                        raise BudgetExceeded(
                            "insertion search hit node cap")
                    cand = W.free_reduce(head * r * tail)
                    if not cand:
                        return True
                    key = cand.letters
                    if key not in seen and len(cand) <= len(start) + 8:
                        seen.add(key)
                        nxt.append(cand)
        frontier = nxt
    return False


# ---------------------------------------------------------------------------
# structural pinch scanners

def scan_tower_pinches(w, ctx) -> list:
    """Positions of uncollapsed pinches in a syllable word: adjacent
    same-level syllables of opposite sign whose gap is a power of the
    generator one level down (even power for the negative-first case),
    plus free-cancellation windows and unmerged neighbours.  Empty
    list = clean.  Membership of gap contents is delegated to the
    evaluator, but the adjacency structure is checked independently of
    the reduction engine."""
    from . import powersum as ps
    from . import tower
    syls = tower._as_syls(w)
    findings = []
    for a in range(len(syls)):
        ba, ea = syls[a]
        if a + 1 < len(syls) and syls[a + 1][0] == ba:
            findings.append(("unmerged", a, a + 1, ba))
        for b in range(a + 1, len(syls)):
            bb, eb = syls[b]
            if bb > ba:
                break
            if bb < ba:
                continue
            # same level, everything between is strictly lower
            if ps.sign(ea) == ps.sign(eb):
                break
            gap = syls[a + 1:b]
            if not gap:
                findings.append(("free", a, b, ba))
                break
            l = tower._eval_power_syls(gap, ba - 1, ctx)
            if l is None:
                break
            if ps.sign(ea) > 0 or ps.parity(l) == 0:
                findings.append(("pinch", a, b, ba))
            break
    return findings
