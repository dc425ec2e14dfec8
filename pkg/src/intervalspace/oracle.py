"""Brute-force closure of a sequence under single rewrites.

Independent of :func:`intervals.reduce`: it explores pastes, cuts at a finite
set of candidate points, insertion of removable degenerates and deletion of
removable items, and reports every irreducible sequence it meets.  Along any
rewrite path at most one growing move (a cut or an insertion) is spent; pastes
and deletions are free.
"""
from __future__ import annotations

from collections import deque
from .errors import InvalidSequence, SizeBound
from .intervals import Interval, IntervalSeq, is_valid_items, validate_sequence
from .pam import BASE

MAX_STATES = 50_000


def _interval(l, r, p, q):
    if p == q and not l < r:
        return None
    if l > r:
        return None
    return Interval(l, r, p, q)


def _removable(item) -> bool:
    J, x = item
    return x == BASE or J.degenerate


def is_irreducible(items: tuple) -> bool:
    if any(_removable(it) for it in items):
        return False
    return all(a[0].right != b[0].left for a, b in zip(items, items[1:]))


def candidate_points(seq: IntervalSeq) -> list:
    ends = sorted({e for J, _ in seq.items for e in (J.left, J.right)})
    mids = [(a + b) / 2 for a, b in zip(ends, ends[1:])]
    pts = sorted(set(ends) | set(mids))
    if seq.window.lo is not None and ends:
        pts.append((seq.window.lo + ends[0]) / 2)
    if seq.window.hi is not None and ends:
        pts.append((seq.window.hi + ends[-1]) / 2)
    return sorted(set(pts))


def _shrinking(items: tuple):
    n = len(items)
    for i in range(n - 1):
        (J, x), (K, _) = items[i], items[i + 1]
        if J.right == K.left:
            yield items[:i] + ((Interval(J.left, K.right, J.p_left, K.p_right), x),) + items[i + 2:]
    for i in range(n):
        if _removable(items[i]):
            yield items[:i] + items[i + 1:]


def _growing(items: tuple, points, labels):
    for i, (J, x) in enumerate(items):
        for c in points:
            if not J.left <= c <= J.right:
                continue
            for q in (1, -1):
                a = _interval(J.left, c, J.p_left, q)
                b = _interval(c, J.right, -q, J.p_right)
                if a is not None and b is not None:
                    yield items[:i] + ((a, x), (b, x)) + items[i + 1:]
    for c in points:
        pos = sum(1 for J, _ in items if J.right <= c and not (J.right == c and J.left == c))
        for x in labels:
            for p in (1, -1):
                new = (Interval(c, c, p, -p), x)
                yield items[:pos] + (new,) + items[pos:]


def oracle_reduce_bfs(seq: IntervalSeq, max_states: int = MAX_STATES) -> set:
    """All irreducible sequences in the rewrite closure of ``seq``."""
    found, _ = _closure(seq, max_states)
    return found


def representatives(seq: IntervalSeq, points=None, max_states: int = MAX_STATES) -> set:
    """Every item tuple in the bounded rewrite closure of ``seq``; cuts and
    insertions use ``points`` when given."""
    _, seen = _closure(seq, max_states, points)
    return {items for items, _ in seen}


def _closure(seq: IntervalSeq, max_states: int, points=None):
    if not validate_sequence(seq):
        raise InvalidSequence(f"not a valid interval sequence: {seq}")
    window = seq.window
    points = candidate_points(seq) if points is None else sorted(set(points))
    labels = sorted({x for _, x in seq.items} | {BASE})
    start = (tuple(seq.items), False)
    seen = {start}
    queue = deque([start])
    found = set()
    while queue:
        items, spent = queue.popleft()
        if is_irreducible(items):
            found.add(items)
        nexts = [(n, spent) for n in _shrinking(items)]
        if not spent:
            nexts += [(n, True) for n in _growing(items, points, labels)]
        for state in nexts:
            if state in seen or not is_valid_items(window, state[0]):
                continue
            seen.add(state)
            if len(seen) > max_states:
                raise SizeBound(f"more than {max_states} states reachable from {seq}")
            queue.append(state)
    return {IntervalSeq(window, items) for items in found}, seen
