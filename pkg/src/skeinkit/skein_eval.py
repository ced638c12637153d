"""Exact framed link polynomial evaluators.

Two flavors share one engine:

- the oriented evaluator resolves a crossing against its switched and
  orientation-respecting smoothed forms (difference = z times the smoothing),
- the unoriented evaluator resolves against the switched form and the two
  planar smoothings (difference = z times the difference of smoothings).

Both are regular-isotopy (framed) invariants: a positive kink multiplies
the value by v^-1, a negative kink by v, the crossingless circle counts
delta, and the empty diagram counts 1.

The engine holds crossings as ports (crossing id, slot 0..3) with a perfect
matching `partner` describing the arcs.  Slot numbering is inherited from
the input diagram and never relabeled: a switch only updates the per
crossing orientation datum.  Before branching, states are simplified
(kink removal, parallel bigon cancellation, split into connected clusters,
free circle harvesting) and looked up in a cache keyed by a relabeling
invariant serialization.  Diagrams whose every crossing is first reached
on its over strand evaluate in closed form, so the recursion only branches
on the first crossing first reached on its under strand.
"""

from __future__ import annotations

import heapq
import sys
from dataclasses import dataclass
from typing import Optional

from .diagram import LinkDiagram
from .ring import LaurentPoly, RingElem, vpow, z_poly


class SkeinBudgetError(RuntimeError):
    """Raised when a diagram exceeds the configured crossing budget."""


@dataclass(frozen=True)
class EvalConfig:
    max_crossings: int = 24
    memo: bool = True


DEFAULT_CONFIG = EvalConfig()

_DELTA_NUM = vpow(-1) - vpow(1)           # oriented circle: (v^-1 - v)/z
_DELTA_K_NUM = _DELTA_NUM + z_poly()      # unoriented circle: (v^-1 - v + z)/z
_Z = z_poly()
_Z_POWERS = {0: LaurentPoly.one()}


def _zpow_poly(k: int) -> LaurentPoly:
    while k not in _Z_POWERS:
        top = max(_Z_POWERS)
        _Z_POWERS[top + 1] = _Z_POWERS[top] * _Z
    return _Z_POWERS[k]


class _ZFrac:
    """num / z^zpow with num a Laurent polynomial; closed under the engine ops."""

    __slots__ = ("num", "zpow")

    def __init__(self, num: LaurentPoly, zpow: int = 0):
        self.num = num
        self.zpow = zpow

    @classmethod
    def one(cls) -> "_ZFrac":
        return cls(LaurentPoly.one(), 0)

    def __add__(self, other: "_ZFrac") -> "_ZFrac":
        k = max(self.zpow, other.zpow)
        return _ZFrac(
            self.num * _zpow_poly(k - self.zpow) + other.num * _zpow_poly(k - other.zpow),
            k,
        )

    def __sub__(self, other: "_ZFrac") -> "_ZFrac":
        k = max(self.zpow, other.zpow)
        return _ZFrac(
            self.num * _zpow_poly(k - self.zpow) - other.num * _zpow_poly(k - other.zpow),
            k,
        )

    def __mul__(self, other: "_ZFrac") -> "_ZFrac":
        return _ZFrac(self.num * other.num, self.zpow + other.zpow)

    def times_z(self) -> "_ZFrac":
        return _ZFrac(self.num * _Z, self.zpow)

    def times_v(self, k: int) -> "_ZFrac":
        return _ZFrac(self.num.shift(k, 0), self.zpow)

    def times_circles(self, k: int, flavor: str) -> "_ZFrac":
        if k == 0:
            return self
        num = _DELTA_NUM if flavor == ORIENTED else _DELTA_K_NUM
        return _ZFrac(self.num * (num ** k), self.zpow + k)

    def negate(self) -> "_ZFrac":
        return _ZFrac(-self.num, self.zpow)

    def to_ring_elem(self) -> RingElem:
        return RingElem(self.num, _zpow_poly(self.zpow))


# ----------------------------------------------------------------------
# state construction

ORIENTED = "oriented"
UNORIENTED = "unoriented"


def _build_state(d: LinkDiagram, flavor: str):
    partner = {}
    ends: dict[int, dict] = {}
    for ci, quad in enumerate(d.crossings):
        over_in = 3 if d.signs[ci] > 0 else 1
        for slot, edge in enumerate(quad):
            key = "in" if slot in (0, over_in) else "out"
            ends.setdefault(edge, {})[key] = (ci, slot)
    for edge in sorted(ends):
        a, b = ends[edge]["out"], ends[edge]["in"]
        partner[a] = b
        partner[b] = a
    if flavor == ORIENTED:
        cross = {ci: (0, 3 if d.signs[ci] > 0 else 1) for ci in range(len(d.crossings))}
    else:
        cross = {ci: 1 for ci in range(len(d.crossings))}  # over strand on odd slots
    return cross, partner


def _sign_oriented(datum) -> int:
    u, o = datum
    return 1 if (o - u) % 4 == 3 else -1


def _is_over(flavor, datum, slot) -> bool:
    # over strand occupies the two slots of the over-entry's parity
    over_parity = datum[1] if flavor == ORIENTED else datum
    return slot % 2 == over_parity % 2


# ----------------------------------------------------------------------
# structural surgery on states


def _excise(cross: dict, partner: dict, dead: set, through: dict) -> int:
    """Delete the crossings in `dead`, rerouting strands along `through`.

    `through` pairs the ports where a strand runs through the deleted
    region; ports of dead crossings missing from `through` must sit on arcs
    internal to the region.  Returns the number of closed circles freed.
    """
    removed = {(c, s) for c in dead for s in range(4)}
    circles = 0
    consumed = set()
    externals = [p for p, q in partner.items() if p not in removed and q in removed]
    for a in externals:
        q = partner.get(a)
        if q is None or q not in removed:
            continue
        x = q
        while True:
            y = through[x]
            consumed.add(x)
            consumed.add(y)
            z = partner[y]
            if z in removed:
                x = z
            else:
                partner[a] = z
                partner[z] = a
                break
    for start in through:
        if start in consumed:
            continue
        x = start
        while True:
            y = through[x]
            consumed.add(x)
            consumed.add(y)
            z = partner[y]
            if z == start:
                circles += 1
                break
            x = z
    for p in removed:
        partner.pop(p, None)
    for c in dead:
        del cross[c]
    return circles


def _sym(*pairs) -> dict:
    out = {}
    for a, b in pairs:
        out[a] = b
        out[b] = a
    return out


def _smooth_oriented_through(c, datum) -> dict:
    u, o = datum
    return _sym(((c, u), (c, (o + 2) % 4)), ((c, o), (c, (u + 2) % 4)))


def _smooth_unoriented_through(c, parity, positive: bool) -> dict:
    k = (parity + 1) % 2
    if not positive:
        k += 1
    return _sym(
        ((c, k % 4), (c, (k + 1) % 4)),
        ((c, (k + 2) % 4), (c, (k + 3) % 4)),
    )


# ----------------------------------------------------------------------
# simplification


def _neighbors(partner: dict, dead: set) -> set:
    out = set()
    for c in dead:
        for s in range(4):
            c2 = partner[(c, s)][0]
            if c2 not in dead:
                out.add(c2)
    return out


def _kink_move(cross: dict, partner: dict, flavor: str, c):
    """Return (v shift, through map) for a curl at c, or None."""
    if flavor == ORIENTED:
        u, o = cross[c]
        if partner.get((c, (u + 2) % 4)) == (c, o):
            return -_sign_oriented(cross[c]), _sym(((c, u), (c, (o + 2) % 4)))
        if partner.get((c, (o + 2) % 4)) == (c, u):
            return -_sign_oriented(cross[c]), _sym(((c, o), (c, (u + 2) % 4)))
        return None
    parity = cross[c]
    for i in range(4):
        if partner.get((c, i)) == (c, (i + 1) % 4):
            positive = i % 2 == (parity + 1) % 2
            through = _sym(((c, (i + 2) % 4), (c, (i + 3) % 4)))
            return (-1 if positive else 1), through
    return None


def _bigon_move(cross: dict, partner: dict, flavor: str, c):
    """Return (other crossing, through map) for a cancelling bigon at c, or None."""
    for i in range(4):
        c2, j = partner[(c, i)]
        if c2 == c:
            continue
        if partner.get((c, (i + 1) % 4)) != (c2, (j - 1) % 4):
            continue
        if _is_over(flavor, cross[c], i) != _is_over(flavor, cross[c2], j):
            continue
        through = _sym(
            ((c, (i + 2) % 4), (c2, (j + 2) % 4)),
            ((c, (i + 3) % 4), (c2, (j + 1) % 4)),
        )
        return c2, through
    return None


def _simplify(cross: dict, partner: dict, flavor: str) -> tuple[int, int]:
    """Harvest kinks and parallel bigons in place; returns (v shift, circles).

    Worklist-driven: a pattern involving some crossing can only become true
    when an arc next to it is rewired, so only neighbors of an excised
    region ever need re-examination.
    """
    vshift = 0
    circles = 0
    heap = sorted(cross)
    pending = set(heap)
    while heap:
        c = heapq.heappop(heap)
        if c not in pending:
            continue
        pending.discard(c)
        if c not in cross:
            continue
        kink = _kink_move(cross, partner, flavor, c)
        if kink is not None:
            shift, through = kink
            vshift += shift
            dead = {c}
        else:
            bigon = _bigon_move(cross, partner, flavor, c)
            if bigon is None:
                continue
            c2, through = bigon
            dead = {c, c2}
        touched = _neighbors(partner, dead)
        circles += _excise(cross, partner, dead, through)
        for t in touched:
            if t in cross and t not in pending:
                pending.add(t)
                heapq.heappush(heap, t)
    return vshift, circles


# ----------------------------------------------------------------------
# traversal: descending detection and branch point selection


def _find_clasp(cross: dict, partner: dict, flavor: str):
    """Find a crossing pair joined by two parallel arcs with opposite levels.

    Switching either crossing of such a clasp turns it into a bigon that
    cancels, so branching there shrinks every child diagram.
    """
    for p in sorted(partner):
        c, i = p
        c2, j = partner[p]
        if c == c2:
            continue
        if partner.get((c, (i + 1) % 4)) != (c2, (j - 1) % 4):
            continue
        if _is_over(flavor, cross[c], i) != _is_over(flavor, cross[c2], j):
            return c
    return None


def _scan(cross: dict, partner: dict, flavor: str):
    """Walk every circle; report (first bad crossing, circle count, writhe sum).

    A crossing is good when its first visit runs along the over strand.
    The walk order is deterministic: circles start at the smallest
    unvisited entry port, in slot order inherited from the diagram.
    """
    if flavor == ORIENTED:
        entry_ports = sorted((c, s) for c, (u, o) in cross.items() for s in (u, o))
    else:
        entry_ports = sorted((c, s) for c in cross for s in range(4))
    visited = set()
    seen = set()
    n_circles = 0
    writhe_total = 0
    for start in entry_ports:
        if start in visited:
            continue
        n_circles += 1
        entries = {}
        p = start
        while p not in visited:
            c, s = p
            visited.add(p)
            if flavor != ORIENTED:
                visited.add((c, (s + 2) % 4))
            over = _is_over(flavor, cross[c], s)
            if c not in seen:
                if not over:
                    return c, -1, -1
                seen.add(c)
            if c in entries:
                x, y = (s, entries[c]) if over else (entries[c], s)
                writhe_total += 1 if (x - y) % 4 == 3 else -1
            else:
                entries[c] = s
            p = partner[(c, (s + 2) % 4)]
    return None, n_circles, writhe_total


# ----------------------------------------------------------------------
# the recursive engine


_MEMO: dict = {}


def clear_caches():
    _MEMO.clear()


def _clusters(cross: dict, partner: dict) -> list[set]:
    remaining = set(cross)
    out = []
    while remaining:
        seed = min(remaining)
        stack = [seed]
        group = {seed}
        while stack:
            c = stack.pop()
            for s in range(4):
                c2, _ = partner[(c, s)]
                if c2 in group:
                    continue
                group.add(c2)
                stack.append(c2)
        out.append(group)
        remaining -= group
    return out


def _local_sig(cross: dict, partner: dict, flavor: str, c):
    """Relabeling-invariant radius-1 fingerprint used to shortlist BFS seeds."""
    if flavor == ORIENTED:
        u = cross[c][0]
        row = [_sign_oriented(cross[c])]
        for r in range(4):
            c2, s2 = partner[(c, (u + r) % 4)]
            row.append((_sign_oriented(cross[c2]), (s2 - cross[c2][0]) % 4, c2 == c))
        return tuple(row)
    best = None
    b0 = (cross[c] + 1) % 2
    for base in (b0, b0 + 2):
        row = []
        for r in range(4):
            c2, s2 = partner[(c, (base + r) % 4)]
            rel = (s2 - (cross[c2] + 1) % 2) % 4
            row.append((min(rel, (rel + 2) % 4), c2 == c))
        t = tuple(row)
        if best is None or t < best:
            best = t
    return best


def _canonical_key(cross: dict, partner: dict, flavor: str):
    sigs = {c: _local_sig(cross, partner, flavor, c) for c in cross}
    low = min(sigs.values())
    cids = sorted(c for c in cross if sigs[c] == low)
    if flavor == ORIENTED:
        seeds = [(c, cross[c][0]) for c in cids]
    else:
        seeds = []
        for c in cids:
            base = (cross[c] + 1) % 2
            seeds.append((c, base))
            seeds.append((c, base + 2))
    best = None
    for seed, base in seeds:
        ids = {seed: 0}
        rots = {seed: base}
        queue = [seed]
        rows = []
        qi = 0
        status = 0  # vs best: 0 tied so far, 1 strictly smaller at some row
        while qi < len(queue):
            c = queue[qi]
            qi += 1
            b = rots[c]
            row = [_sign_oriented(cross[c])] if flavor == ORIENTED else []
            for r in range(4):
                c2, s2 = partner[(c, (b + r) % 4)]
                if c2 not in ids:
                    ids[c2] = len(queue)
                    if flavor == ORIENTED:
                        rots[c2] = cross[c2][0]
                    else:
                        b2 = (cross[c2] + 1) % 2
                        rots[c2] = b2 if (s2 - b2) % 4 in (0, 1) else b2 + 2
                    queue.append(c2)
                row.append((ids[c2], (s2 - rots[c2]) % 4))
            rowt = tuple(row)
            if best is not None and status == 0:
                ref = best[len(rows)]
                if rowt > ref:
                    rows = None
                    break
                if rowt < ref:
                    status = 1
            rows.append(rowt)
        if rows is not None and (best is None or status == 1):
            best = rows
    return (flavor, tuple(best))


def _evaluate(cross: dict, partner: dict, flavor: str, memo: bool) -> _ZFrac:
    vshift, circles = _simplify(cross, partner, flavor)
    value = _ZFrac(vpow(vshift), 0).times_circles(circles, flavor)
    if not cross:
        return value
    groups = _clusters(cross, partner)
    if len(groups) == 1:
        return value * _cluster_value(cross, partner, flavor, memo)
    for group in groups:
        sub_cross = {c: cross[c] for c in group}
        sub_partner = {
            (c, s): partner[(c, s)] for c in group for s in range(4)
        }
        value = value * _cluster_value(sub_cross, sub_partner, flavor, memo)
    return value


def _cluster_value(cross: dict, partner: dict, flavor: str, memo: bool) -> _ZFrac:
    use_memo = memo and len(cross) >= 4  # tiny clusters resolve faster than keying
    key = _canonical_key(cross, partner, flavor) if use_memo else None
    if use_memo and key in _MEMO:
        return _MEMO[key]
    first_bad, n_circles, writhe = _scan(cross, partner, flavor)
    if first_bad is not None:
        clasp = _find_clasp(cross, partner, flavor)
        if clasp is not None:
            first_bad = clasp
    if first_bad is None:
        result = _ZFrac(vpow(-writhe), 0).times_circles(n_circles, flavor)
    elif flavor == ORIENTED:
        c = first_bad
        u, o = cross[c]
        sign = _sign_oriented(cross[c])
        sw_cross = dict(cross)
        sw_cross[c] = (o, u)
        sw_val = _evaluate(sw_cross, dict(partner), flavor, memo)
        sm_cross = dict(cross)
        sm_partner = dict(partner)
        freed = _excise(sm_cross, sm_partner, {c}, _smooth_oriented_through(c, (u, o)))
        sm_val = _evaluate(sm_cross, sm_partner, flavor, memo).times_circles(freed, flavor).times_z()
        result = sw_val + sm_val if sign > 0 else sw_val - sm_val
    else:
        c = first_bad
        parity = cross[c]
        sw_cross = dict(cross)
        sw_cross[c] = parity ^ 1
        sw_val = _evaluate(sw_cross, dict(partner), flavor, memo)
        plus_cross = dict(cross)
        plus_partner = dict(partner)
        freed = _excise(plus_cross, plus_partner, {c}, _smooth_unoriented_through(c, parity, True))
        plus_val = _evaluate(plus_cross, plus_partner, flavor, memo).times_circles(freed, flavor)
        minus_cross = dict(cross)
        minus_partner = dict(partner)
        freed = _excise(minus_cross, minus_partner, {c}, _smooth_unoriented_through(c, parity, False))
        minus_val = _evaluate(minus_cross, minus_partner, flavor, memo).times_circles(freed, flavor)
        result = sw_val + (plus_val - minus_val).times_z()
    if use_memo:
        _MEMO[key] = result
    return result


# ----------------------------------------------------------------------
# public entry points


def _run(d: LinkDiagram, flavor: str, config: Optional[EvalConfig]) -> _ZFrac:
    cfg = config or DEFAULT_CONFIG
    if len(d.crossings) > cfg.max_crossings:
        raise SkeinBudgetError(
            f"{d.name}: {len(d.crossings)} crossings exceed the budget of {cfg.max_crossings}"
        )
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    cross, partner = _build_state(d, flavor)
    value = _evaluate(cross, partner, flavor, cfg.memo)
    return value.times_circles(len(d.free_loops), flavor)

def homfly(d: LinkDiagram, config: Optional[EvalConfig] = None) -> RingElem:
    """Framed oriented polynomial; empty diagram 1, crossingless circle delta."""
    return _run(d, ORIENTED, config).to_ring_elem()


def kauffman(d: LinkDiagram, config: Optional[EvalConfig] = None) -> RingElem:
    """Framed unoriented polynomial; same normalization, orientation ignored."""
    return _run(d, UNORIENTED, config).to_ring_elem()


def adjoint_homfly(d: LinkDiagram, config: Optional[EvalConfig] = None) -> RingElem:
    """Alternating sum over components of antiparallel double satellites.

    Every component is either deleted or replaced by a reversed parallel
    pair (2 copies, second reversed), with sign (-1)^(deleted count).
    The crossing budget applies to each term separately.
    """
    n = d.n_components
    total = RingElem.zero()
    for mask in range(1 << n):
        kept = [i for i in range(n) if mask & (1 << i)]
        sub = d
        for i in sorted(set(range(n)) - set(kept), reverse=True):
            sub = sub.delete_component(i)
        for pos in range(len(kept) - 1, -1, -1):
            sub = sub.cable(pos, 2)
            sub = sub.reverse_component(pos + 1)
        term = homfly(sub, config)
        if (n - len(kept)) % 2:
            total = total - term
        else:
            total = total + term
    return total


def skein_relation_probe(
    d: LinkDiagram,
    crossing: int,
    flavor: str = ORIENTED,
    config: Optional[EvalConfig] = None,
) -> dict:
    """Resolve one crossing both ways and check the defining relation."""
    cfg = config or DEFAULT_CONFIG
    if not 0 <= crossing < len(d.crossings):
        raise ValueError(f"crossing index {crossing} out of range")
    if len(d.crossings) > cfg.max_crossings:
        raise SkeinBudgetError(
            f"{d.name}: {len(d.crossings)} crossings exceed the budget of {cfg.max_crossings}"
        )
    loops = len(d.free_loops)
    if flavor == ORIENTED:
        cross, partner = _build_state(d, ORIENTED)
        here = _evaluate(dict(cross), dict(partner), ORIENTED, cfg.memo)
        sign = _sign_oriented(cross[crossing])
        sw_cross = dict(cross)
        u, o = sw_cross[crossing]
        sw_cross[crossing] = (o, u)
        switched = _evaluate(sw_cross, dict(partner), ORIENTED, cfg.memo)
        sm_cross = dict(cross)
        sm_partner = dict(partner)
        freed = _excise(sm_cross, sm_partner, {crossing}, _smooth_oriented_through(crossing, (u, o)))
        smoothed = _evaluate(sm_cross, sm_partner, ORIENTED, cfg.memo).times_circles(freed, ORIENTED)
        residual = here - switched - (smoothed.times_z() if sign > 0 else smoothed.times_z().negate())
        return {
            "flavor": ORIENTED,
            "sign": sign,
            "value": here.times_circles(loops, ORIENTED).to_ring_elem(),
            "switched": switched.times_circles(loops, ORIENTED).to_ring_elem(),
            "smoothed": smoothed.times_circles(loops, ORIENTED).to_ring_elem(),
            "holds": residual.to_ring_elem().is_zero(),
        }
    cross, partner = _build_state(d, UNORIENTED)
    here = _evaluate(dict(cross), dict(partner), UNORIENTED, cfg.memo)
    parity = cross[crossing]
    sw_cross = dict(cross)
    sw_cross[crossing] = parity ^ 1
    switched = _evaluate(sw_cross, dict(partner), UNORIENTED, cfg.memo)
    plus_cross, plus_partner = dict(cross), dict(partner)
    freed = _excise(plus_cross, plus_partner, {crossing}, _smooth_unoriented_through(crossing, parity, True))
    plus_val = _evaluate(plus_cross, plus_partner, UNORIENTED, cfg.memo).times_circles(freed, UNORIENTED)
    minus_cross, minus_partner = dict(cross), dict(partner)
    freed = _excise(minus_cross, minus_partner, {crossing}, _smooth_unoriented_through(crossing, parity, False))
    minus_val = _evaluate(minus_cross, minus_partner, UNORIENTED, cfg.memo).times_circles(freed, UNORIENTED)
    residual = here - switched - (plus_val - minus_val).times_z()
    return {
        "flavor": UNORIENTED,
        "value": here.times_circles(loops, UNORIENTED).to_ring_elem(),
        "switched": switched.times_circles(loops, UNORIENTED).to_ring_elem(),
        "smoothed_plus": plus_val.times_circles(loops, UNORIENTED).to_ring_elem(),
        "smoothed_minus": minus_val.times_circles(loops, UNORIENTED).to_ring_elem(),
        "holds": residual.to_ring_elem().is_zero(),
    }
