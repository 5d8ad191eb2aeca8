"""Oriented planar link diagrams in PD form.

Arc-ordering convention.  A crossing is ``(a, b, c, d, sign)``: ``a`` is the
incoming under-arc and ``b, c, d`` follow counterclockwise, so the under
strand runs ``a -> c``.  The over strand runs ``d -> b`` on a positive
crossing and ``b -> d`` on a negative one (right-hand rule).  Crossing-free
unknotted components are not stored as arcs; ``loops`` counts them.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .braid import BraidWord

__all__ = [
    "DiagramError",
    "Crossing",
    "LinkDiagram",
    "closure_to_diagram",
    "writhe",
    "resolve_crossing",
    "reidemeister_rewrite",
    "mirror",
    "canonical_code",
    "faces",
    "simplify",
    "split_pieces",
]

UNKNOT_CODE = "O"


class DiagramError(ValueError):
    pass


class Crossing(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def arcs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def over_in(self) -> int:
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self) -> int:
        return self.b if self.sign > 0 else self.d

    def ins(self) -> tuple[int, int]:
        """Positions (0..3) of the incoming arcs."""
        return (0, 3) if self.sign > 0 else (0, 1)

    def outs(self) -> tuple[int, int]:
        return (2, 1) if self.sign > 0 else (2, 3)

    def partner(self, pos: int) -> int:
        """Position of the arc continuing the strand through ``pos``."""
        return (pos + 2) % 4

    def relabel(self, f) -> "Crossing":
        return Crossing(f(self.a), f(self.b), f(self.c), f(self.d), self.sign)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    loops: int = 0
    _succ: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        cr = tuple(Crossing(*c) if not isinstance(c, Crossing) else c for c in self.crossings)
        object.__setattr__(self, "crossings", cr)
        if self.loops < 0:
            raise DiagramError("negative loop count")
        ins: dict[int, tuple[int, int]] = {}
        outs: dict[int, tuple[int, int]] = {}
        for idx, x in enumerate(cr):
            if x.sign not in (1, -1):
                raise DiagramError(f"crossing {idx} has sign {x.sign}")
            for p in x.ins():
                arc = x.arcs[p]
                if arc in ins:
                    raise DiagramError(f"arc {arc} enters two crossings")
                ins[arc] = (idx, p)
            for p in x.outs():
                arc = x.arcs[p]
                if arc in outs:
                    raise DiagramError(f"arc {arc} leaves two crossings")
                outs[arc] = (idx, p)
        if set(ins) != set(outs):
            bad = sorted(set(ins) ^ set(outs))
            raise DiagramError(f"arcs {bad} do not appear exactly once as incoming and once as outgoing")
        # successor of an arc: the outgoing arc of the strand it enters
        succ = {}
        for arc, (idx, p) in ins.items():
            succ[arc] = cr[idx].arcs[(p + 2) % 4]
        object.__setattr__(self, "_succ", succ)

    # structure --------------------------------------------------------------

    @property
    def arcs(self) -> list[int]:
        return sorted(self._succ)

    def successor(self, arc: int) -> int:
        return self._succ[arc]

    def head(self, arc: int) -> tuple[int, int]:
        """(crossing index, position) where ``arc`` ends."""
        for idx, x in enumerate(self.crossings):
            for p in x.ins():
                if x.arcs[p] == arc:
                    return idx, p
        raise KeyError(arc)

    def arc_components(self) -> list[list[int]]:
        """Arc cycles in traversal order, each starting at its smallest label; sorted by that label."""
        seen = set()
        comps = []
        for start in sorted(self._succ):
            if start in seen:
                continue
            cyc = []
            x = start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self._succ[x]
            comps.append(cyc)
        return comps

    @property
    def components(self) -> int:
        return len(self.arc_components()) + self.loops

    def __len__(self) -> int:
        return len(self.crossings)

    # serialization ------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "crossings": [[x.a, x.b, x.c, x.d, "+" if x.sign > 0 else "-"] for x in self.crossings],
            "loops": self.loops,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LinkDiagram":
        crossings = []
        for row in obj.get("crossings", []):
            if len(row) != 5:
                raise DiagramError(f"crossing entry {row!r} must have four arcs and a sign")
            a, b, c, d, s = row
            if s in ("+", "+1", 1):
                sign = 1
            elif s in ("-", "-1", -1):
                sign = -1
            else:
                raise DiagramError(f"bad crossing sign {s!r}")
            crossings.append(Crossing(int(a), int(b), int(c), int(d), sign))
        return cls(tuple(crossings), int(obj.get("loops", 0)))

    @classmethod
    def from_json(cls, text: str) -> "LinkDiagram":
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def from_knot_table_pd(cls, pd: Sequence[Sequence[int]]) -> "LinkDiagram":
        """Import an unsigned table PD code (counterclockwise from the incoming under-arc).

        Each component is oriented by one of its under passes ``a -> c``, or
        by increasing labels when it never passes under.
        """
        pd = [tuple(int(v) for v in row) for row in pd]
        where: dict[int, list[tuple[int, int]]] = {}
        for i, row in enumerate(pd):
            for p, arc in enumerate(row):
                where.setdefault(arc, []).append((i, p))
        for arc, occ in where.items():
            if len(occ) != 2:
                raise DiagramError(f"arc {arc} appears {len(occ)} times")
        direction: dict[tuple[int, int], bool] = {}  # (crossing, pass) -> runs from low to high position
        done = set()
        for start in sorted(where):
            if start in done:
                continue
            # walk the component: leave each crossing through the partner position
            walk = []
            i, p = where[start][0]
            arc = start
            while True:
                done.add(arc)
                q = (p + 2) % 4
                walk.append((i, p, q))
                arc = pd[i][q]
                e1, e2 = where[arc]
                i, p = e2 if e1 == (i, q) else e1
                if arc == start and (i, p) == where[start][0]:
                    break
                if len(walk) > 4 * len(pd):
                    raise DiagramError("could not trace component")
            # walk enters crossing i at position p and leaves at q
            flip = None
            for i, p, q in walk:
                if p in (0, 2):
                    flip = p == 2
                    break
            if flip is None:
                flip = pd[walk[0][0]][walk[0][1]] > pd[walk[1][0]][walk[1][1]] if len(walk) > 1 else False
            for i, p, q in walk:
                enter = q if flip else p
                direction[(i, enter % 2)] = enter
        crossings = []
        for i, (a, b, c, d) in enumerate(pd):
            if direction.get((i, 0)) != 0:
                raise DiagramError(f"under strand of crossing {i} runs against the PD convention")
            sign = 1 if direction[(i, 1)] == 3 else -1
            crossings.append(Crossing(a, b, c, d, sign))
        return cls(tuple(crossings))


# construction -----------------------------------------------------------------

def closure_to_diagram(w: BraidWord) -> LinkDiagram:
    """Closed-braid diagram; letter ``k`` gives a crossing of sign ``sign(k)``.

    Strands run downward; on ``sigma_i`` the strand entering from position
    ``i+1`` passes over.
    """
    n = w.strands
    top = list(range(n))
    cur = list(top)
    nxt = n
    crossings = []
    for k in w.letters:
        i = abs(k) - 1
        left_in, right_in = cur[i], cur[i + 1]
        left_out, right_out = nxt, nxt + 1  # arcs leaving at positions i, i+1
        nxt += 2
        if k > 0:
            # under: left_in (NW) -> SE; over: right_in (NE) -> SW
            crossings.append(Crossing(left_in, left_out, right_out, right_in, 1))
        else:
            # under: right_in (NE) -> SW; over: left_in (NW) -> SE
            crossings.append(Crossing(right_in, left_in, left_out, right_out, -1))
        cur[i], cur[i + 1] = left_out, right_out
    # close up: identify the bottom arc at each position with the top arc
    ident = {cur[p]: top[p] for p in range(n)}
    # a strand that never crosses stays at its position: a free unknotted component
    loops = sum(1 for p in range(n) if cur[p] == top[p])
    f = lambda a: ident.get(a, a)
    crossings = [x.relabel(f) for x in crossings]
    return _compact(LinkDiagram(tuple(crossings), loops))


def _compact(d: LinkDiagram) -> LinkDiagram:
    """Relabel arcs 0..2c-1 in first-appearance order."""
    mapping: dict[int, int] = {}
    for x in d.crossings:
        for a in x.arcs:
            if a not in mapping:
                mapping[a] = len(mapping)
    return LinkDiagram(tuple(x.relabel(mapping.__getitem__) for x in d.crossings), d.loops)


def writhe(d: LinkDiagram) -> int:
    return sum(x.sign for x in d.crossings)


# arc surgery ------------------------------------------------------------------

class _UnionFind:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _excise(d: LinkDiagram, remove: Iterable[int], joins: Iterable[tuple[int, int]],
            extra: Sequence[Crossing] = ()) -> LinkDiagram:
    """Drop crossings, merge arc pairs and add new crossings; closed arc classes become loops."""
    remove = set(remove)
    uf = _UnionFind()
    touched = set()
    for x, y in joins:
        uf.union(x, y)
        touched.update((x, y))
    for idx in remove:
        touched.update(d.crossings[idx].arcs)
    kept = [x.relabel(uf.find) for i, x in enumerate(d.crossings) if i not in remove]
    kept.extend(x.relabel(uf.find) for x in extra)
    present = set()
    for x in kept:
        present.update(x.arcs)
    new_loops = len({uf.find(a) for a in touched} - present)
    return LinkDiagram(tuple(kept), d.loops + new_loops)


def _switch(x: Crossing) -> Crossing:
    if x.sign > 0:
        return Crossing(x.d, x.a, x.b, x.c, -1)
    return Crossing(x.b, x.c, x.d, x.a, 1)


def _smoothing_joins(x: Crossing) -> tuple[tuple[int, int], tuple[int, int]]:
    """Arc pairs joined by the orientation-respecting smoothing."""
    if x.sign > 0:
        return (x.a, x.b), (x.d, x.c)
    return (x.a, x.d), (x.b, x.c)


def resolve_crossing(d: LinkDiagram, c: int, mode: str) -> LinkDiagram:
    """``switch`` flips over/under; ``smooth_oriented`` replaces the crossing by the oriented smoothing."""
    if not 0 <= c < len(d.crossings):
        raise DiagramError(f"no crossing {c} (diagram has {len(d.crossings)})")
    if mode == "switch":
        cr = list(d.crossings)
        cr[c] = _switch(cr[c])
        return LinkDiagram(tuple(cr), d.loops)
    if mode == "smooth_oriented":
        return _excise(d, [c], _smoothing_joins(d.crossings[c]))
    raise DiagramError(f"unknown resolution mode {mode!r}")


def mirror(d: LinkDiagram) -> LinkDiagram:
    return LinkDiagram(tuple(_switch(x) for x in d.crossings), d.loops)


# faces --------------------------------------------------------------------------

def faces(d: LinkDiagram) -> list[list[tuple[int, int]]]:
    """Faces as cycles of ``(crossing, position)`` corners, each face on the left of the walk.

    Entry ``(i, p)`` means the walk leaves crossing ``i`` along the arc at
    position ``p``.
    """
    where: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(d.crossings):
        for p, a in enumerate(x.arcs):
            where.setdefault(a, []).append((i, p))

    def other_end(i, p):
        a = d.crossings[i].arcs[p]
        e1, e2 = where[a]
        return e2 if e1 == (i, p) else e1

    seen = set()
    out = []
    for i in range(len(d.crossings)):
        for p in range(4):
            if (i, p) in seen:
                continue
            face = []
            cur = (i, p)
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                j, q = other_end(*cur)
                cur = (j, (q - 1) % 4)
            out.append(face)
    return out


def is_planar(d: LinkDiagram) -> bool:
    """Euler-characteristic check, one sphere per connected piece."""
    pieces = split_pieces(d)
    nontrivial = [p for p in pieces if p.crossings]
    if not nontrivial:
        return True
    total_faces = len(faces(d))
    c = len(d.crossings)
    # each connected piece on its own sphere contributes c_i + 2 faces
    return total_faces == c + 2 * len(nontrivial)


# Reidemeister moves ---------------------------------------------------------------

def _fresh(d: LinkDiagram, k: int) -> list[int]:
    start = max((a for x in d.crossings for a in x.arcs), default=-1) + 1
    return list(range(start, start + k))


def _r1_add(d: LinkDiagram, sign: int, arc: int | None) -> LinkDiagram:
    if sign not in (1, -1):
        raise DiagramError("R1 sign must be +1 or -1")
    if not d.crossings:
        if d.loops < 1:
            raise DiagramError("R1_add needs a component to twist")
        x, loop = 0, 1
        new = Crossing(x, x, loop, loop, 1) if sign > 0 else Crossing(x, loop, loop, x, -1)
        return LinkDiagram((new,), d.loops - 1)
    if arc is None:
        arc = min(d.arcs)
    if arc not in d.arcs:
        raise DiagramError(f"no arc {arc}")
    x2, loop = _fresh(d, 2)
    # arc now ends at the kink; x2 continues to the old head
    cr = []
    for x in d.crossings:
        arcs = list(x.arcs)
        for p in x.ins():
            if arcs[p] == arc:
                arcs[p] = x2
        cr.append(Crossing(*arcs, x.sign))
    kink = Crossing(arc, x2, loop, loop, 1) if sign > 0 else Crossing(arc, loop, loop, x2, -1)
    cr.append(kink)
    return LinkDiagram(tuple(cr), d.loops)


def _find_kinks(d: LinkDiagram) -> list[int]:
    out = []
    for i, x in enumerate(d.crossings):
        a = x.arcs
        if any(a[p] == a[(p + 1) % 4] for p in range(4)):
            out.append(i)
    return out


def _r1_remove(d: LinkDiagram, site: int | None) -> LinkDiagram:
    kinks = _find_kinks(d)
    if site is None:
        if not kinks:
            raise DiagramError("no R1 kink in diagram")
        site = kinks[0]
    if site not in kinks:
        raise DiagramError(f"crossing {site} is not an R1 kink")
    x = d.crossings[site]
    a = x.arcs
    for p in range(4):
        if a[p] == a[(p + 1) % 4]:
            loop = a[p]
            others = [a[(p + 2) % 4], a[(p + 3) % 4]]
            break
    return _excise(d, [site], [(others[0], others[1]), (loop, others[0])])


def _bigons(d: LinkDiagram) -> list[tuple[int, int]]:
    """Pairs of crossings bounding a two-sided face where one strand is over at both."""
    out = []
    for f in faces(d):
        if len(f) != 2:
            continue
        (i, p), (j, q) = f
        if i == j:
            continue
        # side leaving i at p arrives at j at q + 1; it must keep its level
        if p % 2 == (q + 1) % 2:
            out.append((min(i, j), max(i, j)))
    return sorted(set(out))


def _r2_remove(d: LinkDiagram, site: tuple[int, int] | None) -> LinkDiagram:
    bigons = _bigons(d)
    if site is None:
        if not bigons:
            raise DiagramError("no R2 bigon in diagram")
        site = bigons[0]
    site = (min(site), max(site))
    if site not in bigons:
        raise DiagramError(f"crossings {site} do not bound an R2 bigon")
    i, j = site
    xi, xj = d.crossings[i], d.crossings[j]
    joins = []
    # each strand passes i then j or j then i; join its four arcs end to end
    for x in (xi, xj):
        joins.append((x.a, x.c))
        joins.append((x.b, x.d))
    return _excise(d, [i, j], joins)


def _r2_add(d: LinkDiagram, site: tuple[int, int, int]) -> LinkDiagram:
    """Push arc ``e1`` over arc ``e2`` across face ``f``: ``site = (face index, e1, e2)``."""
    fi, e1, e2 = site
    fl = faces(d)
    if not 0 <= fi < len(fl):
        raise DiagramError(f"no face {fi}")
    face = fl[fi]
    walk = {}
    for i, p in face:
        x = d.crossings[i]
        arc = x.arcs[p]
        # leaving crossing i along arc: along orientation iff p is an outgoing position
        walk.setdefault(arc, p in x.outs())
    if e1 == e2 or e1 not in walk or e2 not in walk:
        raise DiagramError(f"arcs {e1}, {e2} are not two distinct sides of face {fi}")
    p1, m1, q1, p2, m2, q2 = e1, *_fresh(d, 5)
    # e1 splits into p1 -> m1 -> q1, e2 into p2 -> m2 -> q2 (in orientation order)
    p2 = e2
    cr = []
    for x in d.crossings:
        arcs = list(x.arcs)
        for p in x.ins():
            if arcs[p] == e1:
                arcs[p] = q1
            elif arcs[p] == e2:
                arcs[p] = q2
        cr.append(Crossing(*arcs, x.sign))
    e1_east = not walk[e1]  # face-on-left walk along e1 points west
    e2_east = walk[e2]  # face-on-left walk along e2 points east
    if e1_east and e2_east:
        new = [Crossing(p2, m1, m2, p1, 1), Crossing(m2, m1, q2, q1, -1)]
    elif e1_east:
        new = [Crossing(m2, p1, q2, m1, -1), Crossing(p2, q1, m2, m1, 1)]
    elif e2_east:
        new = [Crossing(p2, m1, m2, q1, -1), Crossing(m2, m1, q2, p1, 1)]
    else:
        new = [Crossing(p2, p1, m2, m1, -1), Crossing(m2, q1, q2, m1, 1)]
    out = LinkDiagram(tuple(cr) + tuple(new), d.loops)
    if not is_planar(out):
        raise DiagramError("R2 site does not produce a planar diagram")
    return out


def _r3_sites(d: LinkDiagram) -> list[int]:
    out = []
    for fi, f in enumerate(faces(d)):
        if len(f) != 3 or len({i for i, _ in f}) != 3:
            continue
        if _r3_plan(d, f) is not None:
            out.append(fi)
    return out


def _r3_plan(d: LinkDiagram, face):
    """Label substitutions for an R3 move on a triangular face, or None when not applicable."""
    idxs = [i for i, _ in face]
    # side arcs of the triangle
    sides = [d.crossings[i].arcs[p] for i, p in face]
    if len(set(sides)) != 3:
        return None
    strands = []  # per side: (first crossing, second crossing, in arc, side arc, out arc, over flags)
    overs = {}
    for s in sides:
        ends = [(i, p) for i in idxs for p in range(4) if d.crossings[i].arcs[p] == s]
        if len(ends) != 2:
            return None
        (i1, q1), (i2, q2) = ends
        x1 = d.crossings[i1]
        if q1 in x1.outs():
            first, qf, second, qs = i1, q1, i2, q2
        else:
            first, qf, second, qs = i2, q2, i1, q1
        xf, xs = d.crossings[first], d.crossings[second]
        in_arc = xf.arcs[(qf + 2) % 4]
        out_arc = xs.arcs[(qs + 2) % 4]
        strands.append((first, second, in_arc, s, out_arc))
        for i, q in ((first, qf), (second, qs)):
            overs.setdefault(s, []).append(q % 2 == 1)
    labels = [a for st in strands for a in st[2:]]
    if len(set(labels)) != 9:
        return None
    over_counts = [sum(v) for v in overs.values()]
    if sorted(over_counts) == [1, 1, 1]:
        return None
    subs: dict[int, dict[int, int]] = {i: {} for i in idxs}
    for first, second, in_arc, s, out_arc in strands:
        subs[first].update({in_arc: s, s: out_arc})
        subs[second].update({s: in_arc, out_arc: s})
    return subs


def _r3(d: LinkDiagram, site: int | None) -> LinkDiagram:
    sites = _r3_sites(d)
    if site is None:
        if not sites:
            raise DiagramError("no R3 triangle in diagram")
        site = sites[0]
    if site not in sites:
        raise DiagramError(f"face {site} is not an R3 triangle")
    subs = _r3_plan(d, faces(d)[site])
    cr = list(d.crossings)
    for i, m in subs.items():
        cr[i] = cr[i].relabel(lambda a, m=m: m.get(a, a))
    out = LinkDiagram(tuple(cr), d.loops)
    if not is_planar(out):
        raise DiagramError("R3 rewrite broke planarity")
    return out


def reidemeister_sites(d: LinkDiagram, move: str) -> list:
    if move == "R1_remove":
        return _find_kinks(d)
    if move == "R2_remove":
        return _bigons(d)
    if move == "R3":
        return _r3_sites(d)
    if move == "R1_add":
        return d.arcs if d.crossings else ([None] if d.loops else [])
    if move == "R2_add":
        out = []
        for fi, f in enumerate(faces(d)):
            arcs = []
            for i, p in f:
                a = d.crossings[i].arcs[p]
                if a not in arcs:
                    arcs.append(a)
            out.extend((fi, x, y) for x in arcs for y in arcs if x != y)
        return out
    raise DiagramError(f"unknown Reidemeister move {move!r}")


def reidemeister_rewrite(d: LinkDiagram, move: str, site=None, sign: int = 1) -> LinkDiagram:
    """Apply a Reidemeister move.

    ``site`` is an arc for ``R1_add``, a crossing index for ``R1_remove``, a
    crossing pair for ``R2_remove``, ``(face, over_arc, under_arc)`` for
    ``R2_add`` and a triangular face index for ``R3``.  ``None`` picks the
    first applicable site where that makes sense.
    """
    if move == "R1_add":
        return _r1_add(d, sign, site)
    if move == "R1_remove":
        return _r1_remove(d, site)
    if move == "R2_add":
        if site is None:
            raise DiagramError("R2_add needs an explicit (face, over_arc, under_arc) site")
        return _r2_add(d, site)
    if move == "R2_remove":
        return _r2_remove(d, site)
    if move == "R3":
        return _r3(d, site)
    raise DiagramError(f"unknown Reidemeister move {move!r}")


def simplify(d: LinkDiagram) -> LinkDiagram:
    """Remove R1 kinks and R2 bigons until none remain."""
    while True:
        kinks = _find_kinks(d)
        if kinks:
            d = _r1_remove(d, kinks[0])
            continue
        bigons = _bigons(d)
        if bigons:
            d = _r2_remove(d, bigons[0])
            continue
        return d


# connected pieces and canonical codes ---------------------------------------------

def split_pieces(d: LinkDiagram) -> list[LinkDiagram]:
    """Connected pieces of the projection; each free loop is its own piece."""
    uf = _UnionFind()
    for i, x in enumerate(d.crossings):
        uf.find(i)
    where: dict[int, list[int]] = {}
    for i, x in enumerate(d.crossings):
        for a in x.arcs:
            where.setdefault(a, []).append(i)
    for idxs in where.values():
        for j in idxs[1:]:
            uf.union(idxs[0], j)
    groups: dict[int, list[Crossing]] = {}
    for i, x in enumerate(d.crossings):
        groups.setdefault(uf.find(i), []).append(x)
    pieces = [LinkDiagram(tuple(g)) for _, g in sorted(groups.items())]
    pieces.extend(LinkDiagram((), 1) for _ in range(d.loops))
    return pieces


def _piece_code(d: LinkDiagram) -> str:
    succ = d._succ
    at: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(d.crossings):
        for p, a in enumerate(x.arcs):
            at.setdefault(a, []).append((i, p))
    head = {}
    for i, x in enumerate(d.crossings):
        for p in x.ins():
            head[x.arcs[p]] = (i, p)
    best = None
    for start in succ:
        label: dict[int, int] = {}
        queue = deque([start])
        while queue:
            arc = queue.popleft()
            if arc in label:
                continue
            x = arc
            while x not in label:
                label[x] = len(label)
                i, p = head[x]
                arcs = d.crossings[i].arcs
                for r in range(1, 4):
                    y = arcs[(p + r) % 4]
                    if y not in label:
                        queue.append(y)
                x = succ[x]
        rows = sorted(
            (label[x.a], label[x.b], label[x.c], label[x.d], x.sign) for x in d.crossings
        )
        code = ";".join(f"{a},{b},{c},{e}{'+' if s > 0 else '-'}" for a, b, c, e, s in rows)
        if best is None or code < best:
            best = code
    return best


def canonical_code(d: LinkDiagram) -> str:
    """Relabeling-invariant string for the diagram; ``"O"`` is one crossing-free unknot."""
    codes = sorted(_piece_code(p) if p.crossings else UNKNOT_CODE for p in split_pieces(d))
    if not codes:
        return ""
    return "|".join(codes)
