"""Skein-recursion engine for the Conway, Jones and HOMFLY polynomials, a
Kauffman-bracket state sum used as an independent Jones oracle, HOMFLY
specializations and a mirror-image test.

The engine evaluates a diagram by walking each component from a basepoint
and looking for the first crossing met on its under strand.  Switching that
crossing and smoothing it gives two diagrams that are strictly simpler (one
fewer bad crossing, or one fewer crossing), and the three-term relation
ties their values back to the original.  A diagram with no bad crossing is
descending, hence an unlink.
"""

from __future__ import annotations

import enum
import os
import threading
from collections import Counter
from dataclasses import dataclass
from functools import reduce

from .braid import BraidWord, fibrability_report, permutation_and_components
from .diagram import (
    DiagramError,
    LinkDiagram,
    canonical_code,
    closure_to_diagram,
    mirror,
    resolve_crossing,
    simplify,
    split_pieces,
    writhe,
)
from .laurent import LaurentPoly, normalize_units
from .seifert import (
    SeifertError,
    alexander_from_burau,
    euler_genus,
    genus_lower_bound,
    seifert_circles,
    surface_from_braid,
)

__all__ = [
    "SkeinTemplate",
    "CONWAY",
    "JONES",
    "HOMFLY",
    "skein_evaluate",
    "clear_memo",
    "memo_size",
    "kauffman_bracket_jones",
    "specialize_homfly",
    "conway_to_alexander",
    "Chirality",
    "detect_chirality",
    "invariant_bundle",
]

MEMO_CAP_ENV = "SEIFERTKIT_MEMO_MAX_CROSSINGS"
KAUFFMAN_CAP_ENV = "SEIFERTKIT_KAUFFMAN_MAX_CROSSINGS"
DEFAULT_MEMO_CAP = 40
DEFAULT_KAUFFMAN_CAP = 20


@dataclass(frozen=True)
class SkeinTemplate:
    """Relation ``c_plus*P(K+) + c_minus*P(K-) = c_zero*P(K0)`` with ``P(unknot) = unknot``.

    ``mu`` multiplies the value each time a split unknotted component is added.
    ``c_plus`` and ``c_minus`` must be units.
    """

    name: str
    variables: tuple[str, ...]
    c_plus: LaurentPoly
    c_minus: LaurentPoly
    c_zero: LaurentPoly
    unknot: LaurentPoly
    mu: LaurentPoly

    def __post_init__(self):
        if not (self.c_plus.is_unit() and self.c_minus.is_unit()):
            raise ValueError(f"{self.name}: crossing coefficients must be units")


def _conway() -> SkeinTemplate:
    v = ("w",)
    w = LaurentPoly.var("w")
    one = LaurentPoly.constant(1, v)
    return SkeinTemplate("CONWAY", v, one, -one, w, one, LaurentPoly({}, v))


def _jones() -> SkeinTemplate:
    v = ("t",)
    t = LaurentPoly.var("t")
    root = LaurentPoly({(1,): 1}, v)  # t^(1/2)
    return SkeinTemplate(
        "JONES", v, t ** -1, -t, root - root ** -1, LaurentPoly.constant(1, v), -(root + root ** -1)
    )


def _homfly() -> SkeinTemplate:
    v = ("a", "w")
    a = LaurentPoly.var("a", v)
    w = LaurentPoly.var("w", v)
    return SkeinTemplate(
        "HOMFLY", v, a, -(a ** -1), w, LaurentPoly.constant(1, v), (a - a ** -1) * w ** -1
    )


CONWAY = _conway()
JONES = _jones()
HOMFLY = _homfly()


# memo table ------------------------------------------------------------------

_memo: dict[tuple[str, str], LaurentPoly] = {}
_memo_lock = threading.Lock()


def _memo_cap() -> int:
    raw = os.environ.get(MEMO_CAP_ENV)
    if raw is None:
        return DEFAULT_MEMO_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MEMO_CAP_ENV} must be an integer, got {raw!r}") from None


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()


def memo_size() -> int:
    with _memo_lock:
        return len(_memo)


# recursion ---------------------------------------------------------------------

def _first_bad_crossing(d: LinkDiagram) -> int | None:
    """Index of the first crossing reached along its under strand, or None if descending.

    Components are taken in order of their smallest arc label, each from that label.
    """
    head = {}
    for i, x in enumerate(d.crossings):
        for p in x.ins():
            head[x.arcs[p]] = (i, p)
    seen = set()
    for comp in d.arc_components():
        for arc in comp:
            i, p = head[arc]
            if i in seen:
                continue
            seen.add(i)
            if p == 0:
                return i
    return None


class _Evaluator:
    def __init__(self, tpl: SkeinTemplate, use_memo: bool):
        self.tpl = tpl
        self.use_memo = use_memo
        self.cap = _memo_cap()
        self.local: dict[str, LaurentPoly] = {}
        self.inv_plus = tpl.c_plus.inverse_unit()
        self.inv_minus = tpl.c_minus.inverse_unit()

    def value(self, d: LinkDiagram) -> LaurentPoly:
        d = simplify(d)
        pieces = split_pieces(d)
        if not pieces:
            raise DiagramError("empty diagram has no skein value")
        vals = [self.piece(p) for p in pieces]
        out = reduce(lambda x, y: x * y, vals)
        if len(pieces) > 1:
            out = out * self.tpl.mu ** (len(pieces) - 1)
        return out

    def piece(self, d: LinkDiagram) -> LaurentPoly:
        if not d.crossings:
            return self.tpl.unknot
        key = canonical_code(d)
        shared = self.use_memo and len(d.crossings) <= self.cap
        if shared:
            with _memo_lock:
                hit = _memo.get((self.tpl.name, key))
            if hit is not None:
                return hit
        elif key in self.local:
            return self.local[key]
        val = self.expand(d)
        if shared:
            with _memo_lock:
                _memo[(self.tpl.name, key)] = val
        else:
            self.local[key] = val
        return val

    def expand(self, d: LinkDiagram) -> LaurentPoly:
        tpl = self.tpl
        bad = _first_bad_crossing(d)
        if bad is None:
            return tpl.unknot * tpl.mu ** (d.components - 1)
        switched = self.value(resolve_crossing(d, bad, "switch"))
        smoothed = self.value(resolve_crossing(d, bad, "smooth_oriented"))
        if d.crossings[bad].sign > 0:
            return (tpl.c_zero * smoothed - tpl.c_minus * switched) * self.inv_plus
        return (tpl.c_zero * smoothed - tpl.c_plus * switched) * self.inv_minus


def skein_evaluate(d: LinkDiagram, tpl: SkeinTemplate, *, memo: bool = True) -> LaurentPoly:
    """Skein polynomial of ``d`` under template ``tpl``.

    With ``memo=False`` nothing is read from or written to the shared table;
    a private per-call table still avoids re-expanding repeated subdiagrams.
    """
    if not d.crossings and d.loops == 0:
        raise DiagramError("empty diagram has no skein value")
    return _Evaluator(tpl, memo).value(d)


# Kauffman bracket ----------------------------------------------------------------

def _kauffman_cap() -> int:
    raw = os.environ.get(KAUFFMAN_CAP_ENV)
    try:
        return int(raw) if raw is not None else DEFAULT_KAUFFMAN_CAP
    except ValueError:
        raise ValueError(f"{KAUFFMAN_CAP_ENV} must be an integer, got {raw!r}") from None


def _count_loops(arcs: list[int], joins: list[tuple[int, int]]) -> int:
    parent = {a: a for a in arcs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in joins:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
    return sum(1 for a in arcs if find(a) == a)


def kauffman_bracket_jones(d: LinkDiagram, max_crossings: int | None = None) -> LaurentPoly:
    """Jones polynomial from the 2^c-state bracket sum.

    The A-smoothing joins arcs (a, b) and (c, d); the B-smoothing joins
    (a, d) and (b, c).  ``V = (-A^3)^(-writhe) <D>`` with ``t = A^-4``.
    """
    cap = _kauffman_cap() if max_crossings is None else max_crossings
    c = len(d.crossings)
    if c > cap:
        raise ValueError(f"Kauffman state sum limited to {cap} crossings, diagram has {c}")
    arcs = d.arcs
    states: Counter[tuple[int, int]] = Counter()  # (#A - #B, loops) -> count
    for mask in range(1 << c):
        joins = []
        n_a = 0
        for i, x in enumerate(d.crossings):
            if mask >> i & 1:
                joins.append((x.a, x.b))
                joins.append((x.c, x.d))
                n_a += 1
            else:
                joins.append((x.a, x.d))
                joins.append((x.b, x.c))
        loops = _count_loops(arcs, joins) + d.loops
        states[(2 * n_a - c, loops)] += 1
    # bracket as a polynomial in A (integer exponents); delta = -A^2 - A^-2
    A = LaurentPoly.var("A")
    delta = -(A ** 2) - A ** -2
    bracket = LaurentPoly({}, ("A",))
    for (k, loops), n in states.items():
        bracket = bracket + (A ** k) * (delta ** (loops - 1)) * n
    wr = writhe(d)
    poly_a = bracket * (-(A ** 3)) ** (-wr)
    out: dict[tuple[int], int] = {}
    for (e,), coeff in poly_a.items():
        k = e // 2  # power of A
        if k % 2:
            raise ArithmeticError(f"odd power A^{k} in normalized bracket")
        # A^k = t^(-k/4), i.e. doubled t exponent -k/2
        out[(-k // 2,)] = coeff
    return LaurentPoly(out, ("t",))


# specializations ------------------------------------------------------------------

def specialize_homfly(P: LaurentPoly, target: str) -> LaurentPoly:
    """Conway (``a = 1``) or Jones (``a = t^-1``, ``w = t^(1/2) - t^(-1/2)``) from a HOMFLY value."""
    if P.variables != ("a", "w"):
        raise ValueError(f"expected a HOMFLY polynomial in (a, w), got variables {P.variables}")
    if target == "conway":
        w = LaurentPoly.var("w")
        return _substitute_w(P, {"a": 1}, w, ("w",))
    if target == "jones":
        t = LaurentPoly.var("t")
        root = LaurentPoly({(1,): 1}, ("t",))
        return _substitute_w(P, {"a": t ** -1}, root - root ** -1, ("t",))
    raise ValueError(f"unknown specialization target {target!r}")


def _substitute_w(P: LaurentPoly, values: dict, w_value: LaurentPoly, variables) -> LaurentPoly:
    """Substitute with a non-unit ``w`` value: clear negative ``w`` powers first, divide back exactly."""
    if P.is_zero():
        return LaurentPoly({}, variables)
    lowest = min(e[1] for e, _ in P.items())
    if lowest % 2:
        raise ArithmeticError("half-integer power of w cannot be specialized")
    m = max(0, -lowest // 2)
    cleared = P.shift(0, m)
    vals = dict(values)
    vals["w"] = w_value
    out = cleared.substitute(vals, variables)
    if m:
        try:
            out = out.exact_div(w_value ** m)
        except ArithmeticError as exc:
            raise ArithmeticError("specialization leaves non-Laurent terms: convention mismatch") from exc
    return out


def conway_to_alexander(conway: LaurentPoly) -> LaurentPoly:
    """Substitute ``w = t^(1/2) - t^(-1/2)`` and normalize units (zero stays zero)."""
    root = LaurentPoly({(1,): 1}, ("t",))
    out = conway.substitute({"w": root - root ** -1}, ("t",))
    return out if out.is_zero() else normalize_units(out)


# chirality ------------------------------------------------------------------------

class Chirality(str, enum.Enum):
    CHIRAL_EVIDENCE = "chiral_evidence"
    INCONCLUSIVE = "inconclusive"


def detect_chirality(d: LinkDiagram) -> Chirality:
    """Different Jones values for a diagram and its mirror prove chirality; equality proves nothing."""
    if skein_evaluate(d, JONES) != skein_evaluate(mirror(d), JONES):
        return Chirality.CHIRAL_EVIDENCE
    return Chirality.INCONCLUSIVE


# bundle ---------------------------------------------------------------------------

def invariant_bundle(*, braid: BraidWord | None = None, diagram: LinkDiagram | None = None) -> dict:
    """All polynomial invariants plus genus and fibrability data, JSON-ready.

    With a braid the Alexander polynomial comes from the Burau matrix and the
    genus from the braid surface; a bare diagram gets Alexander from Conway
    and genus from its Seifert circles, and no fibrability verdict.
    """
    if (braid is None) == (diagram is None):
        raise ValueError("give exactly one of braid or diagram")
    d = closure_to_diagram(braid) if braid is not None else diagram
    conway = skein_evaluate(d, CONWAY)
    jones = skein_evaluate(d, JONES)
    homfly = skein_evaluate(d, HOMFLY)
    if braid is not None:
        alexander = alexander_from_burau(braid)
        _, mu = permutation_and_components(braid)
    else:
        alexander = conway_to_alexander(conway)
        mu = d.components
    genus: dict = {"lower_bound": None}
    if not alexander.is_zero():
        genus["lower_bound"] = str(genus_lower_bound(alexander))
    try:
        if braid is not None:
            surf = surface_from_braid(braid, with_matrix=False).to_dict()
            surf.pop("matrix")
        else:
            s, c = seifert_circles(d), len(d.crossings)
            chi, g = euler_genus(s, c, mu)
            surf = {"s": s, "c": c, "mu": mu, "chi": chi, "g": g}
        genus.update(surf)
    except SeifertError as exc:
        genus["error"] = str(exc)
    fib = None
    homogeneous = None
    if braid is not None and mu == 1:
        rep = fibrability_report(braid)
        fib = rep.verdict.value
        homogeneous = rep.homogeneous
    chir = detect_chirality(d).value if mu == 1 else None
    return {
        "alexander": str(alexander),
        "conway": str(conway),
        "jones": str(jones),
        "homfly": str(homfly),
        "chirality": chir,
        "components": mu,
        "writhe": writhe(d),
        "genus": genus,
        "homogeneous": homogeneous,
        "fibrability": fib,
    }
