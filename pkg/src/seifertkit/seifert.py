"""Seifert circles, Euler characteristic and genus, Seifert matrices of braid surfaces,
and the Alexander polynomial by two independent routes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, burau_reduced, permutation_and_components
from .diagram import LinkDiagram, closure_to_diagram
from .laurent import LaurentPoly, degree_span, normalize_units
from .matrices import det, identity

__all__ = [
    "SeifertError",
    "SeifertSurfaceData",
    "seifert_circles",
    "euler_genus",
    "seifert_matrix_from_braid",
    "alexander_from_seifert",
    "alexander_from_burau",
    "genus_lower_bound",
    "surface_from_braid",
]


class SeifertError(ValueError):
    pass


@dataclass(frozen=True)
class SeifertSurfaceData:
    circles: int
    crossings: int
    boundary_components: int
    euler: int
    genus: int
    matrix: tuple[tuple[int, ...], ...] | None = None

    def to_dict(self) -> dict:
        return {
            "s": self.circles,
            "c": self.crossings,
            "mu": self.boundary_components,
            "chi": self.euler,
            "g": self.genus,
            "matrix": [list(r) for r in self.matrix] if self.matrix is not None else None,
        }


def seifert_circles(d: LinkDiagram) -> int:
    """Loops left after the oriented smoothing of every crossing."""
    nxt: dict[int, int] = {}
    for x in d.crossings:
        if x.sign > 0:
            nxt[x.a], nxt[x.d] = x.b, x.c
        else:
            nxt[x.a], nxt[x.b] = x.d, x.c
    seen = set()
    circles = 0
    for start in nxt:
        if start in seen:
            continue
        circles += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = nxt[x]
    return circles + d.loops


def euler_genus(s: int, c: int, mu: int) -> tuple[int, int]:
    chi = s - c
    twice = 2 - mu - chi
    if twice % 2 or twice < 0:
        raise SeifertError(f"non-integral genus from s={s}, c={c}, mu={mu}; surface is disconnected")
    return chi, twice // 2


def _check_connected(w: BraidWord) -> None:
    present = {abs(k) for k in w.letters}
    missing = [i for i in range(1, w.strands) if i not in present]
    if missing:
        raise SeifertError(f"generator(s) {missing} missing: the braid surface is disconnected")


def seifert_matrix_from_braid(w: BraidWord) -> list[list[int]]:
    """Seifert matrix of the disks-and-bands surface of a braid closure.

    One generator per pair of consecutive same-index letters; it runs through
    those two bands and the two disks they join.
    """
    _check_connected(w)
    occ: dict[int, list[int]] = {}
    for pos, k in enumerate(w.letters):
        occ.setdefault(abs(k), []).append(pos)
    sign = [1 if k > 0 else -1 for k in w.letters]
    gens = []  # (index, start position, end position)
    for i in sorted(occ):
        ps = occ[i]
        gens.extend((i, ps[r], ps[r + 1]) for r in range(len(ps) - 1))
    m = len(gens)
    M = [[0] * m for _ in range(m)]
    for u, (i, s, e) in enumerate(gens):
        M[u][u] = -(sign[s] + sign[e]) // 2
        for v, (j, s2, e2) in enumerate(gens):
            if u == v:
                continue
            if i == j and s2 == e:
                # consecutive loops sharing the band at position e
                if sign[e] > 0:
                    M[u][v] = 1
                else:
                    M[v][u] = -1
            elif j == i + 1:
                if s < s2 < e < e2:
                    M[u][v] = -1
                elif s2 < s < e2 < e:
                    M[u][v] = 1
    return M


def alexander_from_seifert(M: list[list[int]]) -> LaurentPoly:
    n = len(M)
    if n == 0:
        return LaurentPoly.constant(1)
    t = LaurentPoly.var("t")
    mat = [[LaurentPoly.constant(M[i][j]) - t * M[j][i] for j in range(n)] for i in range(n)]
    delta = det(mat)
    if delta.is_zero():
        return delta
    return normalize_units(delta)


def alexander_from_burau(w: BraidWord) -> LaurentPoly:
    """``det(B(w) - I) (1 - t) / (1 - t^n)`` normalized; the division is exact."""
    n = w.strands
    if n == 1:
        return LaurentPoly.constant(1)
    t = LaurentPoly.var("t")
    B = burau_reduced(w)
    I = identity(n - 1)
    D = det([[B[i][j] - I[i][j] for j in range(n - 1)] for i in range(n - 1)])
    num = D * (1 - t)
    try:
        delta = num.exact_div(1 - t ** n)
    except ArithmeticError as exc:
        raise ArithmeticError(f"Burau determinant not divisible by (1 - t^{n}): convention bug") from exc
    if delta.is_zero():
        return delta
    return normalize_units(delta)


def genus_lower_bound(delta: LaurentPoly) -> Fraction:
    return degree_span(delta) / 2


def surface_from_braid(w: BraidWord, with_matrix: bool = True) -> SeifertSurfaceData:
    d = closure_to_diagram(w)
    s = seifert_circles(d)
    c = len(w.letters)
    _, mu = permutation_and_components(w)
    chi, g = euler_genus(s, c, mu)
    matrix = None
    if with_matrix:
        matrix = tuple(tuple(r) for r in seifert_matrix_from_braid(w))
    return SeifertSurfaceData(s, c, mu, chi, g, matrix)
