"""Shared helpers for the test suite: random braid words and random isotopy moves."""

from __future__ import annotations

import random
from dataclasses import dataclass

from hypothesis import strategies as st

from seifertkit.braid import BraidError, BraidWord, braid_relation_rewrite, free_reduce, markov_move
from seifertkit.diagram import DiagramError, LinkDiagram, closure_to_diagram, reidemeister_rewrite
from seifertkit.diagram import reidemeister_sites


def random_word(rng: random.Random, max_strands: int = 4, max_len: int = 10, min_len: int = 0) -> BraidWord:
    n = rng.randint(2, max_strands)
    length = rng.randint(min_len, max_len)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


@st.composite
def braid_words(draw, max_strands: int = 4, max_len: int = 10, min_len: int = 0):
    n = draw(st.integers(2, max_strands))
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
                            min_size=min_len, max_size=max_len))
    return BraidWord(n, tuple(letters))


@dataclass
class Perturbed:
    word: BraidWord | None  # None once a diagram-level move has been applied
    diagram: LinkDiagram
    writhe_shift: int
    moves: list[str]


def _braid_moves(w: BraidWord, rng: random.Random):
    """Candidate (label, new word, writhe change) braid relations and Markov moves."""
    L = w.letters
    out = []
    for p in range(len(L) - 1):
        try:
            out.append((f"far_commute@{p}", braid_relation_rewrite(w, p, "far_commute"), 0))
        except BraidError:
            pass
    for p in range(len(L) - 2):
        try:
            out.append((f"yang_baxter@{p}", braid_relation_rewrite(w, p, "yang_baxter"), 0))
        except BraidError:
            pass
    if w.strands > 1:
        g = rng.choice((1, -1)) * rng.randint(1, w.strands - 1)
        out.append((f"conjugate({g})", markov_move(w, "conjugate", g=g), 0))
    if w.strands < 6:
        s = rng.choice((1, -1))
        out.append((f"stabilize({s})", markov_move(w, "stabilize", sign=s), s))
    try:
        d = markov_move(w, "destabilize")
        out.append(("destabilize", d, -(1 if w.letters[-1] > 0 else -1)))
    except BraidError:
        pass
    red = free_reduce(w)
    if red != w:
        removed = sum(1 if k > 0 else -1 for k in w.letters) - sum(1 if k > 0 else -1 for k in red.letters)
        out.append(("free_reduce", red, -removed))
    return out


def _diagram_moves(d: LinkDiagram, rng: random.Random):
    moves = ["R1_add", "R1_remove", "R2_add", "R2_remove", "R3"]
    rng.shuffle(moves)
    for move in moves:
        sites = reidemeister_sites(d, move)
        if not sites:
            continue
        site = rng.choice(sites)
        sign = rng.choice((1, -1))
        try:
            new = reidemeister_rewrite(d, move, site, sign=sign)
        except DiagramError:
            continue
        if move == "R1_add":
            shift = sign
        elif move == "R1_remove":
            shift = -d.crossings[site].sign
        else:
            shift = 0
        return f"{move}@{site}", new, shift
    return None


def perturb(w: BraidWord, rng: random.Random, steps: int = 5, max_crossings: int = 24) -> Perturbed:
    """Apply ``steps`` random braid relations, Markov moves or Reidemeister rewrites.

    Braid-level moves are used while the word is still available; after the
    first Reidemeister rewrite the rest are diagram moves.
    """
    state = Perturbed(w, closure_to_diagram(w), 0, [])
    for _ in range(steps):
        use_braid = state.word is not None and rng.random() < 0.5
        if use_braid:
            cands = _braid_moves(state.word, rng)
            if cands:
                label, new, shift = rng.choice(cands)
                state = Perturbed(new, closure_to_diagram(new), state.writhe_shift + shift, state.moves + [label])
                continue
        big = len(state.diagram.crossings) >= max_crossings
        mv = _diagram_moves(state.diagram, rng) if not big else None
        if mv is None:
            # too large to grow further: shrink instead if possible
            for move in ("R2_remove", "R1_remove", "R3"):
                sites = reidemeister_sites(state.diagram, move)
                if sites:
                    new = reidemeister_rewrite(state.diagram, move, sites[0])
                    shift = -state.diagram.crossings[sites[0]].sign if move == "R1_remove" else 0
                    mv = (f"{move}@{sites[0]}", new, shift)
                    break
        if mv is None:
            continue
        label, new, shift = mv
        state = Perturbed(None, new, state.writhe_shift + shift, state.moves + [label])
    return state
