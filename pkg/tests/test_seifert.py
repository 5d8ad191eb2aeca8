from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from seifertkit.braid import BraidWord, markov_move, permutation_and_components, torus_braid
from seifertkit.diagram import LinkDiagram, closure_to_diagram
from seifertkit.laurent import LaurentPoly, normalize_units, parse_poly
from seifertkit.seifert import (
    SeifertError,
    alexander_from_burau,
    alexander_from_seifert,
    euler_genus,
    genus_lower_bound,
    seifert_circles,
    seifert_matrix_from_braid,
    surface_from_braid,
)

from support import braid_words

t = LaurentPoly.var("t")


def test_circle_counts():
    assert seifert_circles(closure_to_diagram(BraidWord(2, (1, 1, 1)))) == 2
    assert seifert_circles(closure_to_diagram(torus_braid(3, 4))) == 3
    assert seifert_circles(LinkDiagram((), 1)) == 1


def test_euler_genus():
    assert euler_genus(2, 3, 1) == (-1, 1)
    assert euler_genus(3, 8, 1)[1] == 3
    assert euler_genus(1, 0, 1) == (1, 0)
    with pytest.raises(SeifertError):
        euler_genus(2, 2, 1)


def test_seifert_matrix_examples():
    assert seifert_matrix_from_braid(BraidWord(2, (1, 1, 1))) == [[-1, 1], [0, -1]]
    assert seifert_matrix_from_braid(BraidWord(2, (1, 1))) == [[-1]]
    m = seifert_matrix_from_braid(BraidWord(3, (1, -2, 1, -2)))
    assert len(m) == 2
    assert alexander_from_seifert(m) == normalize_units(t ** -1 - 3 + t)


def test_split_braid_rejected():
    with pytest.raises(SeifertError):
        seifert_matrix_from_braid(BraidWord(3, (1, 1)))


def test_alexander_from_seifert_examples():
    assert alexander_from_seifert([[-1, 1], [0, -1]]) == parse_poly("1 - t + t^2")
    assert alexander_from_seifert([]) == 1
    assert alexander_from_seifert([[-1]]) == normalize_units(t - 1)


def test_alexander_from_burau_examples():
    assert alexander_from_burau(BraidWord(2, (1, 1, 1))) == parse_poly("1 - t + t^2")
    assert alexander_from_burau(BraidWord(2, (1,))) == 1
    assert alexander_from_burau(BraidWord(3, (1, -2, 1, -2))) == parse_poly("1 - 3*t + t^2")


def test_genus_lower_bound():
    assert genus_lower_bound(parse_poly("1 - t + t^2")) == 1
    assert genus_lower_bound(LaurentPoly.constant(1)) == 0
    assert genus_lower_bound(alexander_from_burau(torus_braid(2, 5))) == 2
    assert isinstance(genus_lower_bound(normalize_units(t - 1)), Fraction)


@pytest.mark.parametrize("p,q", [(p, q) for p in (2, 3, 4) for q in range(-5, 6) if q not in (0,)])
def test_both_alexander_routes_on_torus_braids(p, q):
    w = torus_braid(p, q)
    assert alexander_from_seifert(seifert_matrix_from_braid(w)) == alexander_from_burau(w)


def _homogeneous_words():
    @st.composite
    def build(draw):
        n = draw(st.integers(2, 4))
        signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n - 1, max_size=n - 1))
        core = list(range(1, n))
        extra = draw(st.lists(st.integers(1, n - 1), max_size=10 - len(core)))
        order = draw(st.permutations(core + extra))
        return BraidWord(n, tuple(signs[i - 1] * i for i in order))
    return build()


@given(_homogeneous_words())
def test_both_alexander_routes_on_homogeneous_words(w):
    assert alexander_from_seifert(seifert_matrix_from_braid(w)) == alexander_from_burau(w)


@given(braid_words(min_len=1))
def test_braid_surface_data(w):
    used = {abs(k) for k in w.letters}
    if used != set(range(1, w.strands)):
        return
    data = surface_from_braid(w)
    assert data.circles == w.strands
    assert data.euler == w.strands - len(w)
    assert len(data.matrix) == len(w) - w.strands + 1
    if permutation_and_components(w)[1] == 1:
        assert data.genus == (1 - w.strands + len(w)) // 2
    assert alexander_from_seifert([list(r) for r in data.matrix]) == alexander_from_burau(w)


@given(braid_words(min_len=1))
def test_alexander_symmetry(w):
    if permutation_and_components(w)[1] != 1:
        return
    delta = alexander_from_burau(w)
    inverted = delta.substitute({"t": t ** -1}, ("t",))
    assert normalize_units(inverted) == delta


@given(braid_words(min_len=1))
def test_alexander_under_markov_moves(w):
    ref = alexander_from_burau(w)
    assert alexander_from_burau(markov_move(w, "stabilize", sign=1)) == ref
    assert alexander_from_burau(markov_move(w, "conjugate", g=-1)) == ref


def test_surface_dict_keys():
    d = surface_from_braid(BraidWord(2, (1, 1, 1))).to_dict()
    assert d == {"s": 2, "c": 3, "mu": 1, "chi": -1, "g": 1, "matrix": [[-1, 1], [0, -1]]}
    assert surface_from_braid(BraidWord(2, (1, 1, 1)), with_matrix=False).matrix is None
