from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, settings

from seifertkit import invariants as inv
from seifertkit.braid import BraidWord, permutation_and_components, torus_braid
from seifertkit.catalog import load_catalog
from seifertkit.diagram import DiagramError, LinkDiagram, closure_to_diagram, mirror
from seifertkit.invariants import (
    CONWAY,
    HOMFLY,
    JONES,
    Chirality,
    conway_to_alexander,
    detect_chirality,
    invariant_bundle,
    kauffman_bracket_jones,
    skein_evaluate,
    specialize_homfly,
)
from seifertkit.laurent import LaurentPoly, parse_poly
from seifertkit.seifert import alexander_from_burau

from support import braid_words

t = LaurentPoly.var("t")
TREFOIL = closure_to_diagram(BraidWord(2, (1, 1, 1)))
LEFT_TREFOIL = closure_to_diagram(BraidWord(2, (-1, -1, -1)))
FIG8 = closure_to_diagram(BraidWord(3, (1, -2, 1, -2)))
HOPF = closure_to_diagram(BraidWord(2, (1, 1)))
UNKNOT = LinkDiagram((), 1)
CATALOG = [e for e in load_catalog(include_optional=True)]


def invert_t(p):
    return p.substitute({"t": t ** -1}, ("t",))


def test_template_relations():
    w = LaurentPoly.var("w")
    assert (CONWAY.c_plus, CONWAY.c_minus, CONWAY.c_zero, CONWAY.mu) == (1, -1, w, 0)
    root = LaurentPoly({(1,): 1})
    assert JONES.c_zero == root - root ** -1
    assert JONES.mu == -(root + root ** -1)
    a = LaurentPoly.var("a", ("a", "w"))
    wv = LaurentPoly.var("w", ("a", "w"))
    assert HOMFLY.mu * wv == a - a ** -1


def test_conway_examples():
    assert skein_evaluate(TREFOIL, CONWAY) == parse_poly("1 + w^2", ("w",))
    assert skein_evaluate(LinkDiagram((), 2), CONWAY).is_zero()
    assert skein_evaluate(HOPF, CONWAY) == LaurentPoly.var("w")


def test_jones_trefoil_pair():
    pair = {skein_evaluate(TREFOIL, JONES), skein_evaluate(LEFT_TREFOIL, JONES)}
    assert pair == {-(t ** 4) + t ** 3 + t, -(t ** -4) + t ** -3 + t ** -1}


def test_homfly_unknot_and_empty():
    assert skein_evaluate(UNKNOT, HOMFLY) == 1
    with pytest.raises(DiagramError):
        skein_evaluate(LinkDiagram((), 0), HOMFLY)


def test_bracket_examples():
    assert kauffman_bracket_jones(UNKNOT) == 1
    assert kauffman_bracket_jones(TREFOIL) == skein_evaluate(TREFOIL, JONES)
    hopf = kauffman_bracket_jones(HOPF)
    assert len(hopf.terms) == 2
    assert all(e[0] % 2 for e in hopf.terms)  # half-integer exponents
    assert hopf == skein_evaluate(HOPF, JONES)


def test_bracket_cap():
    with pytest.raises(ValueError, match="limited"):
        kauffman_bracket_jones(TREFOIL, max_crossings=2)


def test_specialization_examples():
    P = skein_evaluate(TREFOIL, HOMFLY)
    assert specialize_homfly(P, "conway") == parse_poly("1 + w^2", ("w",))
    assert specialize_homfly(skein_evaluate(UNKNOT, HOMFLY), "jones") == 1
    assert specialize_homfly(P, "jones") == t + t ** 3 - t ** 4
    with pytest.raises(ValueError):
        specialize_homfly(P, "alexander")


def test_chirality():
    assert detect_chirality(TREFOIL) is Chirality.CHIRAL_EVIDENCE
    assert detect_chirality(FIG8) is Chirality.INCONCLUSIVE
    assert detect_chirality(UNKNOT) is Chirality.INCONCLUSIVE


@pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.name)
def test_catalog_mirror_rule(entry):
    d = entry.diagram()
    assert skein_evaluate(mirror(d), JONES) == invert_t(skein_evaluate(d, JONES))


@pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.name)
def test_catalog_bracket_agrees_with_skein(entry):
    d = entry.diagram()
    if len(d.crossings) > 12:
        pytest.skip("state sum limited to 12 crossings here")
    assert kauffman_bracket_jones(d) == skein_evaluate(d, JONES)


@pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.name)
def test_catalog_specializations(entry):
    d = entry.diagram()
    P = skein_evaluate(d, HOMFLY)
    assert specialize_homfly(P, "conway") == skein_evaluate(d, CONWAY)
    assert specialize_homfly(P, "jones") == skein_evaluate(d, JONES)


@pytest.mark.parametrize(
    "entry",
    [e for e in CATALOG if e.braid_word is not None and permutation_and_components(e.braid_word)[1] == 1],
    ids=lambda e: e.name,
)
def test_catalog_conway_gives_alexander(entry):
    w = entry.braid_word
    assert conway_to_alexander(skein_evaluate(closure_to_diagram(w), CONWAY)) == alexander_from_burau(w)


def test_memo_on_off_agree_on_torus_braid():
    d = closure_to_diagram(torus_braid(3, 5))
    inv.clear_memo()
    cold = skein_evaluate(d, HOMFLY, memo=False)
    assert inv.memo_size() == 0
    warm = skein_evaluate(d, HOMFLY)
    assert inv.memo_size() > 0
    assert cold == warm == skein_evaluate(d, HOMFLY)


@settings(max_examples=40, deadline=None)
@given(braid_words(max_len=8))
def test_memo_soundness(w):
    d = closure_to_diagram(w)
    for tpl in (CONWAY, JONES, HOMFLY):
        assert skein_evaluate(d, tpl, memo=False) == skein_evaluate(d, tpl)


def test_memo_cap_env(monkeypatch):
    inv.clear_memo()
    monkeypatch.setenv(inv.MEMO_CAP_ENV, "0")
    skein_evaluate(TREFOIL, JONES)
    assert inv.memo_size() == 0
    monkeypatch.setenv(inv.MEMO_CAP_ENV, "lots")
    with pytest.raises(ValueError):
        skein_evaluate(FIG8, JONES)


def test_concurrent_evaluation_shares_memo_safely():
    words = [torus_braid(2, k) for k in (3, 5, 7, 9)] + [BraidWord(3, (1, -2) * k) for k in (2, 3, 4)]
    expected = [skein_evaluate(closure_to_diagram(w), HOMFLY, memo=False) for w in words]
    inv.clear_memo()
    with ThreadPoolExecutor(8) as pool:
        got = list(pool.map(lambda w: skein_evaluate(closure_to_diagram(w), HOMFLY), words * 4))
    assert got == expected * 4


@settings(max_examples=40, deadline=None)
@given(braid_words(max_len=8))
def test_random_words_cross_checks(w):
    d = closure_to_diagram(w)
    P = skein_evaluate(d, HOMFLY)
    assert specialize_homfly(P, "jones") == kauffman_bracket_jones(d)
    assert specialize_homfly(P, "conway") == skein_evaluate(d, CONWAY)


def test_bundle_keys_and_values():
    b = invariant_bundle(braid=BraidWord(2, (1, 1, 1)))
    assert set(b) == {"alexander", "conway", "jones", "homfly", "chirality", "components",
                      "writhe", "genus", "homogeneous", "fibrability"}
    assert b["alexander"] == "1 - t + t^2"
    assert b["genus"]["g"] == 1 and b["genus"]["lower_bound"] == "1"
    assert b["fibrability"] == "fibred-by-homogeneity"
    assert b["chirality"] == "chiral_evidence"
    link = invariant_bundle(diagram=HOPF)
    assert link["fibrability"] is None and link["components"] == 2
    with pytest.raises(ValueError):
        invariant_bundle()
