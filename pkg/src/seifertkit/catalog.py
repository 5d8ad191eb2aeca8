"""Built-in knot and link fixtures with expected invariant values.

The catalog lives in ``data/catalog.json``.  Each entry has a ``name``, an
optional ``braid`` (text accepted by :func:`parse_braid`), an optional
``pd`` (unsigned table PD code, counterclockwise from the incoming
under-arc), flags ``fibred`` / ``optional``, an optional ``torus`` pair
``[p, q]`` and a ``known`` map ``{invariant: {"value": ..., "provenance": ...}}``.
Polynomials are stored in the text format of :func:`format_poly`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from importlib import resources
from typing import Callable, Iterable

from .braid import BraidWord, fibrability_report, parse_braid
from .diagram import LinkDiagram, closure_to_diagram
from .invariants import CONWAY, HOMFLY, JONES, conway_to_alexander, skein_evaluate
from .laurent import is_monic, normalize_units, parse_poly
from .seifert import alexander_from_burau, genus_lower_bound, surface_from_braid

__all__ = [
    "KnownValue",
    "CatalogEntry",
    "CatalogRow",
    "load_catalog",
    "get_entry",
    "verify_catalog",
    "PROVENANCE_TAGS",
]

PROVENANCE_TAGS = ("literature", "oracle", "normalization", "table")

_POLY_VARS = {
    "alexander": ("t",),
    "conway": ("w",),
    "jones": ("t",),
    "homfly": ("a", "w"),
}


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class KnownValue:
    value: object
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCE_TAGS:
            raise CatalogError(f"unknown provenance tag {self.provenance!r}")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    braid_word: BraidWord | None = None
    pd_code: LinkDiagram | None = None
    known: dict[str, KnownValue] = field(default_factory=dict)
    fibred: bool | None = None
    torus: tuple[int, int] | None = None
    optional: bool = False
    source: str | None = None

    def __post_init__(self):
        if self.braid_word is None and self.pd_code is None:
            raise CatalogError(f"entry {self.name!r} needs a braid word or a PD code")

    def diagram(self) -> LinkDiagram:
        """The stored PD code, or the closure of the braid word."""
        return self.pd_code if self.pd_code is not None else closure_to_diagram(self.braid_word)

    def with_known(self, invariant: str, value: object) -> "CatalogEntry":
        known = dict(self.known)
        prov = known[invariant].provenance if invariant in known else "oracle"
        known[invariant] = KnownValue(value, prov)
        return replace(self, known=known)


def _entry_from_json(obj: dict) -> CatalogEntry:
    name = obj["name"]
    braid = parse_braid(obj["braid"]) if obj.get("braid") is not None else None
    pd = LinkDiagram.from_knot_table_pd(obj["pd"]) if obj.get("pd") is not None else None
    known = {}
    for key, kv in obj.get("known", {}).items():
        if not isinstance(kv, dict) or "value" not in kv or "provenance" not in kv:
            raise CatalogError(f"{name}: known value {key!r} needs 'value' and 'provenance'")
        known[key] = KnownValue(kv["value"], kv["provenance"])
    torus = tuple(obj["torus"]) if obj.get("torus") else None
    return CatalogEntry(name, braid, pd, known, obj.get("fibred"), torus, bool(obj.get("optional", False)),
                        obj.get("source"))


def _raw() -> dict:
    text = resources.files("seifertkit").joinpath("data/catalog.json").read_text(encoding="utf-8")
    return json.loads(text)


def load_catalog(include_optional: bool = False) -> list[CatalogEntry]:
    """Catalog entries in file order; the 11-crossing table fixtures only when asked for."""
    entries = [_entry_from_json(e) for e in _raw()["entries"]]
    return [e for e in entries if include_optional or not e.optional]


def get_entry(name: str) -> CatalogEntry:
    for e in load_catalog(include_optional=True):
        if e.name == name:
            return e
    names = ", ".join(e.name for e in load_catalog(include_optional=True))
    raise KeyError(f"no catalog entry {name!r}; known entries: {names}")


@dataclass(frozen=True)
class CatalogRow:
    entry: str
    invariant: str
    expected: str
    computed: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "entry": self.entry,
            "invariant": self.invariant,
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
        }


def _compute(entry: CatalogEntry) -> dict[str, object]:
    """Every invariant this entry supports, keyed like ``known``."""
    d = entry.diagram()
    out: dict[str, object] = {}
    conway = skein_evaluate(d, CONWAY)
    out["conway"] = conway
    out["jones"] = skein_evaluate(d, JONES)
    out["homfly"] = skein_evaluate(d, HOMFLY)
    knot = d.components == 1
    alex_diagram = conway_to_alexander(conway)
    out["alexander"] = alex_diagram
    if entry.pd_code is not None:
        out["alexander_from_pd"] = alex_diagram
    if entry.braid_word is not None:
        w = entry.braid_word
        burau = alexander_from_burau(w)
        out["alexander_burau"] = burau
        out["alexander"] = burau
        if knot:
            surf = surface_from_braid(w, with_matrix=False)
            out["seifert_circles"] = surf.circles
            out["genus"] = surf.genus
            out["fibrability"] = fibrability_report(w).verdict.value
        if entry.pd_code is not None:
            closure = closure_to_diagram(w)
            out["jones_from_braid"] = skein_evaluate(closure, JONES)
    if knot and not out["alexander"].is_zero():
        out["genus_lower_bound"] = str(genus_lower_bound(out["alexander"]))
        out["monic"] = is_monic(out["alexander"])
    return out


def _matches(invariant: str, expected: object, computed: object) -> bool:
    base = invariant.split("_from_")[0]
    if base in _POLY_VARS or invariant == "alexander_burau":
        vars_ = _POLY_VARS.get(base, ("t",))
        want = parse_poly(str(expected), vars_)
        if base.startswith("alexander"):
            if want.is_zero() or computed.is_zero():
                return want.is_zero() and computed.is_zero()
            return normalize_units(want) == normalize_units(computed)
        return want == computed
    return expected == computed


def verify_catalog(entries: Iterable[CatalogEntry] | None = None,
                   include_optional: bool = False,
                   select: Callable[[CatalogEntry], bool] | None = None) -> list[CatalogRow]:
    """One row per (entry, known invariant) plus cross-checks between routes.

    Cross-check rows compare the Burau Alexander with the one obtained from
    Conway, and, for the 11-crossing fixtures, the Jones polynomial of the
    table diagram with that of the braid closure.  Fibred entries also get a
    monic-Alexander row.
    """
    if entries is None:
        entries = load_catalog(include_optional)
    rows: list[CatalogRow] = []
    for e in entries:
        if select is not None and not select(e):
            continue
        got = _compute(e)
        for key, kv in e.known.items():
            if key not in got:
                rows.append(CatalogRow(e.name, key, str(kv.value), "unavailable", False))
                continue
            ok = _matches(key, kv.value, got[key])
            rows.append(CatalogRow(e.name, key, str(kv.value), str(got[key]), ok))
        if "alexander_burau" in got and e.pd_code is None:
            a, b = got["alexander_burau"], conway_to_alexander(got["conway"])
            ok = (a.is_zero() and b.is_zero()) or (not a.is_zero() and not b.is_zero()
                                                   and normalize_units(a) == normalize_units(b))
            rows.append(CatalogRow(e.name, "alexander_conway_vs_burau", str(a), str(b), ok))
        if "jones_from_braid" in got:
            rows.append(CatalogRow(e.name, "jones_table_vs_braid", str(got["jones"]),
                                   str(got["jones_from_braid"]), got["jones"] == got["jones_from_braid"]))
        if e.fibred:
            rows.append(CatalogRow(e.name, "monic_alexander", "True", str(got.get("monic")),
                                   got.get("monic") is True))
        if e.torus is not None and "genus" in got:
            p, q = e.torus
            want = (p - 1) * (abs(q) - 1) // 2
            rows.append(CatalogRow(e.name, "torus_genus_formula", str(want), str(got["genus"]),
                                   got["genus"] == want))
    return rows
