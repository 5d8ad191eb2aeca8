"""Framed-band bookkeeping and the SL(2, Z) action of torus twists.

Curve classes on the boundary torus are written ``(a, b)`` for
``a*longitude + b*meridian``.  A twist matrix ``m`` acts on classes through
its transpose, so the meridian twist ``[[1, n], [0, 1]]`` sends the
longitude to ``longitude + n*meridian`` and fixes the meridian.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LinkDiagram, writhe

__all__ = [
    "FramingError",
    "FramedBand",
    "TwistMatrix",
    "TorusClass",
    "band_from_diagram",
    "twist_matrix",
    "class_action",
    "meridian_twist_on_class",
    "extends_to_solid_torus",
    "framing_report",
]


class FramingError(ValueError):
    pass


@dataclass(frozen=True)
class FramedBand:
    writhe: int
    twist: int
    self_linking: int
    preferred_n: int | None = None
    convention: str = "explicit"

    def __post_init__(self):
        if self.self_linking != self.writhe + self.twist:
            raise FramingError(f"Lk = {self.self_linking} but Wr + Tw = {self.writhe + self.twist}")
        if self.preferred_n is not None and (self.preferred_n < 1 or self.self_linking != 2 * self.preferred_n):
            raise FramingError(f"preferred twist count {self.preferred_n} inconsistent with Lk = {self.self_linking}")

    def to_dict(self) -> dict:
        return {
            "writhe": self.writhe,
            "twist": self.twist,
            "self_linking": self.self_linking,
            "preferred_n": self.preferred_n,
            "convention": self.convention,
        }


def band_from_diagram(d: LinkDiagram, convention: str = "vertical", twist: int | None = None) -> FramedBand:
    """Band over a knot diagram: ``vertical`` sets Tw = Wr; ``explicit`` takes ``twist``."""
    wr = writhe(d)
    if convention == "vertical":
        return FramedBand(wr, wr, 2 * wr, wr if wr >= 1 else None, "vertical")
    if convention == "explicit":
        if twist is None:
            raise FramingError("explicit framing needs a twist number")
        return FramedBand(wr, twist, wr + twist, None, "explicit")
    raise FramingError(f"unknown framing convention {convention!r}")


@dataclass(frozen=True)
class TwistMatrix:
    rows: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        (a, b), (c, d) = self.rows
        object.__setattr__(self, "rows", ((int(a), int(b)), (int(c), int(d))))
        if a * d - b * c != 1:
            raise FramingError(f"determinant of {self.rows} is {a * d - b * c}, not 1")

    def __matmul__(self, other: "TwistMatrix") -> "TwistMatrix":
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return TwistMatrix(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def inverse(self) -> "TwistMatrix":
        (a, b), (c, d) = self.rows
        return TwistMatrix(((d, -b), (-c, a)))

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        (a, b), (c, d) = self.rows
        return (a * v[0] + b * v[1], c * v[0] + d * v[1])

    def transpose(self) -> "TwistMatrix":
        (a, b), (c, d) = self.rows
        return TwistMatrix(((a, c), (b, d)))


@dataclass(frozen=True)
class TorusClass:
    a: int
    b: int


_ELEMENTARY = {
    "meridian_L_plus": ((1, 0), (1, 1)),
    "meridian_L_minus": ((1, 0), (-1, 1)),
    "M_plus": ((1, 1), (0, 1)),
    "M_minus": ((1, -1), (0, 1)),
}


def twist_matrix(kind: str, n: int | None = None) -> TwistMatrix:
    """Elementary boundary twists by name, or ``kind="power"`` for ``[[1, n], [0, 1]]``."""
    if kind == "power":
        if n is None:
            raise FramingError("power twist needs n")
        return TwistMatrix(((1, n), (0, 1)))
    try:
        return TwistMatrix(_ELEMENTARY[kind])
    except KeyError:
        raise FramingError(f"unknown twist kind {kind!r}") from None


def class_action(m: TwistMatrix) -> TwistMatrix:
    return m.transpose()


def meridian_twist_on_class(c: TorusClass, n: int) -> TorusClass:
    a, b = class_action(twist_matrix("power", n)).apply((c.a, c.b))
    return TorusClass(a, b)


def extends_to_solid_torus(m: TwistMatrix | tuple) -> bool:
    """True when ``m`` sends the meridian class ``(0, 1)`` to plus or minus itself.

    Plain nested tuples are accepted and checked for determinant 1.
    """
    if not isinstance(m, TwistMatrix):
        m = TwistMatrix(tuple(tuple(r) for r in m))
    return m.apply((0, 1)) in ((0, 1), (0, -1))


def framing_report(d: LinkDiagram, convention: str = "vertical", twist: int | None = None) -> dict:
    if d.components != 1:
        raise FramingError(f"framing needs a knot diagram; got {d.components} components")
    return band_from_diagram(d, convention, twist).to_dict()
