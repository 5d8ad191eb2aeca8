"""Numerical Hopf-fibration geometry: stereographic charts, Hopf fibers and
torus-knot fibers, Gauss linking of polylines, tube maps of the preferred
framing, and the static hopfion fields built from the Hopf map.

Points of the 3-sphere are ``(x1, x2, x3, x4)`` with ``z1 = x1 + i x2`` and
``z2 = x3 + i x4``; the North pole is ``(0, 0, 0, 1)``.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GeometryError",
    "ComplexPair",
    "SampledCurve",
    "TubeCoordinates",
    "FieldSample",
    "stereo",
    "hopf_map",
    "hopf_fiber",
    "torus_fiber",
    "curve_to_r3",
    "gauss_linking",
    "seifert_tube_map",
    "area_form_coefficient",
    "area_form_integral",
    "AREA_NORMALIZATION",
    "hopfion_scalar",
    "ranada_field",
    "field_divergence",
    "ranada_grid",
    "write_curve_csv",
    "read_curve_csv",
    "write_field_csv",
]

SPHERE_TOL = 1e-12
CLOSE_TOL = 1e-8
AREA_NORMALIZATION = 1.0 / math.pi
SINGULAR_TOL = 1e-6


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class ComplexPair:
    z1: complex
    z2: complex

    def norm2(self) -> float:
        return abs(self.z1) ** 2 + abs(self.z2) ** 2

    def on_sphere(self, tol: float = SPHERE_TOL) -> bool:
        return abs(self.norm2() - 1.0) <= tol

    def to_vector(self) -> np.ndarray:
        return np.array([self.z1.real, self.z1.imag, self.z2.real, self.z2.imag])

    @classmethod
    def from_vector(cls, x: Sequence[float]) -> "ComplexPair":
        return cls(complex(x[0], x[1]), complex(x[2], x[3]))


@dataclass(frozen=True)
class SampledCurve:
    """Polyline in 3- or 4-space; ``params`` lie in [0, 1]."""

    points: np.ndarray
    params: np.ndarray
    closed: bool

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        par = np.asarray(self.params, dtype=float)
        if pts.ndim != 2 or pts.shape[1] not in (3, 4):
            raise GeometryError(f"curve points must have shape (N, 3) or (N, 4), got {pts.shape}")
        if len(par) != len(pts):
            raise GeometryError("params and points differ in length")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "params", par)
        if self.closed and np.linalg.norm(pts[0] - pts[-1]) >= CLOSE_TOL:
            raise GeometryError(f"curve marked closed but endpoints differ by {np.linalg.norm(pts[0] - pts[-1]):.3g}")

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class TubeCoordinates:
    """Radial ``rho``, longitude ``lam`` and meridian ``mu`` angles (in turns), thickness ``kappa``."""

    rho: float
    lam: float = 0.0
    mu: float = 0.0
    kappa: float = 1.0
    annulus: bool = False

    def __post_init__(self):
        if not 0 < self.kappa <= 1:
            raise GeometryError(f"kappa must lie in (0, 1], got {self.kappa}")
        if self.rho > 1 or self.rho < 0:
            raise GeometryError(f"rho must lie in [0, 1], got {self.rho}")
        if self.annulus and not 1 - self.kappa < self.rho:
            raise GeometryError(f"rho = {self.rho} is outside the annulus (1 - kappa, 1]")


@dataclass(frozen=True)
class FieldSample:
    position: np.ndarray
    B: np.ndarray
    E: np.ndarray


# charts ---------------------------------------------------------------------------

def stereo(n: int, direction: str, x: Sequence[float]) -> np.ndarray:
    """Stereographic chart of the unit ``n``-sphere from its North pole.

    ``project`` maps a point of the sphere in R^(n+1) to R^n; ``invert`` goes back.
    """
    if n not in (2, 3):
        raise GeometryError(f"stereographic charts are provided for n = 2, 3, not {n}")
    x = np.asarray(x, dtype=float)
    if direction == "project":
        if x.shape != (n + 1,):
            raise GeometryError(f"expected a point in R^{n + 1}")
        denom = 1.0 - x[n]
        if abs(denom) < 1e-15:
            raise GeometryError("cannot project the North pole")
        return x[:n] / denom
    if direction == "invert":
        if x.shape != (n,):
            raise GeometryError(f"expected a point in R^{n}")
        u2 = float(x @ x)
        return np.concatenate([2 * x / (1 + u2), [(u2 - 1) / (1 + u2)]])
    raise GeometryError(f"unknown stereographic direction {direction!r}")


def _pair(p) -> ComplexPair:
    if isinstance(p, ComplexPair):
        return p
    z1, z2 = p
    return ComplexPair(complex(z1), complex(z2))


def hopf_map(p: ComplexPair | tuple[complex, complex], tol: float = SPHERE_TOL) -> np.ndarray:
    """``(2 z1 conj(z2), |z1|^2 - |z2|^2)`` as a real 3-vector."""
    p = _pair(p)
    if not p.on_sphere(tol):
        raise GeometryError(f"point off the unit 3-sphere: |z1|^2 + |z2|^2 = {p.norm2():.15g}")
    w = 2 * p.z1 * p.z2.conjugate()
    return np.array([w.real, w.imag, abs(p.z1) ** 2 - abs(p.z2) ** 2])


def _fiber_point(base: np.ndarray) -> ComplexPair:
    x1, x2, x3 = base
    # take the larger of |z1|, |z2| from x3 and the smaller from r = |2 z1 z2|,
    # which avoids cancellation near either pole
    r = math.hypot(x1, x2)
    phase = complex(x1, -x2) / r if r > 0 else 1.0
    if x3 >= 0:
        m1 = math.sqrt((1 + x3) / 2)
        m2 = r / (2 * m1)
    else:
        m2 = math.sqrt((1 - x3) / 2)
        m1 = r / (2 * m2)
    return ComplexPair(complex(m1), m2 * phase)


def _circle_action(start: ComplexPair, alpha: int, beta: int, samples: int) -> SampledCurve:
    t = np.linspace(0.0, 2 * np.pi, samples)
    w1 = np.exp(1j * alpha * t) * start.z1
    w2 = np.exp(1j * beta * t) * start.z2
    pts = np.column_stack([w1.real, w1.imag, w2.real, w2.imag])
    return SampledCurve(pts, t / (2 * np.pi), True)


def hopf_fiber(base: Sequence[float], samples: int = 512) -> SampledCurve:
    """The circle ``{(e^{it} z1, e^{it} z2)}`` over a point of the unit 2-sphere."""
    base = np.asarray(base, dtype=float)
    if base.shape != (3,) or abs(float(base @ base) - 1.0) > 1e-9:
        raise GeometryError(f"base point must be a unit 3-vector, got {base.tolist()}")
    if samples < 3:
        raise GeometryError("a fiber needs at least 3 samples")
    return _circle_action(_fiber_point(base), 1, 1, samples)


def torus_fiber(alpha: int, beta: int, start: ComplexPair | tuple[complex, complex] | None = None,
                samples: int = 512, allow_link: bool = False) -> SampledCurve:
    """The orbit ``{(e^{i alpha t} z1, e^{i beta t} z2)}``, a torus knot on a Clifford torus.

    Non-coprime exponents raise unless ``allow_link`` is set.
    """
    if start is None:
        start = ComplexPair(complex(1 / math.sqrt(2)), complex(1 / math.sqrt(2)))
    start = _pair(start)
    if not start.on_sphere(1e-9):
        raise GeometryError("start point is not on the unit 3-sphere")
    if start.z1 == 0 or start.z2 == 0:
        raise GeometryError("start point must have z1 and z2 nonzero")
    if alpha == 0 or beta == 0:
        raise GeometryError("alpha and beta must be nonzero")
    if math.gcd(alpha, beta) != 1 and not allow_link:
        raise GeometryError(f"gcd({alpha}, {beta}) != 1: the orbit is a fiber of a link, not a knot")
    if samples < 3:
        raise GeometryError("a fiber needs at least 3 samples")
    return _circle_action(start, alpha, beta, samples)


def curve_to_r3(c: SampledCurve) -> np.ndarray:
    """Points in R^3; 4-space curves are projected stereographically from the North pole."""
    if c.dim == 3:
        return c.points
    denom = 1.0 - c.points[:, 3]
    if np.min(np.abs(denom)) < 1e-12:
        raise GeometryError("curve passes through the projection pole (0, 0, 0, 1)")
    return c.points[:, :3] / denom[:, None]


# linking ----------------------------------------------------------------------------

def _min_distance(p: np.ndarray, q: np.ndarray) -> float:
    """Smallest distance between any segment of polyline ``p`` and any segment of ``q``."""
    a, u = p[:-1], np.diff(p, axis=0)
    c, v = q[:-1], np.diff(q, axis=0)
    best = math.inf
    chunk = max(1, 200_000 // max(1, len(c)))
    vv = np.einsum("jk,jk->j", v, v)[None]
    for s in range(0, len(a), chunk):
        A, U = a[s:s + chunk, None, :], u[s:s + chunk, None, :]
        w = A - c[None]
        uu = np.einsum("ijk,ijk->ij", U, U)
        uv = np.einsum("ik,jk->ij", U[:, 0], v)
        uw = np.einsum("ijk,ijk->ij", U, w)
        vw = np.einsum("jk,ijk->ij", v, w)
        denom = uu * vv - uv * uv
        # closest parameters on the infinite lines, clamped; parallel pairs start at s = 0
        sp = np.where(denom > 1e-14 * uu * vv, (uv * vw - vv * uw) / np.where(denom > 0, denom, 1), 0.0)
        sp = np.clip(sp, 0.0, 1.0)
        tp = np.clip((uv * sp + vw) / np.where(vv > 0, vv, 1), 0.0, 1.0)
        sp = np.clip((uv * tp - uw) / np.where(uu > 0, uu, 1), 0.0, 1.0)
        diff = w + sp[..., None] * U - tp[..., None] * v[None]
        best = min(best, float(np.sqrt(np.min(np.einsum("ijk,ijk->ij", diff, diff)))))
    return best


def _segment_pair_sum(p: np.ndarray, q: np.ndarray) -> float:
    """Exact Gauss integral of two closed polylines, as a sum of signed solid angles."""
    a, b = p[:-1], p[1:]
    c, d = q[:-1], q[1:]
    total = 0.0
    chunk = max(1, 200_000 // max(1, len(c)))
    for s in range(0, len(a), chunk):
        A, Bv = a[s:s + chunk, None, :], b[s:s + chunk, None, :]
        r13, r14 = c[None] - A, d[None] - A
        r23, r24 = c[None] - Bv, d[None] - Bv
        n1 = np.cross(r13, r14)
        n2 = np.cross(r14, r24)
        n3 = np.cross(r24, r23)
        n4 = np.cross(r23, r13)
        ns = []
        for n in (n1, n2, n3, n4):
            norm = np.linalg.norm(n, axis=-1, keepdims=True)
            ns.append(np.divide(n, norm, out=np.zeros_like(n), where=norm > 0))
        n1, n2, n3, n4 = ns

        def dot(u, v):
            return np.clip(np.einsum("ijk,ijk->ij", u, v), -1.0, 1.0)

        omega = np.arcsin(dot(n1, n2)) + np.arcsin(dot(n2, n3)) + np.arcsin(dot(n3, n4)) + np.arcsin(dot(n4, n1))
        r12 = Bv - A
        r34 = (d - c)[None]
        orient = np.sign(np.einsum("ijk,ijk->ij", np.cross(r34, r12), r13))
        total += float(np.sum(omega * orient))
    return total / (4 * np.pi)


def gauss_linking(c1: SampledCurve, c2: SampledCurve, min_distance: float = 1e-6) -> float:
    """Gauss linking integral of two closed, disjoint curves (4-space curves are projected to R^3)."""
    if not (c1.closed and c2.closed):
        raise GeometryError("linking needs two closed curves")
    p, q = curve_to_r3(c1), curve_to_r3(c2)
    gap = _min_distance(p, q)
    if gap <= min_distance:
        raise GeometryError(f"curves intersect or nearly intersect (min distance {gap:.3g} <= {min_distance:g})")
    return _segment_pair_sum(p, q)


# tube coordinates and area forms ---------------------------------------------------

def seifert_tube_map(c: TubeCoordinates, n: int) -> complex:
    """Fibration value ``exp(2 pi i (lam + n mu))`` of the ``n``-twisted preferred framing."""
    if n < 1:
        raise GeometryError(f"twist count must be a natural number >= 1, got {n}")
    return complex(np.exp(2j * np.pi * (c.lam + n * c.mu)))


def area_form_coefficient(c: TubeCoordinates, n: int = 1) -> float:
    """Coefficient of ``d rho ^ d nu`` in the normalized annulus area form: ``N / rho``."""
    if n < 1:
        raise GeometryError(f"twist count must be a natural number >= 1, got {n}")
    if c.rho <= 0:
        raise GeometryError("area form is singular at rho = 0")
    return AREA_NORMALIZATION / c.rho


def area_form_integral(kappa: float, n: int = 1, nodes: int = 64) -> float:
    """Integral of the area form over the annulus ``rho in [1 - kappa, 1]``, ``nu in [0, 1]``.

    Gauss-Legendre quadrature in both directions.
    """
    if not 0 < kappa < 1:
        raise GeometryError("kappa must lie in (0, 1) for a finite integral")
    x, wts = np.polynomial.legendre.leggauss(nodes)
    rho = 1.0 - kappa + (x + 1) * kappa / 2
    nu = (x + 1) / 2
    coeff = np.array([
        [area_form_coefficient(TubeCoordinates(r, 0.0, v, kappa), n) for v in nu] for r in rho
    ])
    # Jacobians: kappa/2 for rho, 1/2 for nu
    return float(wts @ coeff @ wts * (kappa / 2) * 0.5)


# hopfion fields -------------------------------------------------------------------------

_CYCLE = (1, 2, 0)  # (x, y, z) -> (y, z, x)


def hopfion_scalar(point: Sequence[float], kind: str = "phi") -> complex:
    """Complex scalar of the hopfion: the chart chain R^3 -> S^3 -> S^2 -> C.

    ``phi`` uses the point as given; its companion ``theta`` uses the point with
    coordinates cycled ``(x, y, z) -> (y, z, x)``.
    """
    r = np.asarray(point, dtype=float)
    if kind == "theta":
        r = r[list(_CYCLE)]
    elif kind != "phi":
        raise GeometryError(f"unknown hopfion scalar {kind!r}")
    x = stereo(3, "invert", r)
    s = hopf_map(ComplexPair.from_vector(x), tol=1e-9)
    denom = 1.0 - s[2]
    if denom < SINGULAR_TOL:
        raise GeometryError(f"point {np.asarray(point).tolist()} is on the singular locus of {kind}")
    u = s[:2] / denom
    return complex(u[0], u[1])


def _gradient(f, r: np.ndarray, h: float) -> np.ndarray:
    g = np.zeros(3, dtype=complex)
    for k in range(3):
        e = np.zeros(3)
        e[k] = h
        g[k] = (f(r + e) - f(r - e)) / (2 * h)
    return g


def _field(kind: str, r: np.ndarray, h: float) -> np.ndarray:
    f = lambda p: hopfion_scalar(p, kind)
    val = f(r)
    grad = _gradient(f, r, h)
    if kind == "phi":
        cross = np.cross(grad, grad.conj())
    else:
        cross = np.cross(grad.conj(), grad)
    vec = cross / (2j * np.pi) / (1 + abs(val) ** 2) ** 2
    return vec.real


def ranada_field(point: Sequence[float], h: float = 1e-4, phi_kind: str = "hopfion") -> FieldSample:
    """Static magnetic and electric fields of the hopfion at ``point`` (natural units, a = 1)."""
    if phi_kind != "hopfion":
        raise GeometryError(f"unknown scalar family {phi_kind!r}")
    if h <= 0:
        raise GeometryError("step h must be positive")
    r = np.asarray(point, dtype=float)
    return FieldSample(r, _field("phi", r, h), _field("theta", r, h))


def field_divergence(point: Sequence[float], h: float, which: str = "B") -> float:
    """Central-difference divergence of B (or E), with the same step inside the field."""
    r = np.asarray(point, dtype=float)
    total = 0.0
    for k in range(3):
        e = np.zeros(3)
        e[k] = h
        plus = ranada_field(r + e, h)
        minus = ranada_field(r - e, h)
        fp, fm = (plus.B, minus.B) if which == "B" else (plus.E, minus.E)
        total += (fp[k] - fm[k]) / (2 * h)
    return total


def ranada_grid(grid: int, extent: float, h: float = 1e-4) -> tuple[list[FieldSample], int]:
    """Samples on a ``grid^3`` lattice over ``[-extent, extent]^3``; returns (samples, skipped singular points)."""
    if grid < 1:
        raise GeometryError("grid must be at least 1")
    axis = np.linspace(-extent, extent, grid) if grid > 1 else np.array([0.0])
    out = []
    skipped = 0
    for x in axis:
        for y in axis:
            for z in axis:
                try:
                    out.append(ranada_field((x, y, z), h))
                except GeometryError:
                    skipped += 1
    return out, skipped


# CSV ------------------------------------------------------------------------------

def _fmt(v: float) -> str:
    return repr(float(v))


def _writer_target(path_or_file):
    if isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__"):
        return open(path_or_file, "w", newline=""), True
    return path_or_file, False


def write_curve_csv(path_or_file, c: SampledCurve, points: np.ndarray | None = None) -> None:
    """Header ``t,x,y,z`` (or ``t,x1,x2,x3,x4``); ``points`` overrides the stored coordinates."""
    pts = c.points if points is None else points
    header = ["t", "x", "y", "z"] if pts.shape[1] == 3 else ["t", "x1", "x2", "x3", "x4"]
    fh, own = _writer_target(path_or_file)
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for t, p in zip(c.params, pts):
            w.writerow([_fmt(t)] + [_fmt(v) for v in p])
    finally:
        if own:
            fh.close()


def read_curve_csv(path) -> SampledCurve:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise GeometryError(f"{path}: empty curve file")
    header = [h.strip() for h in rows[0]]
    if header not in (["t", "x", "y", "z"], ["t", "x1", "x2", "x3", "x4"]):
        raise GeometryError(f"{path}: unexpected header {','.join(header)!r}")
    data = []
    for ln, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise GeometryError(f"{path}:{ln}: expected {len(header)} fields, got {len(row)}")
        try:
            data.append([float(v) for v in row])
        except ValueError:
            raise GeometryError(f"{path}:{ln}: non-numeric field in {row!r}") from None
    if len(data) < 3:
        raise GeometryError(f"{path}: a curve needs at least 3 points")
    arr = np.array(data)
    pts = arr[:, 1:]
    closed = bool(np.linalg.norm(pts[0] - pts[-1]) < CLOSE_TOL)
    return SampledCurve(pts, arr[:, 0], closed)


def write_field_csv(path_or_file, samples: Iterable[FieldSample]) -> None:
    fh, own = _writer_target(path_or_file)
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "y", "z", "Bx", "By", "Bz", "Ex", "Ey", "Ez"])
        for s in samples:
            w.writerow([_fmt(v) for v in (*s.position, *s.B, *s.E)])
    finally:
        if own:
            fh.close()
