"""Braid words, braid-group rewrites, Markov moves and the reduced Burau matrix.

Letters are signed integers: ``k > 0`` is ``sigma_k`` and ``k < 0`` is
``sigma_|k|^-1``.  The leftmost letter is the topmost crossing.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .laurent import LaurentPoly, is_monic
from .matrices import Matrix, identity, matmul

__all__ = [
    "BraidError",
    "BraidWord",
    "StrandPermutation",
    "parse_braid",
    "permutation_and_components",
    "exponent_sum",
    "is_homogeneous",
    "torus_braid",
    "braid_relation_rewrite",
    "markov_move",
    "free_reduce",
    "burau_reduced",
    "FibrabilityVerdict",
    "FibrabilityReport",
    "fibrability_report",
]


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"strand count must be at least 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for k in self.letters:
            if k == 0:
                raise BraidError("letter 0 is not a braid generator")
            if abs(k) > self.strands - 1:
                raise BraidError(f"generator index {abs(k)} needs more than {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(max(self.strands, other.strands), self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in self.letters))

    def __str__(self) -> str:
        body = " ".join(str(k) for k in self.letters)
        return f"n={self.strands} {body}".rstrip()


@dataclass(frozen=True)
class StrandPermutation:
    """``images[j]`` is the bottom position (0-based) reached by the strand starting at position ``j``."""

    images: tuple[int, ...]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = []
            j = start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out


def parse_braid(text: str) -> BraidWord:
    """Parse ``"1 -2 1 -2"`` or ``"n=4 1 1"``; commas are accepted as separators."""
    tokens = text.replace(",", " ").split()
    strands = None
    letters = []
    for tok in tokens:
        if tok.startswith("n="):
            if strands is not None:
                raise BraidError(f"duplicate strand count token {tok!r}")
            try:
                strands = int(tok[2:])
            except ValueError:
                raise BraidError(f"bad strand count token {tok!r}") from None
            continue
        try:
            k = int(tok)
        except ValueError:
            raise BraidError(f"bad braid token {tok!r}") from None
        if k == 0:
            raise BraidError(f"bad braid token {tok!r}: generator index must be nonzero")
        letters.append(k)
    if strands is None:
        strands = 1 + max((abs(k) for k in letters), default=0)
    for k in letters:
        if abs(k) >= strands:
            raise BraidError(f"bad braid token {k!r}: index {abs(k)} needs more than n={strands} strands")
    return BraidWord(strands, tuple(letters))


def permutation_and_components(w: BraidWord) -> tuple[StrandPermutation, int]:
    pos = list(range(w.strands))  # pos[j]: current position of the strand that started at j
    at = list(range(w.strands))  # at[p]: strand currently at position p
    for k in w.letters:
        i = abs(k) - 1
        a, b = at[i], at[i + 1]
        at[i], at[i + 1] = b, a
        pos[a], pos[b] = i + 1, i
    perm = StrandPermutation(tuple(pos))
    return perm, len(perm.cycles())


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if k > 0 else -1 for k in w.letters)


def is_homogeneous(w: BraidWord) -> bool:
    signs: dict[int, set[int]] = {}
    for k in w.letters:
        signs.setdefault(abs(k), set()).add(1 if k > 0 else -1)
    return all(len(signs.get(i, ())) == 1 for i in range(1, w.strands))


def torus_braid(p: int, q: int) -> BraidWord:
    """``(sigma_1 ... sigma_{p-1})^q`` on ``p`` strands.

    Non-coprime ``(p, q)`` close up to a link; that is allowed, callers can
    check ``math.gcd``.
    """
    if p < 2:
        raise BraidError("torus braids need p >= 2")
    if q == 0:
        raise BraidError("torus braids need q != 0")
    block = list(range(1, p))
    if q < 0:
        block = [-k for k in block]
    return BraidWord(p, tuple(block * abs(q)))


def is_torus_knot(p: int, q: int) -> bool:
    return math.gcd(p, abs(q)) == 1


def braid_relation_rewrite(w: BraidWord, position: int, which: str) -> BraidWord:
    """Apply one braid relation at ``position`` (0-based index into the letters).

    ``far_commute`` swaps two letters with indices at least 2 apart;
    ``yang_baxter`` turns ``s_i s_j s_i`` into ``s_j s_i s_j`` for ``|i-j| = 1``
    and equal signs.
    """
    L = list(w.letters)
    if which == "far_commute":
        if not 0 <= position < len(L) - 1:
            raise BraidError(f"no letter pair at position {position}")
        x, y = L[position], L[position + 1]
        if abs(abs(x) - abs(y)) < 2:
            raise BraidError(f"letters {x}, {y} at position {position} do not commute")
        L[position], L[position + 1] = y, x
    elif which == "yang_baxter":
        if not 0 <= position < len(L) - 2:
            raise BraidError(f"no letter triple at position {position}")
        x, y, z = L[position:position + 3]
        same_sign = (x > 0) == (y > 0) == (z > 0)
        if x != z or abs(abs(x) - abs(y)) != 1 or not same_sign:
            raise BraidError(f"letters {x}, {y}, {z} at position {position} are not a Yang-Baxter pattern")
        L[position:position + 3] = [y, x, y]
    else:
        raise BraidError(f"unknown braid relation {which!r}")
    return BraidWord(w.strands, tuple(L))


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[int] = []
    for k in w.letters:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return BraidWord(w.strands, tuple(out))


def markov_move(w: BraidWord, move: str, *, g: int | None = None, sign: int = 1) -> BraidWord:
    """``conjugate`` (by letter ``g``), ``stabilize`` (with ``sign``) or ``destabilize``."""
    if move == "conjugate":
        if g is None:
            raise BraidError("conjugation needs a generator letter g")
        return BraidWord(w.strands, (g,) + w.letters + (-g,))
    if move == "stabilize":
        if sign not in (1, -1):
            raise BraidError("stabilization sign must be +1 or -1")
        return BraidWord(w.strands + 1, w.letters + (sign * w.strands,))
    if move == "destabilize":
        top = w.strands - 1
        if not w.letters or abs(w.letters[-1]) != top or top < 1:
            raise BraidError("destabilization needs the word to end with sigma_{n-1}^{+-1}")
        if sum(1 for k in w.letters if abs(k) == top) != 1:
            raise BraidError("sigma_{n-1} must occur exactly once to destabilize")
        return BraidWord(w.strands - 1, w.letters[:-1])
    raise BraidError(f"unknown Markov move {move!r}")


def _burau_generator(n: int, k: int) -> Matrix:
    """Reduced Burau matrix of ``sigma_|k|^{sign k}`` in ``B_n``; size ``n-1``."""
    t = LaurentPoly.var("t")
    one = LaurentPoly.constant(1)
    m = identity(n - 1)
    i = abs(k) - 1  # row of the generator
    if k > 0:
        diag, left, right = -t, t, one
    else:
        tinv = t ** -1
        diag, left, right = -tinv, one, tinv
    m[i][i] = diag
    if i - 1 >= 0:
        m[i][i - 1] = left
    if i + 1 < n - 1:
        m[i][i + 1] = right
    return m


def burau_reduced(w: BraidWord) -> Matrix:
    if w.strands < 2:
        raise BraidError("the reduced Burau representation needs n >= 2")
    m = identity(w.strands - 1)
    for k in w.letters:
        m = matmul(m, _burau_generator(w.strands, k))
    return m


class FibrabilityVerdict(str, enum.Enum):
    FIBRED_BY_HOMOGENEITY = "fibred-by-homogeneity"
    BRAIDABLE_OPEN_BOOK = "braidable-open-book"
    NOT_FIBRED = "not-fibred"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class FibrabilityReport:
    homogeneous: bool
    strands_leq_3: bool
    monic_alexander: bool
    verdict: FibrabilityVerdict
    alexander: LaurentPoly

    def to_dict(self) -> dict:
        return {
            "homogeneous": self.homogeneous,
            "strands_leq_3": self.strands_leq_3,
            "monic_alexander": self.monic_alexander,
            "alexander": str(self.alexander),
            "verdict": self.verdict.value,
        }


def fibrability_report(w: BraidWord) -> FibrabilityReport:
    """Collect the sufficient and necessary fibredness checks for the closure of ``w``.

    A non-monic Alexander polynomial rules out fibredness, so it takes
    precedence over the braid-index condition.
    """
    from .seifert import alexander_from_burau

    _, comps = permutation_and_components(w)
    if comps != 1:
        raise BraidError(f"fibrability report needs a knot; closure has {comps} components")
    homogeneous = is_homogeneous(w)
    small = w.strands <= 3
    delta = alexander_from_burau(w)
    monic = is_monic(delta)
    if homogeneous:
        verdict = FibrabilityVerdict.FIBRED_BY_HOMOGENEITY
    elif not monic:
        verdict = FibrabilityVerdict.NOT_FIBRED
    elif small:
        verdict = FibrabilityVerdict.BRAIDABLE_OPEN_BOOK
    else:
        verdict = FibrabilityVerdict.INCONCLUSIVE
    return FibrabilityReport(homogeneous, small, monic, verdict, delta)


def letters_from(seq: Sequence[int], strands: int | None = None) -> BraidWord:
    seq = tuple(seq)
    return BraidWord(strands if strands is not None else 1 + max((abs(k) for k in seq), default=0), seq)
