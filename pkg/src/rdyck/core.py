"""Dyck paths of height at most two: parsing, measures, and block structure.

A Dyck path is a lattice path over the steps U = (1, 1) and D = (1, -1) that
starts and ends on the x-axis and never dips below it.  Everything in this
package lives inside the family of paths whose height never exceeds two.
Any such path P other than the empty path admits a unique maximal block
decomposition

    P = U (UD)^p1 (DU)^v1 (UD)^p2 (DU)^v2 ... (UD)^pk (DU)^vk D

where the (UD) runs are excursions from level 1 up to level 2 ("peaks") and
the (DU) runs are dips down to the x-axis ("valleys").  Maximality means the
interior runs are nonempty (p_i >= 1 for i >= 2, v_i >= 1 for i <= k-1); only
the leading peak run and the trailing valley run may be empty, and the path
UD is the k = 0 case.

The membership rules of :mod:`rdyck.classes` are all phrased in terms of this
block view, together with a coprime pair r/s (:class:`RationalParam`) and its
derived quantities: a run of p peaks demands at least ceil(p*s/r) valleys
after it (:func:`min_valleys`), and a run plus its minimal valleys occupies
:func:`part_size` units of semilength.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "DyckPath",
    "EMPTY_PATH",
    "Factorization",
    "RationalParam",
    "affine_valleys",
    "defactorize",
    "factorize",
    "height",
    "min_valleys",
    "parse_path",
    "part_size",
    "path_sort_key",
    "render_path",
    "semilength",
    "step_sort_key",
    "valley_slope",
]

_STEP_ORDER = str.maketrans("UD", "01")


@dataclass(frozen=True)
class DyckPath:
    """A validated Dyck path, stored as its text over the alphabet {U, D}."""

    steps: str = ""

    def __post_init__(self) -> None:
        level = 0
        for ch in self.steps:
            if ch == "U":
                level += 1
            elif ch == "D":
                level -= 1
                if level < 0:
                    raise ValueError(f"path dips below the x-axis: {self.steps!r}")
            else:
                raise ValueError(f"invalid step {ch!r}; expected 'U' or 'D'")
        if level:
            raise ValueError(f"unbalanced path ({level} unmatched up steps): {self.steps!r}")

    def __str__(self) -> str:
        return self.steps


EMPTY_PATH = DyckPath("")


@dataclass(frozen=True)
class RationalParam:
    """A positive rational r/s in lowest terms; the parameter of every family here.

    Reduction is not done silently: r itself bounds peak-run lengths and sets
    prefix sizes, so 2/4 and 1/2 would describe different families.
    """

    r: int
    s: int

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or not isinstance(self.s, int):
            raise ValueError("r and s must be integers")
        if self.r < 1 or self.s < 1:
            raise ValueError(f"r and s must be positive, got {self.r}/{self.s}")
        if math.gcd(self.r, self.s) != 1:
            raise ValueError(f"r/s must be in lowest terms, got {self.r}/{self.s}")

    @classmethod
    def from_string(cls, text: str) -> "RationalParam":
        """Parse 'R/S' text, e.g. '3/4'."""
        head, sep, tail = text.partition("/")
        if not sep:
            raise ValueError(f"expected 'R/S', got {text!r}")
        try:
            r, s = int(head), int(tail)
        except ValueError:
            raise ValueError(f"expected integers in 'R/S', got {text!r}") from None
        return cls(r, s)

    def __str__(self) -> str:
        return f"{self.r}/{self.s}"


@dataclass(frozen=True)
class Factorization:
    """The maximal peak/valley runs (p_i, v_i) of a nonempty height-<=2 path.

    The path UD has no blocks at all; a single block (0, 0) is rejected so
    that every path has exactly one encoding.
    """

    blocks: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        last = len(self.blocks) - 1
        for i, (peaks, valleys) in enumerate(self.blocks):
            if peaks < 0 or valleys < 0:
                raise ValueError(f"block counts must be non-negative, got {(peaks, valleys)}")
            if i > 0 and peaks == 0:
                raise ValueError("non-maximal blocks: interior peak run is empty")
            if i < last and valleys == 0:
                raise ValueError("non-maximal blocks: interior valley run is empty")
        if self.blocks == ((0, 0),):
            raise ValueError("the path UD is encoded by an empty block sequence")


def parse_path(text: str) -> DyckPath:
    """Validate a U/D string as a Dyck path; the empty string is the empty path."""
    return DyckPath(text)


def render_path(path: DyckPath) -> str:
    """Inverse of parse_path: the step text of ``path`` ('' for the empty path)."""
    return path.steps


def height(path: DyckPath) -> int:
    """Largest level the path reaches; 0 for the empty path."""
    level = top = 0
    for ch in path.steps:
        level += 1 if ch == "U" else -1
        if level > top:
            top = level
    return top


def semilength(path: DyckPath) -> int:
    """Half the number of steps."""
    return len(path.steps) // 2


def factorize(path: DyckPath) -> Factorization:
    """Split a nonempty height-<=2 path into its maximal block runs.

    After stripping the outer U...D, the interior oscillates around level 1
    in two-step moves (anything else would leave [0, 2]), so it reads off as
    a sequence of UD (peak) and DU (valley) atoms whose maximal runs are the
    blocks.
    """
    if not path.steps:
        raise ValueError("the empty path has no block factorization")
    if height(path) > 2:
        raise ValueError(f"block factorization needs height <= 2: {path.steps!r}")
    inner = path.steps[1:-1]
    runs: list[list[int]] = []  # [is_peak, run length]
    for i in range(0, len(inner), 2):
        is_peak = 1 if inner[i] == "U" else 0
        if runs and runs[-1][0] == is_peak:
            runs[-1][1] += 1
        else:
            runs.append([is_peak, 1])
    if runs and not runs[0][0]:
        runs.insert(0, [1, 0])
    if runs and runs[-1][0]:
        runs.append([0, 0])
    pairs = tuple((runs[i][1], runs[i + 1][1]) for i in range(0, len(runs), 2))
    return Factorization(pairs)


def defactorize(fact: Factorization) -> DyckPath:
    """Rebuild the unique path with the given blocks; inverse of factorize."""
    mid = "".join("UD" * peaks + "DU" * valleys for peaks, valleys in fact.blocks)
    return DyckPath(f"U{mid}D")


def min_valleys(q: RationalParam, peaks: int) -> int:
    """Fewest valleys demanded after ``peaks`` consecutive peaks: ceil(peaks*s/r).

    Computed in exact integer arithmetic as (peaks*s + r - 1) // r.
    """
    if peaks < 1:
        raise ValueError(f"peak count must be >= 1, got {peaks}")
    return (peaks * q.s + q.r - 1) // q.r


def part_size(q: RationalParam, peaks: int) -> int:
    """Semilength taken by a run of ``peaks`` peaks plus its minimal valleys.

    Equals peaks + min_valleys(q, peaks) and is strictly increasing in peaks;
    these are exactly the part values > 1 of :mod:`rdyck.compositions`.
    """
    return peaks + min_valleys(q, peaks)


def valley_slope(q: RationalParam) -> int | None:
    """The integer t with s = t*r + 1, when it exists (None otherwise).

    When defined, min_valleys(q, j) is the affine function j*t + 1 on
    1 <= j <= r, which is what makes the semilength-raising map of
    :mod:`rdyck.bijection` invertible.  t = 0 (s = 1) is allowed.
    """
    if (q.s - 1) % q.r == 0:
        return (q.s - 1) // q.r
    return None


def affine_valleys(q: RationalParam, j: int) -> int:
    """min_valleys(q, j) through the affine form j*t + 1; both routes must agree."""
    t = valley_slope(q)
    if t is None:
        raise ValueError(f"{q} has no integer t with s = t*r + 1")
    if not 1 <= j <= q.r:
        raise ValueError(f"j must be within 1..{q.r}, got {j}")
    by_slope = j * t + 1
    if by_slope != min_valleys(q, j):
        raise RuntimeError(f"affine valley count disagrees with the ceiling at j={j} for {q}")
    return by_slope


def step_sort_key(steps: str) -> str:
    """Sort key for step text ordering U before D."""
    return steps.translate(_STEP_ORDER)


def path_sort_key(path: DyckPath) -> tuple[int, str]:
    """Sort key ordering paths by semilength, then lexicographically with U < D."""
    return (len(path.steps), step_sort_key(path.steps))
