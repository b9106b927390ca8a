"""Compositions over the rational part sets and their correspondence with paths.

The part set of a parameter r/s is {1} together with the sizes
p + ceil(p*s/r) for p >= 1 (the full set) or 1 <= p <= r (the capped set).
Compositions of n over the full set correspond one-to-one with rational-family
members of semilength n+1, and over the capped set with restricted-family
members: the part 1 becomes the arch UD, a larger part of size
p + ceil(ps/r) becomes the lead-in U(UD)^p(DU)^(ceil(ps/r)-1)D, and a final
UD arch closes the path.
"""

from __future__ import annotations

from dataclasses import dataclass

from rdyck.classes import PathClass, member
from rdyck.core import DyckPath, RationalParam, min_valleys, part_size

__all__ = [
    "Composition",
    "PartSet",
    "comp_to_path",
    "enumerate_compositions",
    "parts_upto",
    "path_to_comp",
]


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive parts; the empty tuple is the composition of 0."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for part in self.parts:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, got {part!r}")

    def total(self) -> int:
        return sum(self.parts)

    def to_text(self) -> str:
        """Parts joined by '+'; the empty composition renders as '0'."""
        return "+".join(str(p) for p in self.parts) if self.parts else "0"

    @classmethod
    def from_text(cls, text: str) -> "Composition":
        """Inverse of to_text."""
        if text == "0":
            return cls()
        tokens = text.split("+")
        if not all(token.isdigit() for token in tokens):
            raise ValueError(f"bad composition {text!r}; expected '0' or '+'-joined parts")
        return cls(tuple(int(token) for token in tokens))


@dataclass(frozen=True)
class PartSet:
    """{1} plus the part sizes p + ceil(ps/r); all p >= 1, or p <= r when finite."""

    q: RationalParam
    finite: bool


def parts_upto(part_set: PartSet, limit: int) -> tuple[int, ...]:
    """All part values <= limit, ascending (part sizes are strictly increasing in p)."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    values = [1]
    p = 1
    while not part_set.finite or p <= part_set.q.r:
        size = part_size(part_set.q, p)
        if size > limit:
            break
        values.append(size)
        p += 1
    return tuple(values)


def enumerate_compositions(part_set: PartSet, n: int) -> tuple[Composition, ...]:
    """Every composition of ``n`` over the part set, in lexicographic part order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    parts = parts_upto(part_set, n) if n else ()
    found: list[Composition] = []
    chosen: list[int] = []

    def extend(remaining: int) -> None:
        if remaining == 0:
            found.append(Composition(tuple(chosen)))
            return
        for part in parts:
            if part > remaining:
                break
            chosen.append(part)
            extend(remaining - part)
            chosen.pop()

    extend(n)
    return tuple(found)


def comp_to_path(q: RationalParam, comp: Composition) -> DyckPath:
    """Image of a composition of n: a rational-family member of semilength n+1.

    Each part contributes its lead-in (part 1 the arch UD, a part of size
    p + ceil(ps/r) the lead-in U(UD)^p(DU)^(ceil(ps/r)-1)D) and a final UD
    arch closes the path.  When every part lies in the capped part set the
    image is a restricted-family member.
    """
    pieces = []
    for part in comp.parts:
        if part == 1:
            pieces.append("UD")
        else:
            peaks = _peaks_for(q, part)
            valleys = min_valleys(q, peaks)
            pieces.append("U" + "UD" * peaks + "DU" * (valleys - 1) + "D")
    pieces.append("UD")
    return DyckPath("".join(pieces))


def path_to_comp(q: RationalParam, path: DyckPath) -> Composition:
    """Recover the composition whose image is ``path``; inverse of comp_to_path.

    Greedy left-to-right parse of the ground-level factors: a bare UD arch is
    the part 1, and a factor U(UD)^p D opens the part p + ceil(ps/r), claiming
    the ceil(ps/r) - 1 arches after it as its remaining valleys (membership
    guarantees they are there).  The final factor is the closing arch and
    carries no part.
    """
    if not path.steps:
        raise ValueError("the empty path corresponds to no composition")
    if not member(q, PathClass.RATIONAL, path):
        raise ValueError(f"path is not a rational-family member for {q}: {path.steps!r}")
    factors = _ground_factors(path)
    factors.pop()  # the closing UD arch, guaranteed by membership
    parts = []
    index = 0
    while index < len(factors):
        factor = factors[index]
        if factor == "UD":
            parts.append(1)
            index += 1
        else:
            peaks = (len(factor) - 2) // 2
            valleys = min_valleys(q, peaks)
            parts.append(peaks + valleys)
            index += valleys  # this factor plus its valleys-1 trailing arches
    return Composition(tuple(parts))


def _ground_factors(path: DyckPath) -> list[str]:
    # Split at every return to the x-axis.
    out = []
    level = start = 0
    for i, ch in enumerate(path.steps):
        level += 1 if ch == "U" else -1
        if level == 0:
            out.append(path.steps[start : i + 1])
            start = i + 1
    return out


def _peaks_for(q: RationalParam, size: int) -> int:
    # Invert part_size by monotone search; part sizes are strictly increasing.
    p = 1
    while True:
        got = part_size(q, p)
        if got == size:
            return p
        if got > size:
            raise ValueError(f"{size} is not a part size for {q}")
        p += 1
