"""Braid words, framed braids, closures and the diagram surgery used by the
skein evaluators.

A braid word on n strands is a sequence of nonzero integers: letter +i is the
positive crossing of the strands at positions i, i+1 (the strand at position i
passes over), letter -i the negative one.  Strands and generator indices are
1-based, matching the usual sigma_i notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if a == 0 or abs(a) > self.strands - 1:
                raise ValueError(f"letter {a} out of range for {self.strands} strands")

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Underlying permutation as a tuple of images (0-based positions):
        perm[start] is the final position of the strand entering at start."""
        pos = list(range(self.strands))  # strand -> current position
        for a in self.letters:
            i = abs(a) - 1
            # find strands at positions i, i+1 and swap them
            s1 = pos.index(i)
            s2 = pos.index(i + 1)
            pos[s1], pos[s2] = pos[s2], pos[s1]
        return tuple(pos)

    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def with_letters(self, letters: Iterable[int]) -> "BraidWord":
        return BraidWord(self.strands, tuple(letters))


def exponent_sum(b: BraidWord) -> int:
    return b.exponent_sum()


def _cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    n = len(perm)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        cyc = []
        j = s
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)  # 1-based strand labels
            j = perm[j]
        out.append(tuple(sorted(cyc)))
    out.sort()
    return out


@dataclass(frozen=True)
class LinkClosure:
    """Component structure of a braid closure: the cycle partition of the
    underlying permutation plus the matrix of pairwise linking numbers
    (half the signed count of inter-component crossings, always integral)."""

    word: BraidWord
    components: tuple[tuple[int, ...], ...]
    linking: tuple[tuple[int, ...], ...]

    def component_of(self, strand: int) -> int:
        for k, comp in enumerate(self.components):
            if strand in comp:
                return k
        raise ValueError(f"no strand {strand}")

    def lk(self, i: int, j: int) -> int:
        return self.linking[i][j]

    def total_linking(self) -> int:
        n = len(self.components)
        return sum(self.linking[i][j] for i in range(n) for j in range(i + 1, n))


def _scan_crossings(b: BraidWord):
    """Yield (position, letter, strand_at_i, strand_at_i+1) while tracking the
    running permutation; strands are 1-based entry labels."""
    occupant = list(range(1, b.strands + 1))  # position -> strand
    for p, a in enumerate(b.letters):
        i = abs(a) - 1
        s1, s2 = occupant[i], occupant[i + 1]
        yield p, a, s1, s2
        occupant[i], occupant[i + 1] = s2, s1


def closure_components(b: BraidWord) -> LinkClosure:
    comps = _cycles(b.permutation())
    comp_of = {}
    for k, comp in enumerate(comps):
        for s in comp:
            comp_of[s] = k
    m = len(comps)
    double = [[0] * m for _ in range(m)]
    for _, a, s1, s2 in _scan_crossings(b):
        c1, c2 = comp_of[s1], comp_of[s2]
        if c1 != c2:
            sign = 1 if a > 0 else -1
            double[c1][c2] += sign
            double[c2][c1] += sign
    for i in range(m):
        for j in range(m):
            if double[i][j] % 2:
                raise AssertionError("inter-component crossing count must be even")
    linking = tuple(tuple(v // 2 for v in row) for row in double)
    return LinkClosure(b, tuple(comps), linking)


def markov_conjugate(b: BraidWord, g: BraidWord) -> BraidWord:
    """g^-1 b g; the closure is unchanged."""
    if g.strands != b.strands:
        raise ValueError("strand counts differ")
    return g.inverse() * b * g


def markov_stabilize(b: BraidWord, sign: int) -> BraidWord:
    """Add a strand and the letter +/-n; the closure is unchanged."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return BraidWord(b.strands + 1, b.letters + (sign * b.strands,))


def conway_triple(b: BraidWord, position: int) -> tuple[BraidWord, BraidWord, BraidWord]:
    """(L+, L-, L0) at one letter: the braid with that crossing positive,
    negative, and deleted."""
    if not 0 <= position < len(b.letters):
        raise IndexError(f"position {position} out of range")
    a = b.letters[position]
    plus = list(b.letters)
    minus = list(b.letters)
    plus[position] = abs(a)
    minus[position] = -abs(a)
    zero = b.letters[:position] + b.letters[position + 1:]
    return b.with_letters(plus), b.with_letters(minus), b.with_letters(zero)


def mixed_crossing_positions(b: BraidWord) -> list[int]:
    """Positions whose two strands close up into different components."""
    closure = closure_components(b)
    comp_of = {s: closure.component_of(s) for s in range(1, b.strands + 1)}
    return [p for p, _, s1, s2 in _scan_crossings(b) if comp_of[s1] != comp_of[s2]]


def delete_components(b: BraidWord, keep: Iterable[int]) -> BraidWord:
    """Erase the strands of the discarded closure components.

    ``keep`` holds component indices into ``closure_components(b).components``.
    Kept strands are reindexed order-preservingly; any letter touching a
    discarded strand disappears (crossings with an erased strand are smoothed
    away by the erasure, which does not permute the surviving strands among
    themselves).
    """
    closure = closure_components(b)
    keep = set(keep)
    if not keep:
        raise ValueError("must keep at least one component")
    if not keep <= set(range(len(closure.components))):
        raise ValueError("unknown component index")
    kept_strands = {s for k in keep for s in closure.components[k]}
    occupant = list(range(1, b.strands + 1))
    letters = []
    for a in b.letters:
        i = abs(a) - 1
        if occupant[i] in kept_strands and occupant[i + 1] in kept_strands:
            new_i = sum(1 for p in range(i) if occupant[p] in kept_strands) + 1
            letters.append(new_i if a > 0 else -new_i)
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    return BraidWord(len(kept_strands), tuple(letters))


@dataclass(frozen=True)
class FramedBraid:
    """Braid word with per-strand framings modulo d (the framing of strand k
    is attached at its entry point; a word splits as framings times braid)."""

    d: int
    framings: tuple[int, ...]
    word: BraidWord

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("framing modulus must be positive")
        if len(self.framings) != self.word.strands:
            raise ValueError("one framing per strand required")
        object.__setattr__(self, "framings", tuple(f % self.d for f in self.framings))

    @staticmethod
    def classical(b: BraidWord, d: int) -> "FramedBraid":
        return FramedBraid(d, (0,) * b.strands, b)

    def conjugate_by_braid(self, g: BraidWord) -> "FramedBraid":
        """g^-1 (t^a w) g = t^(a') (g^-1 w g): framings follow the strands."""
        perm = g.permutation()
        new_fr = [0] * self.word.strands
        for s in range(self.word.strands):
            new_fr[perm[s]] = self.framings[s]
        return FramedBraid(self.d, tuple(new_fr), markov_conjugate(self.word, g))

    def conjugate_by_framing(self, strand: int) -> "FramedBraid":
        """Conjugation by the framing generator t_strand; only framings move.

        Pushing t_j from the right through the word lands it on the strand
        that exits at position j, i.e. the inverse of the strand-tracking
        permutation.
        """
        perm = self.word.permutation()
        new_fr = list(self.framings)
        new_fr[strand - 1] -= 1
        new_fr[perm.index(strand - 1)] += 1
        return FramedBraid(self.d, tuple(new_fr), self.word)

    def stabilize(self, sign: int) -> "FramedBraid":
        return FramedBraid(self.d, self.framings + (0,), markov_stabilize(self.word, sign))


def parse_braid_letters(text: str) -> tuple[int, ...]:
    """Whitespace or comma separated signed integers."""
    cleaned = text.replace(",", " ").split()
    try:
        return tuple(int(t) for t in cleaned)
    except ValueError as exc:
        raise ValueError(f"bad braid word {text!r}: {exc}") from None
