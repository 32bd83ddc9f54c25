"""Line-delimited catalogs of braid-word link presentations, and pair files
for difference computations.

Catalog line format (whitespace separated, ``#`` starts a comment):

    name  strands  orientation_tag  letter letter ...

``orientation_tag`` is free-form and documents the orientation convention of
the source table (``-`` for none).  Pair-file lines hold two catalog names
and optionally a reference polynomial (the canonical expression grammar) to
compare the computed difference against:

    nameA  nameB  [reference expression without spaces]
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .braids import BraidWord


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    strands: int
    word: tuple[int, ...]
    orientation_tag: str

    def braid(self) -> BraidWord:
        return BraidWord(self.strands, self.word)


class CatalogError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_catalog(text: str) -> dict[str, CatalogEntry]:
    entries: dict[str, CatalogEntry] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) < 3:
            raise CatalogError("expected: name strands tag letters...", lineno)
        name, strands_s, tag = fields[0], fields[1], fields[2]
        try:
            strands = int(strands_s)
        except ValueError:
            raise CatalogError(f"bad strand count {strands_s!r}", lineno) from None
        try:
            word = tuple(int(x) for x in fields[3:])
        except ValueError as exc:
            raise CatalogError(f"bad braid letter: {exc}", lineno) from None
        try:
            entry = CatalogEntry(name, strands, word, tag)
            entry.braid()
        except ValueError as exc:
            raise CatalogError(str(exc), lineno) from None
        if name in entries:
            raise CatalogError(f"duplicate name {name!r}", lineno)
        entries[name] = entry
    return entries


def parse_pairs(text: str) -> list[tuple[str, str, str | None]]:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) not in (2, 3):
            raise CatalogError("expected: nameA nameB [reference]", lineno)
        pairs.append((fields[0], fields[1], fields[2] if len(fields) == 3 else None))
    return pairs


def load_bundled(name: str) -> str:
    """Text of a data file shipped with the package."""
    return resources.files("yhecke.data").joinpath(name).read_text()
