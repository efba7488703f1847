"""Free-group words over indexed generator symbols.

Words are stored run-length encoded: a sequence of (symbol, exponent) runs
with nonzero exponents and no two consecutive runs sharing a symbol.  All
operations keep words freely reduced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Gen:
    """A generator symbol: a name plus an optional tuple of integer indices."""

    name: str
    indices: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.indices:
            return "%s[%s]" % (self.name, ",".join(str(i) for i in self.indices))
        return self.name


@dataclass(frozen=True)
class Word:
    """A freely reduced word, as a tuple of (generator, nonzero exponent) runs."""

    runs: tuple[tuple[Gen, int], ...] = ()

    def __post_init__(self):
        for g, e in self.runs:
            if e == 0:
                raise ValueError("zero exponent in word run for %s" % g)
        for (g1, _), (g2, _) in zip(self.runs, self.runs[1:]):
            if g1 == g2:
                raise ValueError("adjacent runs share generator %s" % g1)

    def __len__(self) -> int:
        # letter length, not run count
        return sum(abs(e) for _, e in self.runs)

    def __bool__(self) -> bool:
        return bool(self.runs)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def __str__(self) -> str:
        return word_to_text(self)

    def letters(self) -> Iterator[tuple[Gen, int]]:
        """Yield single letters (gen, ±1) left to right."""
        for g, e in self.runs:
            s = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, s

    def generators(self) -> set[Gen]:
        return {g for g, _ in self.runs}


IDENTITY = Word()


def gen(name: str, *indices: int) -> Gen:
    return Gen(name, tuple(indices))


def letter(g: Gen, exp: int = 1) -> Word:
    if exp == 0:
        return IDENTITY
    return Word(((g, exp),))


def free_reduce(runs: Iterable[tuple[Gen, int]]) -> Word:
    out: list[list] = []
    for g, e in runs:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return Word(tuple((g, e) for g, e in out))


def multiply(*ws: Word) -> Word:
    runs: list[tuple[Gen, int]] = []
    for w in ws:
        runs.extend(w.runs)
    return free_reduce(runs)


def invert(w: Word) -> Word:
    return Word(tuple((g, -e) for g, e in reversed(w.runs)))


def power(w: Word, k: int) -> Word:
    if k < 0:
        return power(invert(w), -k)
    return multiply(*([w] * k))


def conjugate(w: Word, by: Word) -> Word:
    """by * w * by^-1"""
    return multiply(by, w, invert(by))


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a b a^-1 b^-1"""
    return multiply(a, b, invert(a), invert(b))


def cyclic_reduce(w: Word) -> Word:
    """Strip matching first/last letters until the word is cyclically reduced."""
    letters = list(w.letters())
    while len(letters) >= 2 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
        letters = letters[1:-1]
    return free_reduce(letters)


def exponent_sum(w: Word, g: Gen) -> int:
    return sum(e for h, e in w.runs if h == g)


def exponent_vector(w: Word, gens: Sequence[Gen]) -> tuple[int, ...]:
    idx = {g: i for i, g in enumerate(gens)}
    out = [0] * len(gens)
    for g, e in w.runs:
        if g not in idx:
            raise ValueError("word uses generator %s outside the given basis" % g)
        out[idx[g]] += e
    return tuple(out)


def total_weight(w: Word, weights: dict[Gen, int]) -> int:
    return sum(weights[g] * e for g, e in w.runs)


def substitute(w: Word, images: dict[Gen, Word]) -> Word:
    """Replace each generator by its image word (identity for missing gens)."""
    runs: list[tuple[Gen, int]] = []
    for g, e in w.runs:
        img = images.get(g)
        if img is None:
            runs.append((g, e))
        else:
            runs.extend(power(img, e).runs)
    return free_reduce(runs)


_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"(?:\[(?P<idx>-?\d+(?:\s*,\s*-?\d+)*)\])?"
    r"(?:\^(?P<exp>-?\d+))?|(?P<bad>\S))"
)


def parse_word(text: str) -> Word:
    """Parse the ``s[1]^2 s[2] s[1]^-3`` word syntax.  ``1`` is the identity."""
    if text.strip() in ("", "1"):
        return IDENTITY
    runs: list[tuple[Gen, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or not m.group(0).strip():
            break
        if m.group("bad"):
            raise ValueError("unexpected character %r at position %d" % (m.group("bad"), m.start("bad")))
        name = m.group("name")
        idx = m.group("idx")
        indices = tuple(int(p) for p in idx.split(",")) if idx else ()
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
        if exp == 0:
            raise ValueError("zero exponent for %s at position %d" % (name, m.start()))
        runs.append((Gen(name, indices), exp))
        pos = m.end()
    if text[pos:].strip():
        raise ValueError("trailing garbage in word: %r" % text[pos:])
    return free_reduce(runs)


def word_to_text(w: Word) -> str:
    if not w.runs:
        return "1"
    parts = []
    for g, e in w.runs:
        parts.append(str(g) if e == 1 else "%s^%d" % (g, e))
    return " ".join(parts)
