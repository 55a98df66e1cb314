"""Two-block words, bracket pairing, and the raising/lowering operators.

The word of a pair of label-decreasing blocks is all labels sorted
increasingly; when the same label occurs in both blocks the first-block
copy comes first.  First-block letters read as '(' and second-block
letters as ')', matched by the usual parenthesization.  The operators flip
one unpaired letter at a time between the blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import conjugate, normalize
from .paths import LatticePath, block_labels


@dataclass(frozen=True, slots=True)
class BracketWord:
    """Sorted two-block letter sequence with its bracket pairing.

    ``letters`` is a tuple of (label, block) with block 1 -> '(' and
    block 2 -> ')'.  ``partner[i]`` is the index paired with position i,
    or None when position i is unpaired.
    """

    letters: tuple[tuple[int, int], ...]
    partner: tuple[int | None, ...] = field(compare=False)

    @property
    def brackets(self) -> str:
        return "".join("(" if blk == 1 else ")" for _, blk in self.letters)

    def block(self, which: int) -> tuple[int, ...]:
        """Labels of the given block, in decreasing (add) order."""
        return tuple(
            lab for lab, blk in reversed(self.letters) if blk == which
        )

    def unpaired(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.partner) if p is None)


def _pair(letters) -> tuple[int | None, ...]:
    partner: list[int | None] = [None] * len(letters)
    stack: list[int] = []
    for i, (_, blk) in enumerate(letters):
        if blk == 1:
            stack.append(i)
        elif stack:
            j = stack.pop()
            partner[i] = j
            partner[j] = i
    return tuple(partner)


def _from_letters(letters) -> BracketWord:
    return BracketWord(tuple(letters), _pair(letters))


def word_of(p1_labels, p2_labels) -> BracketWord:
    """Merge two strictly decreasing label blocks into a sorted bracket word."""
    for labels in (p1_labels, p2_labels):
        labels = tuple(labels)
        if any(a <= b for a, b in zip(labels, labels[1:])):
            raise ValueError(f"block {labels} is not strictly decreasing")
        if len(set(labels)) != len(labels):
            raise ValueError(f"label repeated within one block: {labels}")
    letters = sorted(
        [(lab, 1) for lab in p1_labels] + [(lab, 2) for lab in p2_labels]
    )
    return _from_letters(letters)


def word_type(w: BracketWord) -> tuple[int, int]:
    """(unpaired left count, unpaired right count)."""
    left = sum(1 for i in w.unpaired() if w.letters[i][1] == 1)
    right = sum(1 for i in w.unpaired() if w.letters[i][1] == 2)
    return left, right


def raise_e(w: BracketWord) -> BracketWord:
    """Flip the rightmost unpaired ')' into '('."""
    rights = [i for i in w.unpaired() if w.letters[i][1] == 2]
    if not rights:
        raise ValueError("raising operator undefined: no unpaired right parenthesis")
    i = rights[-1]
    letters = list(w.letters)
    letters[i] = (letters[i][0], 1)
    return _from_letters(letters)


def lower_f(w: BracketWord) -> BracketWord:
    """Flip the leftmost unpaired '(' into ')'."""
    lefts = [i for i in w.unpaired() if w.letters[i][1] == 1]
    if not lefts:
        raise ValueError("lowering operator undefined: no unpaired left parenthesis")
    i = lefts[0]
    letters = list(w.letters)
    letters[i] = (letters[i][0], 2)
    return _from_letters(letters)


def flip_positions(w: BracketWord, positions) -> BracketWord:
    """Swap the block of each listed position (1 <-> 2) and re-pair."""
    letters = list(w.letters)
    for i in positions:
        lab, blk = letters[i]
        letters[i] = (lab, 3 - blk)
    return _from_letters(letters)


def pair_word(path: LatticePath, i: int) -> BracketWord:
    """Bracket word of adjacent blocks (i, i+1) of a path."""
    return word_of(block_labels(path, i), block_labels(path, i + 1))


def fits(path: LatticePath, mu) -> bool:
    """Whether the path's blocks form a column-strict tableau of shape mu.

    Operationally: every adjacent block pair's word has no unpaired right
    parenthesis.  The path's ascent composition must equal the column
    lengths of mu.
    """
    mu = normalize(mu)
    if tuple(path.ascents) != conjugate(mu):
        raise ValueError(
            f"ascents {path.ascents} do not match column lengths of {mu}"
        )
    for i in range(1, len(path.ascents)):
        if word_type(pair_word(path, i))[1] != 0:
            return False
    return True


def render(w: BracketWord, mark: int | None = None) -> str:
    """Bracket string for debugging; ``mark`` wraps one position in [ ]."""
    out = []
    for i, (_, blk) in enumerate(w.letters):
        ch = "(" if blk == 1 else ")"
        out.append(f"[{ch}]" if i == mark else ch)
    return "".join(out)
