"""Braid words and the coloring machinery of their closures.

A word is written "n: e1 e2 ... ek" with n strands and nonzero letters
whose magnitudes stay below n; the sign picks the crossing handedness.
Letter i sends the ordered pair of colors at positions (i, i+1) through
the biquandle's pair map, letter -i through its inverse.  Colorings of the
closed-up braid are exactly the fixed points of the composite map on the
n-fold product of the carrier.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .biquandles import Biquandle
from .errors import FormatError, ResourceError

DEFAULT_BUDGET = 10 ** 8
_CHUNK = 1 << 15


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple

    def __str__(self):
        return render_braid(self)


def parse_braid(text: str) -> BraidWord:
    """Parse "n: e1 e2 ... ek".  Reports the offending token on failure."""
    if not isinstance(text, str) or ":" not in text:
        raise FormatError(f'braid word must look like "n: e1 e2 ...", got {text!r}')
    head, _, tail = text.partition(":")
    try:
        strands = int(head.strip())
    except ValueError:
        raise FormatError(f"strand count {head.strip()!r} is not an integer") from None
    if strands < 1:
        raise FormatError(f"strand count must be positive, got {strands}")
    letters = []
    for pos, token in enumerate(tail.split(), start=1):
        try:
            e = int(token)
        except ValueError:
            raise FormatError(f"letter {pos} ({token!r}) is not an integer") from None
        if e == 0:
            raise FormatError(f"letter {pos} is zero; letters must be nonzero")
        if abs(e) > strands - 1:
            raise FormatError(
                f"letter {pos} ({e}) out of range for {strands} strands "
                f"(magnitude must be at most {strands - 1})"
            )
        letters.append(e)
    return BraidWord(strands, tuple(letters))


def render_braid(word: BraidWord) -> str:
    body = " ".join(str(e) for e in word.letters)
    return f"{word.strands}: {body}" if body else f"{word.strands}:"


def braid_permutation(word: BraidWord) -> list:
    """perm[p] is the top position reached by the strand entering at bottom
    position p (0-based)."""
    occupant = list(range(word.strands))
    for e in word.letters:
        i = abs(e) - 1
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    perm = [0] * word.strands
    for pos, strand in enumerate(occupant):
        perm[strand] = pos
    return perm


def apply_letter(q: Biquandle, state: tuple, letter: int) -> tuple:
    """Send the colors at positions (|letter|-1, |letter|) through the pair
    map (positive letter) or its inverse (negative letter)."""
    n = len(state)
    if letter == 0 or abs(letter) > n - 1:
        raise FormatError(f"letter {letter} invalid on {n} strands")
    i = abs(letter) - 1
    a, b = state[i], state[i + 1]
    c, d = q.yb(a, b) if letter > 0 else q.yb_inv(a, b)
    out = list(state)
    out[i], out[i + 1] = c, d
    return tuple(out)


def induced_map(q: Biquandle, word: BraidWord):
    """The composite of the letters, left to right, as a map on states."""

    def run(state):
        if len(state) != word.strands:
            raise FormatError(
                f"state has {len(state)} coordinates, word has {word.strands} strands"
            )
        for e in word.letters:
            state = apply_letter(q, state, e)
        return state

    return run


# ---------------------------------------------------------------------------
# finite fixed points

def fixed_points_finite(q: Biquandle, word: BraidWord,
                        budget: int = DEFAULT_BUDGET) -> list:
    """All colorings of the closure: states with f(state) = state, listed in
    ascending odometer order (coordinate 0 least significant)."""
    if not q.is_finite:
        raise FormatError("exhaustive enumeration needs a finite biquandle")
    n = word.strands
    order = q.order
    total = order ** n
    if total > budget:
        raise ResourceError(
            f"state space {order}^{n} = {total} exceeds budget {budget}"
        )

    steps = []
    for e in word.letters:
        tables = q.r_tables() if e > 0 else q.rinv_tables()
        steps.append((abs(e) - 1, tables))

    weights = order ** np.arange(n, dtype=np.int64)
    found = []
    for start in range(0, total, _CHUNK):
        ks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        cols = (ks[:, None] // weights[None, :]) % order
        state = cols.copy()
        for i, (t1, t2) in steps:
            a = state[:, i].copy()
            b = state[:, i + 1]
            state[:, i] = t1[a, b]
            state[:, i + 1] = t2[a, b]
        fixed = (state == cols).all(axis=1)
        for row in cols[fixed]:
            found.append(tuple(int(v) for v in row))
    return found


# ---------------------------------------------------------------------------
# moves that preserve the closure

def markov_conjugate(word: BraidWord, g: int) -> BraidWord:
    """Conjugate by generator g: the closure of g^-1 w g is the same link."""
    if g == 0 or abs(g) > word.strands - 1:
        raise FormatError(f"conjugating letter {g} invalid on {word.strands} strands")
    return BraidWord(word.strands, (-g,) + word.letters + (g,))


def markov_stabilize(word: BraidWord, sign: int = 1) -> BraidWord:
    """Add a strand and one crossing of the given sign between the old last
    strand and the new one."""
    if sign not in (1, -1):
        raise FormatError(f"stabilization sign must be +1 or -1, got {sign}")
    if word.strands < 1:
        raise FormatError("cannot stabilize an empty braid")
    return BraidWord(word.strands + 1, word.letters + (sign * word.strands,))
