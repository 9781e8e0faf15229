"""Reduced words in the free group on x1..x2g.

Letters are nonzero ints: ``k`` is x_k, ``-k`` its inverse.  Generator
x_{2i-1} is alpha_i and x_{2i} is beta_i, so the boundary word of S_{g,1}
is ``[1, 2, -1, -2, 3, 4, -3, -4, ...]``.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

Word = tuple


def reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def multiply(*words: Sequence[int]) -> Word:
    return reduce(x for w in words for x in w)


def power(word: Sequence[int], n: int) -> Word:
    if n < 0:
        return power(inverse(word), -n)
    return reduce(tuple(word) * n)


def cyclic_reduce(word: Sequence[int]) -> Word:
    w = reduce(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def rotations(word: Sequence[int]):
    w = tuple(word)
    for k in range(len(w)):
        yield w[k:] + w[:k]


def cyclic_normal_form(word: Sequence[int]) -> Word:
    """Lexicographically least rotation of the cyclic reduction."""
    w = cyclic_reduce(word)
    if not w:
        return w
    return min(rotations(w))


def conjugate(word: Sequence[int], by: Sequence[int]) -> Word:
    return multiply(by, word, inverse(by))


def commutator(x: Sequence[int], y: Sequence[int]) -> Word:
    return multiply(x, y, inverse(x), inverse(y))


def boundary_word(genus: int) -> Word:
    """prod_i [alpha_i, beta_i]."""
    w: list[int] = []
    for i in range(1, genus + 1):
        a, b = 2 * i - 1, 2 * i
        w += [a, b, -a, -b]
    return tuple(w)


def abelianize(word: Sequence[int], genus: int) -> list[int]:
    """Homology coordinates in the basis (alpha_1..alpha_g, beta_1..beta_g)."""
    v = [0] * (2 * genus)
    for x in word:
        k = abs(x)
        if k > 2 * genus:
            raise ValueError(f"letter {x} out of range for genus {genus}")
        i = (k - 1) // 2
        idx = i if k % 2 == 1 else genus + i
        v[idx] += 1 if x > 0 else -1
    return v


def generator_for_index(idx: int, genus: int) -> int:
    """Letter whose abelianization is the idx-th basis vector."""
    if idx < genus:
        return 2 * idx + 1
    return 2 * (idx - genus) + 2


_TOKEN = re.compile(r"([xX])(\d+)")


def parse(text: str) -> Word:
    """Parse "x1 x2 X1" (capital X = inverse); also accepts "a1 b2 A1 B2"."""
    letters = []
    for tok in text.replace(",", " ").split():
        m = _TOKEN.fullmatch(tok)
        if m:
            k = int(m.group(2))
            letters.append(k if m.group(1) == "x" else -k)
            continue
        m = re.fullmatch(r"([aAbB])(\d+)", tok)
        if not m:
            raise ValueError(f"bad token {tok!r}")
        i = int(m.group(2))
        k = 2 * i - 1 if m.group(1) in "aA" else 2 * i
        letters.append(k if m.group(1).islower() else -k)
    if any(x == 0 for x in letters):
        raise ValueError("generator index must be positive")
    return tuple(letters)


def format_word(word: Sequence[int]) -> str:
    return " ".join(f"x{x}" if x > 0 else f"X{-x}" for x in word)
