"""Free-group words as tuples of signed generator indices.

``+i`` stands for the generator ``x_i`` and ``-i`` for its inverse, so
``(2, 1, -2, -1)`` is the commutator ``x2 x1 x2^-1 x1^-1``.
"""

from __future__ import annotations

from typing import Callable, Iterable, Tuple

Word = Tuple[int, ...]


def free_reduce(word: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until none remain.

    >>> free_reduce((2, 1, -1, -2, 3))
    (3,)
    >>> free_reduce((1, -1))
    ()
    """
    stack: list[int] = []
    for letter in word:
        if letter == 0:
            raise ValueError("0 is not a generator index")
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def inverse(word: Iterable[int]) -> Word:
    return tuple(-letter for letter in reversed(tuple(word)))


def concat(*words: Iterable[int]) -> Word:
    out: list[int] = []
    for w in words:
        out.extend(w)
    return free_reduce(out)


def commutator(a: Iterable[int], b: Iterable[int]) -> Word:
    """``[a, b] = a b a^-1 b^-1``, freely reduced."""
    a, b = tuple(a), tuple(b)
    return concat(a, b, inverse(a), inverse(b))


def conjugate(word: Iterable[int], by: Iterable[int]) -> Word:
    """``by * word * by^-1``."""
    by = tuple(by)
    return concat(by, word, inverse(by))


def cyclic_reduce(word: Iterable[int]) -> Word:
    w = free_reduce(word)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i : j + 1]


def _letter_key(letter: int) -> tuple[int, int]:
    # order x1 < x1^-1 < x2 < x2^-1 < ...
    return (abs(letter), 0 if letter > 0 else 1)


def cyclic_canonical(word: Iterable[int]) -> Word:
    """Canonical representative of a relator up to rotation and inversion.

    Two relators have the same canonical form iff they define the same
    normal closure generator up to conjugation and inversion, which is how
    relator sets are compared literally.

    >>> cyclic_canonical((1, 2, -1))
    (2,)
    >>> cyclic_canonical((2, 1, -2, -1)) == cyclic_canonical((1, 2, -1, -2))
    True
    """
    w = cyclic_reduce(word)
    if not w:
        return ()
    candidates = []
    for base in (w, inverse(w)):
        for k in range(len(base)):
            candidates.append(base[k:] + base[:k])
    best = min(candidates, key=lambda c: [_letter_key(x) for x in c])
    return best


def exponent_sum(word: Iterable[int], g: int) -> int:
    return sum(1 if x == g else -1 if x == -g else 0 for x in word)


def generators_in(word: Iterable[int]) -> set[int]:
    return {abs(x) for x in word}


def rename(word: Iterable[int], mapping: dict[int, int]) -> Word:
    """Relabel generators; ``mapping`` sends old index to new index."""
    return tuple(mapping[x] if x > 0 else -mapping[-x] for x in word)


def format_word(word: Iterable[int], symbol: str = "x") -> str:
    word = tuple(word)
    if not word:
        return "1"
    parts = []
    for x in word:
        parts.append(f"{symbol}{x}" if x > 0 else f"{symbol}{-x}^-1")
    return " ".join(parts)


def partially_commutative_reduce(
    word: Iterable[int],
    commutes: Callable[[int, int], bool],
    cyclic: bool = False,
) -> Word:
    """Reduce a word in a group where some generator pairs commute.

    Cancels ``x^e ... x^-e`` whenever every letter between them commutes with
    ``x``. With ``cyclic=True`` the word is treated as a cyclic word (a
    relator up to conjugation) and the wrap-around segment may also be the
    one that commutes. ``commutes(g, h)`` is called with positive indices
    ``g != h``.
    """
    w = list(free_reduce(word))

    def segment_commutes(g: int, segment: list[int]) -> bool:
        return all(abs(y) != g and commutes(g, abs(y)) for y in segment)

    changed = True
    while changed:
        changed = False
        n = len(w)
        for i in range(n):
            g = abs(w[i])
            for j in range(i + 1, n):
                if w[j] != -w[i]:
                    if abs(w[j]) == g or not commutes(g, abs(w[j])):
                        if not cyclic:
                            break
                    continue
                inner = w[i + 1 : j]
                outer = w[j + 1 :] + w[:i]
                if segment_commutes(g, inner) or (cyclic and segment_commutes(g, outer)):
                    w = list(free_reduce(w[:i] + inner + w[j + 1 :]))
                    changed = True
                    break
                if not cyclic:
                    break
            if changed:
                break
    return cyclic_reduce(w) if cyclic else tuple(w)
