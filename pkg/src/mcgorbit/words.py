"""Free-group words.

A word is a freely reduced run-length sequence of (generator index >= 1,
nonzero exponent) pairs; the empty word is the identity.  File syntax is
whitespace-separated tokens `x3`, `x3^-1`, `x3^4`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError


@dataclass(frozen=True)
class Word:
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = None
        for gen, exp in self.letters:
            if gen < 1:
                raise InputError(f"generator index {gen} must be >= 1")
            if exp == 0:
                raise InputError("zero exponent in word")
            if gen == prev:
                raise InputError("word is not freely reduced (adjacent equal indices)")
            prev = gen

    @property
    def length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    @property
    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=0)

    def is_identity(self) -> bool:
        return not self.letters

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        result = identity_word()
        for _ in range(n):
            result = result * self
        return result

    def to_letter_sequence(self) -> tuple[int, ...]:
        """Expand runs into single signed letters (+g / -g)."""
        out = []
        for g, e in self.letters:
            step = g if e > 0 else -g
            out.extend([step] * abs(e))
        return tuple(out)

    def __repr__(self):
        return f"Word({word_str(self)!r})"


def identity_word() -> Word:
    return Word(())


def gen_word(index: int, exponent: int = 1) -> Word:
    return Word(((index, exponent),))


def free_reduce(pairs: Iterable[tuple[int, int]] | Word) -> Word:
    """Cancel and merge until freely reduced; idempotent."""
    if isinstance(pairs, Word):
        pairs = pairs.letters
    stack: list[list[int]] = []
    for gen, exp in pairs:
        if gen < 1:
            raise InputError(f"generator index {gen} must be >= 1")
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return Word(tuple((g, e) for g, e in stack))


def from_letter_sequence(seq: Sequence[int]) -> Word:
    return free_reduce((abs(s), 1 if s > 0 else -1) for s in seq)


_TOKEN = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str) -> Word:
    pairs = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise InputError(f"bad word token {token!r}")
        gen = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if gen < 1:
            raise InputError(f"bad generator index in {token!r}")
        if exp == 0:
            raise InputError(f"zero exponent in {token!r}")
        pairs.append((gen, exp))
    return free_reduce(pairs)


def word_str(w: Word) -> str:
    return " ".join(
        f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in w.letters
    )


def cyclic_reduce(w: Word) -> Word:
    seq = list(w.to_letter_sequence())
    while len(seq) >= 2 and seq[0] == -seq[-1]:
        seq = seq[1:-1]
    return from_letter_sequence(seq)


def conjugate_in_free_group(u: Word, v: Word) -> bool:
    """Whether u and v are conjugate: their cyclic reductions must be
    cyclic rotations of each other."""
    a = cyclic_reduce(u).to_letter_sequence()
    b = cyclic_reduce(v).to_letter_sequence()
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    n = len(b)
    return any(doubled[k : k + n] == b for k in range(len(a)))


def reduced_words_shortlex(n_generators: int, max_length: int) -> Iterator[Word]:
    """Freely reduced words of length 1..max_length in shortlex order.

    Letters are ordered x1 < x1^-1 < x2 < x2^-1 < ...
    """
    alphabet = []
    for g in range(1, n_generators + 1):
        alphabet.extend([g, -g])
    layer: list[tuple[int, ...]] = [()]
    for _ in range(max_length):
        next_layer = []
        for seq in layer:
            for letter in alphabet:
                if seq and seq[-1] == -letter:
                    continue
                ext = seq + (letter,)
                next_layer.append(ext)
                yield from_letter_sequence(ext)
        layer = next_layer
