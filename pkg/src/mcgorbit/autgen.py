"""Substitution automorphisms of free groups and the four named tuple moves.

The named moves act on generator tuples exactly as printed:

    c:   (A1, ..., AN) -> (A2, ..., AN, A1)
    tau: (A1, A2, ...) -> (A2, A1, ...)
    eps: (A1, ...)     -> (A1^-1, ...)
    d:   (A1, A2, ...) -> (A1*A2, A2, ...)

Tuple moves are realized as the right-composition action rho -> rho o sigma,
so each named move has a substitution producing it through apply_substitution.
Substitutions must come with an explicit inverse; validity is checked by
composing both ways and reducing, never by solving automorphism recognition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InputError,
    InvalidSubstitution,
    RankMismatch,
    RankTooSmall,
    ShapeNotSurface,
)
from .matrep import GroupShape, RepTuple, word_eval
from .words import Word, conjugate_in_free_group, free_reduce, gen_word, identity_word

NAMED_MOVES = ("c", "tau", "eps", "d")


@dataclass(frozen=True)
class Substitution:
    rank: int
    images: tuple[Word, ...]
    inverse_images: tuple[Word, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise InputError("substitution rank must be >= 1")
        if len(self.images) != self.rank or len(self.inverse_images) != self.rank:
            raise InvalidSubstitution("need one image word per generator")
        for w in self.images + self.inverse_images:
            if w.max_generator > self.rank:
                raise InvalidSubstitution(
                    f"image word uses generator {w.max_generator} beyond rank {self.rank}"
                )
        for k in range(self.rank):
            target = gen_word(k + 1)
            if substitute(self, self.inverse_images[k]) != target:
                raise InvalidSubstitution(
                    f"images o inverse_images is not the identity at generator {k + 1}"
                )
            if substitute(self.inverted(), self.images[k]) != target:
                raise InvalidSubstitution(
                    f"inverse_images o images is not the identity at generator {k + 1}"
                )

    def inverted(self) -> "Substitution":
        # bypass validation: the pair is checked once, symmetrically
        inv = object.__new__(Substitution)
        object.__setattr__(inv, "rank", self.rank)
        object.__setattr__(inv, "images", self.inverse_images)
        object.__setattr__(inv, "inverse_images", self.images)
        return inv


def substitute(sigma: Substitution, w: Word) -> Word:
    """Apply the substitution to a word and freely reduce."""
    result = identity_word()
    for gen, exp in w.letters:
        if gen > sigma.rank:
            raise RankMismatch(f"word uses generator {gen} beyond rank {sigma.rank}")
        result = result * sigma.images[gen - 1] ** exp
    return result


def identity_substitution(rank: int) -> Substitution:
    gens = tuple(gen_word(k + 1) for k in range(rank))
    return Substitution(rank=rank, images=gens, inverse_images=gens)


def substitution_for_move(move: str, rank: int) -> Substitution:
    """The substitution whose right action on tuples reproduces the move."""
    if move not in NAMED_MOVES:
        raise InputError(f"unknown move {move!r}")
    if rank < 1:
        raise RankTooSmall("rank must be >= 1")
    if move in ("tau", "d") and rank < 2:
        raise RankTooSmall(f"move {move} needs rank >= 2")
    gens = [gen_word(k + 1) for k in range(rank)]
    if move == "c":
        images = gens[1:] + gens[:1]
        inverse = gens[-1:] + gens[:-1]
    elif move == "tau":
        images = [gens[1], gens[0]] + gens[2:]
        inverse = images
    elif move == "eps":
        images = [gens[0].inverse()] + gens[1:]
        inverse = images
    else:  # d
        images = [gens[0] * gens[1]] + gens[1:]
        inverse = [gens[0] * gens[1].inverse()] + gens[1:]
    return Substitution(rank=rank, images=tuple(images), inverse_images=tuple(inverse))


def nielsen_move(rep: RepTuple, move: str) -> RepTuple:
    """Apply one named move to the generator tuple."""
    if move not in NAMED_MOVES:
        raise InputError(f"unknown move {move!r}")
    n = rep.n_generators
    if move in ("tau", "d") and n < 2:
        raise RankTooSmall(f"move {move} needs at least 2 generators")
    mats = rep.matrices
    if move == "c":
        new = mats[1:] + mats[:1]
    elif move == "tau":
        new = (mats[1], mats[0]) + mats[2:]
    elif move == "eps":
        new = (mats[0].inverse(),) + mats[1:]
    else:  # d
        new = (mats[0] * mats[1],) + mats[1:]
    return RepTuple(rep.shape, new)


def apply_substitution(rep: RepTuple, sigma: Substitution) -> RepTuple:
    """Right action: the k-th matrix of the result is rho(sigma(x_k))."""
    if sigma.rank != rep.n_generators:
        raise RankMismatch(
            f"substitution rank {sigma.rank} vs {rep.n_generators} generators"
        )
    return RepTuple(
        rep.shape, tuple(word_eval(rep, w) for w in sigma.images)
    )


def peripheral_words(shape: GroupShape) -> tuple[Word, ...]:
    """Puncture loops of the fixed presentation of a punctured surface.

    Generators are a_1, b_1, ..., a_g, b_g followed by the first n-1
    puncture loops; the last puncture loop is the surface relator
    [a_1,b_1]...[a_g,b_g] c_1 ... c_(n-1) solved for the final boundary.
    """
    if shape.kind != "surface":
        raise ShapeNotSurface("peripheral structure needs a surface shape")
    g, n = shape.genus, shape.punctures
    loops = [gen_word(2 * g + k) for k in range(1, n)]
    relator = identity_word()
    for i in range(g):
        a = gen_word(2 * i + 1)
        b = gen_word(2 * i + 2)
        relator = relator * a * b * a.inverse() * b.inverse()
    for c in loops:
        relator = relator * c
    return tuple(loops) + (relator.inverse(),)


def peripheral_check(sigma: Substitution, shape: GroupShape) -> bool:
    """Whether the substitution sends every puncture loop to a conjugate of
    a puncture loop, i.e. is eligible to represent a mapping class."""
    if shape.kind != "surface":
        raise ShapeNotSurface("peripheral check needs a surface shape")
    if sigma.rank != shape.generator_count:
        raise RankMismatch(
            f"substitution rank {sigma.rank} vs {shape.generator_count} generators"
        )
    periph = peripheral_words(shape)
    for p in periph:
        image = substitute(sigma, p)
        if not any(conjugate_in_free_group(image, q) for q in periph):
            return False
    return True


@dataclass(frozen=True)
class MoveSet:
    """Named moves (kept in canonical order) plus custom substitutions."""

    named: tuple[str, ...] = NAMED_MOVES
    custom: tuple[Substitution, ...] = ()

    def __post_init__(self):
        for m in self.named:
            if m not in NAMED_MOVES:
                raise InputError(f"unknown named move {m!r}")
        canonical = tuple(m for m in NAMED_MOVES if m in self.named)
        object.__setattr__(self, "named", canonical)
        if not self.named and not self.custom:
            raise InputError("move set must be nonempty")

    def labels(self) -> tuple[str, ...]:
        return self.named + tuple(
            f"aut{k}" for k in range(1, len(self.custom) + 1)
        )


def nielsen_moves() -> MoveSet:
    return MoveSet(named=NAMED_MOVES)
