"""Exact conjugacy testing between representation tuples.

Tuples (A_1..A_N) and (A'_1..A'_N) are conjugate when some invertible B
satisfies A_k = B A'_k B^-1 for all k.  Trace fingerprints are a hashing
heuristic only; verdicts always come from the exact intertwiner space.
Whether a pencil of intertwiners contains an invertible element is decided
deterministically by evaluating its determinant on an integer grid large
enough to separate it from the zero polynomial.

Conjugacy is decided over the declared field K; a negative verdict between
tuples that are not absolutely irreducible is labeled as K-scope, since
conjugacy over an extension could in principle differ.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import InternalSchurViolation, SizeMismatch
from .matrep import (
    RepTuple,
    SquareMatrix,
    intertwiner_basis,
    is_absolutely_irreducible,
)
from .numfield import FieldElement

DEFAULT_FINGERPRINT_LENGTH = 3
DEFAULT_PENCIL_CAP = 8


@dataclass(frozen=True)
class TraceFingerprint:
    word_length: int
    values: tuple[FieldElement, ...]


def fingerprint(rep: RepTuple, word_length: int = DEFAULT_FINGERPRINT_LENGTH) -> TraceFingerprint:
    """Traces of all freely reduced words of length <= word_length (letters
    ordered x1 < x1^-1 < x2 < x2^-1 < ...), followed by the generator
    determinants.  Conjugate tuples fingerprint identically."""
    if word_length < 1:
        raise SizeMismatch("fingerprint length must be >= 1")
    gens = rep.matrices
    inverses = [m.inverse() for m in gens]
    steps = []  # (signed letter, matrix)
    for k in range(rep.n_generators):
        steps.append((k + 1, gens[k]))
        steps.append((-(k + 1), inverses[k]))
    values: list[FieldElement] = []

    def extend(last: int, product: SquareMatrix, remaining: int):
        for letter, mat in steps:
            if letter == -last:
                continue
            cur = product * mat
            values.append(cur.trace())
            if remaining > 1:
                extend(letter, cur, remaining - 1)

    extend(0, SquareMatrix.identity(rep.field, rep.size), word_length)
    values.extend(m.det() for m in gens)
    return TraceFingerprint(word_length=word_length, values=tuple(values))


def intertwiners(a: RepTuple, b: RepTuple) -> list[SquareMatrix]:
    """Exact basis of {M : M*b_k = a_k*M for all k}."""
    _check_comparable(a, b)
    return intertwiner_basis(a.matrices, b.matrices)


def _check_comparable(a: RepTuple, b: RepTuple):
    if a.size != b.size:
        raise SizeMismatch(f"sizes {a.size} and {b.size}")
    if a.field != b.field:
        raise SizeMismatch("tuples over different fields")
    if a.n_generators != b.n_generators:
        raise SizeMismatch("tuples with different generator counts")


@dataclass(frozen=True)
class ConjugacyVerdict:
    kind: str  # "conjugate" | "not_conjugate" | "unsupported"
    conjugator: Optional[SquareMatrix] = None
    basis_dimension: Optional[int] = None
    over_field_only: bool = False  # negative verdict valid over K, not certified over extensions


def _grid_points(dim: int, r: int) -> Iterator[tuple[int, ...]]:
    """Deterministic enumeration of {0..r}^dim, fronted by points likely to
    hit an invertible combination early (unit vectors, then 0/1 vectors)."""
    for k in range(dim):
        point = [0] * dim
        point[k] = 1
        yield tuple(point)
    if dim > 1:
        yield from itertools.product(range(2), repeat=dim)
    yield from itertools.product(range(r + 1), repeat=dim)


def pencil_invertible_combo(
    basis: Sequence[SquareMatrix],
) -> Optional[tuple[tuple[int, ...], SquareMatrix]]:
    """First grid point t in {0..r}^d where sum(t_k * M_k) is invertible,
    or None when the determinant vanishes on the whole grid -- which, the
    per-variable degree being at most r, proves it vanishes identically."""
    if not basis:
        return None
    field = basis[0].field
    r = basis[0].size
    seen = set()
    for point in _grid_points(len(basis), r):
        if point in seen:
            continue
        seen.add(point)
        combo = None
        for t, mat in zip(point, basis):
            if t == 0:
                continue
            term = mat if t == 1 else mat.scale(field.from_rational(t))
            combo = term if combo is None else combo + term
        if combo is None:
            continue
        if not combo.det().is_zero():
            return point, combo
    return None


def are_conjugate(
    a: RepTuple,
    b: RepTuple,
    word_length: int = DEFAULT_FINGERPRINT_LENGTH,
    pencil_cap: int = DEFAULT_PENCIL_CAP,
    label_scope: bool = True,
) -> ConjugacyVerdict:
    """Decide simultaneous conjugacy over the declared field.

    Fingerprints filter first; survivors go through the exact intertwiner
    space.  Any conjugator found is re-verified by direct multiplication
    before being returned.
    """
    _check_comparable(a, b)
    if a.matrices == b.matrices:
        return ConjugacyVerdict(
            kind="conjugate",
            conjugator=SquareMatrix.identity(a.field, a.size),
            basis_dimension=None,
        )
    if fingerprint(a, word_length) != fingerprint(b, word_length):
        return ConjugacyVerdict(
            kind="not_conjugate",
            over_field_only=_scope_label(a, b) if label_scope else False,
        )
    basis = intertwiners(a, b)
    dim = len(basis)
    if dim == 0:
        return ConjugacyVerdict(
            kind="not_conjugate",
            basis_dimension=0,
            over_field_only=_scope_label(a, b) if label_scope else False,
        )
    if dim > pencil_cap:
        return ConjugacyVerdict(kind="unsupported", basis_dimension=dim)
    found = pencil_invertible_combo(basis)
    if found is None:
        return ConjugacyVerdict(
            kind="not_conjugate",
            basis_dimension=dim,
            over_field_only=_scope_label(a, b) if label_scope else False,
        )
    _, conjugator = found
    _verify_conjugator(a, b, conjugator)
    return ConjugacyVerdict(
        kind="conjugate", conjugator=conjugator, basis_dimension=dim
    )


def _scope_label(a: RepTuple, b: RepTuple) -> bool:
    return not (is_absolutely_irreducible(a) and is_absolutely_irreducible(b))


def _verify_conjugator(a: RepTuple, b: RepTuple, conjugator: SquareMatrix):
    inv = conjugator.inverse()
    for x, y in zip(a.matrices, b.matrices):
        if conjugator * y * inv != x:
            raise InternalSchurViolation(
                "candidate conjugator fails direct re-verification"
            )


def conjugated(rep: RepTuple, by: SquareMatrix) -> RepTuple:
    """The tuple (B A_k B^-1); convenience for tests and the CLI."""
    inv = by.inverse()
    return RepTuple(
        rep.shape, tuple(by * m * inv for m in rep.matrices)
    )


def fingerprint_key(fp: TraceFingerprint):
    """Hashable canonical form used for orbit bucketing."""
    return (fp.word_length, tuple(v.coeffs for v in fp.values))
