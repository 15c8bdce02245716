"""Finiteness and infiniteness certification for generated matrix groups.

group_closure enumerates the group generated by a tuple by breadth-first
products with exact matrix hashing.  infinite_image_witness looks for a
short word whose image has infinite order: a nontrivial unipotent, or a
spectrum containing a non-root-of-unity (detected through the minimal
polynomial).  A witness and a Finite closure for the same tuple can never
both be right, and the test suite asserts they never both happen.

The screens are the necessary-condition battery: finite determinant
(certified for surface shapes of genus >= 1), entrywise algebraic
integrality (advisory: an abstractly integral tuple may fail it before
conjugation), and a finite-exponent sample over short words.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import (
    GateNotApplicable,
    InputError,
    InternalCheckError,
    InvalidExponent,
    RankTooSmall,
)
from .matrep import (
    DetScreen,
    GroupShape,
    RepTuple,
    SquareMatrix,
    det_screen,
    matrix_finite_order,
    word_eval,
)
from .numfield import is_algebraic_integer
from .orbit import OrbitResult
from .words import Word, reduced_words_shortlex

DEFAULT_CLOSURE_CAP = 200000
DEFAULT_WITNESS_LENGTH = 4
EXPONENT_SAMPLE_LENGTH = 3


@dataclass(frozen=True)
class ClosureResult:
    kind: str  # "finite" | "cap_exceeded"
    order: Optional[int] = None
    elements_found: Optional[int] = None
    elements: tuple[SquareMatrix, ...] = ()


def group_closure(rep: RepTuple, cap: int = DEFAULT_CLOSURE_CAP) -> ClosureResult:
    """BFS closure of {A_k, A_k^-1} under multiplication.

    Finite(order) iff the closure completes within cap; matrices are hashed
    by their canonical coefficient vectors, no floating point anywhere.
    """
    if cap < 1:
        raise InputError("cap must be >= 1")
    gens = list(rep.matrices) + [m.inverse() for m in rep.matrices]
    identity = SquareMatrix.identity(rep.field, rep.size)
    seen = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt = cur * g
            if nxt not in seen:
                if len(seen) >= cap:
                    return ClosureResult(kind="cap_exceeded", elements_found=cap)
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return ClosureResult(kind="finite", order=len(order), elements=tuple(order))


def is_unipotent(m: SquareMatrix) -> bool:
    delta = m - SquareMatrix.identity(m.field, m.size)
    return (delta ** m.size) == SquareMatrix(
        m.field, tuple(tuple(m.field.zero() for _ in range(m.size)) for _ in range(m.size))
    )


def infinite_image_witness(
    rep: RepTuple, max_word_length: int = DEFAULT_WITNESS_LENGTH
) -> Optional[tuple[Word, str]]:
    """First word (shortlex, length <= max_word_length) whose image has
    certified infinite order, tagged with the reason: a nontrivial
    unipotent, or a minimal polynomial with a repeated or non-cyclotomic
    factor."""
    if max_word_length < 1:
        raise InputError("word length bound must be >= 1")
    for w in reduced_words_shortlex(rep.n_generators, max_word_length):
        image = word_eval(rep, w)
        if image.is_identity():
            continue
        if is_unipotent(image):
            return w, "unipotent_nontrivial"
        if matrix_finite_order(image) is None:
            return w, "non_torsion_spectrum"
    return None


@dataclass(frozen=True)
class IntegralityReport:
    kind: str  # "all_integral" | "not_visibly_integral"
    position: Optional[tuple[int, int, int]] = None  # (generator, row, col), 1-based


@dataclass(frozen=True)
class ScreenReport:
    det: DetScreen
    integrality: IntegralityReport
    exponent_sample: Optional[int]  # max finite order among sampled words
    infinite_order_word: Optional[Word]  # sampled word with no finite order


def screens(rep: RepTuple) -> ScreenReport:
    """Necessary-condition screens; each field is independently recomputable.

    Integrality is advisory: it reports "not visibly integral" because a
    tuple can be integral only after conjugation.  An infinite-order sampled
    word is an immediate infinite-image finding.
    """
    det = det_screen(rep)
    integrality = IntegralityReport(kind="all_integral")
    for k, m in enumerate(rep.matrices, start=1):
        for i, row in enumerate(m.entries, start=1):
            for j, entry in enumerate(row, start=1):
                if not is_algebraic_integer(entry):
                    integrality = IntegralityReport(
                        kind="not_visibly_integral", position=(k, i, j)
                    )
                    break
            if integrality.kind != "all_integral":
                break
        if integrality.kind != "all_integral":
            break
    max_order = None
    bad_word = None
    for w in reduced_words_shortlex(rep.n_generators, EXPONENT_SAMPLE_LENGTH):
        order = matrix_finite_order(word_eval(rep, w))
        if order is None:
            bad_word = w
            break
        if max_order is None or order > max_order:
            max_order = order
    return ScreenReport(
        det=det,
        integrality=integrality,
        exponent_sample=max_order,
        infinite_order_word=bad_word,
    )


@dataclass(frozen=True)
class ImageVerdict:
    kind: str  # "finite_image" | "infinite_image" | "cap_exceeded"
    order: Optional[int] = None
    witness: Optional[Word] = None
    reason: Optional[str] = None
    elements_found: Optional[int] = None


def image_verdict(
    rep: RepTuple,
    cap: int = DEFAULT_CLOSURE_CAP,
    max_word_length: int = DEFAULT_WITNESS_LENGTH,
) -> ImageVerdict:
    """Combined finiteness verdict: the witness scan runs first so infinite
    unipotent examples never pay for a capped closure."""
    found = infinite_image_witness(rep, max_word_length)
    if found is not None:
        w, reason = found
        return ImageVerdict(kind="infinite_image", witness=w, reason=reason)
    closure = group_closure(rep, cap)
    if closure.kind == "finite":
        return ImageVerdict(kind="finite_image", order=closure.order)
    return ImageVerdict(kind="cap_exceeded", elements_found=closure.elements_found)


def _int_matmul(a, b):
    cols = list(zip(*b))
    return [
        [sum(x * y for x, y in zip(row, col)) for col in cols] for row in a
    ]


def _int_matpow(a, n):
    size = len(a)
    result = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    base = a
    while n:
        if n & 1:
            result = _int_matmul(result, base)
        base = _int_matmul(base, base)
        n >>= 1
    return result


def jordan_commutator_test(r: int, n: int) -> bool:
    """Whether [g1^n, g2^n] differs from the identity for the elementary
    unipotent pair g1 = [[1,1],[0,1]] (+) I, g2 = [[1,0],[1,1]] (+) I in
    GL_r(Q) -- true for every n >= 1 in characteristic zero, which is what
    rules out finite groups surjecting onto GL_r(F_p) for large p.

    Everything in sight is an integer matrix (the inverses included), so
    the computation runs on exact big integers; the declared inverses are
    self-checked by multiplication.
    """
    if r < 2:
        raise RankTooSmall("need r >= 2")
    if n < 1:
        raise InvalidExponent("need n >= 1")

    def embed(block):
        mat = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
        for i in range(2):
            for j in range(2):
                mat[i][j] = block[i][j]
        return mat

    identity = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    g1, g1_inv = embed([[1, 1], [0, 1]]), embed([[1, -1], [0, 1]])
    g2, g2_inv = embed([[1, 0], [1, 1]]), embed([[1, 0], [-1, 1]])
    if _int_matmul(g1, g1_inv) != identity or _int_matmul(g2, g2_inv) != identity:
        raise InternalCheckError("declared unipotent inverses fail multiplication")
    a, a_inv = _int_matpow(g1, n), _int_matpow(g1_inv, n)
    b, b_inv = _int_matpow(g2, n), _int_matpow(g2_inv, n)
    commutator = _int_matmul(_int_matmul(a, b), _int_matmul(a_inv, b_inv))
    return commutator != identity


@dataclass(frozen=True)
class ConsistencyReport:
    kind: str  # "consistent" | "contradiction"
    clause: str


def theorem_gate(
    rep: RepTuple,
    shape: GroupShape,
    orbit_result: OrbitResult,
    image: ImageVerdict,
) -> ConsistencyReport:
    """Consistency gate for surface shapes with r^2 < g + 1: in that regime
    a finite orbit forces a finite image, so Finite orbit + certified
    infinite image is flagged for manual review (an implementation bug or a
    counterexample), never silently accepted.  The caller asserts that the
    move set generates the full mapping class action."""
    if shape.kind != "surface":
        raise GateNotApplicable("gate applies to surface shapes only")
    r = rep.size
    g = shape.genus
    if r * r >= g + 1:
        raise GateNotApplicable(f"rank bound fails: {r}^2 >= {g}+1")
    if orbit_result.verdict == "finite" and image.kind == "infinite_image":
        return ConsistencyReport(
            kind="contradiction",
            clause=(
                "finite orbit with certified infinite image inside the "
                "r^2 < g+1 regime; flagged for manual review"
            ),
        )
    clause = {
        "finite": "finite orbit is consistent with the computed image verdict",
        "budget_exceeded": "no finite-orbit claim was made, nothing to gate",
        "infinite_certified": "infinite orbit puts the tuple outside the gate's hypothesis",
    }[orbit_result.verdict]
    return ConsistencyReport(kind="consistent", clause=clause)


def assert_no_disagreement(rep: RepTuple, cap: int, max_word_length: int):
    """Cross-check helper for the verify harness: running both routes must
    never produce a witness alongside a Finite closure."""
    witness = infinite_image_witness(rep, max_word_length)
    closure = group_closure(rep, cap)
    if witness is not None and closure.kind == "finite":
        raise InternalCheckError(
            "infinite-order witness coexists with a finite closure"
        )
    return witness, closure
