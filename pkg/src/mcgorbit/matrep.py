"""Exact matrices over a number field and representation tuples.

A representation of a free or punctured-surface group is an N-tuple of
invertible r x r matrices, one per generator of the fixed free-group
presentation.  Closed surfaces are rejected at the type level; punctured
surfaces are handled through their free-group generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import qpoly
from .errors import (
    FieldMismatch,
    IndexOutOfRange,
    InputError,
    InternalCheckError,
    ShapeMismatch,
    Singular,
    SizeMismatch,
)
from .linalg import DependencyFinder, nullspace
from .numfield import FieldElement, NumberField, is_root_of_unity
from .words import Word


class SquareMatrix:
    """Immutable exact matrix over one number field.

    Slots plus a cached hash: matrices are dict keys in the closure and
    orbit engines, and allocation shows up in every profile.
    """

    __slots__ = ("field", "entries", "_hash")

    def __init__(
        self,
        field: NumberField,
        entries: tuple[tuple[FieldElement, ...], ...],
    ):
        self.field = field
        self.entries = entries
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.entries == other.entries and (
            self.field is other.field or self.field == other.field
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash(
                tuple(tuple(c.coeffs for c in row) for row in self.entries)
            )
        return h

    def __repr__(self):
        rows = "; ".join(
            "[" + ", ".join(repr(c) for c in row) + "]" for row in self.entries
        )
        return f"SquareMatrix({rows})"

    @property
    def size(self) -> int:
        return len(self.entries)

    @staticmethod
    def from_rows(field: NumberField, rows: Sequence[Sequence]) -> "SquareMatrix":
        r = len(rows)
        if r < 1:
            raise InputError("matrix must have size >= 1")
        out = []
        for row in rows:
            if len(row) != r:
                raise InputError("matrix rows must all have the same length")
            cells = []
            for cell in row:
                if isinstance(cell, FieldElement):
                    if cell.field != field:
                        raise FieldMismatch("matrix entry from a different field")
                    cells.append(cell)
                else:
                    cells.append(field.from_rational(cell))
            out.append(tuple(cells))
        return SquareMatrix(field, tuple(out))

    @staticmethod
    def identity(field: NumberField, r: int) -> "SquareMatrix":
        one, zero = field.one(), field.zero()
        return SquareMatrix(
            field,
            tuple(
                tuple(one if i == j else zero for j in range(r)) for i in range(r)
            ),
        )

    def _check(self, other: "SquareMatrix"):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")
        if self.size != other.size:
            raise SizeMismatch(f"sizes {self.size} and {other.size}")

    def __add__(self, other):
        self._check(other)
        return SquareMatrix(
            self.field,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other):
        self._check(other)
        return SquareMatrix(
            self.field,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def scale(self, c: FieldElement) -> "SquareMatrix":
        return SquareMatrix(
            self.field, tuple(tuple(c * a for a in row) for row in self.entries)
        )

    def __mul__(self, other):
        self._check(other)
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            new_row = []
            for col in cols:
                acc = row[0] * col[0]
                for a, b in zip(row[1:], col[1:]):
                    acc = acc + a * b
                new_row.append(acc)
            out.append(tuple(new_row))
        return SquareMatrix(self.field, tuple(out))

    def apply_to_vector(self, vec: Sequence[FieldElement]) -> list[FieldElement]:
        out = []
        for row in self.entries:
            acc = row[0] * vec[0]
            for a, b in zip(row[1:], vec[1:]):
                acc = acc + a * b
            out.append(acc)
        return out

    def __pow__(self, n: int) -> "SquareMatrix":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 1:
            return self
        result = SquareMatrix.identity(self.field, self.size)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def trace(self) -> FieldElement:
        return sum(
            (self.entries[i][i] for i in range(self.size)), self.field.zero()
        )

    def det(self) -> FieldElement:
        """Exact determinant by elimination with division-free sign tracking."""
        r = self.size
        mat = [list(row) for row in self.entries]
        det = self.field.one()
        for col in range(r):
            pivot = None
            for i in range(col, r):
                if not mat[i][col].is_zero():
                    pivot = i
                    break
            if pivot is None:
                return self.field.zero()
            if pivot != col:
                mat[col], mat[pivot] = mat[pivot], mat[col]
                det = -det
            det = det * mat[col][col]
            inv = mat[col][col].inverse()
            for i in range(col + 1, r):
                if not mat[i][col].is_zero():
                    factor = mat[i][col] * inv
                    mat[i] = [
                        x - factor * y for x, y in zip(mat[i], mat[col])
                    ]
        return det

    def inverse(self) -> "SquareMatrix":
        """Exact inverse by Gauss-Jordan elimination over the field."""
        r = self.size
        mat = [list(row) for row in self.entries]
        aug = [
            [self.field.one() if i == j else self.field.zero() for j in range(r)]
            for i in range(r)
        ]
        for col in range(r):
            pivot = None
            for i in range(col, r):
                if not mat[i][col].is_zero():
                    pivot = i
                    break
            if pivot is None:
                raise Singular("matrix has zero determinant")
            mat[col], mat[pivot] = mat[pivot], mat[col]
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = mat[col][col].inverse()
            mat[col] = [x * inv for x in mat[col]]
            aug[col] = [x * inv for x in aug[col]]
            for i in range(r):
                if i != col and not mat[i][col].is_zero():
                    factor = mat[i][col]
                    mat[i] = [x - factor * y for x, y in zip(mat[i], mat[col])]
                    aug[i] = [x - factor * y for x, y in zip(aug[i], aug[col])]
        return SquareMatrix(self.field, tuple(tuple(row) for row in aug))

    def is_identity(self) -> bool:
        return self == SquareMatrix.identity(self.field, self.size)

    def is_invertible(self) -> bool:
        return not self.det().is_zero()

    def kron(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")
        ra, rb = self.size, other.size
        rows = []
        for i in range(ra):
            for k in range(rb):
                rows.append(
                    tuple(
                        self.entries[i][j] * other.entries[k][l]
                        for j in range(ra)
                        for l in range(rb)
                    )
                )
        return SquareMatrix(self.field, tuple(rows))

    def block_sum(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")
        ra, rb = self.size, other.size
        zero = self.field.zero()
        rows = []
        for i in range(ra):
            rows.append(self.entries[i] + (zero,) * rb)
        for i in range(rb):
            rows.append((zero,) * ra + other.entries[i])
        return SquareMatrix(self.field, tuple(rows))


@dataclass(frozen=True)
class GroupShape:
    kind: str  # "free" | "surface"
    rank: int = 0
    genus: int = 0
    punctures: int = 0

    @property
    def generator_count(self) -> int:
        if self.kind == "free":
            return self.rank
        return 2 * self.genus + self.punctures - 1


def free_shape(rank: int) -> GroupShape:
    if rank < 1:
        raise InputError("free rank must be >= 1")
    return GroupShape(kind="free", rank=rank)


def surface_shape(genus: int, punctures: int) -> GroupShape:
    """Punctured-surface shape; closed surfaces (n = 0) are rejected and
    g = 0 needs n >= 3 so the surface is hyperbolic."""
    if genus < 0 or punctures < 0:
        raise InputError("genus and punctures must be nonnegative")
    if punctures == 0:
        raise InputError("closed surfaces are not supported; punctures must be >= 1")
    if genus == 0 and punctures < 3:
        raise InputError("genus 0 needs at least 3 punctures")
    return GroupShape(kind="surface", genus=genus, punctures=punctures)


@dataclass(frozen=True)
class RepTuple:
    shape: GroupShape
    matrices: tuple[SquareMatrix, ...]

    def __post_init__(self):
        n = self.shape.generator_count
        if len(self.matrices) != n:
            raise InputError(
                f"shape needs {n} generator matrices, got {len(self.matrices)}"
            )
        if not self.matrices:
            raise InputError("empty tuples are rejected")
        r = self.matrices[0].size
        field = self.matrices[0].field
        if r < 1:
            raise InputError("matrix size must be >= 1")
        for k, m in enumerate(self.matrices, start=1):
            if m.size != r:
                raise SizeMismatch(f"generator {k} has size {m.size}, expected {r}")
            if m.field != field:
                raise FieldMismatch(f"generator {k} lives in a different field")
            if m.det().is_zero():
                raise Singular(f"generator {k} is not invertible")

    @property
    def size(self) -> int:
        return self.matrices[0].size

    @property
    def field(self) -> NumberField:
        return self.matrices[0].field

    @property
    def n_generators(self) -> int:
        return len(self.matrices)


def word_eval(rep: RepTuple, w: Word) -> SquareMatrix:
    """The image of a freely reduced word under the representation."""
    if w.max_generator > rep.n_generators:
        raise IndexOutOfRange(
            f"word uses generator {w.max_generator}, tuple has {rep.n_generators}"
        )
    result = SquareMatrix.identity(rep.field, rep.size)
    for gen, exp in w.letters:
        result = result * rep.matrices[gen - 1] ** exp
    return result


def intertwiner_basis(
    a_mats: Sequence[SquareMatrix], b_mats: Sequence[SquareMatrix]
) -> list[SquareMatrix]:
    """Exact basis of {M : M*b_k = a_k*M for all k}.

    The homogeneous system has r^2 unknowns M[p][q] (row-major) and one
    equation per generator and position.
    """
    if len(a_mats) != len(b_mats):
        raise SizeMismatch("tuples have different generator counts")
    field = a_mats[0].field
    r = a_mats[0].size
    for m in list(a_mats) + list(b_mats):
        if m.size != r:
            raise SizeMismatch("matrices of different sizes")
        if m.field != field:
            raise FieldMismatch("matrices over different fields")
    zero, one = field.zero(), field.one()
    rows = []
    for A, B in zip(a_mats, b_mats):
        for p in range(r):
            for q in range(r):
                # sum_k M[p][k]*B[k][q] - A[p][k]*M[k][q] = 0
                row = [zero] * (r * r)
                for k in range(r):
                    row[p * r + k] = row[p * r + k] + B.entries[k][q]
                    row[k * r + q] = row[k * r + q] - A.entries[p][k]
                rows.append(row)
    basis = nullspace(rows, r * r, zero, one)
    out = []
    for vec in basis:
        out.append(
            SquareMatrix(
                field,
                tuple(tuple(vec[p * r + q] for q in range(r)) for p in range(r)),
            )
        )
    return out


def commutant_dimension(rep: RepTuple) -> int:
    return len(intertwiner_basis(rep.matrices, rep.matrices))


def is_absolutely_irreducible(rep: RepTuple) -> bool:
    """True iff the joint commutant {X : X*A_k = A_k*X} is one-dimensional,
    i.e. the endomorphism algebra is the scalars."""
    return commutant_dimension(rep) == 1


# --- polynomials over K, as lists of FieldElement, low-degree first ---


def _kp_normalize(coeffs, field):
    cs = list(coeffs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _kp_divmod(a, b, field):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [field.zero()] * max(len(a) - len(b) + 1, 1)
    db = len(b) - 1
    lead_inv = b[-1].inverse()
    while len(rem) - 1 >= db:
        if rem[-1].is_zero():
            rem.pop()
            continue
        shift = len(rem) - 1 - db
        factor = rem[-1] * lead_inv
        quo[shift] = factor
        for j, cb in enumerate(b):
            rem[shift + j] = rem[shift + j] - factor * cb
        rem.pop()
    return _kp_normalize(quo, field), _kp_normalize(rem, field)


def _kp_monic(p, field):
    if not p:
        return p
    inv = p[-1].inverse()
    return [c * inv for c in p]


def _kp_gcd(a, b, field):
    a, b = _kp_normalize(a, field), _kp_normalize(b, field)
    while b:
        _, r = _kp_divmod(a, b, field)
        a, b = b, r
    return _kp_monic(a, field)


def _kp_derivative(p, field):
    return _kp_normalize(
        [p[i] * field.from_rational(i) for i in range(1, len(p))], field
    )


def _kp_mul(a, b, field):
    if not a or not b:
        return []
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return _kp_normalize(out, field)


def _kp_lcm(a, b, field):
    if len(a) <= 1:
        return _kp_monic(b, field)
    if len(b) <= 1:
        return _kp_monic(a, field)
    g = _kp_gcd(a, b, field)
    q, r = _kp_divmod(a, g, field)
    if r:
        raise InternalCheckError("gcd fails to divide its argument")
    return _kp_monic(_kp_mul(q, b, field), field)


def _kp_from_q(poly, field):
    return [field.from_rational(c) for c in poly]


def matrix_minimal_polynomial(A: SquareMatrix) -> list[FieldElement]:
    """Monic minimal polynomial of A over the entry field.

    Least common multiple of the annihilators of the basis vectors; each
    annihilator is the first linear dependency in the Krylov chain v, Av,
    A^2 v, ..., so only matrix-vector products are needed.
    """
    field = A.field
    r = A.size
    zero, one = field.zero(), field.one()
    result = [one]
    for start in range(r):
        if len(result) - 1 == r:
            break
        vec = [zero] * r
        vec[start] = one
        finder = DependencyFinder(zero, one)
        for _ in range(r + 1):
            combo = finder.add(vec)
            if combo is not None:
                result = _kp_lcm(result, _kp_normalize(combo, field), field)
                break
            vec = A.apply_to_vector(vec)
        else:
            raise InternalCheckError("Krylov chain has no dependency up to the size")
    return result


def matrix_finite_order(A: SquareMatrix) -> Optional[int]:
    """Least m with A^m = I, or None when A has infinite order.

    A has finite order iff its minimal polynomial is squarefree with every
    irreducible factor cyclotomic; factors are recognized by trial gcd
    against the finitely many cyclotomic candidates, never by general
    factorization.  The returned order is confirmed by exact exponentiation.
    """
    if A.det().is_zero():
        raise Singular("matrix is not invertible")
    field = A.field
    mu = matrix_minimal_polynomial(A)
    if len(_kp_gcd(mu, _kp_derivative(mu, field), field)) > 1:
        return None  # repeated factor: not diagonalizable, infinite order
    bound = (len(mu) - 1) * field.degree
    remaining = mu
    orders = []
    for d in range(1, 2 * bound * bound + 1):
        if len(remaining) <= 1:
            break
        if qpoly.euler_phi(d) > bound:
            continue
        g = _kp_gcd(remaining, _kp_from_q(qpoly.cyclotomic(d), field), field)
        if len(g) > 1:
            orders.append(d)
            remaining, r = _kp_divmod(remaining, g, field)
            if r:
                raise InternalCheckError("gcd does not divide the minimal polynomial")
    if len(remaining) > 1:
        return None  # a non-cyclotomic factor survives
    m = math.lcm(*orders)
    if not (A ** m).is_identity():
        raise InternalCheckError(f"computed order {m} fails exact confirmation")
    return m


def direct_sum(a: RepTuple, b: RepTuple) -> RepTuple:
    """Generator-wise block-diagonal sum; shapes and fields must agree."""
    if a.shape != b.shape:
        raise ShapeMismatch("direct sum needs identical group shapes")
    if a.field != b.field:
        raise FieldMismatch("direct sum needs one common field")
    return RepTuple(
        a.shape,
        tuple(x.block_sum(y) for x, y in zip(a.matrices, b.matrices)),
    )


def tensor(a: RepTuple, b: RepTuple) -> RepTuple:
    """Generator-wise Kronecker product; shapes and fields must agree."""
    if a.shape != b.shape:
        raise ShapeMismatch("tensor product needs identical group shapes")
    if a.field != b.field:
        raise FieldMismatch("tensor product needs one common field")
    return RepTuple(
        a.shape,
        tuple(x.kron(y) for x, y in zip(a.matrices, b.matrices)),
    )


@dataclass(frozen=True)
class DetScreen:
    kind: str  # "pass" | "fail"
    orders: Optional[tuple[int, ...]] = None  # torsion order of each det
    witness_index: Optional[int] = None  # 1-based first failing generator
    advisory: bool = False  # True off the surface-with-genus hypothesis


def det_screen(rep: RepTuple) -> DetScreen:
    """Necessary-condition screen: every generator determinant must be a
    root of unity, else the determinant character already has infinite
    image.  Certified for surface shapes with g >= 1; advisory otherwise."""
    advisory = rep.shape.kind != "surface" or rep.shape.genus < 1
    orders = []
    for k, m in enumerate(rep.matrices, start=1):
        order = is_root_of_unity(m.det())
        if order is None:
            return DetScreen(kind="fail", witness_index=k, advisory=advisory)
        orders.append(order)
    return DetScreen(kind="pass", orders=tuple(orders), advisory=advisory)
