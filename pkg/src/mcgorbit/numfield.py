"""Exact arithmetic in a number field K = Q[x]/(m(x)).

A field is declared by its monic minimal polynomial over Q; elements are
canonical coefficient vectors of the residue polynomial, with Fraction
coordinates.  Degree 1 means K = Q.  Irreducibility of the declared
polynomial is certified by exhibiting a prime at which the reduction is
irreducible; undecided cases are surfaced, never guessed.

Torsion detection (exact multiplicative order) and the algebraic-integer
test are built on exact minimal polynomials of elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional, Sequence

from . import qpoly
from .errors import (
    DivisionByZero,
    FieldMismatch,
    InputError,
    InternalCheckError,
    IrreducibilityUndecided,
    NotMonic,
    NotSquarefree,
    ZeroElement,
)
from .linalg import DependencyFinder

PRIME_SEARCH_COUNT = 100


@dataclass(frozen=True)
class NumberField:
    var: str
    minpoly: tuple[Fraction, ...]  # monic, low-degree first, length degree+1
    # ("prime", p) | ("cyclotomic", m) | None when degree 1 or force-accepted;
    # metadata only: two handles to the same field compare equal
    certificate: Optional[tuple[str, int]] = dc_field(default=None, compare=False)

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def zero(self) -> "FieldElement":
        return FieldElement(self, (Fraction(0),) * self.degree)

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def from_rational(self, q) -> "FieldElement":
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(q)
        return FieldElement(self, tuple(coeffs))

    def gen(self) -> "FieldElement":
        """The image of x, a root of the defining polynomial."""
        if self.degree == 1:
            return self.from_rational(-self.minpoly[0])
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return FieldElement(self, tuple(coeffs))

    def element(self, coeffs: Sequence) -> "FieldElement":
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != self.degree:
            raise InputError(
                f"expected {self.degree} coefficients, got {len(cs)}"
            )
        return FieldElement(self, cs)


def rational_field(var: str = "x") -> NumberField:
    return field_new([0, 1], var=var)


def field_new(minpoly, var: str = "x", assume_irreducible: bool = False) -> NumberField:
    """Create a number field handle from a monic minimal polynomial.

    Irreducibility is certified by searching the first PRIME_SEARCH_COUNT
    primes for one where the mod-p reduction is squarefree and irreducible
    (sound for monic p-integral polynomials), or by recognizing a
    cyclotomic polynomial, which is irreducible over Q by Gauss's theorem.
    The second route matters: cyclotomic polynomials of index m with
    non-cyclic (Z/m)* -- e.g. m = 8 or 12 -- are irreducible modulo no
    prime at all.  If neither route certifies, the constructor refuses
    unless assume_irreducible is set.
    """
    coeffs = tuple(Fraction(c) for c in minpoly)
    if not coeffs:
        raise InputError("minimal polynomial must be nonempty")
    if coeffs[-1] != 1:
        raise NotMonic(f"leading coefficient is {coeffs[-1]}, expected 1")
    if len(coeffs) < 2:
        raise InputError("minimal polynomial must have degree >= 1")
    if not qpoly.is_squarefree(coeffs):
        raise NotSquarefree("gcd with derivative is nontrivial")
    certificate = None
    if len(coeffs) > 2 and not assume_irreducible:
        for p in qpoly.primes(PRIME_SEARCH_COUNT):
            if any(c.denominator % p == 0 for c in coeffs):
                continue
            fp = qpoly.fp_from_q(coeffs, p)
            if len(fp) != len(coeffs):
                continue
            if qpoly.fp_gcd(fp, qpoly.fp_derivative(fp, p), p) != (1,):
                continue  # p divides the discriminant
            if qpoly.fp_is_irreducible(fp, p):
                certificate = ("prime", p)
                break
        if certificate is None:
            for m in qpoly.torsion_order_candidates(len(coeffs) - 1):
                if coeffs == qpoly.cyclotomic(m):
                    certificate = ("cyclotomic", m)
                    break
        if certificate is None:
            raise IrreducibilityUndecided(
                "no certifying prime among the first "
                f"{PRIME_SEARCH_COUNT} and not a recognized cyclotomic "
                "polynomial; pass assume_irreducible=True to force"
            )
    return NumberField(var=var, minpoly=coeffs, certificate=certificate)


class FieldElement:
    """Immutable element of a NumberField, a canonical coefficient vector.

    Hand-rolled (slots, cached hash, degree-1 fast paths) because these
    objects dominate every inner loop in the package.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: NumberField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and (
            self.field is other.field or self.field == other.field
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash(self.coeffs)
        return h

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def _check(self, other: "FieldElement"):
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch(
                f"elements of Q[{self.field.var}] vs Q[{other.field.var}] "
                "with different defining polynomials"
            )

    def __add__(self, other):
        self._check(other)
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        return FieldElement(
            self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return FieldElement(self.field, (a[0] * b[0],))
        prod = qpoly.mul(a, b)
        d = len(a)
        if len(prod) <= d:
            return FieldElement(
                self.field, prod + (Fraction(0),) * (d - len(prod))
            )
        return FieldElement(self.field, qpoly.rem_monic(prod, self.field.minpoly))

    def inverse(self) -> "FieldElement":
        if len(self.coeffs) == 1:
            if self.coeffs[0] == 0:
                raise DivisionByZero("inverse of zero field element")
            return FieldElement(self.field, (1 / self.coeffs[0],))
        if self.is_zero():
            raise DivisionByZero("inverse of zero field element")
        g, u, _ = qpoly.egcd(qpoly.normalize(self.coeffs), self.field.minpoly)
        if qpoly.degree(g) != 0:
            raise InternalCheckError(
                "residue polynomial shares a factor with the minimal polynomial"
            )
        inv = qpoly.scale(u, 1 / g[0])
        return FieldElement(self.field, qpoly.rem_monic(inv, self.field.minpoly))

    def __truediv__(self, other):
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("division by zero field element")
        return self * other.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        var = self.field.var
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*{var}" if c != 1 else var)
            else:
                parts.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
        return " + ".join(parts) if parts else "0"


def minimal_polynomial(a: FieldElement) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of a over Q, low-degree first.

    Found as the first linear dependency among the coefficient vectors of
    1, a, a^2, ...; always of degree dividing the field degree.
    """
    finder = DependencyFinder(Fraction(0), Fraction(1))
    power = a.field.one()
    for _ in range(a.field.degree + 1):
        combo = finder.add(power.coeffs)
        if combo is not None:
            return qpoly.normalize(combo)
        power = power * a
    raise InternalCheckError("no dependency among powers up to the field degree")


def is_root_of_unity(a: FieldElement) -> Optional[int]:
    """Exact multiplicative order of a, or None when a is not torsion.

    a is a root of unity iff its minimal polynomial is the m-th cyclotomic
    polynomial for some m with phi(m) = deg; candidate orders are finitely
    enumerable and each match is confirmed by exact exponentiation.
    """
    if a.is_zero():
        raise ZeroElement("zero has no multiplicative order")
    mp = minimal_polynomial(a)
    d = qpoly.degree(mp)
    for m in qpoly.torsion_order_candidates(d):
        if mp == qpoly.cyclotomic(m):
            if (a ** m).is_one():
                return m
            raise InternalCheckError(
                f"minimal polynomial matched cyclotomic({m}) but a^{m} != 1"
            )
    return None


def is_algebraic_integer(a: FieldElement) -> bool:
    return all(c.denominator == 1 for c in minimal_polynomial(a))
