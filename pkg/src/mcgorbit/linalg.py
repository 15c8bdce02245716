"""Exact linear algebra over an arbitrary field.

Works on lists of scalars supporting +, -, *, / and == (Fraction or
FieldElement); the caller supplies the field's zero and one.
"""

from __future__ import annotations


def nullspace(rows, ncols, zero, one):
    """Basis of the right kernel of the matrix given by `rows`.

    Returns a list of length-ncols vectors; empty list means trivial kernel.
    """
    mat = [list(row) for row in rows]
    pivots = []  # (row, col)
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(mat)):
            if mat[r][col] != zero:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = one / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != zero:
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for r, col in enumerate(pivots):
            vec[col] = zero - mat[r][free]
        basis.append(vec)
    return basis


class DependencyFinder:
    """Incremental detector of the first linear dependency in a vector stream.

    add(v) returns None while the vectors stay independent; at the first
    dependent vector it returns coefficients c_0..c_k (c_k = 1) with
    sum(c_j * v_j) = 0.
    """

    def __init__(self, zero, one):
        self.zero = zero
        self.one = one
        self.rows = []  # (pivot index, reduced vector, combination)
        self.count = 0

    def add(self, vector):
        vec = list(vector)
        combo = [self.zero] * self.count + [self.one]
        for pivot, bvec, bcombo in self.rows:
            c = vec[pivot]
            if c != self.zero:
                vec = [x - c * y for x, y in zip(vec, bvec)]
                for i, bc in enumerate(bcombo):
                    combo[i] = combo[i] - c * bc
        self.count += 1
        for j, x in enumerate(vec):
            if x != self.zero:
                inv = self.one / x
                vec = [v * inv for v in vec]
                combo = [c * inv for c in combo]
                self.rows.append((j, vec, combo))
                return None
        return combo
