"""
Structured Matrices αI_d + βJ_d

The two-parameter matrices αI + βJ form a commutative subring of the symmetric
circulant matrices, closed under the product formula

    (αI + βJ)(γI + δJ) = αγ I + (αδ + βγ + dβδ) J

so every operation here is O(1) in the dimension. Dense matrices exist only for
oracles (Bareiss determinants, the Helmert diagonalization, the cyclic rotation)
and are never materialized implicitly.

The Bose matrix M_d(ℓ,a) = (ℓ−a)I + aJ ties this module to the isocanted cube: its
determinant is the primal volume, and the columns of ±2·M⁻¹ are the vertices of the
polar dual of the centred parallelepiped spanned by its columns.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple, Union

from errors import BadParams, DimensionMismatch, NotSquare, Singular
from exactnum import Point, Scalar, Surd, surd_sqrt, to_rational


@dataclass(frozen=True)
class StructuredMatrix:
    """αI_d + βJ_d: α+β on the diagonal, β elsewhere."""

    d: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        if self.d < 1:
            raise BadParams(f"dimension must be ≥ 1, got d={self.d}")
        object.__setattr__(self, "alpha", to_rational(self.alpha))
        object.__setattr__(self, "beta", to_rational(self.beta))

    def entry(self, i: int, j: int) -> Fraction:
        return self.alpha + self.beta if i == j else self.beta

    def to_dense(self) -> "DenseMatrix":
        return DenseMatrix(
            tuple(tuple(self.entry(i, j) for j in range(self.d)) for i in range(self.d))
        )


@dataclass(frozen=True)
class DenseMatrix:
    """Rectangular grid of scalars, all Fraction or all Surd."""

    entries: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        rows = [tuple(_normalize_entry(x) for x in row) for row in self.entries]
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise BadParams("dense matrix rows have different lengths")
        kinds = {type(x) for row in rows for x in row}
        if len(kinds) > 1:
            raise BadParams("dense matrix mixes rational and surd entries")
        object.__setattr__(self, "entries", tuple(rows))

    @classmethod
    def of(cls, rows: Sequence[Sequence[Union[int, Fraction, Surd]]]) -> "DenseMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_surd(self) -> bool:
        return bool(self.entries) and bool(self.entries[0]) and isinstance(self.entries[0][0], Surd)

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> List[Tuple[Scalar, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "DenseMatrix":
        return dense_transpose(self)

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        return dense_mul(self, other)


def _normalize_entry(value: Union[int, Fraction, Surd]) -> Scalar:
    if isinstance(value, Surd):
        return value
    return to_rational(value)


def _zero_like(matrix: DenseMatrix) -> Scalar:
    return Surd(0) if matrix.is_surd else Fraction(0)


def identity(d: int) -> DenseMatrix:
    return DenseMatrix(tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)))


def dense_transpose(matrix: DenseMatrix) -> DenseMatrix:
    return DenseMatrix(tuple(matrix.column(j) for j in range(matrix.cols)))


def dense_mul(left: DenseMatrix, right: DenseMatrix) -> DenseMatrix:
    if left.cols != right.rows:
        raise DimensionMismatch(f"cannot multiply {left.rows}×{left.cols} by {right.rows}×{right.cols}")
    surd = left.is_surd or right.is_surd
    zero: Scalar = Surd(0) if surd else Fraction(0)
    result = []
    for row in left.entries:
        out_row = []
        for j in range(right.cols):
            total = zero
            for k, x in enumerate(row):
                y = right.entries[k][j]
                if x and y:
                    total = total + x * y
            out_row.append(Surd.coerce(total) if surd else total)
        result.append(tuple(out_row))
    return DenseMatrix(tuple(result))


def sm_mul(left: StructuredMatrix, right: StructuredMatrix) -> StructuredMatrix:
    """
    Product of two matrices αI + βJ, using J² = dJ.

    Args:
        left: (α, β)
        right: (γ, δ)

    Returns:
        (αγ, αδ + βγ + dβδ) in the same dimension.

    Raises:
        DimensionMismatch: the dimensions differ.
    """
    if left.d != right.d:
        raise DimensionMismatch(f"dimensions differ: {left.d} and {right.d}")
    alpha, beta, gamma, delta = left.alpha, left.beta, right.alpha, right.beta
    return StructuredMatrix(left.d, alpha * gamma, alpha * delta + beta * gamma + left.d * beta * delta)


def sm_spectrum(matrix: StructuredMatrix) -> Tuple[Tuple[Fraction, int], Tuple[Fraction, int]]:
    """((α, d−1), (α+dβ, 1)): eigenvalue and multiplicity pairs."""
    return (matrix.alpha, matrix.d - 1), (matrix.alpha + matrix.d * matrix.beta, 1)


def sm_det(matrix: StructuredMatrix) -> Fraction:
    """α^{d−1}·(α + dβ)."""
    return matrix.alpha ** (matrix.d - 1) * (matrix.alpha + matrix.d * matrix.beta)


def sm_inverse(matrix: StructuredMatrix) -> StructuredMatrix:
    """
    Inverse of αI + βJ.

    Args:
        matrix: (α, β) in dimension d

    Returns:
        (1/α, −β/(α(α+dβ))).

    Raises:
        Singular: α = 0 or α + dβ = 0.
    """
    alpha, beta, d = matrix.alpha, matrix.beta, matrix.d
    top = alpha + d * beta
    if alpha == 0 or top == 0:
        raise Singular(f"α(α+dβ) = 0 for α={alpha}, β={beta}, d={d}")
    return StructuredMatrix(d, 1 / alpha, -beta / (alpha * top))


def bose(ell: Union[int, Fraction], a: Union[int, Fraction], d: int) -> StructuredMatrix:
    """M_d(ℓ,a) = (ℓ−a)I_d + aJ_d."""
    ell, a = to_rational(ell), to_rational(a)
    if not 0 <= a < ell:
        raise BadParams(f"0 ≤ a < ℓ violated: a={a}, ℓ={ell}")
    return StructuredMatrix(d, ell - a, a)


def diagonal_form(matrix: StructuredMatrix) -> DenseMatrix:
    """D_d(α,β) = diag(α, …, α, α+dβ)."""
    diagonal = [matrix.alpha] * (matrix.d - 1) + [matrix.alpha + matrix.d * matrix.beta]
    d = matrix.d
    return DenseMatrix(
        tuple(tuple(diagonal[i] if i == j else Fraction(0) for j in range(d)) for i in range(d))
    )


def helmert(d: int) -> DenseMatrix:
    """
    Orthogonal matrix diagonalizing every αI + βJ.

    Column j < d holds 1/λ_j in its first j rows, −j/λ_j in row j+1 and zeros below,
    with λ_j = √(j+j²); the last column is constant 1/√d.
    """
    if d < 1:
        raise BadParams(f"dimension must be ≥ 1, got d={d}")
    rows = []
    for r in range(d):
        row = []
        for c in range(d - 1):
            j = c + 1
            inv_lambda = surd_sqrt(Fraction(1, j + j * j))
            if r < j:
                row.append(inv_lambda)
            elif r == j:
                row.append(inv_lambda * (-j))
            else:
                row.append(Surd(0))
        row.append(surd_sqrt(Fraction(1, d)))
        rows.append(tuple(row))
    return DenseMatrix(tuple(rows))


def rotation_matrix(d: int) -> DenseMatrix:
    """Cyclic shift B_d whose first column is (0,1,0,…,0)ᵀ."""
    if d < 1:
        raise BadParams(f"dimension must be ≥ 1, got d={d}")
    return DenseMatrix(
        tuple(tuple(Fraction(int(i == (j + 1) % d)) for j in range(d)) for i in range(d))
    )


def dense_det(matrix: DenseMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if matrix.rows != matrix.cols:
        raise NotSquare(f"determinant of a {matrix.rows}×{matrix.cols} matrix")
    if matrix.is_surd:
        raise BadParams("dense_det works over rationals only")
    n = matrix.rows
    if n == 0:
        return Fraction(1)
    # clear denominators row by row, then run integer Bareiss
    scale = 1
    grid: List[List[int]] = []
    for row in matrix.entries:
        lcm = math.lcm(*(x.denominator for x in row))
        grid.append([int(x * lcm) for x in row])
        scale *= lcm
    sign, previous = 1, 1
    for k in range(n - 1):
        if grid[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if grid[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            grid[k], grid[swap] = grid[swap], grid[k]
            sign = -sign
        pivot = grid[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                grid[i][j] = (grid[i][j] * pivot - grid[i][k] * grid[k][j]) // previous
        previous = pivot
    return Fraction(sign * grid[n - 1][n - 1], scale)


def dense_solve(matrix: DenseMatrix, rhs: Sequence[Fraction]) -> Optional[Point]:
    """Unique solution of M·x = rhs by exact Gauss–Jordan, or None when singular."""
    if matrix.rows != matrix.cols:
        raise NotSquare(f"solve with a {matrix.rows}×{matrix.cols} matrix")
    if len(rhs) != matrix.rows:
        raise DimensionMismatch(f"right-hand side has {len(rhs)} entries, expected {matrix.rows}")
    n = matrix.rows
    augmented = [list(row) + [to_rational(b)] for row, b in zip(matrix.entries, rhs)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if augmented[i][k] != 0), None)
        if pivot_row is None:
            return None
        augmented[k], augmented[pivot_row] = augmented[pivot_row], augmented[k]
        pivot = augmented[k][k]
        augmented[k] = [x / pivot for x in augmented[k]]
        for i in range(n):
            if i != k and augmented[i][k] != 0:
                factor = augmented[i][k]
                augmented[i] = [x - factor * y for x, y in zip(augmented[i], augmented[k])]
    return tuple(row[n] for row in augmented)


@dataclass(frozen=True)
class FacetEquation:
    """normal·x = rhs, the supporting hyperplane of facet (index, sign)."""

    index: int
    sign: int
    normal: Point
    rhs: Fraction

    def value(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != len(self.normal):
            raise DimensionMismatch(f"point of dimension {len(point)}, expected {len(self.normal)}")
        return sum((n * x for n, x in zip(self.normal, point)), Fraction(0))

    def holds(self, point: Sequence[Fraction]) -> bool:
        return self.value(point) == self.rhs


def _bose_strict(ell: Union[int, Fraction], a: Union[int, Fraction], d: int) -> StructuredMatrix:
    matrix = bose(ell, a, d)
    if d < 1:
        raise BadParams(f"dimension must be ≥ 1, got d={d}")
    return matrix


def par_polar_vertices(ell: Union[int, Fraction], a: Union[int, Fraction], d: int) -> Tuple[Point, ...]:
    """
    Vertices of the polar dual of the centred parallelepiped τ(Par(M_d(ℓ,a))):
    the d columns of 2·M⁻¹ followed by their d negatives.
    """
    inverse = sm_inverse(_bose_strict(ell, a, d)).to_dense()
    positive = [tuple(2 * x for x in column) for column in inverse.columns()]
    negative = [tuple(-x for x in column) for column in positive]
    return tuple(positive + negative)


def par_vertices(ell: Union[int, Fraction], a: Union[int, Fraction], d: int) -> Tuple[Point, ...]:
    """
    The 2^d vertices of τ(Par(M_d(ℓ,a))), translated by −(ℓ+(d−1)a)/2·(1,…,1).

    Ordered by subset size then lexicographically, so d = 3 follows the column order
    of the classical vertex table.
    """
    dense = _bose_strict(ell, a, d).to_dense()
    shift = (to_rational(ell) + (d - 1) * to_rational(a)) / 2
    columns = dense.columns()
    vertices = []
    for size in range(d + 1):
        for subset in combinations(range(d), size):
            vertex = [Fraction(0)] * d
            for j in subset:
                vertex = [v + x for v, x in zip(vertex, columns[j])]
            vertices.append(tuple(v - shift for v in vertex))
    return tuple(vertices)


def par_facet_equations(
    ell: Union[int, Fraction], a: Union[int, Fraction], d: int
) -> Tuple[FacetEquation, ...]:
    """(ℓ+(d−2)a)x_i − aΣ_{j≠i}x_j = ±(ℓ−a)(ℓ+(d−1)a)/2 for each i and sign."""
    _bose_strict(ell, a, d)
    ell, a = to_rational(ell), to_rational(a)
    rhs = (ell - a) * (ell + (d - 1) * a) / 2
    equations = []
    for i in range(d):
        normal = tuple(ell + (d - 2) * a if j == i else -a for j in range(d))
        for sign in (1, -1):
            equations.append(FacetEquation(i + 1, sign, normal, sign * rhs))
    return tuple(equations)
