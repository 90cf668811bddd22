"""Dense exact matrices over arbitrary-precision integers and rationals.

IntMatrix and RatMatrix are immutable; all operations are pure functions.
Rational entries are fractions.Fraction, which keeps every entry in lowest
terms with a positive denominator, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernels
from .errors import DimensionError, SingularMatrixError
from .intpoly import IntPolynomial


class IntMatrix:
    """Immutable dense matrix with integer entries (row-major tuples)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries):
        data = tuple(tuple(int(x) for x in row) for row in entries)
        if not data:
            raise DimensionError("matrix must have at least one row")
        width = len(data[0])
        if width == 0 or any(len(r) != width for r in data):
            raise DimensionError("rows must be nonempty and of equal length")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def ones_column(cls, n: int) -> "IntMatrix":
        """The all-one n x 1 vector."""
        return cls([[1]] * n)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        _same_shape(self, other)
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        _same_shape(self, other)
        return IntMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in r] for r in self.data])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape()} by {other.shape()}")
        bt = other.transpose().data
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.data]
        )

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.data == other.data
        return NotImplemented

    def __hash__(self):
        return hash(self.data)

    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_rational(self) -> "RatMatrix":
        return RatMatrix([[Fraction(x) for x in row] for row in self.data])

    def __repr__(self):
        return f"IntMatrix({self.to_lists()})"


class RatMatrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries):
        data = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if not data:
            raise DimensionError("matrix must have at least one row")
        width = len(data[0])
        if width == 0 or any(len(r) != width for r in data):
            raise DimensionError("rows must be nonempty and of equal length")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def transpose(self) -> "RatMatrix":
        return RatMatrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    @property
    def T(self) -> "RatMatrix":
        return self.transpose()

    def __matmul__(self, other) -> "RatMatrix":
        if isinstance(other, IntMatrix):
            other = other.to_rational()
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape()} by {other.shape()}")
        bt = other.transpose().data
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.data]
        )

    def __rmatmul__(self, other) -> "RatMatrix":
        if isinstance(other, IntMatrix):
            return other.to_rational() @ self
        return NotImplemented

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        _same_shape(self, other)
        return RatMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __eq__(self, other):
        if isinstance(other, RatMatrix):
            return self.data == other.data
        if isinstance(other, IntMatrix):
            return self.data == other.to_rational().data
        return NotImplemented

    def __hash__(self):
        return hash(self.data)

    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.data for x in row)

    def to_integer(self) -> IntMatrix:
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return IntMatrix([[int(x) for x in row] for row in self.data])

    def __repr__(self):
        return f"RatMatrix({[[str(x) for x in row] for row in self.data]})"


def _same_shape(a, b):
    if a.shape() != b.shape():
        raise DimensionError(f"shape mismatch: {a.shape()} vs {b.shape()}")


def _require_square(m, what: str):
    if not m.is_square:
        raise DimensionError(f"{what} requires a square matrix, got {m.shape()}")


# -- operations ---------------------------------------------------------------


def det(m: IntMatrix) -> int:
    """Exact determinant (fraction-free Bareiss elimination)."""
    _require_square(m, "det")
    return kernels.det_int(m.to_lists())


def charpoly(m: IntMatrix) -> IntPolynomial:
    """det(xI - A) as a monic integer polynomial (division-free Berkowitz)."""
    _require_square(m, "charpoly")
    return IntPolynomial(kernels.charpoly_coeffs(m.to_lists()))


def complement_matrix(m: IntMatrix) -> IntMatrix:
    """J - I - A, the formal complement of a signed adjacency matrix."""
    _require_square(m, "complement_matrix")
    n = m.rows
    return IntMatrix(
        [[(0 if i == j else 1) - m.data[i][j] for j in range(n)] for i in range(n)]
    )


def rat_inverse(m: RatMatrix) -> RatMatrix:
    """Exact inverse by Gauss-Jordan elimination; raises when singular."""
    _require_square(m, "rat_inverse")
    n = m.rows
    a = [list(row) for row in m.data]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if a[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            raise SingularMatrixError()
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        pivot = a[col][col]
        if pivot != 1:
            a[col] = [x / pivot for x in a[col]]
            inv[col] = [x / pivot for x in inv[col]]
        for r in range(n):
            if r == col or a[r][col] == 0:
                continue
            factor = a[r][col]
            a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
            inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    return RatMatrix(inv)


def solve_rational(m: RatMatrix, rhs: list[Fraction]) -> list[Fraction]:
    """Solve m * x = rhs exactly; raises SingularMatrixError when singular."""
    _require_square(m, "solve_rational")
    n = m.rows
    if len(rhs) != n:
        raise DimensionError("right-hand side length mismatch")
    a = [list(row) + [Fraction(rhs[i])] for i, row in enumerate(m.data)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError()
        a[col], a[pivot_row] = a[pivot_row], a[col]
        pivot = a[col][col]
        a[col] = [x / pivot for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


# -- matrix text format ---------------------------------------------------------


def parse_matrix(text: str) -> IntMatrix | RatMatrix:
    """Parse the matrix text format: 'rows cols' then entry rows.

    Entries are integers or num/den rationals; the result is an IntMatrix
    exactly when no '/' appears.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("first line must be 'rows cols'")
    nrows, ncols = int(header[0]), int(header[1])
    if len(lines) - 1 != nrows:
        raise ValueError(f"expected {nrows} entry rows, got {len(lines) - 1}")
    rational = "/" in text
    out = []
    for ln in lines[1 : nrows + 1]:
        parts = ln.split()
        if len(parts) != ncols:
            raise ValueError(f"expected {ncols} entries per row, got {len(parts)}")
        if rational:
            out.append([Fraction(tok) for tok in parts])
        else:
            out.append([int(tok) for tok in parts])
    return RatMatrix(out) if rational else IntMatrix(out)


def format_matrix(m: IntMatrix | RatMatrix) -> str:
    """Inverse of parse_matrix."""
    lines = [f"{m.rows} {m.cols}"]
    for i in range(m.rows):
        lines.append(" ".join(str(m[i, j]) for j in range(m.cols)))
    return "\n".join(lines) + "\n"
