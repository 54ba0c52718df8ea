"""Exact integer linear algebra and univariate polynomial arithmetic.

Everything in this module works over arbitrary-precision integers; no
floating point is used anywhere.  The module provides:

* :class:`IntPolynomial` -- immutable integer polynomials (coefficients
  stored lowest degree first),
* :class:`IntMatrix` -- immutable integer matrices in row-major order,
* :func:`char_poly` -- division-free characteristic polynomials via the
  Berkowitz algorithm,
* :func:`smith_normal_form` -- Smith normal form together with the
  unimodular row and column transforms,
* :func:`kernel_basis` -- a primitive basis of the integer kernel lattice,
* :func:`factor_over_Q` -- factorization into irreducible factors over the
  rationals (content split off, factors in a deterministic canonical order).
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Iterable, Iterator, Sequence

import sympy

__all__ = [
    "IntPolynomial",
    "IntMatrix",
    "SmithNormalForm",
    "char_poly",
    "smith_normal_form",
    "factor_over_Q",
    "kernel_basis",
    "companion_matrix",
    "block_diagonal",
    "block_upper_triangular",
    "inverse_unimodular",
    "polynomial_sort_key",
]

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_MINUS = "−"


def _superscript(n: int) -> str:
    return str(n).translate(_SUPERSCRIPTS)


@dataclasses.dataclass(frozen=True)
class IntPolynomial:
    """An integer polynomial, coefficients lowest degree first.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial has an empty coefficient tuple and every nonzero polynomial
    has a nonzero leading coefficient.

    >>> p = IntPolynomial((-5, 2, 0, 1))
    >>> str(p)
    'x³+2x−5'
    >>> p.degree
    3
    >>> p.evaluate(1)
    -2
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise ValueError(f"monomial degree must be nonnegative, got {degree}.")
        return cls((0,) * degree + (coefficient,))

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        if self.is_zero:
            return 0
        return self.coefficients[-1]

    @property
    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def coefficient(self, degree: int) -> int:
        """Coefficient of ``x**degree`` (zero when out of range)."""
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def evaluate(self, value: int) -> int:
        """Evaluate at an integer by Horner's rule.

        >>> IntPolynomial((-1, 0, 1)).evaluate(3)
        8
        """
        result = 0
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coefficients:
            g = _gcd(g, c)
        return g

    def primitive_part(self) -> "IntPolynomial":
        """The polynomial divided by its content, sign of the leading term kept.

        >>> str(IntPolynomial((2, 0, 4)).primitive_part())
        '2x²+1'
        """
        if self.is_zero:
            return self
        g = self.content()
        return IntPolynomial(tuple(c // g for c in self.coefficients))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(
            tuple(i * c for i, c in enumerate(self.coefficients) if i > 0)
        )

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return IntPolynomial(tuple(summed))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPolynomial(tuple(product))

    def scale(self, factor: int) -> "IntPolynomial":
        return IntPolynomial(tuple(factor * c for c in self.coefficients))

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError(f"polynomial exponent must be nonnegative, got {exponent}.")
        result = IntPolynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def try_exact_divide(self, divisor: "IntPolynomial") -> "IntPolynomial | None":
        """Quotient ``self / divisor`` over the integers, or None.

        Returns the quotient when the division is exact with integer
        coefficients at every step of the long division, otherwise None.

        >>> p = IntPolynomial((-1, 0, 1))
        >>> str(p.try_exact_divide(IntPolynomial((1, 1))))
        'x−1'
        >>> p.try_exact_divide(IntPolynomial((2, 1))) is None
        True
        """
        if divisor.is_zero:
            raise ValueError("cannot divide by the zero polynomial.")
        remainder = list(self.coefficients)
        dlead = divisor.leading_coefficient
        ddeg = divisor.degree
        if self.is_zero:
            return IntPolynomial(())
        if self.degree < ddeg:
            return None
        quotient = [0] * (self.degree - ddeg + 1)
        for pos in range(len(quotient) - 1, -1, -1):
            head = remainder[pos + ddeg]
            if head % dlead != 0:
                return None
            q = head // dlead
            quotient[pos] = q
            if q != 0:
                for i, c in enumerate(divisor.coefficients):
                    remainder[pos + i] -= q * c
        if any(remainder):
            return None
        return IntPolynomial(tuple(quotient))

    # -- rendering ----------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[tuple[str, str]] = []
        for degree in range(self.degree, -1, -1):
            c = self.coefficients[degree]
            if c == 0:
                continue
            sign = _MINUS if c < 0 else "+"
            magnitude = abs(c)
            if degree == 0:
                body = str(magnitude)
            else:
                variable = "x" if degree == 1 else "x" + _superscript(degree)
                body = variable if magnitude == 1 else f"{magnitude}{variable}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        rendered = (first_sign if first_sign == _MINUS else "") + first_body
        for sign, body in parts[1:]:
            rendered += sign + body
        return rendered


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


@dataclasses.dataclass(frozen=True)
class IntMatrix:
    """An immutable integer matrix stored row-major.

    >>> m = IntMatrix.from_rows([[1, 2], [3, 4]])
    >>> m.entry(1, 0)
    3
    >>> (m @ IntMatrix.identity(2)) == m
    True
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(
                f"matrix dimensions must be nonnegative, got {self.rows}×{self.cols}."
            )
        entries = tuple(int(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries for a "
                f"{self.rows}×{self.cols} matrix, got {len(entries)}."
            )
        object.__setattr__(self, "entries", entries)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        row_list = [list(r) for r in rows]
        n = len(row_list)
        c = len(row_list[0]) if row_list else 0
        for i, row in enumerate(row_list):
            if len(row) != c:
                raise ValueError(
                    f"ragged matrix rows: row 0 has {c} entries, row {i} has {len(row)}."
                )
        flat = tuple(int(e) for row in row_list for e in row)
        return cls(n, c, flat)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    # -- access -------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}×{self.cols} matrix.")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def iter_entries(self) -> Iterator[tuple[int, int, int]]:
        for i in range(self.rows):
            for j in range(self.cols):
                yield i, j, self.entries[i * self.cols + j]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._require_same_shape(other)
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._require_same_shape(other)
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(a - b for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-e for e in self.entries))

    def __mul__(self, scalar: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(scalar * e for e in self.entries))

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}×{self.cols} by {other.rows}×{other.cols}."
            )
        rows = []
        for i in range(self.rows):
            left_row = self.row(i)
            rows.append(
                [
                    sum(left_row[k] * other.entries[k * other.cols + j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
            )
        return IntMatrix.from_rows(rows) if rows else IntMatrix.zeros(0, other.cols)

    def apply_to_vector(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product with a column vector."""
        if len(vector) != self.cols:
            raise ValueError(
                f"vector of length {len(vector)} does not match {self.rows}×{self.cols}."
            )
        return tuple(
            sum(self.entry(i, j) * vector[j] for j in range(self.cols))
            for i in range(self.rows)
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def trace(self) -> int:
        if not self.is_square:
            raise ValueError(f"trace requires a square matrix, got {self.rows}×{self.cols}.")
        return sum(self.entry(i, i) for i in range(self.rows))

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "IntMatrix":
        return IntMatrix(
            len(row_indices),
            len(col_indices),
            tuple(self.entry(i, j) for i in row_indices for j in col_indices),
        )

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination.

        >>> IntMatrix.from_rows([[2, 0], [0, 3]]).det()
        6
        """
        if not self.is_square:
            raise ValueError(
                f"determinant requires a square matrix, got {self.rows}×{self.cols}."
            )
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        previous_pivot = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if pivot_row is None:
                    return 0
                a[k], a[pivot_row] = a[pivot_row], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous_pivot
                a[i][k] = 0
            previous_pivot = a[k][k]
        return sign * a[n - 1][n - 1]

    def _require_same_shape(self, other: "IntMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}×{self.cols} vs {other.rows}×{other.cols}."
            )

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"[empty {self.rows}×{self.cols}]"
        body = "; ".join(
            " ".join(str(e) for e in self.row(i)) for i in range(self.rows)
        )
        return f"[{body}]"


@dataclasses.dataclass(frozen=True)
class SmithNormalForm:
    """Smith normal form ``left · input · right = diagonal``.

    ``diagonal`` lists only the nonzero invariant factors d₁ | d₂ | … | d_r,
    all positive; ``left`` and ``right`` are unimodular.
    """

    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def diagonal_matrix(self) -> IntMatrix:
        """The full (rows × cols) diagonal matrix ``left · input · right``."""
        rows, cols = self.left.rows, self.right.rows
        entries = [0] * (rows * cols)
        for i, d in enumerate(self.diagonal):
            entries[i * cols + i] = d
        return IntMatrix(rows, cols, tuple(entries))


def char_poly(m: IntMatrix) -> IntPolynomial:
    """Characteristic polynomial det(xI − m), monic, by Berkowitz's algorithm.

    The computation is division-free, so every intermediate value is an
    integer.

    >>> str(char_poly(IntMatrix.identity(3)))
    'x³−3x²+3x−1'
    >>> str(char_poly(IntMatrix.from_rows([[0, 1], [1, 0]])))
    'x²−1'
    """
    if not m.is_square:
        raise ValueError(
            f"characteristic polynomial requires a square matrix, got {m.rows}×{m.cols}."
        )
    n = m.rows
    if n == 0:
        return IntPolynomial.one()
    rows = m.to_rows()
    # Coefficient vector of the char poly of the leading principal r×r
    # submatrix, highest degree first; extended one submatrix at a time.
    coeffs = [1, -rows[0][0]]
    for r in range(2, n + 1):
        principal = [row[: r - 1] for row in rows[: r - 1]]
        row_part = rows[r - 1][: r - 1]
        col_part = [rows[i][r - 1] for i in range(r - 1)]
        corner = rows[r - 1][r - 1]
        toeplitz_column = [1, -corner]
        power_of_col = col_part[:]
        for _ in range(r - 1):
            toeplitz_column.append(
                -sum(row_part[i] * power_of_col[i] for i in range(r - 1))
            )
            power_of_col = [
                sum(principal[i][j] * power_of_col[j] for j in range(r - 1))
                for i in range(r - 1)
            ]
        extended = [0] * (r + 1)
        for i in range(r + 1):
            total = 0
            for j in range(max(0, i - r), min(i, r - 1) + 1):
                total += toeplitz_column[i - j] * coeffs[j]
            extended[i] = total
        coeffs = extended
    return IntPolynomial(tuple(reversed(coeffs)))


def smith_normal_form(m: IntMatrix) -> SmithNormalForm:
    """Smith normal form with unimodular transforms.

    Returns :class:`SmithNormalForm` with positive invariant factors
    satisfying the divisibility chain and ``left · m · right`` equal to the
    rectangular diagonal matrix.

    >>> smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])).diagonal
    (1, 6)
    >>> smith_normal_form(IntMatrix.zeros(2, 3)).diagonal
    ()
    """
    n, c = m.rows, m.cols
    a = m.to_rows()
    left = IntMatrix.identity(n).to_rows()
    right = IntMatrix.identity(c).to_rows()

    def row_add(i: int, j: int, q: int) -> None:
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        left[i] = [x + q * y for x, y in zip(left[i], left[j])]

    def col_add(j: int, i: int, q: int) -> None:
        for k in range(n):
            a[k][j] += q * a[k][i]
        for k in range(c):
            right[k][j] += q * right[k][i]

    def row_swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def col_swap(i: int, j: int) -> None:
        for k in range(n):
            a[k][i], a[k][j] = a[k][j], a[k][i]
        for k in range(c):
            right[k][i], right[k][j] = right[k][j], right[k][i]

    def row_negate(i: int) -> None:
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    limit = min(n, c)
    for t in range(limit):
        pivot = None
        for i in range(t, n):
            for j in range(t, c):
                v = a[i][j]
                if v != 0 and (pivot is None or abs(v) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            row_swap(t, pivot[0])
        if pivot[1] != t:
            col_swap(t, pivot[1])
        while True:
            if a[t][t] < 0:
                row_negate(t)
            p = a[t][t]
            moved = False
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    q = a[i][t] // p
                    if q:
                        row_add(i, t, -q)
                    if a[i][t] != 0:
                        row_swap(t, i)
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, c):
                if a[t][j] != 0:
                    q = a[t][j] // p
                    if q:
                        col_add(j, t, -q)
                    if a[t][j] != 0:
                        col_swap(t, j)
                        moved = True
                        break
            if moved:
                continue
            offender = None
            for i in range(t + 1, n):
                if any(a[i][j] % p != 0 for j in range(t + 1, c)):
                    offender = i
                    break
            if offender is None:
                break
            row_add(t, offender, 1)
    diagonal = tuple(a[i][i] for i in range(limit) if a[i][i] != 0)
    return SmithNormalForm(
        diagonal=diagonal,
        left=IntMatrix.from_rows(left) if n else IntMatrix.zeros(0, 0),
        right=IntMatrix.from_rows(right) if c else IntMatrix.zeros(0, 0),
    )


def kernel_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    """A primitive basis of the integer kernel lattice of ``m``.

    The vectors are the columns of the Smith right transform beyond the
    rank, hence a saturated (primitive) basis of {v : m·v = 0}; each vector
    is normalized so its first nonzero entry is positive.

    >>> kernel_basis(IntMatrix.identity(2))
    []
    >>> kernel_basis(IntMatrix.from_rows([[1, 1], [1, 1]]))
    [(1, -1)]
    """
    snf = smith_normal_form(m)
    basis = []
    for j in range(snf.rank, m.cols):
        vector = snf.right.column(j)
        leading = next((v for v in vector if v != 0), 0)
        if leading < 0:
            vector = tuple(-v for v in vector)
        basis.append(vector)
    return basis


def polynomial_sort_key(p: IntPolynomial) -> tuple:
    """Canonical ordering key for factor lists and class terms.

    Sorts by degree, then by coefficient magnitudes, then by signed
    coefficients, so x−1 precedes x+1 and x+1 precedes x−3.
    """
    return (p.degree, tuple(abs(c) for c in p.coefficients), p.coefficients)


def factor_over_Q(p: IntPolynomial) -> tuple[int, tuple[tuple[IntPolynomial, int], ...]]:
    """Factor ``p`` into content and irreducible integer polynomials over ℚ.

    Returns ``(content, factors)`` where ``factors`` is a tuple of
    ``(irreducible, multiplicity)`` pairs in canonical order (see
    :func:`polynomial_sort_key`) and ``content`` carries the integer content
    and sign, so that content · Π factorᵢ^multᵢ = p exactly.  Each factor is
    primitive with positive leading coefficient; when ``p`` is monic every
    factor is monic.

    >>> content, factors = factor_over_Q(IntPolynomial((-1, 0, 0, 0, 1)))
    >>> content
    1
    >>> [str(f) for f, _ in factors]
    ['x−1', 'x+1', 'x²+1']
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial.")
    variable = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(p.coefficients)), variable, domain="ZZ")
    content, factor_pairs = poly.factor_list()
    factors = []
    for factor, multiplicity in factor_pairs:
        coeffs = tuple(int(v) for v in reversed(factor.all_coeffs()))
        factors.append((IntPolynomial(coeffs), int(multiplicity)))
    factors.sort(key=lambda pair: polynomial_sort_key(pair[0]))
    return int(content), tuple(factors)


def companion_matrix(p: IntPolynomial) -> IntMatrix:
    """Companion matrix of a monic polynomial.

    >>> str(char_poly(companion_matrix(IntPolynomial((-5, 2, 0, 1)))))
    'x³+2x−5'
    """
    if p.is_zero or not p.is_monic:
        raise ValueError(f"companion matrix requires a monic polynomial, got {p}.")
    n = p.degree
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -p.coefficients[i]
    return IntMatrix.from_rows(rows) if n else IntMatrix.zeros(0, 0)


def block_diagonal(*blocks: IntMatrix) -> IntMatrix:
    """Direct sum of square or rectangular blocks along the diagonal."""
    total_rows = sum(b.rows for b in blocks)
    total_cols = sum(b.cols for b in blocks)
    entries = [[0] * total_cols for _ in range(total_rows)]
    row_offset = col_offset = 0
    for block in blocks:
        for i in range(block.rows):
            for j in range(block.cols):
                entries[row_offset + i][col_offset + j] = block.entry(i, j)
        row_offset += block.rows
        col_offset += block.cols
    return IntMatrix(total_rows, total_cols, tuple(itertools.chain.from_iterable(entries)))


def block_upper_triangular(top_left: IntMatrix, top_right: IntMatrix, bottom_right: IntMatrix) -> IntMatrix:
    """Assemble ``[[B, C], [0, D]]`` from compatible blocks."""
    if top_right.rows != top_left.rows or top_right.cols != bottom_right.cols:
        raise ValueError(
            "off-diagonal block shape "
            f"{top_right.rows}×{top_right.cols} does not fit "
            f"{top_left.rows}×{top_left.cols} over {bottom_right.rows}×{bottom_right.cols}."
        )
    rows = []
    for i in range(top_left.rows):
        rows.append(list(top_left.row(i)) + list(top_right.row(i)))
    for i in range(bottom_right.rows):
        rows.append([0] * top_left.cols + list(bottom_right.row(i)))
    return IntMatrix.from_rows(rows) if rows else IntMatrix.zeros(0, 0)


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix.

    Uses the Smith transforms: when all invariant factors are 1,
    ``left · m · right = I`` so the inverse is ``right · left``.

    >>> u = IntMatrix.from_rows([[2, 1], [1, 1]])
    >>> inverse_unimodular(u) @ u == IntMatrix.identity(2)
    True
    """
    if not m.is_square:
        raise ValueError(f"inverse requires a square matrix, got {m.rows}×{m.cols}.")
    snf = smith_normal_form(m)
    if snf.rank != m.rows or any(d != 1 for d in snf.diagonal):
        raise ValueError("matrix is not unimodular (invariant factors differ from 1).")
    return snf.right @ snf.left
