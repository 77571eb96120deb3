"""Dense exact linear algebra over the rationals.

Scalars are ``fractions.Fraction`` (always in lowest terms, positive
denominator), so every computation here is exact and deterministic:
identical inputs give bit-identical outputs.  Matrices are small and
dense; elimination is plain Gauss-Jordan with leading-entry pivoting,
which keeps reduced echelon forms (and hence nullspace bases and
particular solutions) canonical.

Rationals serialize as ``"p/q"`` (or ``"p"`` when q = 1) with the sign
on the numerator; that is exactly ``str(Fraction)``, and
``Fraction(text)`` parses it back.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction; reject anything non-rational."""
    try:
        value = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc
    return value


def format_rational(value: Fraction) -> str:
    return str(value)


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Fraction]):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Fraction]], cols: Optional[int] = None) -> "Matrix":
        nrows = len(rows)
        if nrows == 0:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            return Matrix(0, cols, ())
        ncols = len(rows[0]) if cols is None else cols
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(Fraction(x) for x in r)
        return Matrix(nrows, ncols, flat)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, (ZERO,) * (rows * cols))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"

    def apply(self, vec: Sequence[Fraction]) -> list[Fraction]:
        """Matrix-vector product, skipping zero entries of vec."""
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != cols {self.cols}")
        out = [ZERO] * self.rows
        for j, v in enumerate(vec):
            if v == 0:
                continue
            for i in range(self.rows):
                e = self.entries[i * self.cols + j]
                if e != 0:
                    out[i] += e * v
        return out

    def mul(self, other: "Matrix") -> "Matrix":
        """Sparse-aware matrix product self @ other."""
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        # row-sparse view of self: for each k, the nonzero (i, value) of column k
        col_nonzeros: list[list[tuple[int, Fraction]]] = [[] for _ in range(self.cols)]
        for i in range(self.rows):
            base = i * self.cols
            for k in range(self.cols):
                e = self.entries[base + k]
                if e != 0:
                    col_nonzeros[k].append((i, e))
        out = [ZERO] * (self.rows * other.cols)
        for k in range(other.rows):
            base = k * other.cols
            nz = col_nonzeros[k]
            if not nz:
                continue
            for j in range(other.cols):
                b = other.entries[base + j]
                if b == 0:
                    continue
                for i, a in nz:
                    out[i * other.cols + j] += a * b
        return Matrix(self.rows, other.cols, out)


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    ri, rr = rows[i], rows[r]
                    rows[i] = [a - f * b for a, b in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    _, pivots = _rref(m.row_lists(), m.cols)
    return len(pivots)


def nullspace_basis(m: Matrix) -> list[list[Fraction]]:
    """Canonical kernel basis: one vector per free column of the RREF,
    with a 1 in the free column and pivot entries filled in."""
    rows, pivots = _rref(m.row_lists(), m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for r, pc in enumerate(pivots):
            if rows[r][free] != 0:
                v[pc] = -rows[r][free]
        basis.append(v)
    return basis


def solve_affine(m: Matrix, b: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """Some x with m.x = b (free variables zero), or None if inconsistent."""
    if len(b) != m.rows:
        raise ValueError(f"rhs length {len(b)} != rows {m.rows}")
    aug = [list(m.row(i)) + [Fraction(b[i])] for i in range(m.rows)]
    rows, pivots = _rref(aug, m.cols)
    # a pivot in the augmented column means no solution
    for r in range(len(pivots), m.rows):
        if rows[r][m.cols] != 0:
            return None
    x = [ZERO] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.cols]
    return x


def hstack(parts: Sequence[Matrix]) -> Matrix:
    """Concatenate matrices left to right (same row count)."""
    if not parts:
        raise ValueError("nothing to stack")
    nrows = parts[0].rows
    if any(p.rows != nrows for p in parts):
        raise ValueError("row mismatch")
    out = []
    for i in range(nrows):
        for p in parts:
            out.extend(p.row(i))
    return Matrix(nrows, sum(p.cols for p in parts), out)


def vstack(parts: Sequence[Matrix]) -> Matrix:
    """Concatenate matrices top to bottom (same column count)."""
    if not parts:
        raise ValueError("nothing to stack")
    ncols = parts[0].cols
    if any(p.cols != ncols for p in parts):
        raise ValueError("column mismatch")
    flat = []
    for p in parts:
        flat.extend(p.entries)
    return Matrix(sum(p.rows for p in parts), ncols, flat)


def block_diag(parts: Sequence[Matrix]) -> Matrix:
    rows = sum(p.rows for p in parts)
    cols = sum(p.cols for p in parts)
    out = [ZERO] * (rows * cols)
    r0 = c0 = 0
    for p in parts:
        for i in range(p.rows):
            base = (r0 + i) * cols + c0
            prow = p.row(i)
            for j, e in enumerate(prow):
                if e != 0:
                    out[base + j] = e
        r0 += p.rows
        c0 += p.cols
    return Matrix(rows, cols, out)


def columns_matrix(columns: Sequence[Sequence[Fraction]], nrows: int) -> Matrix:
    """Build a matrix from a list of columns."""
    ncols = len(columns)
    out = [ZERO] * (nrows * ncols)
    for j, col in enumerate(columns):
        if len(col) != nrows:
            raise ValueError("column length mismatch")
        for i, e in enumerate(col):
            if e != 0:
                out[i * ncols + j] = e
    return Matrix(nrows, ncols, out)
