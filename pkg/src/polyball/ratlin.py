"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction` (always reduced, sign carried by the
numerator).  Vectors are tuples of fractions and matrices are tuples of row
tuples, so every value is immutable and hashable.
"""

import math
import re
from fractions import Fraction

from .errors import DimensionError, InputError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value):
    """Parse ``"p/q"``, ``"p"``, an int or a Fraction.  Floats are refused."""
    if isinstance(value, bool):
        raise InputError(f"boolean is not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if match is None:
            raise InputError(f"not a rational literal (expected 'p/q' or 'p'): {value!r}")
        num, den = match.groups()
        if den is not None and int(den) == 0:
            raise InputError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    if isinstance(value, float):
        raise InputError(f"float {value!r} is not exact; write rationals as strings like \"3/2\"")
    raise InputError(f"cannot read {type(value).__name__} {value!r} as an exact rational")


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_vector(values):
    vec = tuple(parse_rational(v) for v in values)
    if not vec:
        raise DimensionError("empty vector")
    return vec


def as_matrix(rows):
    mat = tuple(as_vector(row) for row in rows)
    if not mat:
        raise DimensionError("matrix has no rows")
    width = len(mat[0])
    if any(len(row) != width for row in mat):
        raise DimensionError("ragged matrix: rows have different lengths")
    return mat


def shape(mat):
    return len(mat), len(mat[0])


def dot(u, v):
    if len(u) != len(v):
        raise DimensionError(f"dot product of dims {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def neg(v):
    return tuple(-x for x in v)


def scale(c, v):
    return tuple(c * x for x in v)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def is_zero(v):
    return all(x == 0 for x in v)


def matvec(mat, v):
    return tuple(dot(row, v) for row in mat)


def transpose(mat):
    return tuple(zip(*mat))


def max_abs(values):
    return max((abs(x) for x in values), default=Fraction(0))


def _integer_rows(rows):
    # Scaling a row by a nonzero constant changes neither rank nor solutions.
    out = []
    for row in rows:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in row])
    return out


def _bareiss(rows, ncols):
    """Fraction-free forward elimination in place; returns pivot columns."""
    prev = 1
    r = 0
    pivots = []
    nrows = len(rows)
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            lead = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            for j in range(c + 1, len(row_i)):
                row_i[j] = (piv * row_i[j] - lead * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(mat):
    """Exact rank of a rational matrix by Bareiss elimination."""
    if not mat:
        return 0
    rows = _integer_rows(mat)
    return len(_bareiss(rows, len(rows[0])))


def solve_square(mat, b):
    """Solve ``mat @ x = b`` exactly.  Returns None when ``mat`` is singular."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise DimensionError("solve_square needs a square matrix")
    if len(b) != n:
        raise DimensionError(f"right-hand side has dim {len(b)}, matrix is {n}x{n}")
    rows = _integer_rows([tuple(row) + (rhs,) for row, rhs in zip(mat, b)])
    pivots = _bareiss(rows, n)
    if len(pivots) < n:
        return None
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            acc -= rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return tuple(x)
