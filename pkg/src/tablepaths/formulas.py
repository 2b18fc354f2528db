"""Closed-form evaluators built from binomial arithmetic and
start-row-1 tables.

Each function evaluates one identity directly; none of them calls the
engine function it is checked against (the verifier module owns those
comparisons).  Rational forms divide exactly; a nonzero remainder would
mean a transcription bug, so it raises instead of rounding.

Two deliberately wrong variants are kept alongside their corrected
forms (``d_boundary_printed``, ``s_free_printed``) so the verifier can
confirm and document their failure with a concrete counterexample.
"""

from __future__ import annotations

import math

from . import dp
from .core import Cell, TableDims


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient, 0 outside the Pascal triangle."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


class BinomialTable:
    """Dense Pascal triangle for rows 0..max_n.

    Built purely by the additive recurrence, so it serves as an
    independent cross-check of :func:`binomial` in tests.
    """

    def __init__(self, max_n: int):
        if max_n < 0:
            raise ValueError("max_n must be nonnegative")
        rows: list[list[int]] = [[1]]
        for n in range(1, max_n + 1):
            prev = rows[-1]
            row = [1]
            for k in range(1, n):
                row.append(prev[k - 1] + prev[k])
            row.append(1)
            rows.append(row)
        self.max_n = max_n
        self._rows = tuple(tuple(r) for r in rows)

    def value(self, n: int, k: int) -> int:
        if n < 0 or n > self.max_n:
            raise ValueError(f"row {n} outside table (max {self.max_n})")
        if k < 0 or k > n:
            return 0
        return self._rows[n][k]


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"expected exact division, got {num}/{den}")
    return q


def a_closed(s: int, t: int) -> int:
    """Ballot-style closed form A(s,t) = (2t/(s+t)) * C(s-1, (s-t)/2).

    Zero when s and t have distinct parities; the division is exact.
    """
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    if t > s:
        raise ValueError(f"a_closed requires t <= s, got s={s}, t={t}")
    if (s - t) % 2:
        return 0
    return _exact_div(2 * t * binomial(s - 1, (s - t) // 2), s + t)


def d1_via_a(s: int, t: int) -> int:
    """Start-row-1 count via its two-letter reduction.

    D1(s,t) = sum_{i=0}^{(s-t)//2} C(s-1, s-t-2i) * A(t+2i, t); exact in
    any table with at least s rows (no wall can bind).
    """
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    if t > s:
        return 0
    return sum(
        binomial(s - 1, s - t - 2 * i) * a_closed(t + 2 * i, t)
        for i in range((s - t) // 2 + 1)
    )


def d1_closed(s: int, t: int) -> int:
    """Fully expanded form of :func:`d1_via_a`.

    D1(s,t) = sum_{i} (t/(t+i)) * C(s-1, s-t-2i) * C(t+2i-1, i); each
    term divides exactly.
    """
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    if t > s:
        return 0
    total = 0
    for i in range((s - t) // 2 + 1):
        num = t * binomial(s - 1, s - t - 2 * i) * binomial(t + 2 * i - 1, i)
        total += _exact_div(num, t + i)
    return total


def _h_square_value(n: int, m: int) -> int:
    # Unguarded evaluator; domain calibration probes it outside the
    # declared validity window.
    square = dp.d_table(TableDims(n, n)).get(n, n)
    if n <= m:
        return square
    d1 = dp.di_table(TableDims(m, n - 1), 1)
    return square - sum(
        3 ** (n - i - 1) * d1.get(i, m) for i in range(m, n)
    )


def h_via_square(n: int, m: int) -> int:
    """Across-the-table total from the square-table total minus top-leak
    corrections.

    H(n, m) = D(n, n) - sum_{i=m}^{n-1} 3^(n-i-1) * D1(i, m), with the
    D1 factors confined to the m-row table.  Declared domain m <= n <= 2m.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if not m <= n <= 2 * m:
        raise ValueError(
            f"h_via_square requires m <= n <= 2m, got n={n}, m={m}"
        )
    return _h_square_value(n, m)


def d1_split(n: int, m: int, s: int) -> int:
    """Crossing-column convolution for the top-right corner count.

    D1(n, m) = sum_{i=1}^{m} D1(s, i) * D1(n-s+1, m-i+1), independent of
    the split column s; all factors live in the m-row table.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if not 1 <= s <= n:
        raise ValueError(f"split column {s} outside [1, {n}]")
    table = dp.di_table(TableDims(m, n), 1)
    return sum(
        table.get(s, i) * table.get(n - s + 1, m - i + 1)
        for i in range(1, m + 1)
    )


def _d_boundary(
    dims: TableDims, s: int, t: int, bottom_start: int, top_start: int
) -> int:
    if not dims.contains(Cell(s, t)):
        raise ValueError(
            f"cell ({s},{t}) outside {dims.rows}x{dims.cols} table"
        )
    m = dims.rows
    total = 3 ** (s - 1)
    if s > 1:
        d1 = dp.di_table(TableDims(m, s - 1), 1)
        for i in range(max(bottom_start, 1), s):
            total -= 3 ** (s - i - 1) * d1.get(i, t)
        for i in range(max(top_start, 1), s):
            total -= 3 ** (s - i - 1) * d1.get(i, m + 1 - t)
    return total


def d_boundary(dims: TableDims, s: int, t: int) -> int:
    """Start-anywhere count as the free total minus last-leak corrections.

    D(s, t) = 3^(s-1) - sum_{i=t}^{s-1} 3^(s-i-1) D1(i, t)
                      - sum_{i=m+1-t}^{s-1} 3^(s-i-1) D1(i, m+1-t).

    Each correction indexes the column where a leaking path is outside
    the table for the last time, so the bottom sum starts at i = t and
    the top sum at i = m+1-t; with those ranges the identity holds on
    the whole table with no side condition.
    """
    return _d_boundary(dims, s, t, bottom_start=t, top_start=dims.rows + 1 - t)


def d_boundary_printed(dims: TableDims, s: int, t: int) -> int:
    """Variant of :func:`d_boundary` with both correction sums started one
    index late (bottom at t+1, top at m+2-t).

    Misses the tightest leak in each direction and therefore over-counts;
    retained so the verifier can document the failure.
    """
    return _d_boundary(
        dims, s, t, bottom_start=t + 1, top_start=dims.rows + 2 - t
    )


def i_inner(dims: TableDims, a: int) -> int:
    """Whole-table count as the inner product of columns a and cols+1-a
    of the start-anywhere table."""
    if not 1 <= a <= dims.cols:
        raise ValueError(f"column {a} outside [1, {dims.cols}]")
    b = dims.cols + 1 - a
    table = dp.d_table(dims)
    return sum(
        table.get(a, i) * table.get(b, i) for i in range(1, dims.rows + 1)
    )


def s_free_closed(x: int, y: int) -> int:
    """Unbounded net-rise count: number of y-step words with net rise x.

    S(x, y) = sum_{i=0}^{(y-|x|)//2} C(y, |x|+i) * C(y-|x|-i, i), the
    multinomial split into |x|+i up steps, i down steps and the rest
    flat; symmetric in the sign of x.
    """
    if y < 0:
        raise ValueError("y must be nonnegative")
    x = abs(x)
    if x > y:
        return 0
    return sum(
        binomial(y, x + i) * binomial(y - x - i, i)
        for i in range((y - x) // 2 + 1)
    )


def s_free_printed(x: int, y: int) -> int:
    """Variant of :func:`s_free_closed` with the first factor pinned at
    C(y, |x|+1) in every term instead of C(y, |x|+i).

    Wrong whenever a term with i != 1 contributes; retained so the
    verifier can document the failure.
    """
    if y < 0:
        raise ValueError("y must be nonnegative")
    x = abs(x)
    if x > y:
        return 0
    return sum(
        binomial(y, x + 1) * binomial(y - x - i, i)
        for i in range((y - x) // 2 + 1)
    )


def _s2_value(m: int, span: int, start_row: int, end_row: int) -> int:
    # Unguarded evaluator shared with domain calibration.
    total = s_free_closed(end_row - start_row, span)
    if span:
        d1 = dp.di_table(TableDims(m, span), 1)
        for k in range(1, span + 1):
            total -= d1.get(k, start_row) * s_free_closed(end_row, span - k)
            total -= d1.get(k, m + 1 - start_row) * s_free_closed(
                m + 1 - end_row, span - k
            )
    return total


def s2_closed(dims: TableDims, start: Cell, end: Cell) -> int:
    """Bounded pair count as a free count minus one first-leak
    convolution per wall.

    count = S(r1-r0, L) - sum_k D1(k, r0) * S(r1, L-k)
                        - sum_k D1(k, m+1-r0) * S(m+1-r1, L-k)

    where L is the column span, r0/r1 the start/end rows, the D1
    factors are confined to the m-row table and k indexes the column
    where a leaking path is outside for the first time.  The declared
    domain is L <= rows + 1, on which no path can leave through both
    walls.
    """
    for cell in (start, end):
        if not dims.contains(cell):
            raise ValueError(
                f"cell ({cell.col},{cell.row}) outside "
                f"{dims.rows}x{dims.cols} table"
            )
    if start.col > end.col:
        raise ValueError(
            f"start column {start.col} right of end column {end.col}"
        )
    span = end.col - start.col
    if span > dims.rows + 1:
        raise ValueError(
            f"column span {span} exceeds declared domain rows+1 = "
            f"{dims.rows + 1}"
        )
    return _s2_value(dims.rows, span, start.row, end.row)


def motzkin_number(k: int) -> int:
    """k-th Motzkin number via the convolution recurrence.

    M_0 = 1, M_k = M_{k-1} + sum_{i=0}^{k-2} M_i * M_{k-2-i}.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    vals = [1]
    for n in range(1, k + 1):
        nxt = vals[n - 1] + sum(vals[i] * vals[n - 2 - i] for i in range(n - 1))
        vals.append(nxt)
    return vals[k]


def catalan_number(k: int) -> int:
    """k-th Catalan number C(2k, k) / (k + 1), exact."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _exact_div(binomial(2 * k, k), k + 1)
