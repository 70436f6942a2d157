"""
Dense Gaussian elimination with partial pivoting inside an mpmath context.

Vandermonde-type systems lose bits fast, so every pivot is compared with a
floor; falling under it means the working precision is too low for the system.
"""
from logging import Logger

from mpmath.ctx_mp import MPContext

from dualdeg.errors import PreconditionError, SolverError
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


def _pivot_floor(ctx: MPContext):
    return ctx.ldexp(ctx.mpf(1), -(ctx.prec // 2))


def _eliminate(ctx: MPContext, rows: list[list], floor) -> tuple[list[list], int]:
    """Reduces `rows` (possibly augmented) to upper-triangular form in place; returns it with the swap parity."""
    size = len(rows)
    swaps = 0
    for col in range(size):
        pivot_row = max(range(col, size), key=lambda r: abs(rows[r][col]))
        pivot = rows[pivot_row][col]
        if abs(pivot) < floor:
            logger.error(f"Pivot {ctx.nstr(pivot, 5)} in column {col} is below 2^-{ctx.prec // 2}")
            raise SolverError(f"pivot in column {col} fell below the precision floor; raise the precision")
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            swaps += 1
        for r in range(col + 1, size):
            factor = rows[r][col] / pivot
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return rows, swaps


def solve_dense(ctx: MPContext, matrix: list[list], rhs: list) -> list:
    """Solves matrix · y = rhs by partial-pivot elimination and back substitution."""
    size = len(matrix)
    if any(len(row) != size for row in matrix) or len(rhs) != size:
        raise PreconditionError("solve_dense needs a square system")
    rows = [[ctx.mpf(a) for a in row] + [ctx.mpf(b)] for row, b in zip(matrix, rhs)]
    rows, _ = _eliminate(ctx, rows, _pivot_floor(ctx))

    solution = [ctx.mpf(0)] * size
    for i in range(size - 1, -1, -1):
        tail = ctx.fsum(rows[i][j] * solution[j] for j in range(i + 1, size))
        solution[i] = (rows[i][size] - tail) / rows[i][i]
    logger.debug(f"solved a {size}x{size} system at {ctx.prec} bits")
    return solution


def determinant(ctx: MPContext, matrix: list[list]):
    rows = [[ctx.mpf(a) for a in row] for row in matrix]
    rows, swaps = _eliminate(ctx, rows, _pivot_floor(ctx))
    value = ctx.mpf(-1) if swaps % 2 else ctx.mpf(1)
    for i in range(len(rows)):
        value *= rows[i][i]
    return value


def residuals(ctx: MPContext, matrix: list[list], y: list, rhs: list) -> list:
    """Row-relative residuals |(My)_i − rhs_i| / max(1, Σ_j |M_ij y_j|)."""
    result = []
    for row, b in zip(matrix, rhs):
        products = [a * v for a, v in zip(row, y)]
        scale = max(ctx.mpf(1), ctx.fsum(abs(p) for p in products))
        result.append(abs(ctx.fsum(products) - b) / scale)
    return result
