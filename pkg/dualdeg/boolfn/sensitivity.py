from functools import lru_cache
from logging import Logger
from typing import Sequence

from dualdeg.boolfn.boolfn import BoolFn, index_of
from dualdeg.errors import PreconditionError
from dualdeg.utils import guards
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


def sensitive_blocks(f: BoolFn, x_index: int) -> list[int]:
    """Inclusion-minimal blocks B (bitmasks) with f(x^B) ≠ f(x)."""
    value = f.table[x_index]
    sensitive = [block for block in range(1, 1 << f.n) if f.table[x_index ^ block] != value]
    sensitive.sort(key=lambda block: bin(block).count("1"))

    minimal: list[int] = []
    for block in sensitive:
        if not any(smaller & block == smaller for smaller in minimal):
            minimal.append(block)
    return minimal


def max_disjoint_blocks(blocks: list[int], n: int) -> int:
    """
    Largest number of pairwise disjoint masks among `blocks`.

    Searches over the lowest still-undecided coordinate: it is either left
    uncovered or covered by a block whose lowest bit it is. Memoized on the
    set of coordinates still free.
    """
    by_low_bit: dict[int, list[int]] = {}
    for block in blocks:
        low = (block & -block).bit_length() - 1
        by_low_bit.setdefault(low, []).append(block)

    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if free == 0:
            return 0
        low = (free & -free).bit_length() - 1
        result = best(free & ~(1 << low))
        for block in by_low_bit.get(low, ()):
            if block & free == block:
                result = max(result, 1 + best(free & ~block))
        return result

    return best((1 << n) - 1)


def block_sensitivity_at(f: BoolFn, x: Sequence[int]) -> int:
    """Exact bs_x(f); refuses arities above the guard instead of approximating."""
    if len(x) != f.n:
        raise PreconditionError(f"point of length {len(x)} given to a function of arity {f.n}")
    guards.enforce("max_block_sensitivity_arity", "block sensitivity arity", f.n)
    return max_disjoint_blocks(sensitive_blocks(f, index_of(x)), f.n)


def block_sensitivity_at_index(f: BoolFn, x_index: int) -> int:
    guards.enforce("max_block_sensitivity_arity", "block sensitivity arity", f.n)
    return max_disjoint_blocks(sensitive_blocks(f, x_index), f.n)


def block_sensitivity(f: BoolFn) -> int:
    """bs(f) = max over x of bs_x(f)."""
    guards.enforce("max_block_sensitivity_arity", "block sensitivity arity", f.n)
    result = max(max_disjoint_blocks(sensitive_blocks(f, index), f.n) for index in range(1 << f.n))
    logger.debug(f"bs({f.label}) = {result}")
    return result
