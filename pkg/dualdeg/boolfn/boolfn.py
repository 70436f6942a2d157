"""
Boolean functions {−1,1}^n → {−1,1} as truth tables.

Index encoding: bit i of a table index is 1 iff x_i = −1. Logical false is +1.
"""
import hashlib
import random
from dataclasses import dataclass, field
from enum import Enum
from logging import Logger
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from dualdeg.errors import PreconditionError
from dualdeg.utils import guards
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

Point = tuple[int, ...]


class Family(str, Enum):
    OR = "OR"
    AND = "AND"
    MAJ = "MAJ"
    THRESHOLD = "THRESHOLD"
    PARITY = "PARITY"
    ANDOR = "ANDOR"


@dataclass(frozen=True)
class BoolFn:
    n: int
    table: tuple[int, ...]
    family: str = "custom"
    params: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise PreconditionError(f"arity must be nonnegative, got {self.n}")
        if len(self.table) != 1 << self.n:
            raise PreconditionError(f"table of length {len(self.table)} does not match arity {self.n}")
        if any(value not in (1, -1) for value in self.table):
            raise PreconditionError("truth-table entries must be +1 or -1")

    @property
    def label(self) -> str:
        """Stable identifier used as the target of witnesses."""
        if self.family != "custom":
            args = ",".join(str(p) for p in self.params)
            return f"{self.family}({args})"
        digest = hashlib.sha1(bytes(0 if v == 1 else 1 for v in self.table)).hexdigest()[:12]
        return f"custom(n={self.n},{digest})"

    def __call__(self, x: Point) -> int:
        return self.table[index_of(x)]

    def at(self, index: int) -> int:
        return self.table[index]


def point_of(index: int, n: int) -> Point:
    return tuple(-1 if (index >> i) & 1 else 1 for i in range(n))


def index_of(x: Sequence[int]) -> int:
    index = 0
    for i, value in enumerate(x):
        if value == -1:
            index |= 1 << i
        elif value != 1:
            raise PreconditionError(f"cube coordinates must be +1 or -1, got {value}")
    return index


def weight(index: int) -> int:
    """|x|: the number of −1 coordinates."""
    return bin(index).count("1")


def points(n: int) -> Iterator[Point]:
    for index in range(1 << n):
        yield point_of(index, n)


def evaluate(f: BoolFn, x: Sequence[int]) -> int:
    if len(x) != f.n:
        raise PreconditionError(f"point of length {len(x)} given to a function of arity {f.n}")
    return f.table[index_of(x)]


def flip_block(x: Sequence[int], block: Iterable[int]) -> Point:
    """x^S: negates the coordinates listed in `block` (0-based)."""
    flipped = list(x)
    for i in set(block):
        if not 0 <= i < len(flipped):
            raise PreconditionError(f"index {i} out of range for a point of length {len(flipped)}")
        flipped[i] = -flipped[i]
    return tuple(flipped)


def from_callable(n: int, rule: Callable[[int], int], family: str = "custom",
                  params: tuple[int, ...] = ()) -> BoolFn:
    """Builds a table from a rule on indices."""
    guards.enforce("max_table_size", "table size", 1 << n)
    return BoolFn(n=n, table=tuple(rule(index) for index in range(1 << n)), family=family, params=params)


def make_named(family: Family | str, n: int | None = None, t: int | None = None,
               M: int | None = None, N: int | None = None) -> BoolFn:
    """
    OR, AND, MAJ, THRESHOLD(t), PARITY on n bits, or ANDOR(M, N) on MN bits.

    THRESHOLD(t) is −1 exactly when |x| ≥ t; OR, AND and MAJ are the
    thresholds 1, n and ⌈n/2⌉. ANDOR places block i on bits iN..iN+N−1.
    """
    family = Family(family)

    if family is Family.ANDOR:
        if not M or not N or M < 1 or N < 1:
            raise PreconditionError("ANDOR needs positive M and N")
        guards.enforce("max_table_size", "table size", 1 << (M * N))
        mask = (1 << N) - 1

        def and_of_ors(index: int) -> int:
            all_blocks_true = all((index >> (i * N)) & mask for i in range(M))
            return -1 if all_blocks_true else 1

        return from_callable(M * N, and_of_ors, family=family.value, params=(M, N))

    if n is None or n < 1:
        raise PreconditionError(f"{family.value} needs n >= 1")

    if family is Family.PARITY:
        return from_callable(n, lambda index: -1 if weight(index) % 2 else 1, family=family.value, params=(n,))

    threshold = {
        Family.OR: 1,
        Family.AND: n,
        Family.MAJ: (n + 1) // 2,
        Family.THRESHOLD: t,
    }[family]
    if threshold is None or not 1 <= threshold <= n:
        raise PreconditionError(f"threshold t must satisfy 1 <= t <= n, got t={threshold}, n={n}")

    params = (n, threshold) if family is Family.THRESHOLD else (n,)
    return from_callable(n, lambda index: -1 if weight(index) >= threshold else 1,
                         family=family.value, params=params)


def negate_inputs(f: BoolFn) -> BoolFn:
    """x ↦ f(−x)."""
    full = (1 << f.n) - 1
    return BoolFn(n=f.n, table=tuple(f.table[full ^ index] for index in range(1 << f.n)))


def compose_functions(outer: BoolFn, inner: BoolFn) -> BoolFn:
    """F(f(x_1), …, f(x_M)) with block i on bits iN..iN+N−1."""
    M, N = outer.n, inner.n
    mask = (1 << N) - 1

    def rule(index: int) -> int:
        z = 0
        for i in range(M):
            if inner.table[(index >> (i * N)) & mask] == -1:
                z |= 1 << i
        return outer.table[z]

    composed = from_callable(M * N, rule)
    if outer.family == Family.AND.value and inner.family == Family.OR.value:
        return BoolFn(n=composed.n, table=composed.table, family=Family.ANDOR.value, params=(M, N))
    return composed


def random_boolfn(n: int, rng: random.Random) -> BoolFn:
    guards.enforce("max_table_size", "table size", 1 << n)
    return BoolFn(n=n, table=tuple(rng.choice((1, -1)) for _ in range(1 << n)))


def all_boolfns(n: int) -> Iterator[BoolFn]:
    """Every function on n bits, in table-as-binary-number order."""
    size = 1 << n
    for code in range(1 << size):
        yield BoolFn(n=n, table=tuple(-1 if (code >> i) & 1 else 1 for i in range(size)))


def write_table(f: BoolFn, path: str | Path) -> None:
    Path(path).write_text(f"n={f.n}\n{' '.join(str(v) for v in f.table)}\n", encoding="utf-8")


def read_table(path: str | Path) -> BoolFn:
    lines = [line.strip() for line in Path(path).read_text(encoding="utf-8").splitlines() if line.strip()]
    if len(lines) < 2 or not lines[0].startswith("n="):
        logger.error(f"Malformed truth-table file '{path}'")
        raise PreconditionError(f"malformed truth-table file '{path}'")
    return BoolFn(n=int(lines[0][2:]), table=tuple(int(v) for v in lines[1].split()))
