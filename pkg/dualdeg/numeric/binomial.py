import math
import threading
from fractions import Fraction
from logging import Logger
from dualdeg.decorators import singleton
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


@singleton
class BinomialTable:
    """
    Pascal's triangle, grown row by row on demand.

    Rows are only ever appended, so readers that find a row already present
    never take the lock.
    """

    def __init__(self) -> None:
        self.rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        if n < len(self.rows):
            return self.rows[n]
        with self._lock:
            while len(self.rows) <= n:
                previous = self.rows[-1]
                self.rows.append(
                    tuple(1 if k in (0, len(previous)) else previous[k - 1] + previous[k]
                          for k in range(len(previous) + 1))
                )
            logger.debug(f"Binomial table grown to row {len(self.rows) - 1}")
        return self.rows[n]

    def get(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        return self.row(n)[k]


def binomial(n: int, k: int) -> Fraction:
    """Exact C(n, k); zero outside 0 ≤ k ≤ n."""
    return Fraction(BinomialTable().get(n, k))


def binomial_int(n: int, k: int) -> int:
    return BinomialTable().get(n, k)


def factorial(n: int) -> int:
    """Exact n!."""
    return math.factorial(n)
