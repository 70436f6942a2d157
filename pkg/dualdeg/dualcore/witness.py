from dataclasses import dataclass
from fractions import Fraction
from logging import Logger
from pathlib import Path

from dualdeg.errors import PreconditionError
from dualdeg.fourier import RealCubeFn
from dualdeg.numeric import format_rational, parse_rational
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)


@dataclass(frozen=True)
class DualWitness:
    """
    A signed measure φ on the cube together with what it is claimed to certify.

    Nothing here is trusted: verify_witness recomputes every claim.
    """

    phi: RealCubeFn
    claimed_phd: int
    claimed_correlation: Fraction
    target: str

    @property
    def n(self) -> int:
        return self.phi.n


def write_witness(witness: DualWitness, path: str | Path) -> None:
    lines = [
        f"n={witness.n}",
        f"d={witness.claimed_phd}",
        f"eps={format_rational(witness.claimed_correlation)}",
        f"target={witness.target}",
    ]
    lines += [f"{index} {format_rational(value)}" for index, value in enumerate(witness.phi.values) if value]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_witness(path: str | Path) -> DualWitness:
    lines = [line.strip() for line in Path(path).read_text(encoding="utf-8").splitlines() if line.strip()]
    try:
        header = dict(line.split("=", 1) for line in lines[:4])
        n = int(header["n"])
        values = [Fraction(0)] * (1 << n)
        for line in lines[4:]:
            index, value = line.split()
            values[int(index)] = parse_rational(value)
        return DualWitness(
            phi=RealCubeFn(n=n, values=tuple(values)),
            claimed_phd=int(header["d"]),
            claimed_correlation=parse_rational(header["eps"]),
            target=header.get("target", "unknown"),
        )
    except (KeyError, ValueError, IndexError) as error:
        logger.error(f"Malformed witness file '{path}': {error}")
        raise PreconditionError(f"malformed witness file '{path}'") from error
