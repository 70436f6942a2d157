from dataclasses import asdict, dataclass, field, replace
from logging import Logger

from config.settings import Config
from dualdeg.errors import PreconditionError
from dualdeg.numeric.apfloat import MIN_PRECISION
from dualdeg.utils import guards
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

REPORT_FORMATS = ("json", "csv")


@dataclass(frozen=True)
class RunConfig:
    precision: int
    tolerance_exponent: int
    guards: dict[str, int] = field(default_factory=dict)
    report_path: str | None = None
    report_format: str = "json"
    random_seed: int = 0

    def __post_init__(self) -> None:
        if self.precision < MIN_PRECISION:
            logger.error(f"precision {self.precision} is below {MIN_PRECISION} bits")
            raise PreconditionError(f"precision must be at least {MIN_PRECISION} bits, got {self.precision}")
        if any(value <= 0 for value in self.guards.values()):
            raise PreconditionError("size guards must be positive")
        if self.report_format not in REPORT_FORMATS:
            raise PreconditionError(f"report format must be one of {REPORT_FORMATS}, got {self.report_format!r}")

    @classmethod
    def from_config(cls) -> "RunConfig":
        """Defaults from config/config.json and DUALDEG_* environment overrides."""
        return cls(
            precision=int(Config.get_config_value("precision_bits", 256)),
            tolerance_exponent=int(Config.get_config_value("tolerance_exponent", -128)),
            guards={key: guards.limit(key) for key in sorted(guards.DEFAULT_LIMITS)},
            report_format=str(Config.get_config_value("report_format", "json")),
            random_seed=int(Config.get_config_value("random_seed", 0)),
        )

    def with_flags(self, precision: int | None = None, tolerance_exponent: int | None = None,
                   report_path: str | None = None, report_format: str | None = None) -> "RunConfig":
        """Flags given on the command line win over the file and environment values."""
        changes = {
            "precision": precision,
            "tolerance_exponent": tolerance_exponent,
            "report_path": report_path,
            "report_format": report_format,
        }
        return replace(self, **{key: value for key, value in changes.items() if value is not None})

    def as_dict(self) -> dict:
        data = asdict(self)
        # where the report goes is not part of what it says
        data.pop("report_path")
        return data
