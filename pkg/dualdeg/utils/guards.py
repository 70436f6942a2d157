from logging import Logger
from config.settings import Config
from dualdeg.errors import GuardExceededError
from dualdeg.utils.logger import setup_logger

logger: Logger = setup_logger(__name__)

DEFAULT_LIMITS: dict[str, int] = {
    "max_table_size": 1 << 20,
    "max_block_sensitivity_arity": 12,
    "max_fourier_arity": 20,
    "max_noise_arity": 10,
    "max_composition_arity": 20,
    "max_vandermonde_points": 10,
}


def limit(key: str) -> int:
    """Current value of a size guard."""
    return int(Config.get_config_value(key, DEFAULT_LIMITS[key]))


def enforce(key: str, what: str, value: int) -> None:
    """Raises GuardExceededError when `value` is above the guard named `key`."""
    bound = limit(key)
    if value > bound:
        logger.error(f"Refusing {what} = {value}: guard '{key}' is {bound}")
        raise GuardExceededError(what, value, bound)
