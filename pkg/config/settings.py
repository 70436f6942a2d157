import os
import json
import logging
from pathlib import Path
from dotenv import load_dotenv
from dualdeg.version import __version__

logger = logging.getLogger(__name__)

load_dotenv()

DEFAULT_CONFIG_PATH: Path = Path(__file__).resolve().parent / "config.json"
ENV_PREFIX: str = "DUALDEG_"


class Config:
    _config = None  # Cache for the loaded config file

    @classmethod
    def _load_config_file(cls, path: str | Path = DEFAULT_CONFIG_PATH) -> dict:
        """Loads the configuration JSON file."""
        if cls._config is None:
            try:
                with open(path, "r", encoding="utf-8") as file:
                    cls._config = json.load(file)
            except FileNotFoundError:
                logger.error(f"Configuration file '{path}' not found.")
                raise
            except json.JSONDecodeError:
                logger.error(f"Configuration file '{path}' contains invalid JSON.")
                raise
        return cls._config

    @classmethod
    def get_env_variable(cls, var_name: str) -> str | None:
        """Fetches an environment variable (``.env`` included), None when unset."""
        value = os.getenv(var_name)
        return value if value else None

    @classmethod
    def get_config_value(cls, key: str, default=None):
        """
        Fetches a value from the config file, with an optional default.

        An environment variable ``DUALDEG_<KEY>`` takes precedence and is
        coerced to the type of the file value (or of the default).
        """
        config = cls._load_config_file()
        value = config.get(key, default)

        override = cls.get_env_variable(ENV_PREFIX + key.upper())
        if override is None:
            return value
        return cls._coerce(key, override, value)

    @classmethod
    def _coerce(cls, key: str, raw: str, like):
        if isinstance(like, bool):
            return raw.strip().lower() in ("1", "true", "yes", "on")
        if isinstance(like, int):
            try:
                return int(raw)
            except ValueError:
                logger.error(f"Environment override for '{key}' is not an integer: {raw!r}")
                raise
        return raw

    @classmethod
    def reset(cls) -> None:
        """Drops the cached file so the next lookup reloads it."""
        cls._config = None

    @classmethod
    def get_version(cls) -> str:
        """Returns the current version of the app."""
        return __version__
