import logging
from logging.handlers import RotatingFileHandler
from colorlog import ColoredFormatter
import colorama
from config.settings import Config


# Initialize colorama for Windows CMD support
colorama.init()

PACKAGE_LOGGER: str = "dualdeg"


def setup_logger(
    name: str = PACKAGE_LOGGER,
    log_file: str | None = None,
    level: str | None = None,
    use_console: bool = True,
) -> logging.Logger:
    """
    Sets up the package logger with console and file handlers and returns the logger for `name`.

    Handlers are attached once, to the ``dualdeg`` logger; module loggers
    (``dualdeg.lp.simplex`` and so on) propagate to it.
    Args:
        name (str): Name of the logger, usually ``__name__``.
        log_file (str): File to store logs. Defaults to the ``log_file`` config value.
        level (str): Logging level (e.g., DEBUG, INFO, WARNING, ERROR, CRITICAL).
        use_console (bool): Whether to enable the console handler (stderr).
    Returns:
        logging.Logger: Configured logger instance.
    """
    root = logging.getLogger(PACKAGE_LOGGER)

    if not root.handlers:
        level_name: str = level or Config.get_config_value("log_level", "INFO")
        root.setLevel(getattr(logging, str(level_name).upper(), logging.INFO))
        root.propagate = False

        # Formatter for file logs
        file_formatter = logging.Formatter(
            "[%(asctime)s] %(levelname)s in %(name)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )

        # Formatter for console logs (with colors)
        console_formatter = ColoredFormatter(
            "%(log_color)s[%(asctime)s] %(levelname)s in %(name)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
            log_colors={
                "DEBUG": "cyan",
                "INFO": "green",
                "WARNING": "yellow",
                "ERROR": "red",
                "CRITICAL": "bold_red",
            },
        )

        # File Handler with rotation
        path: str = log_file or Config.get_config_value("log_file", "dualdeg.log")
        file_handler = RotatingFileHandler(path, maxBytes=10_000_000, backupCount=3)
        file_handler.setFormatter(file_formatter)
        root.addHandler(file_handler)

        # Optional Console Handler; stdout stays reserved for results
        if use_console:
            console_handler = logging.StreamHandler()
            console_handler.setFormatter(console_formatter)
            root.addHandler(console_handler)

    if name == PACKAGE_LOGGER or name.startswith(PACKAGE_LOGGER + "."):
        return logging.getLogger(name)
    return root.getChild(name)


def set_level(level: str) -> None:
    """Changes the level of the package logger after setup (CLI ``--log-level``)."""
    logging.getLogger(PACKAGE_LOGGER).setLevel(getattr(logging, level.upper(), logging.INFO))
