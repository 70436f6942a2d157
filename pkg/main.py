import sys

from config.settings import Config
from dualdeg.cli import run


def main() -> int:
    """
    Main entry point for the application.
    """
    Config._load_config_file()
    return run(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())
