from .config import RunConfig
from .report import Report
from .suite import Acceptance, load_acceptance, run_suite, run_tolerance_check
from .run import build_parser, run
