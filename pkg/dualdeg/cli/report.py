"""
Machine-readable run reports. No clock or host data goes in, so two identical
invocations write identical bytes.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from logging import Logger
from pathlib import Path

from dualdeg.checks import VerificationReport
from dualdeg.cli.config import RunConfig
from dualdeg.utils.logger import setup_logger
from dualdeg.version import __version__

logger: Logger = setup_logger(__name__)

CSV_FIELDS = ("subject", "name", "paper_ref", "claim", "pass", "measured", "expected", "tolerance")


@dataclass
class Report:
    config: RunConfig
    command: str
    sections: list[VerificationReport] = field(default_factory=list)
    version: str = __version__

    @property
    def passed(self) -> bool:
        return all(section.passed for section in self.sections)

    def add(self, section: VerificationReport) -> None:
        self.sections.append(section)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "config": self.config.as_dict(),
            "version": self.version,
            "passed": self.passed,
            "checks": [
                dict(check.as_dict(), subject=section.subject)
                for section in self.sections for check in section.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in self.as_dict()["checks"]:
            writer.writerow({key: _cell(row[key]) for key in CSV_FIELDS})
        return buffer.getvalue()

    def render(self) -> str:
        return self.to_csv() if self.config.report_format == "csv" else self.to_json()

    def write(self, path: str | Path | None = None) -> None:
        target = path or self.config.report_path
        if target is None:
            return
        Path(target).write_text(self.render(), encoding="utf-8")
        logger.info(f"Report for '{self.command}' written to {target} ({len(self.sections)} sections)")

    def summary_lines(self) -> list[str]:
        lines = []
        for section in self.sections:
            status = "PASS" if section.passed else "FAIL"
            lines.append(f"{status} {section.subject}")
            for check in section.failures():
                lines.append(f"     {check.name}: measured {_cell(check.as_dict()['measured'])}, "
                             f"expected {_cell(check.as_dict()['expected'])}")
        return lines


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
