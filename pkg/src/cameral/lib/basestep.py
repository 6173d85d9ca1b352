import sys
import time

from .automationstep import AutomationStep
from .errors import CameralError
from .models import CheckResult, ErrorReport, RunReport
from .wfutils import FileUtility, Progress


class BaseStep(AutomationStep):
    """
    Class which overrides the functions defined in AutomationStep class.

    A step fills `inputs`, `results` and `rows` and records checks through `check`;
    `start` turns them into a RunReport.
    """

    def __init__(self, step_name: str, log_prefix: str, argv: list = None):
        """
        Args:
            step_name: Name of the verification step, also its sub-command.
            log_prefix: Log sub-folder name
            argv: Command line arguments, starting with the sub-command.
        """

        super().__init__(step_name=step_name, log_prefix=log_prefix, argv=argv)

        self.progress = Progress()
        self.inputs: dict = {}
        self.results: dict = {}
        self.rows: list = []
        self._checks: list = []
        self._report: RunReport = None

    def check(self, name: str, ok: bool) -> bool:
        """
        Record one pass/fail flag of the report.

        Args:
            name: Name of the check, unique within the step.
            ok: Outcome.

        Returns:
            bool: ok, unchanged
        """

        ok = bool(ok)
        self.progress.record(name, ok)
        self._checks.append(CheckResult(name=name, passed=ok))
        if ok:
            self.logger.info(f"{name}: pass")
        else:
            self.logger.error(f"{name}: FAIL")
        return ok

    def start(self, name: str = None, report_name: str = None) -> RunReport:
        """
        Start the core logic and build the report.

        Args:
            name: Name of the child class. Default to step name.
            report_name: Name of the report to be generated. Default to name.

        Returns:
            RunReport
        """

        if name is None:
            name = self.step_name

        if report_name is None:
            report_name = name

        self.logger.info(f"Begin {name}")
        started = time.perf_counter()
        error = None

        try:
            self.run()
        except CameralError as e:
            self.logger.error(f"{name} stopped: {type(e).__name__}: {e}")
            error = ErrorReport(kind=type(e).__name__, message=str(e), exit_code=e.exit_code)
        finally:
            self.logger.info(
                f"End {name}: {self.progress.passed}/{self.progress.total} checks passed"
            )

        self._report = RunReport(
            command=name,
            inputs=self.inputs,
            seed=self.seed,
            results=self.results,
            checks=self._checks,
            passed=error is None and self.progress.all_passed,
            error=error,
            duration_seconds=round(time.perf_counter() - started, 3) if self.timings else None,
        )

        if self.report_dir is not None:
            self.write_reports(report_name)
        return self._report

    @property
    def report(self) -> RunReport:
        return self._report

    @property
    def exit_code(self) -> int:
        """
        0 when every check passed, the error's code on a domain error, 1 on a failed check.
        """

        if self._report is None or self._report.passed:
            return 0
        if self._report.error is not None:
            return self._report.error.exit_code
        return 1

    def emit(self) -> None:
        """
        Print the report to stdout; with --pretty, the result rows also go to stderr as a table.
        """

        print(FileUtility.dumps(self._report.to_json(), pretty=self.pretty))
        if self.pretty and self.rows:
            print(FileUtility.to_table(self.rows, title=self.step_name), file=sys.stderr)

    def write_reports(self, report_name: str) -> None:
        """
        JSON report, its flattened form, and the result rows as CSV.
        """

        json_report = self.json_report_file(report_name)
        FileUtility.write_json(json_report, self._report.to_json())
        FileUtility.write_flatten_json(json_report.replace(".json", "_flat.json"), self._report.to_json())
        if self.rows:
            FileUtility.write_csv(self.csv_report_file(report_name), self.rows)
        self.logger.info(f"Reports written to {self.get_reporting_directory(report_name)}")
