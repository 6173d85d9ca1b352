import json
import logging
import os
from argparse import ArgumentParser

from .errors import UsageError
from .gcohom import DEFAULT_MAX_GROUP_ORDER
from .logger import WorkflowLogger
from .models import datum_input
from .rootdata import DEFAULT_MAX_ENUM, RootDatum, build_classical
from .wfutils import FileUtility

# Constants
"""
Environment variables overriding the default budgets.
"""
MAX_GROUP_ORDER_ENV: str = "CAMERAL_MAX_GROUP_ORDER"
MAX_ENUM_ENV: str = "CAMERAL_MAX_ENUM"

"""
Subcommands that take a root datum through --type/--n or --datum-json.
"""
DATUM_COMMANDS: tuple = ("rootdata", "ramcheck", "titsclass", "hitchin")

LOG_LEVELS: tuple = ("DEBUG", "INFO", "WARNING", "ERROR")


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {value!r}")


class WorkflowArguments(object):
    """
    Handles parsing command line arguments and providing access to them as properties.
    """

    _command: str = None
    _seed: int = 0
    _pretty: bool = False
    _report_dir: str = None
    _log_level: int = logging.INFO
    _log_dir: str = None
    _timings: bool = False
    _max_group_order: int = DEFAULT_MAX_GROUP_ORDER
    _max_enum: int = DEFAULT_MAX_ENUM

    def __init__(self, argv: list = None):
        """
        Parses command line arguments on initialization.

        Args:
            argv: Arguments without the program name. Defaults to sys.argv[1:].
        """

        self.arg_parser = ArgumentParser(
            prog="cameral",
            description="Exact checks of abelianization data for Higgs bundles",
        )
        self.add_arguments()
        self.parse_arguments(argv)

    def _common_parser(self) -> ArgumentParser:
        common = ArgumentParser(add_help=False)
        common.add_argument("--seed", type=int, default=0, help="Seed for every randomized check")
        common.add_argument("--pretty", action="store_true", help="Indented JSON plus a table on stderr")
        common.add_argument("--report-dir", help="Folder where JSON and CSV reports are written")
        common.add_argument("--log-level", default="INFO", choices=LOG_LEVELS, help="Log level")
        common.add_argument("--log-dir", help="Folder under which dated log files are written")
        common.add_argument("--timings", action="store_true", help="Record the wall-clock duration")
        common.add_argument(
            "--max-group-order",
            type=int,
            default=_env_int(MAX_GROUP_ORDER_ENV, DEFAULT_MAX_GROUP_ORDER),
            help=f"Largest group whose table is built (env {MAX_GROUP_ORDER_ENV})",
        )
        common.add_argument(
            "--max-enum",
            type=int,
            default=_env_int(MAX_ENUM_ENV, DEFAULT_MAX_ENUM),
            help=f"Bound on enumerated Weyl elements and Mumford candidates (env {MAX_ENUM_ENV})",
        )
        return common

    @staticmethod
    def _datum_parser() -> ArgumentParser:
        datum = ArgumentParser(add_help=False)
        datum.add_argument("--type", dest="type_tag", help="Classical family: GL, SL, PGL, Sp, SO")
        datum.add_argument("--n", type=int, help="Size of the defining representation")
        datum.add_argument("--datum-json", help="Root datum JSON file")
        return datum

    def add_arguments(self):
        """
        Adds one sub-command per verification step.
        """

        common = self._common_parser()
        datum = self._datum_parser()
        commands = self.arg_parser.add_subparsers(dest="command", required=True)

        commands.add_parser("rootdata", parents=[common, datum], help="Roots, coroots, |W|, degrees")

        ramcheck = commands.add_parser("ramcheck", parents=[common, datum], help="Ramification cocycle scans")
        ramcheck.add_argument("--identity-only", action="store_true", help="Scan the identity pair only")

        titsclass = commands.add_parser("titsclass", parents=[common, datum], help="Class of the normalizer")
        titsclass.add_argument("--witness", action="store_true", help="Also run the explicit split section")
        titsclass.add_argument(
            "--source", default="auto", choices=("auto", "model", "closed_form"), help="Cocycle source"
        )
        titsclass.add_argument("--torsion", type=int, default=0, help="Run the Z/2^k diagnostic up to k")

        cover = commands.add_parser("cover", parents=[common], help="GL(n) spectral and cameral covers")
        cover.add_argument("--cover", help='Cover JSON, e.g. {"n": 2, "a": [2, -3]}')
        cover.add_argument("--cover-json", help="Cover JSON file")
        cover.add_argument("--charpoly-samples", type=int, default=10, help="Random f for the charpoly check")

        rank1 = commands.add_parser("rank1", parents=[common], help="SL(2)/PGL(2) torsor over a finite field")
        rank1.add_argument("--q", type=int, required=True, help="Odd prime field size")
        rank1.add_argument("--f", dest="expression", help="f(x), e.g. 'x**5 + 2*x + 1'")
        rank1.add_argument("--genus", type=int, help="Pick the first squarefree trinomial of this genus")

        hitchin = commands.add_parser("hitchin", parents=[common, datum], help="Hitchin base and Prym dimensions")
        hitchin.add_argument("--genus", type=int, nargs="+", default=[2, 3, 4], help="Curve genera")

        commands.add_parser("selftest", parents=[common], help="Run the acceptance suite")

    def parse_arguments(self, argv: list = None):
        """
        Parses and sets the command line arguments to properties.
        """

        arguments = self.arg_parser.parse_args(argv)
        self._arguments = arguments
        self._command = arguments.command
        self._seed = arguments.seed
        self._pretty = arguments.pretty
        self._report_dir = arguments.report_dir
        self._log_level = getattr(logging, arguments.log_level)
        self._log_dir = arguments.log_dir
        self._timings = arguments.timings
        self._max_group_order = arguments.max_group_order
        self._max_enum = arguments.max_enum

    def option(self, name: str, default=None):
        """
        A sub-command specific argument, or `default` when the command does not define it.
        """

        return getattr(self._arguments, name, default)

    @property
    def command(self) -> str:
        return self._command

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def pretty(self) -> bool:
        return self._pretty

    @property
    def report_dir(self) -> str:
        return self._report_dir

    @property
    def log_level(self) -> int:
        return self._log_level

    @property
    def log_dir(self) -> str:
        return self._log_dir

    @property
    def timings(self) -> bool:
        return self._timings

    @property
    def max_group_order(self) -> int:
        return self._max_group_order

    @property
    def max_enum(self) -> int:
        return self._max_enum


class AutomationStep(WorkflowArguments):
    """
    Extends `WorkflowArguments` class and provides abstractions for the common functions used by the
    verification steps.

    Child classes need to implement the below methods.
    * run
    """

    _workflow_logger = None

    def __init__(self, step_name: str, log_prefix: str, argv: list = None):
        """
        Args:
            step_name: Generic name of the child class.
            log_prefix: Prefix that needs to be used while logging to a file.
            argv: Command line arguments, starting with the sub-command.
        """

        super().__init__(argv)
        self._step_name = step_name

        self._workflow_logger = WorkflowLogger(
            log_name=step_name,
            working_dir=self.log_dir or ".",
            log_prefix=log_prefix,
            log_to_file=self.log_dir is not None,
            log_level=self.log_level,
        )
        self.logger = self._workflow_logger.logger

    def run(self) -> None:
        """
        Function containing core logic.

        Returns:
            None
        """

        pass

    @property
    def step_name(self) -> str:
        return self._step_name

    def load_datum(self) -> RootDatum:
        """
        The root datum named by --type/--n or read from --datum-json.

        Raises:
            UsageError: neither or both sources are given, or the file is missing.
        """

        type_tag, n, datum_json = self.option("type_tag"), self.option("n"), self.option("datum_json")
        if datum_json is not None:
            if type_tag is not None:
                raise UsageError("give either --type/--n or --datum-json, not both")
            self.validate_file(datum_json)
            return datum_input(FileUtility.read_json_file(datum_json), self.max_enum)

        if type_tag is None or n is None:
            raise UsageError("a root datum needs --type and --n, or --datum-json")
        return build_classical(type_tag, n, self.max_enum)

    def read_json_argument(self, text: str, file: str) -> dict:
        """
        JSON from an inline argument or from a file, exactly one of which must be given.
        """

        if (text is None) == (file is None):
            raise UsageError("give exactly one of the inline JSON and the JSON file")
        if file is not None:
            self.validate_file(file)
            return FileUtility.read_json_file(file)
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise UsageError(f"malformed JSON argument: {e}")

    def get_reporting_directory(self, report_name: str = None) -> str:
        """
        Get the report directory path

        Args:
            report_name: Name of the report.

        Returns:
            str: Path of the report folder.
        """

        if report_name is None:
            report_name = self.step_name

        return os.path.join(self.report_dir, report_name)

    def create_report_directory(self, report_name: str) -> None:
        """
        Create report directory if it doesn't exist.

        Args:
            report_name: Name of the report.
        """

        report_dir = self.get_reporting_directory(report_name)

        if not os.path.exists(report_dir):
            self.logger.info(f"Creating reporting directory {report_dir}")
            os.makedirs(report_dir)

        self.logger.debug(f"Reporting directory: {report_dir}")

    def json_report_file(self, report_name: str = None) -> str:
        """
        Create the report folder and return the JSON report path in it.

        Args:
            report_name: Name of the report.

        Returns:
            str: Path of the JSON file
        """

        if report_name is None:
            report_name = self.step_name

        self.create_report_directory(report_name)
        return os.path.join(self.get_reporting_directory(report_name), f"{report_name}.json")

    def csv_report_file(self, report_name: str = None) -> str:
        if report_name is None:
            report_name = self.step_name

        self.create_report_directory(report_name)
        return os.path.join(self.get_reporting_directory(report_name), f"{report_name}.csv")

    def validate_file(self, file: str) -> None:
        """
        Validate if an input file is present.

        Raises:
            UsageError: the file does not exist.
        """

        if not os.path.isfile(file):
            self.logger.error(f"{file} does not exist")
            raise UsageError(f"{file} does not exist")

        self.logger.debug(f"{file} exists")
