"""
Command-line front end: `cameral <command> [options]`.

Every command prints one JSON RunReport on stdout and exits 0 when all of its
checks pass, 1 when a check fails or a domain error stops it, 2 on a usage error.
"""

import sys

from .lib.automationstep import WorkflowArguments
from .lib.errors import UsageError
from .lib.wfutils import ExecutionUtility
from .verify.constants import (
    COVER_STEP,
    HITCHIN_STEP,
    RAMCHECK_STEP,
    RANK1_STEP,
    ROOTDATA_STEP,
    SELFTEST_STEP,
    TITSCLASS_STEP,
)
from .verify.cover import CoverStep
from .verify.hitchin import HitchinStep
from .verify.ramcheck import RamCheckStep
from .verify.rank1 import Rank1Step
from .verify.rootdata import RootDataStep
from .verify.selftest import SelfTestStep
from .verify.titsclass import TitsClassStep

# Constants
STEPS: dict = {
    ROOTDATA_STEP: RootDataStep,
    RAMCHECK_STEP: RamCheckStep,
    TITSCLASS_STEP: TitsClassStep,
    COVER_STEP: CoverStep,
    RANK1_STEP: Rank1Step,
    HITCHIN_STEP: HitchinStep,
    SELFTEST_STEP: SelfTestStep,
}


def run(argv: list) -> int:
    """
    Run one command and print its report.

    Args:
        argv: Arguments without the program name, starting with the command.

    Returns:
        int: Exit code
    """

    step_class = STEPS.get(argv[0]) if argv else None
    try:
        if step_class is None:
            # argparse prints the usage and exits with status 2
            WorkflowArguments(argv)
            return 2
        step = step_class(argv)
    except UsageError as e:
        print(f"cameral: error: {e}", file=sys.stderr)
        return e.exit_code

    step.start()
    step.emit()
    return step.exit_code


def main(argv: list = None) -> None:
    ExecutionUtility.stop(run(list(sys.argv[1:] if argv is None else argv)))


if __name__ == "__main__":
    main()
