import sys

from ..lib.basestep import BaseStep
from ..lib.rootdata import admissible_triples, check_ram_cocycle, ram_divisor, rtriviality_shadow
from ..lib.wfutils import ExecutionUtility
from .constants import LOG_FOLDER, RAMCHECK_STEP

# Constants
"""
Failing pairs echoed in the report.
"""
MAX_REPORTED_FAILURES: int = 10


class RamCheckStep(BaseStep):
    """
    Exhaustive scan of R^{w1 w2} = w2^*(R^{w1}) + R^{w2} over all pairs, and of the
    invariance of R^w under s_i whenever w(alpha_i) = alpha_j.
    """

    def __init__(self, argv: list = None):
        super().__init__(step_name=RAMCHECK_STEP, log_prefix=LOG_FOLDER, argv=argv)

    def run(self) -> None:
        datum = self.load_datum()
        identity_only = self.option("identity_only", False)
        self.inputs = {"datum": datum.to_json(), "identity_only": identity_only, "max_enum": self.max_enum}

        group = datum.weyl_group()
        elements = [group.identity] if identity_only else group.elements
        self.logger.info(f"Scanning {len(elements) ** 2} pairs for {datum.label}")

        pair_failures = []
        for w1 in elements:
            for w2 in elements:
                if not check_ram_cocycle(datum, w1, w2):
                    pair_failures.append([list(w1.word), list(w2.word)])

        triples = [] if identity_only else admissible_triples(datum)
        triple_failures = [
            [list(w.word), i, j] for w, i, j in triples if not rtriviality_shadow(datum, w, i, j)
        ]

        self.results = {
            "datum": datum.label,
            "pairs": len(elements) ** 2,
            "pair_failures": len(pair_failures),
            "triples": len(triples),
            "triple_failures": len(triple_failures),
            "first_failures": (pair_failures + triple_failures)[:MAX_REPORTED_FAILURES],
            "longest_element_divisor": ram_divisor(datum, group.longest_element()).to_json(),
        }
        self.rows = [
            {
                "datum": datum.label,
                "pairs": len(elements) ** 2,
                "pair_failures": len(pair_failures),
                "triples": len(triples),
                "triple_failures": len(triple_failures),
            }
        ]

        self.check("ram_cocycle", not pair_failures)
        self.check("rtriviality_shadow", not triple_failures)


if __name__ == "__main__":
    step = RamCheckStep([RAMCHECK_STEP] + sys.argv[1:])
    step.start()
    step.emit()
    ExecutionUtility.stop(step.exit_code)
