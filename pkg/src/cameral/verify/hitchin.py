import sys

from ..lib.basestep import BaseStep
from ..lib.hitchin import ASSUMPTIONS, dimension_row
from ..lib.rootdata import build_classical
from ..lib.wfutils import ExecutionUtility
from .constants import BUILTIN_RANK3, HITCHIN_STEP, LOG_FOLDER


class HitchinStep(BaseStep):
    """
    Hitchin base against Prym dimensions, one row per (datum, g). Without a datum
    the table covers every built-in datum of rank at most 3.
    """

    def __init__(self, argv: list = None):
        super().__init__(step_name=HITCHIN_STEP, log_prefix=LOG_FOLDER, argv=argv)

    def run(self) -> None:
        genera = list(self.option("genus", [2, 3, 4]))
        if self.option("type_tag") is None and self.option("datum_json") is None:
            data = [build_classical(tag, n, self.max_enum) for tag, n in BUILTIN_RANK3]
        else:
            data = [self.load_datum()]
        self.inputs = {"data": [datum.label for datum in data], "genus": genera}

        for datum in data:
            for g in genera:
                row = dimension_row(datum, g)
                row.pop("assumptions")
                self.rows.append(row)

        self.results = {"rows": self.rows, "assumptions": list(ASSUMPTIONS)}
        self.check("prym_equals_hitchin", all(row["equal"] for row in self.rows))


if __name__ == "__main__":
    step = HitchinStep([HITCHIN_STEP] + sys.argv[1:])
    step.start()
    step.emit()
    ExecutionUtility.stop(step.exit_code)
