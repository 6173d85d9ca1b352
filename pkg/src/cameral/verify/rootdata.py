import sys

from ..lib.basestep import BaseStep
from ..lib.rootdata import (
    coroot_primitive,
    degrees,
    has_nonprimitive_coroot,
    inversion_set,
    poincare_polynomial,
    so_odd_factor,
)
from ..lib.wfutils import ExecutionUtility
from .constants import LOG_FOLDER, ROOTDATA_STEP


class RootDataStep(BaseStep):
    """
    Builds a datum and reports roots, coroots, |W|, degrees and the primitivity flags.
    """

    def __init__(self, argv: list = None):
        super().__init__(step_name=ROOTDATA_STEP, log_prefix=LOG_FOLDER, argv=argv)

    def run(self) -> None:
        datum = self.load_datum()
        self.inputs = {"datum": datum.to_json(), "max_enum": self.max_enum}

        group = datum.weyl_group()
        positive = list(datum.positive_roots)
        found = degrees(datum)
        nonprimitive = has_nonprimitive_coroot(datum)
        odd_factor = so_odd_factor(datum)

        self.rows = [
            {
                "root": list(alpha),
                "coroot": list(datum.coroot(alpha)),
                "primitive": coroot_primitive(datum, datum.coroot(alpha)),
            }
            for alpha in positive
        ]

        self.results = {
            "datum": datum.label,
            "rank": datum.rank,
            "semisimple_rank": datum.semisimple_rank,
            "central_rank": datum.central_rank,
            "cartan_matrix": [list(row) for row in datum.cartan_matrix],
            "positive_roots": len(positive),
            "weyl_order": group.order,
            "degrees": found,
            "poincare_polynomial": poincare_polynomial(datum),
            "nonprimitive": nonprimitive,
            "so_odd_factor": odd_factor,
            "roots": self.rows,
        }

        self.check("longest_element_length", group.longest_element().length == len(positive))
        self.check(
            "inversion_sets",
            all(len(inversion_set(datum, w)) == w.length for w in group.elements),
        )
        self.check("nonprimitive_iff_so_odd_factor", nonprimitive == odd_factor)


if __name__ == "__main__":
    step = RootDataStep([ROOTDATA_STEP] + sys.argv[1:])
    step.start()
    step.emit()
    ExecutionUtility.stop(step.exit_code)
