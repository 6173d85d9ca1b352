import sys

from ..lib.basestep import BaseStep
from ..lib.errors import NoModelError
from ..lib.gcohom import cyclic_oracle, decide_N_class, split_witness, torsion_diagnostic
from ..lib.titsext import (
    braid_check,
    chevalley_generators,
    closed_form_cocycle,
    cocycle,
    conjugation_matches,
    squares_match_coroots,
)
from ..lib.wfutils import ExecutionUtility
from .constants import LOG_FOLDER, TITSCLASS_STEP

# Constants
"""
Largest Weyl group on which the model cocycle is compared with the closed form on every pair.
"""
CLOSED_FORM_COMPARE_ORDER: int = 384

"""
Longest elements whose reduced words are all compared by the braid check.
"""
BRAID_CHECK_LENGTH: int = 4


class TitsClassStep(BaseStep):
    """
    Decides the class of the normalizer in H^2(W, T), with the model sanity checks,
    the optional split section and the order-2 oracle as independent evidence.
    """

    def __init__(self, argv: list = None):
        super().__init__(step_name=TITSCLASS_STEP, log_prefix=LOG_FOLDER, argv=argv)

    def run(self) -> None:
        datum = self.load_datum()
        source = self.option("source", "auto")
        with_witness = self.option("witness", False)
        k_max = self.option("torsion", 0)
        self.inputs = {
            "datum": datum.to_json(),
            "source": source,
            "witness": with_witness,
            "torsion": k_max,
            "max_group_order": self.max_group_order,
        }

        self.model_checks(datum)

        decision = decide_N_class(datum, source, self.max_group_order)
        self.results = {"decision": decision.to_json(), "class": "vanishes" if decision.vanishes else "nonvanishing"}
        self.rows = [
            {
                "datum": datum.label,
                "class": self.results["class"],
                "weyl_order": decision.weyl_order,
                "sylow_order": decision.sylow_order,
                "source": decision.source,
            }
        ]

        if with_witness:
            witness = split_witness(datum)
            self.results["witness"] = witness.to_json()
            if witness.registered:
                self.check("witness_homomorphism", witness.homomorphism and witness.lifts_weyl)
                self.check("witness_agrees", witness.ok == decision.vanishes)

        if datum.weyl_group().order == 2:
            oracle = cyclic_oracle(datum)
            self.results["cyclic_oracle"] = oracle.to_json()
            self.check("cyclic_oracle_agrees", oracle.vanishes == decision.vanishes)

        if k_max > 0:
            self.results["torsion"] = torsion_diagnostic(datum, k_max, self.max_group_order)

    def model_checks(self, datum) -> None:
        """
        Sanity of the monomial model, when one is registered for the datum.
        """

        try:
            model = chevalley_generators(datum)
        except NoModelError as e:
            self.logger.info(f"No monomial model: {e}")
            return

        self.check("squares_match_coroots", squares_match_coroots(model))
        self.check("conjugation_matches", conjugation_matches(model))
        self.check("braid_independence", braid_check(model, BRAID_CHECK_LENGTH))

        group = datum.weyl_group()
        if group.order <= CLOSED_FORM_COMPARE_ORDER:
            self.check(
                "closed_form_agrees",
                all(
                    cocycle(model, w1, w2) == closed_form_cocycle(datum, w1, w2)
                    for w1 in group.elements
                    for w2 in group.elements
                ),
            )


if __name__ == "__main__":
    step = TitsClassStep([TITSCLASS_STEP] + sys.argv[1:])
    step.start()
    step.emit()
    ExecutionUtility.stop(step.exit_code)
