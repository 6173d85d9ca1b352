import random
import sys

from ..lib.basestep import BaseStep
from ..lib.glncover import (
    anti_invariant_module,
    charpoly_condition,
    elementary_symmetric_check,
    invariant_subalgebra,
    random_element,
    roundtrip_check,
    splitting_algebra,
)
from ..lib.models import CoverInput, parse_input
from ..lib.wfutils import ExecutionUtility
from .constants import COVER_STEP, LOG_FOLDER


class CoverStep(BaseStep):
    """
    Spectral to cameral and back for a GL(n) cover given by its coefficients.
    """

    def __init__(self, argv: list = None):
        super().__init__(step_name=COVER_STEP, log_prefix=LOG_FOLDER, argv=argv)

    def run(self) -> None:
        content = self.read_json_argument(self.option("cover"), self.option("cover_json"))
        cover = parse_input(CoverInput, content)
        samples = self.option("charpoly_samples", 10)
        self.inputs = {"cover": cover.model_dump(), "charpoly_samples": samples}

        spectral = cover.to_spectral()
        alg = splitting_algebra(spectral)
        rng = random.Random(self.seed)

        roundtrip = roundtrip_check(cover.n, list(cover.a))
        invariants = invariant_subalgebra(alg, alg.stabilizer(1))

        functions = [spectral.generator] + [random_element(spectral, rng) for _ in range(samples)]
        charpoly_ok = [charpoly_condition(alg, f) for f in functions]

        self.results = {
            "spectral": spectral.to_json(),
            "splitting_rank": alg.rank,
            "relations": [str(r.as_expr()) for r in alg.relations],
            "stabilizer_invariants": invariants.to_json(),
            "roundtrip": roundtrip.to_json(),
            "charpoly": {"tested": len(functions), "passed": sum(charpoly_ok)},
        }

        self.check("elementary_symmetric", elementary_symmetric_check(alg))
        self.check("roundtrip", roundtrip.ok)
        self.check("charpoly_condition", all(charpoly_ok))

        if cover.n >= 2:
            anti = anti_invariant_module(alg, 1, 2)
            self.results["anti_invariant"] = anti.to_json()
            self.check("anti_invariant_generated", anti.generated)

        self.rows = [
            {
                "n": cover.n,
                "a": [str(a) for a in cover.a],
                "splitting_rank": alg.rank,
                "roundtrip": roundtrip.ok,
                "charpoly": all(charpoly_ok),
            }
        ]


if __name__ == "__main__":
    step = CoverStep([COVER_STEP] + sys.argv[1:])
    step.start()
    step.emit()
    ExecutionUtility.stop(step.exit_code)
