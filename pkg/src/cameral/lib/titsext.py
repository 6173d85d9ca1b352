import logging
from math import factorial

from sympy import Matrix, zeros

from .errors import InternalConsistencyError, NoModelError, PreconditionError
from .intmat import (
    IntMatrix,
    Vector,
    diagonal,
    identity,
    is_diagonal,
    is_monomial,
    mat_mul,
    mat_vec,
    transpose,
    vec_add,
    vec_mod,
    vec_sub,
    zero_vector,
)
from .rootdata import RootDatum, WeylElement, reduced_words

logger = logging.getLogger(__name__)

"""
A vector in X_* tensor Z/2, cocharacter coordinates reduced mod 2.
"""
TorusClass2 = tuple


class MonomialModel:
    """
    Signed-permutation lifts n_i of the simple reflections in the defining
    representation, with the rule reading a +-1 diagonal matrix as an element
    of X_* tensor Z/2.
    """

    def __init__(
        self,
        datum: RootDatum,
        generators: list,
        reader: IntMatrix,
        embedding: IntMatrix,
        scalar_quotient: bool = False,
    ):
        """
        Args:
            datum: Root datum the model realizes.
            generators: One signed permutation matrix per simple reflection.
            reader: rank x dim matrix sending the sign bits of a diagonal matrix to
                cocharacter coordinates mod 2.
            embedding: dim x rank matrix; column j is the exponent vector of the
                j-th cocharacter basis vector on the diagonal torus.
            scalar_quotient: Matrices are read modulo scalars (PGL).
        """

        for k, g in enumerate(generators):
            if not is_monomial(g):
                raise InternalConsistencyError(f"generator {k} is not a signed permutation")

        self._datum = datum
        self._generators = tuple(generators)
        self._reader = reader
        self._embedding = embedding
        self._scalar_quotient = scalar_quotient
        self._sections = {}

    @property
    def datum(self) -> RootDatum:
        return self._datum

    @property
    def dim(self) -> int:
        return len(self._generators[0]) if self._generators else len(self._embedding)

    @property
    def generators(self) -> tuple:
        return self._generators

    @property
    def reader(self) -> IntMatrix:
        return self._reader

    @property
    def embedding(self) -> IntMatrix:
        return self._embedding

    @property
    def scalar_quotient(self) -> bool:
        return self._scalar_quotient

    def torus_reader(self, matrix: IntMatrix) -> TorusClass2:
        """
        Read a +-1 diagonal matrix as a vector of X_* tensor Z/2.
        """

        if not is_diagonal(matrix) or any(abs(x) != 1 for x in diagonal(matrix)):
            raise InternalConsistencyError("torus reader needs a +-1 diagonal matrix")
        bits = tuple(1 if x == -1 else 0 for x in diagonal(matrix))
        return vec_mod(mat_vec(self._reader, bits), 2)

    def torus_element(self, cocharacter: Vector, sign: int = -1) -> IntMatrix:
        """
        The diagonal matrix cocharacter(sign) for sign = +-1.
        """

        exponents = mat_vec(self._embedding, cocharacter)
        size = len(self._embedding)
        return tuple(
            tuple((sign ** (exponents[i] % 2) if i == j else 0) for j in range(size))
            for i in range(size)
        )

    def with_generator(self, i: int, matrix: IntMatrix) -> "MonomialModel":
        generators = list(self._generators)
        generators[i] = matrix
        return MonomialModel(
            self._datum, generators, self._reader, self._embedding, self._scalar_quotient
        )

    def section(self, w: WeylElement) -> IntMatrix:
        if w.matrix not in self._sections:
            product = identity(len(self._embedding))
            for i in w.word:
                product = mat_mul(product, self._generators[i])
            self._sections[w.matrix] = product
        return self._sections[w.matrix]


def _elementary(size: int, row: int, col: int, value: int = 1) -> Matrix:
    m = zeros(size, size)
    m[row, col] = value
    return m


def _nilpotent_exp(x: Matrix) -> Matrix:
    size = x.shape[0]
    total = Matrix.eye(size)
    power = Matrix.eye(size)
    for k in range(1, size + 1):
        power = power * x
        if power.is_zero_matrix:
            break
        total += power / factorial(k)
    return total


def _chevalley_lift(e: Matrix, f: Matrix) -> IntMatrix:
    """
    exp(e) exp(-f) exp(e) for a root vector e and its opposite f.
    """

    product = _nilpotent_exp(e) * _nilpotent_exp(-f) * _nilpotent_exp(e)
    if any(not entry.is_integer for entry in product):
        raise InternalConsistencyError("Chevalley lift is not integral")
    return tuple(tuple(int(product[i, j]) for j in range(product.shape[1])) for i in range(product.shape[0]))


def _type_a_pairs(n: int) -> list:
    return [
        (_elementary(n, i, i + 1), _elementary(n, i + 1, i)) for i in range(n - 1)
    ]


def _orthosymplectic_pairs(datum: RootDatum, size: int) -> list:
    m = datum.rank
    pairs = []
    for i in range(m - 1):
        e = _elementary(size, i, i + 1) - _elementary(size, m + i + 1, m + i)
        f = _elementary(size, i + 1, i) - _elementary(size, m + i, m + i + 1)
        pairs.append((e, f))

    if datum.type_tag == "Sp":
        e = _elementary(size, m - 1, 2 * m - 1)
        f = _elementary(size, 2 * m - 1, m - 1)
    elif size % 2:
        zero = 2 * m
        e = _elementary(size, m - 1, zero, -2) + _elementary(size, zero, 2 * m - 1)
        f = _elementary(size, zero, m - 1, -1) + _elementary(size, 2 * m - 1, zero, 2)
    else:
        e = _elementary(size, m - 2, 2 * m - 1) - _elementary(size, m - 1, 2 * m - 2)
        f = _elementary(size, 2 * m - 1, m - 2) - _elementary(size, 2 * m - 2, m - 1)
    pairs.append((e, f))
    return pairs


def chevalley_generators(datum: RootDatum) -> MonomialModel:
    """
    Matrix model of the Tits lifts for the built-in classical families.

    Args:
        datum: A datum from build_classical.

    Returns:
        MonomialModel
    """

    tag, n = datum.type_tag, datum.n

    if tag in ("GL", "SL", "PGL"):
        pairs = _type_a_pairs(n)
        if tag == "GL":
            reader = identity(n)
            embedding = identity(n)
        elif tag == "SL":
            reader = tuple(tuple(1 if k <= j else 0 for k in range(n)) for j in range(n - 1))
            embedding = transpose(
                tuple(
                    tuple(1 if k == j else -1 if k == j + 1 else 0 for k in range(n))
                    for j in range(n - 1)
                )
            )
        else:
            reader = tuple(
                tuple(1 if k in (j, j + 1) else 0 for k in range(n)) for j in range(n - 1)
            )
            embedding = transpose(
                tuple(tuple(1 if k <= j else 0 for k in range(n)) for j in range(n - 1))
            )
    elif tag in ("Sp", "SO"):
        m = datum.rank
        pairs = _orthosymplectic_pairs(datum, n)
        reader = tuple(tuple(1 if k == j else 0 for k in range(n)) for j in range(m))
        embedding = tuple(
            tuple(1 if k == j else (-1 if k == m + j else 0) for j in range(m))
            for k in range(n)
        )
    else:
        raise NoModelError(
            f"no matrix model registered for {datum.label}; use closed_form_cocycle"
        )

    generators = [_chevalley_lift(e, f) for e, f in pairs]
    logger.debug(f"{datum.label}: built {len(generators)} Chevalley lifts")
    return MonomialModel(datum, generators, reader, embedding, scalar_quotient=(tag == "PGL"))


def tits_section(model: MonomialModel, w: WeylElement) -> IntMatrix:
    return model.section(w)


def section_along(model: MonomialModel, word) -> IntMatrix:
    product = identity(len(model.embedding))
    for i in word:
        product = mat_mul(product, model.generators[i])
    return product


def cocycle(model: MonomialModel, w1: WeylElement, w2: WeylElement) -> TorusClass2:
    """
    c(w1, w2) = n_w1 n_w2 n_{w1 w2}^-1, read in X_* tensor Z/2.
    """

    group = model.datum.weyl_group()
    w12 = group.product(w1, w2)
    value = mat_mul(mat_mul(model.section(w1), model.section(w2)), transpose(model.section(w12)))
    if not is_diagonal(value):
        raise InternalConsistencyError(
            f"n_w1 n_w2 n_w1w2^-1 is not diagonal for {list(w1.word)}, {list(w2.word)}"
        )
    return model.torus_reader(value)


def right_cocycle(model: MonomialModel, w1: WeylElement, w2: WeylElement) -> TorusClass2:
    """
    n_{w1 w2}^-1 n_w1 n_w2, the torus factor written on the right.
    """

    group = model.datum.weyl_group()
    w12 = group.product(w1, w2)
    value = mat_mul(transpose(model.section(w12)), mat_mul(model.section(w1), model.section(w2)))
    if not is_diagonal(value):
        raise InternalConsistencyError("n_w1w2^-1 n_w1 n_w2 is not diagonal")
    return model.torus_reader(value)


def closed_form_cocycle(
    datum: RootDatum, w1: WeylElement, w2: WeylElement, side: str = "left"
) -> TorusClass2:
    """
    Combinatorial Tits cocycle over N(w1, w2) = {a > 0 : w2 a < 0, w1 w2 a > 0}.

    The sum of the coroots of N(w1, w2) is the torus factor on the right of
    n_{w1 w2}; moving it to the left transports each coroot by w1 w2.

    Args:
        datum: Root datum.
        w1: First Weyl element.
        w2: Second Weyl element.
        side: "left" to match cocycle(), "right" to match right_cocycle().

    Returns:
        TorusClass2
    """

    if side not in ("left", "right"):
        raise PreconditionError(f"side must be left or right, got {side}")

    w12 = datum.weyl_group().product(w1, w2)
    total = zero_vector(datum.rank)
    for alpha in datum.positive_roots:
        if datum.is_negative(w2.act_on_root(alpha)) and datum.is_positive(w12.act_on_root(alpha)):
            coroot = datum.coroot(alpha)
            if side == "left":
                coroot = w12.act_on_coroot(coroot)
            total = vec_add(total, coroot)
    return vec_mod(total, 2)


def lift_rescale(model: MonomialModel, i: int, c_sign: int) -> IntMatrix:
    """
    coroot_i(c) n_i for c = +-1.
    """

    if c_sign not in (1, -1):
        raise PreconditionError(f"c_sign must be +1 or -1, got {c_sign}")
    coroot = model.datum.simple_coroots[i]
    return mat_mul(model.torus_element(coroot, c_sign), model.generators[i])


def rescaled_model(model: MonomialModel, i: int, c_sign: int) -> MonomialModel:
    return model.with_generator(i, lift_rescale(model, i, c_sign))


def lift_change_cochain(model: MonomialModel, rescaled: MonomialModel) -> dict:
    """
    t_w = n'_w n_w^-1 read in X_* tensor Z/2, for every element w.
    """

    values = {}
    for w in model.datum.weyl_group().elements:
        value = mat_mul(rescaled.section(w), transpose(model.section(w)))
        values[w.matrix] = model.torus_reader(value)
    return values


def squares_match_coroots(model: MonomialModel) -> bool:
    """
    n_i^2 reads as coroot_i mod 2 for every generator.
    """

    for i, g in enumerate(model.generators):
        expected = vec_mod(model.datum.simple_coroots[i], 2)
        if model.torus_reader(mat_mul(g, g)) != expected:
            return False
    return True


def conjugation_matches(model: MonomialModel) -> bool:
    """
    Conjugating the diagonal torus by n_i permutes exponents as s_i acts on X_*.
    """

    datum = model.datum
    size = len(model.embedding)

    for i, g in enumerate(model.generators):
        permutation = tuple(tuple(abs(x) for x in row) for row in g)
        reflection = datum.simple_reflections[i][0]
        for j in range(datum.rank):
            basis = tuple(1 if k == j else 0 for k in range(datum.rank))
            moved = mat_vec(permutation, mat_vec(model.embedding, basis))
            expected = mat_vec(model.embedding, mat_vec(reflection, basis))
            difference = vec_sub(moved, expected)
            if model.scalar_quotient:
                if len(set(difference)) > 1:
                    return False
            elif difference != zero_vector(size):
                return False
    return True


def braid_check(model: MonomialModel, max_length: int = 4) -> bool:
    """
    Every reduced word of every w with l(w) <= max_length gives the same lift.
    """

    datum = model.datum
    for w in datum.weyl_group().elements:
        if w.length > max_length:
            continue
        lifts = {section_along(model, word) for word in reduced_words(datum, w)}
        if len(lifts) != 1:
            logger.debug(f"reduced words of {list(w.word)} give {len(lifts)} lifts")
            return False
    return True
