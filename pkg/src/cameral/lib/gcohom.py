"""
Cohomology of finite groups with coefficients in lattices, Z/m-modules and
Q-vector spaces, computed on normalized bar cochains.

The [N] decision runs on a Sylow 2-subgroup of W. Restriction to a Sylow
p-subgroup is injective on the p-primary part of H^n (transfer), and the class
of the normalizer is 2-torsion, so nothing is lost.
"""

import logging
import random
from itertools import product
from typing import NamedTuple, Optional

from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .errors import (
    BudgetExceededError,
    InternalConsistencyError,
    ModuleMismatchError,
    NoModelError,
    NotACocycleError,
    PreconditionError,
)
from .intmat import (
    IntMatrix,
    Vector,
    identity,
    is_diagonal,
    mat_mul,
    mat_sub,
    mat_vec,
    transpose,
    vec_mod,
)
from .rootdata import RootDatum
from .smith import SolveResult, integer_kernel, smith_solve
from .titsext import chevalley_generators, closed_form_cocycle, cocycle

logger = logging.getLogger(__name__)

# Constants
"""
Random triples checked for associativity when a group table is built.
"""
ASSOCIATIVITY_SAMPLES: int = 500

"""
Module kinds understood by GModule.
"""
MODULE_KINDS: tuple = ("lattice", "torsion", "rational")

"""
Largest group whose multiplication table is built, unless overridden.
"""
DEFAULT_MAX_GROUP_ORDER: int = 10**4


class FiniteGroupTable:
    """
    A finite group given by its multiplication table on indices 0..m-1.
    """

    def __init__(
        self,
        table: list,
        identity_index: int = 0,
        generators: list = None,
        labels: list = None,
    ):
        self._table = [list(row) for row in table]
        self._identity = identity_index
        self._generators = list(generators or [])
        self._labels = labels
        order = len(self._table)

        for a in range(order):
            if self._table[identity_index][a] != a or self._table[a][identity_index] != a:
                raise InternalConsistencyError(f"identity {identity_index} is not neutral on {a}")

        self._inverses = []
        for a, row in enumerate(self._table):
            if row.count(identity_index) != 1:
                raise InternalConsistencyError(f"element {a} has {row.count(identity_index)} inverses")
            self._inverses.append(row.index(identity_index))

        rng = random.Random(0)
        for _ in range(min(ASSOCIATIVITY_SAMPLES, order**3)):
            a, b, c = (rng.randrange(order) for _ in range(3))
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise InternalConsistencyError(f"table is not associative at ({a}, {b}, {c})")

    @property
    def order(self) -> int:
        return len(self._table)

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def generators(self) -> list:
        return self._generators

    @property
    def labels(self) -> Optional[list]:
        return self._labels

    @property
    def non_identity(self) -> list:
        return [a for a in range(self.order) if a != self._identity]

    def mul(self, a: int, b: int) -> int:
        return self._table[a][b]

    def inv(self, a: int) -> int:
        return self._inverses[a]

    def closure(self, members) -> frozenset:
        closed = {self._identity} | set(members)
        frontier = list(closed)
        while frontier:
            a = frontier.pop()
            for b in list(closed):
                for c in (self.mul(a, b), self.mul(b, a)):
                    if c not in closed:
                        closed.add(c)
                        frontier.append(c)
        return frozenset(closed)

    def subgroup(self, members) -> tuple:
        """
        Table of a subgroup together with the embedding sub index -> index.

        Raises:
            PreconditionError: members are not closed under multiplication.
        """

        members = set(members) | {self._identity}
        for a in members:
            for b in members:
                if self.mul(a, b) not in members:
                    raise PreconditionError(f"{sorted(members)} is not closed under multiplication")

        embedding = [self._identity] + sorted(members - {self._identity})
        position = {g: k for k, g in enumerate(embedding)}
        table = [[position[self.mul(a, b)] for b in embedding] for a in embedding]
        labels = [self._labels[g] for g in embedding] if self._labels else None
        return FiniteGroupTable(table, 0, labels=labels), embedding


def group_from_weyl(datum: RootDatum, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> FiniteGroupTable:
    group = datum.weyl_group()
    if group.order > max_order:
        raise BudgetExceededError(
            f"|W({datum.label})| = {group.order} exceeds the group order budget {max_order}"
        )
    generators = [group.index(group.simple_reflection(i)) for i in range(len(datum.simple_roots))]
    return FiniteGroupTable(group.multiplication_table(), 0, generators, group.elements)


def cyclic_group(m: int) -> FiniteGroupTable:
    if m < 1:
        raise PreconditionError(f"cyclic group order must be positive, got {m}")
    return FiniteGroupTable(
        [[(a + b) % m for b in range(m)] for a in range(m)], 0, [1] if m > 1 else []
    )


class GModule:
    """
    Z^r, (Z/m)^r or Q^r with one r x r matrix per group element.
    """

    def __init__(self, group: FiniteGroupTable, actions: list, kind: str = "lattice", modulus: int = None):
        if kind not in MODULE_KINDS:
            raise PreconditionError(f"unknown module kind {kind}")
        if kind == "torsion" and (modulus is None or modulus < 2):
            raise PreconditionError("torsion modules need a modulus >= 2")
        if len(actions) != group.order:
            raise ModuleMismatchError(f"{len(actions)} matrices for a group of order {group.order}")

        self._group = group
        self._kind = kind
        self._modulus = modulus if kind == "torsion" else None
        self._actions = [tuple(tuple(row) for row in a) for a in actions]
        self._rank = len(self._actions[0])

        def reduce(matrix):
            return matrix if self._modulus is None else tuple(vec_mod(r, self._modulus) for r in matrix)

        if reduce(self._actions[group.identity]) != reduce(identity(self._rank)):
            raise ModuleMismatchError("identity does not act trivially")
        for a in group.generators or range(group.order):
            for b in range(group.order):
                composed = mat_mul(self._actions[a], self._actions[b])
                if reduce(composed) != reduce(self._actions[group.mul(a, b)]):
                    raise ModuleMismatchError(f"action is not multiplicative at ({a}, {b})")

    @classmethod
    def cocharacters(cls, datum: RootDatum, group: FiniteGroupTable = None) -> "GModule":
        """
        X_* with its W-action, on the group built by group_from_weyl.
        """

        group = group or group_from_weyl(datum)
        return cls(group, [w.matrix for w in group.labels], "lattice")

    @property
    def group(self) -> FiniteGroupTable:
        return self._group

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def modulus(self) -> Optional[int]:
        return self._modulus

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def actions(self) -> list:
        return self._actions

    @property
    def zero(self) -> Vector:
        return (0,) * self._rank

    def normalize(self, v) -> Vector:
        if len(v) != self._rank:
            raise ModuleMismatchError(f"vector of length {len(v)} in a module of rank {self._rank}")
        if self._kind == "torsion":
            return tuple(int(x) % self._modulus for x in v)
        if self._kind == "rational":
            return tuple(Rational(x) for x in v)
        return tuple(int(x) for x in v)

    def act(self, g: int, v: Vector) -> Vector:
        return self.normalize(mat_vec(self._actions[g], v))

    def reduce(self, modulus: int) -> "GModule":
        return GModule(self._group, self._actions, "torsion", modulus)

    def rationalize(self) -> "GModule":
        return GModule(self._group, self._actions, "rational")

    def lattice(self) -> "GModule":
        return GModule(self._group, self._actions, "lattice")

    def restrict(self, subgroup: FiniteGroupTable, embedding: list) -> "GModule":
        return GModule(subgroup, [self._actions[g] for g in embedding], self._kind, self._modulus)

    def same_as(self, other: "GModule") -> bool:
        return (
            self._group is other._group
            and self._kind == other._kind
            and self._modulus == other._modulus
            and self._actions == other._actions
        )


def normalized_tuples(group: FiniteGroupTable, degree: int) -> list:
    return list(product(group.non_identity, repeat=degree))


class Cochain:
    """
    A normalized n-cochain: tuples containing the identity evaluate to zero.
    """

    def __init__(self, module: GModule, degree: int, values: dict = None):
        if degree < 0:
            raise PreconditionError(f"cochain degree must be non-negative, got {degree}")
        self._module = module
        self._degree = degree
        self._values = {}
        e = module.group.identity
        for key, vector in (values or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise ModuleMismatchError(f"tuple {key} in a degree {degree} cochain")
            vector = module.normalize(vector)
            if e in key:
                if any(vector):
                    raise PreconditionError(f"normalized cochain is nonzero at {key}")
                continue
            if any(vector):
                self._values[key] = vector

    @classmethod
    def random(cls, module: GModule, degree: int, rng: random.Random, bound: int = 3) -> "Cochain":
        values = {
            key: tuple(rng.randint(-bound, bound) for _ in range(module.rank))
            for key in normalized_tuples(module.group, degree)
        }
        return cls(module, degree, values)

    @property
    def module(self) -> GModule:
        return self._module

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def values(self) -> dict:
        return self._values

    def value(self, key) -> Vector:
        return self._values.get(tuple(key), self._module.zero)

    def is_zero(self) -> bool:
        return not self._values

    def scale(self, factor: int) -> "Cochain":
        return Cochain(
            self._module,
            self._degree,
            {k: tuple(factor * x for x in v) for k, v in self._values.items()},
        )

    def __sub__(self, other: "Cochain") -> "Cochain":
        if not self._module.same_as(other.module) or self._degree != other.degree:
            raise ModuleMismatchError("cochains live in different modules or degrees")
        keys = set(self._values) | set(other.values)
        return Cochain(
            self._module,
            self._degree,
            {k: tuple(a - b for a, b in zip(self.value(k), other.value(k))) for k in keys},
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self._degree == other.degree
            and self._module.same_as(other.module)
            and self._values == other.values
        )

    def to_json(self) -> dict:
        return {
            "degree": self._degree,
            "kind": self._module.kind,
            "modulus": self._module.modulus,
            "values": [
                {"args": list(k), "value": [str(x) for x in v]}
                for k, v in sorted(self._values.items())
            ],
        }


def coboundary(c: Cochain) -> Cochain:
    """
    Normalized bar differential.

    (dc)(g1..g_{n+1}) = g1.c(g2..) + sum_i (-1)^i c(..g_i g_{i+1}..) + (-1)^{n+1} c(g1..g_n)
    """

    module = c.module
    group = module.group
    n = c.degree
    values = {}

    for args in normalized_tuples(group, n + 1):
        total = list(module.act(args[0], c.value(args[1:])))
        for i in range(1, n + 1):
            merged = args[: i - 1] + (group.mul(args[i - 1], args[i]),) + args[i + 1 :]
            sign = -1 if i % 2 else 1
            for k, x in enumerate(c.value(merged)):
                total[k] += sign * x
        sign = -1 if (n + 1) % 2 else 1
        for k, x in enumerate(c.value(args[:n])):
            total[k] += sign * x
        values[args] = total

    return Cochain(module, n + 1, values)


class CoboundaryMatrix(NamedTuple):
    rows: list
    row_keys: list
    column_keys: list


def coboundary_matrix(module: GModule, degree: int) -> CoboundaryMatrix:
    """
    The differential C^degree -> C^{degree+1} as sparse integer rows.

    Columns are indexed by (normalized tuple, coordinate), rows likewise one degree up.
    """

    group = module.group
    rank = module.rank
    sources = normalized_tuples(group, degree)
    column_keys = [(t, l) for t in sources for l in range(rank)]
    column = {key: j for j, key in enumerate(column_keys)}
    e = group.identity

    rows, row_keys = [], []
    for args in normalized_tuples(group, degree + 1):
        for k in range(rank):
            row = {}

            def add(key, coefficient):
                j = column[key]
                updated = row.get(j, 0) + coefficient
                if updated:
                    row[j] = updated
                else:
                    row.pop(j, None)

            tail = args[1:]
            if e not in tail:
                action = module.actions[args[0]]
                for l in range(rank):
                    if action[k][l]:
                        add((tail, l), action[k][l])
            for i in range(1, degree + 1):
                merged = args[: i - 1] + (group.mul(args[i - 1], args[i]),) + args[i + 1 :]
                if e not in merged:
                    add((merged, k), -1 if i % 2 else 1)
            head = args[:degree]
            if e not in head:
                add((head, k), -1 if (degree + 1) % 2 else 1)

            rows.append(row)
            row_keys.append((args, k))

    return CoboundaryMatrix(rows, row_keys, column_keys)


def _first_failure(c: Cochain) -> Optional[tuple]:
    dc = coboundary(c)
    if dc.is_zero():
        return None
    return min(dc.values)


def require_cocycle(c: Cochain) -> None:
    failure = _first_failure(c)
    if failure is not None:
        raise NotACocycleError(f"degree {c.degree} cochain is not a cocycle: dc{failure} != 0")


class CoboundaryDecision(NamedTuple):
    is_coboundary: bool
    witness: Optional[Cochain]
    certificate: Optional[dict]

    def to_json(self) -> dict:
        return {
            "is_coboundary": self.is_coboundary,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "certificate": self.certificate,
        }


def _field_solve(rows: list, rhs: list, ncols: int, domain) -> SolveResult:
    """
    Solve A x = b over a field with a sparse reduced row echelon form.
    """

    augmented = {}
    for i, row in enumerate(rows):
        entries = {j: domain.convert(v) for j, v in row.items() if v}
        if rhs[i]:
            entries[ncols] = domain.convert(rhs[i])
        entries = {j: v for j, v in entries.items() if v}
        if entries:
            augmented[len(augmented)] = entries

    if not augmented:
        return SolveResult(True, [0] * ncols, None)

    matrix = DomainMatrix(augmented, (len(augmented), ncols + 1), domain)
    reduced, pivots = matrix.rref()
    if pivots and pivots[-1] == ncols:
        return SolveResult(
            False,
            None,
            {"kind": "inconsistent", "field": str(domain), "rank": len(pivots) - 1},
        )

    reduced = reduced.to_sparse().rep
    solution = [0] * ncols
    for r, j in enumerate(pivots):
        value = reduced.get(r, {}).get(ncols, domain.zero)
        solution[j] = domain.to_sympy(value)
    return SolveResult(True, solution, None)


def _modular_solve(rows: list, rhs: list, ncols: int, modulus: int) -> SolveResult:
    """
    Solve A x = b mod m as the integer system A x + m y = b.
    """

    augmented = []
    for i, row in enumerate(rows):
        entries = {j: v % modulus for j, v in row.items() if v % modulus}
        entries[ncols + i] = modulus
        augmented.append(entries)
    result = smith_solve(augmented, [b % modulus for b in rhs], ncols + len(rows))
    if not result.solvable:
        certificate = dict(result.certificate)
        certificate["modulus"] = modulus
        return SolveResult(False, None, certificate)
    return SolveResult(True, [x % modulus for x in result.solution[:ncols]], None)


def solve_coboundary(c: Cochain) -> tuple:
    """
    Find phi with d(phi) = c, dispatching on the module kind.

    Returns:
        tuple: (SolveResult, column keys of the unknowns)
    """

    module = c.module
    system = coboundary_matrix(module, c.degree - 1)
    rhs = [c.value(args)[k] for args, k in system.row_keys]
    ncols = len(system.column_keys)
    logger.debug(
        f"solving d(phi) = c: {len(system.rows)} equations, {ncols} unknowns over {module.kind}"
    )

    if module.kind == "lattice":
        result = smith_solve(system.rows, rhs, ncols)
    elif module.kind == "rational":
        result = _field_solve(system.rows, rhs, ncols, QQ)
    elif isprime(module.modulus):
        result = _field_solve(system.rows, rhs, ncols, GF(module.modulus))
        if result.solvable:
            result = SolveResult(True, [int(x) % module.modulus for x in result.solution], None)
    else:
        result = _modular_solve(system.rows, rhs, ncols, module.modulus)
    return result, system.column_keys


def is_coboundary(c: Cochain) -> CoboundaryDecision:
    """
    Decide whether a cocycle is a coboundary.

    Args:
        c: A cocycle of degree >= 1.

    Returns:
        CoboundaryDecision: the witness phi with d(phi) = c, or the certificate
        of unsolvability of the linear system.

    Raises:
        NotACocycleError: c is not closed.
    """

    if c.degree < 1:
        raise PreconditionError("degree 0 cochains are never coboundaries of anything")
    require_cocycle(c)

    result, system_keys = solve_coboundary(c)
    if not result.solvable:
        return CoboundaryDecision(False, None, result.certificate)

    values = {}
    for (args, l), x in zip(system_keys, result.solution):
        values.setdefault(args, [0] * c.module.rank)[l] = x
    witness = Cochain(c.module, c.degree - 1, values)

    if coboundary(witness) != c:
        raise InternalConsistencyError("coboundary witness does not reproduce the cocycle")
    return CoboundaryDecision(True, witness, None)


def bockstein_to_h3(c2: Cochain) -> Cochain:
    """
    Connecting map H^2(G, M/2) -> H^3(G, M) for a lattice M.

    The cocycle is lifted to half-integer vectors, differentiated and read back
    as an integral 3-cocycle.

    Args:
        c2: 2-cocycle valued in a torsion module of modulus 2.

    Returns:
        Cochain: integral 3-cocycle over the lattice with the same action.
    """

    module = c2.module
    if module.kind != "torsion" or module.modulus != 2:
        raise ModuleMismatchError("bockstein expects coefficients in a lattice tensor Z/2")
    if c2.degree != 2:
        raise PreconditionError(f"bockstein expects a 2-cochain, got degree {c2.degree}")
    require_cocycle(c2)

    lattice = module.lattice()
    lift = Cochain(lattice, 2, c2.values)
    doubled = coboundary(lift)
    values = {}
    for args, vector in doubled.values.items():
        if any(x % 2 for x in vector):
            raise InternalConsistencyError(f"d(lift) is not even at {args}")
        values[args] = tuple(x // 2 for x in vector)
    return Cochain(lattice, 3, values)


def sylow2(group: FiniteGroupTable) -> tuple:
    """
    A Sylow 2-subgroup grown through normalizers.

    While P is not Sylow, N(P)/P has even order, so some h in N(P) \\ P has h^2 in P
    and <P, h> has order 2|P|.

    Returns:
        tuple: (subgroup table, embedding sub index -> group index)
    """

    order = group.order
    target = 1
    while order % (2 * target) == 0:
        target *= 2

    members = frozenset({group.identity})
    while len(members) < target:
        grown = None
        for h in range(order):
            if h in members or group.mul(h, h) not in members:
                continue
            h_inv = group.inv(h)
            if all(group.mul(group.mul(h, p), h_inv) in members for p in members):
                grown = group.closure(members | {h})
                break
        if grown is None or len(grown) != 2 * len(members):
            raise InternalConsistencyError("normalizer growth stalled below the Sylow order")
        members = grown

    logger.debug(f"Sylow 2-subgroup of order {len(members)} in a group of order {order}")
    return group.subgroup(members)


def restrict(c: Cochain, subgroup: FiniteGroupTable, embedding: list) -> Cochain:
    """
    Restriction of a cochain along a subgroup embedding.

    Raises:
        PreconditionError: the embedding is not a homomorphism onto a subgroup.
    """

    group = c.module.group
    if len(embedding) != subgroup.order:
        raise PreconditionError("embedding length differs from the subgroup order")
    for a in range(subgroup.order):
        for b in range(subgroup.order):
            if group.mul(embedding[a], embedding[b]) != embedding[subgroup.mul(a, b)]:
                raise PreconditionError(f"embedding image is not closed at ({a}, {b})")

    module = c.module.restrict(subgroup, embedding)
    values = {
        args: c.value(tuple(embedding[a] for a in args))
        for args in normalized_tuples(subgroup, c.degree)
    }
    return Cochain(module, c.degree, values)


def _cocycle_source(datum: RootDatum, source: str):
    if source not in ("auto", "model", "closed_form"):
        raise PreconditionError(f"unknown cocycle source {source}")
    if source in ("auto", "model"):
        try:
            model = chevalley_generators(datum)
            return "model", lambda w1, w2: cocycle(model, w1, w2)
        except NoModelError:
            if source == "model":
                raise
    return "closed_form", lambda w1, w2: closed_form_cocycle(datum, w1, w2, "left")


def tits_cocycle(datum: RootDatum, subgroup: FiniteGroupTable, embedding: list, source: str = "auto") -> tuple:
    """
    The Tits cocycle restricted to a subgroup of W, valued in X_* tensor Z/2.

    Only pairs inside the subgroup are evaluated.

    Returns:
        tuple: (Cochain, name of the cocycle source used)
    """

    name, evaluate = _cocycle_source(datum, source)
    module = GModule(subgroup, [w.matrix for w in subgroup.labels], "torsion", 2)
    values = {
        (a, b): evaluate(subgroup.labels[a], subgroup.labels[b])
        for a, b in normalized_tuples(subgroup, 2)
    }
    return Cochain(module, 2, values), name


class NClassDecision(NamedTuple):
    datum: str
    vanishes: bool
    weyl_order: int
    sylow_order: int
    source: str
    decision: CoboundaryDecision

    def to_json(self) -> dict:
        return {
            "datum": self.datum,
            "vanishes": self.vanishes,
            "weyl_order": self.weyl_order,
            "sylow_order": self.sylow_order,
            "cocycle_source": self.source,
            "witness_support": len(self.decision.witness.values) if self.decision.witness else None,
            "certificate": self.decision.certificate,
        }


def decide_N_class(
    datum: RootDatum, source: str = "auto", max_group_order: int = DEFAULT_MAX_GROUP_ORDER
) -> NClassDecision:
    """
    Decide whether the class of the normalizer extension vanishes in H^2(W, T).

    The Tits cocycle is built on a Sylow 2-subgroup of W, sent to H^3(W_2, X_*)
    by the Bockstein and tested for being an integral coboundary.

    Args:
        datum: Root datum.
        source: "model", "closed_form" or "auto" (model when one is registered).
        max_group_order: Largest Weyl group whose table is built.

    Returns:
        NClassDecision
    """

    group = group_from_weyl(datum, max_group_order)
    subgroup, embedding = sylow2(group)
    c2, name = tits_cocycle(datum, subgroup, embedding, source)
    delta = bockstein_to_h3(c2)
    decision = is_coboundary(delta)

    logger.info(
        f"{datum.label}: |W| = {group.order}, |W_2| = {subgroup.order}, "
        f"[N] {'vanishes' if decision.is_coboundary else 'does not vanish'} ({name})"
    )
    return NClassDecision(datum.label, decision.is_coboundary, group.order, subgroup.order, name, decision)


class SplitWitness(NamedTuple):
    registered: bool
    construction: Optional[str]
    pair_checks: int
    homomorphism: bool
    lifts_weyl: bool

    @property
    def ok(self) -> bool:
        return self.registered and self.homomorphism and self.lifts_weyl

    def to_json(self) -> dict:
        return {
            "registered": self.registered,
            "construction": self.construction or "none registered",
            "pair_checks": self.pair_checks,
            "homomorphism": self.homomorphism,
            "lifts_weyl": self.lifts_weyl,
        }


def _transposition(n: int, i: int, sign: int) -> IntMatrix:
    rows = []
    for r in range(n):
        source = i + 1 if r == i else i if r == i + 1 else r
        rows.append(tuple(sign if c == source else 0 for c in range(n)))
    return tuple(rows)


def _modulo_scalars_equal(a: IntMatrix, b: IntMatrix) -> bool:
    for scalar in (1, -1):
        if all(x == scalar * y for ra, rb in zip(a, b) for x, y in zip(ra, rb)):
            return True
    return False


def split_witness(datum: RootDatum) -> SplitWitness:
    """
    Explicit homomorphic sections W -> N for GL(n), PGL(n) and SL(odd n).

    GL and PGL use permutation matrices, SL(2k+1) uses sgn(w) times the
    permutation matrix. Checks every pair and that s(w) n_w^-1 lies in T.
    """

    tag, n = datum.type_tag, datum.n
    if tag in ("GL", "PGL"):
        sign, name = 1, "permutation matrices"
    elif tag == "SL" and n % 2:
        sign, name = -1, "sign-twisted permutation matrices"
    else:
        return SplitWitness(False, None, 0, False, False)

    model = chevalley_generators(datum)
    generators = [_transposition(n, i, sign) for i in range(n - 1)]
    group = datum.weyl_group()

    sections = {}
    for w in group.elements:
        value = identity(n)
        for i in w.word:
            value = mat_mul(value, generators[i])
        sections[w.matrix] = value

    equal = _modulo_scalars_equal if tag == "PGL" else (lambda a, b: a == b)
    checks, homomorphism = 0, True
    for w1 in group.elements:
        for w2 in group.elements:
            checks += 1
            product_value = mat_mul(sections[w1.matrix], sections[w2.matrix])
            if not equal(product_value, sections[group.product(w1, w2).matrix]):
                homomorphism = False

    lifts = all(
        is_diagonal(mat_mul(sections[w.matrix], transpose(model.section(w))))
        for w in group.elements
    )
    logger.debug(f"{datum.label}: split section checked on {checks} pairs")
    return SplitWitness(True, name, checks, homomorphism, lifts)


class CyclicOracle(NamedTuple):
    vanishes: bool
    square: tuple
    fixed_lattice: list

    def to_json(self) -> dict:
        return {
            "vanishes": self.vanishes,
            "n_s_squared": list(self.square),
            "fixed_lattice": [list(v) for v in self.fixed_lattice],
        }


def cyclic_oracle(datum: RootDatum) -> CyclicOracle:
    """
    Extension class for |W| = 2 without bar cochains.

    H^2(Z/2, T) = T^s / (1+s)T. The class of n_s^2 = coroot(-1) is trivial
    iff the coroot lies in (X_*)^s + 2 X_*, since (X_*)^s is the saturation of
    (1+s) X_*.
    """

    group = datum.weyl_group()
    if group.order != 2:
        raise PreconditionError(f"cyclic oracle needs |W| = 2, got {group.order}")

    s = group.simple_reflection(0)
    square = vec_mod(datum.simple_coroots[0], 2)
    rank = datum.rank
    fixed = integer_kernel([list(row) for row in mat_sub(s.matrix, identity(rank))])

    rows = []
    for k in range(rank):
        row = {j: basis[k] for j, basis in enumerate(fixed) if basis[k]}
        row[len(fixed) + k] = 2
        rows.append(row)
    result = smith_solve(rows, list(square), len(fixed) + rank)
    return CyclicOracle(result.solvable, square, fixed)


class TorsionStep(NamedTuple):
    k: int
    modulus: int
    vanishes: bool


def torsion_diagnostic(datum: RootDatum, k_max: int = 3, max_group_order: int = DEFAULT_MAX_GROUP_ORDER) -> dict:
    """
    Image of the Tits cocycle in H^2(W_2, X_* tensor Z/2^k) for k = 1..k_max.

    Z/2 sits in Z/2^k as the multiples of 2^(k-1).
    """

    if k_max < 1:
        raise PreconditionError(f"k_max must be at least 1, got {k_max}")

    group = group_from_weyl(datum, max_group_order)
    subgroup, embedding = sylow2(group)
    c2, _ = tits_cocycle(datum, subgroup, embedding)

    steps = []
    for k in range(1, k_max + 1):
        modulus = 2**k
        module = c2.module.reduce(modulus)
        lifted = Cochain(module, 2, {args: tuple(2 ** (k - 1) * x for x in v) for args, v in c2.values.items()})
        steps.append(TorsionStep(k, modulus, is_coboundary(lifted).is_coboundary))

    tail = [step.vanishes for step in steps[1:]] or [steps[0].vanishes]
    return {
        "datum": datum.label,
        "steps": [step._asdict() for step in steps],
        "stable": len(set(tail)) == 1,
    }


def _rank(rows: list, ncols: int) -> int:
    entries = {i: {j: QQ.convert(v) for j, v in row.items() if v} for i, row in enumerate(rows)}
    entries = {i: row for i, row in entries.items() if row}
    if not entries or ncols == 0:
        return 0
    return DomainMatrix(entries, (len(rows), ncols), QQ).rank()


def h1_rational_vanishes(module: GModule) -> dict:
    """
    Compare 1-cocycles and 1-coboundaries of a rational module.
    """

    if module.kind != "rational":
        module = module.rationalize()

    d0 = coboundary_matrix(module, 0)
    d1 = coboundary_matrix(module, 1)
    dim_z1 = len(d1.column_keys) - _rank(d1.rows, len(d1.column_keys))
    dim_b1 = _rank(d0.rows, len(d0.column_keys))
    return {"dim_Z1": dim_z1, "dim_B1": dim_b1, "vanishes": dim_z1 == dim_b1}
