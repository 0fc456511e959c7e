"""Generated operator algebras, the word bound, annihilator flags.

The computational content of the nilpotency machinery: span-closure of the
associative (non-unital) matrix algebra generated by a set of operators,
its power filtration and nilpotency index, the 2n-1 word-length bound for
the pair of actions of a single element, premise checking over Lie sets,
the annihilator flag, and the joint annihilator vector, assembled into an
end-to-end verifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Element, LieSet, is_lie_set, subalgebra_generated
from .bimodule import Bimodule, s_matrix, t_matrix
from .errors import (DimensionMismatch, FieldMismatch, FlagStalled,
                     NoAnnihilator, NotNilpotentError)
from .linalg import Matrix, Subspace, is_nilpotent_matrix, kernel_basis
from .reports import Check, Report


class _EchelonTracker:
    """Incremental independence test over vectorized matrices."""

    def __init__(self, field, length: int):
        self.field = field
        self.length = length
        self.rows = []  # echelon rows, each with a unique leading column

    def insert(self, vec) -> bool:
        """Reduce against stored rows; keep and report True if independent."""
        field = self.field
        work = list(vec)
        for lead, row in self.rows:
            if work[lead] != 0:
                f = work[lead]
                work = [field.sub(x, field.mul(f, y)) for x, y in zip(work, row)]
        lead = next((j for j, x in enumerate(work) if x != 0), None)
        if lead is None:
            return False
        inv = field.inv(work[lead])
        work = [field.mul(inv, x) for x in work]
        self.rows.append((lead, tuple(work)))
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


def _vec(m: Matrix) -> tuple:
    return tuple(x for row in m.entries for x in row)


@dataclass(frozen=True)
class OperatorAlgebra:
    """Linear basis of the matrix algebra generated by some operators.

    ``power_dims`` lists the dimensions of the power filtration W_1, W_2, ...
    where W_1 is the whole algebra and W_{j+1} = span(W_1 W_j); the list ends
    at the first repeated value (0 exactly when nilpotent, and then ``index``
    is the least j with W_j = 0).
    """

    generators: tuple
    basis: tuple
    nilpotent: bool
    index: int | None
    power_dims: tuple


def generated_operator_algebra(generators: Sequence[Matrix]) -> OperatorAlgebra:
    """Span-close the generators under two-sided products; decide nilpotency.

    The power step span(W_1 W_j) is computed as span(generators W_j): every
    product of at least j+1 factors is a generator times a product of at
    least j factors, so the spans agree.
    """
    gens = list(generators)
    if not gens:
        raise DimensionMismatch("need at least one generator")
    field = gens[0].field
    size = gens[0].rows
    for g in gens:
        if g.field != field:
            raise FieldMismatch("generators over different fields")
        if g.rows != size or g.cols != size:
            raise DimensionMismatch("generators must be square and equal-sized")

    tracker = _EchelonTracker(field, size * size)
    basis = []
    queue = []
    for g in gens:
        if tracker.insert(_vec(g)):
            basis.append(g)
            queue.append(g)
    while queue:
        w = queue.pop(0)
        for g in gens:
            for prod in (g @ w, w @ g):
                if tracker.insert(_vec(prod)):
                    basis.append(prod)
                    queue.append(prod)

    power_dims = [len(basis)]
    current = list(basis)
    nilpotent, index = False, None
    if not basis:
        nilpotent, index = True, 1
        power_dims = [0]
    else:
        j = 1
        while True:
            step_tracker = _EchelonTracker(field, size * size)
            nxt = []
            for g in gens:
                for w in current:
                    prod = g @ w
                    if step_tracker.insert(_vec(prod)):
                        nxt.append(prod)
            j += 1
            dim = len(nxt)
            if dim == 0:
                power_dims.append(0)
                nilpotent, index = True, j
                break
            if dim == power_dims[-1]:
                # powers stabilized at a nonzero span: never reaches zero
                power_dims.append(dim)
                break
            power_dims.append(dim)
            current = nxt
    return OperatorAlgebra(tuple(gens), tuple(basis), nilpotent, index,
                           tuple(power_dims))


def lemma_word_bound_check(module: Bimodule, a: Element) -> Report:
    """Single-element nilpotency transfer and the word-length bound.

    With e the least exponent killing the left action of ``a`` and
    n = e + 1, the right action must satisfy S^n = 0 and every product of
    2n - 1 factors drawn from the two actions must vanish (equivalently the
    generated operator algebra has index at most 2n - 1).
    """
    T = t_matrix(module, a)
    S = s_matrix(module, a)
    t_nil = is_nilpotent_matrix(T)
    if not t_nil.verdict:
        raise NotNilpotentError("left action of the element is not nilpotent",
                                witness=a.to_str())
    e = t_nil.index
    n = e + 1
    s_ok = (S ** n).is_zero()
    op = generated_operator_algebra([T, S])
    bound = 2 * n - 1
    words_ok = op.nilpotent and op.index <= bound
    premises = [Check("left_action_nilpotent", True,
                      data={"exponent": e})]
    conclusions = [
        Check("right_action_power_vanishes", s_ok, data={"power": n}),
        Check("word_length_bound_holds", words_ok,
              data={"bound": bound,
                    "operator_index": op.index,
                    "operator_dim": len(op.basis)}),
    ]
    return Report(premises=premises, conclusions=conclusions,
                  data={"element": a.to_str(), "left_exponent": e,
                        "n": n, "word_bound": bound,
                        "operator_index": op.index,
                        "power_dims": list(op.power_dims)})


def check_engel_premises(module: Bimodule, lie_set: LieSet) -> Report:
    """The three hypotheses: closure, generation, nilpotent left actions.

    All three clauses are evaluated and recorded independently, each with
    its first failing witness.
    """
    members = list(lie_set.members)
    closed = is_lie_set(members)
    witness_pair = None
    if not closed.ok:
        x, y = closed.witness
        witness_pair = [x.to_str(), y.to_str()]
    generated = subalgebra_generated(members)
    generates = generated.is_full()
    nil_ok, nil_witness = True, None
    for c in members:
        if not is_nilpotent_matrix(t_matrix(module, c)).verdict:
            nil_ok, nil_witness = False, c.to_str()
            break
    premises = [
        Check("closed_under_products", closed.ok, witness=witness_pair),
        Check("members_generate_algebra", generates,
              witness=None if generates else
              {"generated_dim": generated.dim, "algebra_dim": module.algebra.dim}),
        Check("left_actions_nilpotent", nil_ok, witness=nil_witness),
    ]
    return Report(premises=premises, conclusions=[],
                  data={"members": len(members)})


@dataclass(frozen=True)
class Flag:
    """Strictly increasing chain of subspaces from zero to the full module."""

    chain: tuple  # Subspaces, chain[0] = 0

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    def dims(self) -> list:
        return [s.dim for s in self.chain]


def engel_flag(module: Bimodule, generators: Sequence) -> Flag:
    """Iterate the joint-preimage filtration until it fills the module.

    Level i+1 is {v : T_c v and S_c v lie in level i for every generator c}.
    Invariance under the supplied generators already forces invariance under
    everything they span and generate, so closures add no constraints.
    Raises FlagStalled when a level fails to grow before reaching the top.
    """
    field = module.algebra.field
    m = module.module_dim
    action_pairs = [(t_matrix(module, c), s_matrix(module, c))
                    for c in generators]
    chain = [Subspace.zero(field, m)]
    current = chain[0]
    while not current.is_full():
        q, _ = current.quotient_data()
        stacked = None
        for T, S in action_pairs:
            for mat in (T, S):
                block = q @ mat
                stacked = block if stacked is None else stacked.stack(block)
        nxt = kernel_basis(stacked) if stacked is not None \
            else Subspace.full(field, m)
        if nxt == current:
            raise FlagStalled(len(chain), current.dim, m)
        chain.append(nxt)
        current = nxt
    return Flag(tuple(chain))


def joint_annihilator(module: Bimodule) -> tuple:
    """First canonical basis vector of the joint kernel of all actions."""
    field = module.algebra.field
    m = module.module_dim
    if m < 1:
        raise NoAnnihilator("module is zero dimensional")
    stacked = None
    for mat in list(module.left_actions) + list(module.right_actions):
        stacked = mat if stacked is None else stacked.stack(mat)
    level = kernel_basis(stacked) if stacked is not None \
        else Subspace.full(field, m)
    if level.is_zero():
        raise NoAnnihilator("no nonzero vector is killed by all actions")
    return level.basis[0]


def theorem2_verify(module: Bimodule, lie_set: LieSet) -> Report:
    """Premises, then every conclusion of the nilpotent-action theorem.

    When the premises hold: each basis element's action pair generates a
    nilpotent operator algebra; the flag over the Lie set members fills the
    module; a nonzero joint annihilator exists (re-verified by direct
    application of every action); and the operator algebra generated by all
    actions together is nilpotent with index at most module_dim + 1.
    Premise failure short-circuits with no conclusions attempted.
    """
    A = module.algebra
    premises_report = check_engel_premises(module, lie_set)
    if not all(c.passed for c in premises_report.premises):
        return Report(premises=premises_report.premises, conclusions=[],
                      data={"note": "premises failed; conclusions not attempted"})

    conclusions = []
    data = {}

    indices = []
    per_element_ok, witness = True, None
    for i in range(A.dim):
        pair = generated_operator_algebra(
            [module.left_actions[i], module.right_actions[i]])
        indices.append(pair.index)
        if not pair.nilpotent:
            per_element_ok, witness = False, {"basis": i + 1}
            break
    conclusions.append(Check("per_element_operator_algebras_nilpotent",
                             per_element_ok, witness=witness,
                             data={"indices": indices}))
    data["per_element_indices"] = indices

    try:
        flag = engel_flag(module, lie_set.members)
        conclusions.append(Check("flag_reaches_module", True,
                                 data={"dims": flag.dims()}))
        data["flag_dims"] = flag.dims()
    except FlagStalled as exc:
        conclusions.append(Check("flag_reaches_module", False,
                                 witness={"stalled_level": exc.level,
                                          "dim": exc.stalled_dim}))

    try:
        v = joint_annihilator(module)
        killed = all(mat.apply(v) == tuple([A.field.zero()] * module.module_dim)
                     for mat in list(module.left_actions) + list(module.right_actions))
        vec_str = [A.field.to_str(x) for x in v]
        conclusions.append(Check("joint_annihilator_exists", killed,
                                 witness=None if killed else vec_str,
                                 data={"vector": vec_str}))
        data["annihilator"] = vec_str
    except NoAnnihilator:
        conclusions.append(Check("joint_annihilator_exists", False,
                                 witness="joint kernel is zero"))

    joint = generated_operator_algebra(
        list(module.left_actions) + list(module.right_actions))
    bound = module.module_dim + 1
    joint_ok = joint.nilpotent and joint.index <= bound
    conclusions.append(Check("joint_operator_algebra_nilpotent", joint_ok,
                             witness=None if joint_ok else
                             {"index": joint.index, "bound": bound},
                             data={"index": joint.index, "bound": bound,
                                   "basis_dim": len(joint.basis)}))
    data["joint_index"] = joint.index
    data["joint_basis_dim"] = len(joint.basis)

    return Report(premises=premises_report.premises, conclusions=conclusions,
                  data=data)
