"""Grothendieck groups of supermodules: registries of irreducibles, integer
matrices of the functors between them, eigen-lattices, quotient groups and the
periodic exact sequences."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .algebra import CliffordSignature, LieSuperAlgebra, ShiftedContext
from .classify import (DEFAULT_SEED, IrreducibleTag, classify_irreducible, clifford_irreducibles,
                       composition_factors, lift_to_algebra, shift_irreducibles)
from .exactnum import (FieldTag, IntegerMatrix, LatticeRelation, hermite_basis, integer_kernel,
                       integer_solve, invariant_factors, lattice_compare, lattice_contains,
                       smith_normal_form)
from .superspace import EVEN
from .supermodule import (ISOMORPHIC, UNDECIDED, SuperModule, conjugate, degrade, delta, diag_lift,
                          forget_grading, hom_space, iso_test, parity_reverse, restrict_generator,
                          tensor_modules)


class ClassificationError(RuntimeError):
    """An isomorphism question could not be settled."""


class RegistryError(RuntimeError):
    """A registry needed for a computation cannot be produced."""


# --- registries ------------------------------------------------------------


def _fingerprint(m: SuperModule):
    """Cheap isomorphism invariant: block dimensions and traces of even operators on each block."""
    f = m.field
    out = [m.graded, m.dim_even, m.dim_odd]
    blocks = [range(m.dim_even), range(m.dim_even, m.dim)] if m.graded else [range(m.dim)]
    for op, parity in m.operators():
        if parity == EVEN:
            out.append(tuple(str(sum((op.data[i][i] for i in b), f.zero)) for b in blocks))
    return tuple(out)


class IrreducibleRegistry:
    """Pairwise non-isomorphic irreducibles over one context; grows on demand."""

    def __init__(self, context: ShiftedContext, graded: bool, modules: Sequence[SuperModule] = (), label: str = "",
                 seed: int = DEFAULT_SEED):
        self.context = context
        self.graded = graded
        self.label = label or f"{'R_Z2' if graded else 'R_0'}[{context}]"
        self.seed = seed
        self.modules: list[SuperModule] = []
        self._prints: list = []
        self._end_dims: list[int] = []
        self._tags: dict[int, IrreducibleTag] = {}
        for m in modules:
            self.add(m)

    def __len__(self):
        return len(self.modules)

    @property
    def field(self) -> FieldTag:
        return self.context.field

    @property
    def degree(self) -> CliffordSignature:
        return self.context.signature

    def _check(self, m: SuperModule):
        if m.context != self.context or m.graded != self.graded:
            raise ValueError(f"module over {m.context} (graded={m.graded}) does not belong to {self.label}")

    def find(self, m: SuperModule) -> int | None:
        fp = _fingerprint(m)
        for k, (known, kp) in enumerate(zip(self.modules, self._prints)):
            if kp != fp:
                continue
            verdict = iso_test(known, m, seed=self.seed).verdict
            if verdict == ISOMORPHIC:
                return k
            if verdict == UNDECIDED:
                raise ClassificationError(f"cannot decide whether {m.name or 'module'} is isomorphic to entry {k}")
        return None

    def add(self, m: SuperModule) -> int:
        """Index of m, appending it when new (m must be irreducible)."""
        self._check(m)
        k = self.find(m)
        if k is not None:
            return k
        self.modules.append(m)
        self._prints.append(_fingerprint(m))
        self._end_dims.append(hom_space(m, m, EVEN).dim)
        return len(self.modules) - 1

    def end_dim(self, k: int) -> int:
        return self._end_dims[k]

    def tag(self, k: int) -> IrreducibleTag:
        if k not in self._tags:
            self._tags[k] = classify_irreducible(self.modules[k])
        return self._tags[k]

    def names(self) -> list[str]:
        return [m.name or f"#{k}" for k, m in enumerate(self.modules)]

    def pi_partner(self) -> list[int]:
        """Index of the parity reversal (graded) or conjugate (ungraded) of each entry."""
        op = parity_reverse if self.graded else conjugate
        out = []
        for m in list(self.modules):
            k = self.add(op(m))
            out.append(k)
        return out


@dataclass(frozen=True)
class GroupElement:
    registry: IrreducibleRegistry = dc_field(compare=False)
    coefficients: tuple

    def padded(self) -> list[int]:
        return list(self.coefficients) + [0] * (len(self.registry) - len(self.coefficients))

    def __add__(self, other):
        a, b = self.padded(), other.padded()
        return GroupElement(self.registry, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return GroupElement(self.registry, tuple(-x for x in self.coefficients))

    def __sub__(self, other):
        return self + (-other)


def class_of(m: SuperModule, reg: IrreducibleRegistry, seed: int | None = None) -> GroupElement:
    """Class of m as an integer combination of registry entries.

    First counts socle multiplicities dim Hom(S, m) / dim End(S); when these
    already account for every dimension of m it is semisimple and we are done.
    Otherwise the composition factors are found and matched (new ones appended)."""
    reg._check(m)
    if m.dim == 0:
        return GroupElement(reg, tuple([0] * len(reg)))
    counts = [0] * len(reg)
    covered = 0
    for k, s in enumerate(reg.modules):
        if s.dim_even > m.dim_even or s.dim_odd > m.dim_odd or s.dim > m.dim:
            continue
        h = hom_space(s, m, EVEN).dim
        e = reg.end_dim(k)
        if h % e:
            counts = None
            break
        counts[k] = h // e
        covered += counts[k] * s.dim
    if counts is not None and covered == m.dim:
        return GroupElement(reg, tuple(counts))
    report = composition_factors(m, seed if seed is not None else reg.seed)
    counts = [0] * len(reg)
    for factor, mult in zip(report.factors, report.multiplicities):
        k = reg.add(factor)
        if k >= len(counts):
            counts.extend([0] * (k + 1 - len(counts)))
        counts[k] += mult
    return GroupElement(reg, tuple(counts))


# --- integer maps --------------------------------------------------------------


class GroupMap:
    """Integer matrix of a functor between two registries; column j is the class of F(source[j])."""

    def __init__(self, name: str, source: IrreducibleRegistry, target: IrreducibleRegistry, columns):
        self.name = name
        self.source = source
        self.target = target
        self._columns = [list(c) for c in columns]

    @property
    def matrix(self) -> IntegerMatrix:
        n = len(self.target)
        cols = [c + [0] * (n - len(c)) for c in self._columns]
        return IntegerMatrix.from_columns(cols, n)


def map_matrix(name: str, functor: Callable[[SuperModule], SuperModule], source: IrreducibleRegistry,
               target: IrreducibleRegistry) -> GroupMap:
    cols = []
    for m in list(source.modules):
        cols.append(list(class_of(functor(m), target).coefficients))
    return GroupMap(name, source, target, cols)


def involution_matrix(reg: IrreducibleRegistry) -> IntegerMatrix:
    """Pi on a graded registry, dagger on an ungraded one, as a permutation matrix."""
    partner = reg.pi_partner()
    n = len(reg)
    return IntegerMatrix([[int(partner[j] == i) for j in range(n)] for i in range(n)], n, n)


def eigenlattice(pi: IntegerMatrix, sign: int) -> IntegerMatrix:
    """Basis of the +1 or -1 eigenlattice of an integer involution."""
    n = pi.rows
    ident = IntegerMatrix.identity(n)
    if not (pi @ pi == ident):
        raise ValueError("matrix is not an involution")
    return hermite_basis(integer_kernel(pi - ident if sign > 0 else pi + ident))


# --- presented groups ---------------------------------------------------------


@dataclass
class GroupPresentation:
    """span(sub) / span(relations), both given in ambient coordinates (relations inside span(sub))."""
    name: str
    ambient: int
    sub: IntegerMatrix
    relations: IntegerMatrix
    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.relations.cols and not lattice_contains(self.sub, self.relations):
            raise ValueError(f"{self.name}: relations leave the subgroup")
        coords = []
        snf = smith_normal_form(self.sub) if self.sub.cols else None
        for col in self.relations.columns():
            y = integer_solve(self.sub, col, snf)
            coords.append(y)
        k = self.sub.cols
        rel = IntegerMatrix.from_columns(coords, k) if coords else IntegerMatrix.zeros(k, 0)
        factors = invariant_factors(rel) if rel.cols and k else []
        self.free_rank = k - len(factors)
        self.torsion = tuple(d for d in factors if d > 1)

    def text(self) -> str:
        return group_text(self.free_rank, self.torsion)

    def as_dict(self) -> dict:
        return {"name": self.name, "free_rank": self.free_rank, "torsion": list(self.torsion), "text": self.text()}

    def contains_relation(self, vec) -> bool:
        """True when vec (ambient coordinates) is zero in the quotient."""
        if len(vec) != self.ambient:
            raise ValueError(f"{self.name}: vector of length {len(vec)}, expected {self.ambient}")
        if not self.relations.cols:
            return not any(vec)
        return integer_solve(self.relations, vec) is not None

    def order_of(self, vec) -> int | None:
        """Order of the class of vec (None when infinite)."""
        for k in range(1, 1 + max([1] + [d for d in self.torsion])):
            if self.contains_relation([k * x for x in vec]):
                return k
        return None


_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def group_text(free_rank: int, torsion: Sequence[int]) -> str:
    parts = ["Z"] * free_rank if free_rank <= 3 else [f"Z^{free_rank}"]
    parts += [f"Z{str(d).translate(_SUB)}" for d in torsion]
    return " ⊕ ".join(parts) if parts else "0"


def quotient_group(name: str, ambient: int, relations: IntegerMatrix, sub: IntegerMatrix | None = None):
    sub = IntegerMatrix.identity(ambient) if sub is None else sub
    return GroupPresentation(name, ambient, sub, relations)


def cokernel(name: str, m: IntegerMatrix, target_sub: IntegerMatrix | None = None) -> GroupPresentation:
    """target_sub / image of m (target_sub defaults to the whole ambient lattice)."""
    return quotient_group(name, m.rows, m, target_sub)


# --- registry providers ---------------------------------------------------------


class RegistryProvider:
    """Irreducible registries at each degree n (signature shifted by n e-generators).

    Trivial algebra: explicit Clifford irreducibles.  Other algebras over
    ComplexQi: degree-0 seeds, then shift_irreducibles upward; ungraded degree
    n+1 comes from degrading graded degree n.  Other algebras over RealQ:
    degree 0 only."""

    def __init__(self, algebra: LieSuperAlgebra, base: CliffordSignature = CliffordSignature(),
                 graded_seeds: Sequence[SuperModule] = (), ungraded_seeds: Sequence[SuperModule] = (),
                 seed: int = DEFAULT_SEED):
        self.algebra = algebra
        self.base = base
        self.seed = seed
        self.field = algebra.field
        self._graded: dict[int, IrreducibleRegistry] = {}
        self._ungraded: dict[int, IrreducibleRegistry] = {}
        self._graded_seeds = list(graded_seeds)
        self._ungraded_seeds = list(ungraded_seeds)

    @property
    def trivial(self) -> bool:
        return self.algebra.dim == 0

    def context(self, n: int) -> ShiftedContext:
        return ShiftedContext(self.algebra, CliffordSignature(self.base.p + n, self.base.q))

    def _lift(self, mods):
        return [lift_to_algebra(m, self.algebra) if m.algebra != self.algebra else m for m in mods]

    def graded(self, n: int) -> IrreducibleRegistry:
        if n not in self._graded:
            ctx = self.context(n)
            if self.trivial:
                mods = self._lift(clifford_irreducibles(self.base.p + n, self.base.q, self.field, True))
            elif n == 0:
                mods = self._graded_seeds
            elif self.field is FieldTag.COMPLEX:
                mods = shift_irreducibles(self.graded(n - 1).modules)
            else:
                raise RegistryError("real degree shifts beyond degree 0 need the trivial algebra")
            self._graded[n] = IrreducibleRegistry(ctx, True, mods, label=f"R_Z2^-{n}", seed=self.seed)
        return self._graded[n]

    def ungraded(self, n: int) -> IrreducibleRegistry:
        if n not in self._ungraded:
            ctx = self.context(n)
            if self.trivial:
                mods = self._lift(clifford_irreducibles(self.base.p + n, self.base.q, self.field, False))
            elif n == 0:
                mods = self._ungraded_seeds
            elif self.field is FieldTag.COMPLEX:
                mods = [degrade(m) for m in self.graded(n - 1).modules]
            else:
                raise RegistryError("real degree shifts beyond degree 0 need the trivial algebra")
            self._ungraded[n] = IrreducibleRegistry(ctx, False, mods, label=f"R_0^-{n}", seed=self.seed)
        return self._ungraded[n]

    def period_module(self) -> tuple[int, SuperModule]:
        """(period, B): tensoring with B shifts degree by the period."""
        per = 8 if self.field is FieldTag.REAL else 2
        b = clifford_irreducibles(per, 0, self.field, True)[0]
        return per, lift_to_algebra(b, self.algebra)


# --- standard maps --------------------------------------------------------------


def pi_matrix(prov: RegistryProvider, n: int) -> IntegerMatrix:
    return involution_matrix(prov.graded(n))


def dag_matrix(prov: RegistryProvider, n: int) -> IntegerMatrix:
    return involution_matrix(prov.ungraded(n))


def delta_map(prov: RegistryProvider, n: int) -> GroupMap:
    return map_matrix("Delta", delta, prov.ungraded(n), prov.graded(n))


def forget_map(prov: RegistryProvider, n: int) -> GroupMap:
    return map_matrix("f", forget_grading, prov.graded(n), prov.ungraded(n))


def restrict_map(prov: RegistryProvider, n: int) -> GroupMap:
    """i*: degree n+1 to degree n."""
    return map_matrix("i*", restrict_generator, prov.graded(n + 1), prov.graded(n))


def forget_shift_map(prov: RegistryProvider, n: int) -> GroupMap:
    """f read in degree-shifted terms: forget the grading, then lift diagonally to degree n+1."""
    return map_matrix("f", lambda m: diag_lift(forget_grading(m)), prov.graded(n), prov.graded(n + 1))


def wrap_restrict_map(prov: RegistryProvider) -> GroupMap:
    """i* from degree 0 into degree period-1, through the periodicity V -> V (x) B."""
    per, b = prov.period_module()
    return map_matrix("i*", lambda m: restrict_generator(tensor_modules(m, b)), prov.graded(0),
                      prov.graded(per - 1))


def sr_group(prov: RegistryProvider, n: int) -> GroupPresentation:
    d = delta_map(prov, n)
    return quotient_group(f"SR^-{n}", len(prov.graded(n)), d.matrix)


def r_plus(prov: RegistryProvider, n: int) -> IntegerMatrix:
    return eigenlattice(pi_matrix(prov, n), +1)


def r_minus(prov: RegistryProvider, n: int) -> IntegerMatrix:
    return eigenlattice(pi_matrix(prov, n), -1)


def connecting_maps(prov: RegistryProvider, n: int) -> dict:
    """quotient_map (pi), delta and delta_prime at degree n, as ambient integer matrices.

    delta is (1 - Pi) on graded classes; it is well defined on SR because the
    relation lattice lies in the +1 eigenlattice, which is asserted here.
    delta_prime is the same operator one degree up, acting on R_Z2^{-n-1}/f R_Z2^{-n}."""
    out = {}
    for k, name in ((n, "delta"), (n + 1, "delta_prime")):
        r = len(prov.graded(k))
        pi = pi_matrix(prov, k)
        op = IntegerMatrix.identity(r) - pi
        rel = delta_map(prov, k).matrix if name == "delta" else forget_shift_map(prov, n).matrix
        if not (op @ rel).is_zero():
            raise AssertionError(f"{name} depends on the coset representative")
        out[name] = op
    out["quotient_map"] = IntegerMatrix.identity(len(prov.graded(n)))
    return out


def canonical_odd_hom(m: SuperModule):
    """Witness of V -> V^Pi from the odd commutant (None when V is type M)."""
    basis = hom_space(m, m, 1).basis
    return basis[0] if basis else None


# --- sequences --------------------------------------------------------------------


@dataclass
class Node:
    name: str
    group: GroupPresentation


@dataclass
class Arrow:
    name: str
    matrix: IntegerMatrix  # ambient target x ambient source


@dataclass
class NodeVerdict:
    node: str
    exact: bool
    composite_zero: bool
    image: IntegerMatrix
    kernel: IntegerMatrix
    relation: LatticeRelation
    well_defined: bool = True

    def as_dict(self):
        return {"node": self.node, "exact": self.exact, "composite_zero": self.composite_zero,
                "well_defined": self.well_defined,
                "relation": self.relation.value, "image": hermite_basis(self.image).tolist(),
                "kernel": hermite_basis(self.kernel).tolist()}


@dataclass
class ExactSequence:
    variant: str
    nodes: list[Node]
    arrows: list[Arrow]  # arrows[k]: nodes[k] -> nodes[k+1 mod len]

    def __len__(self):
        return len(self.nodes)


def _node(name, ambient, sub, rel):
    return Node(name, GroupPresentation(name, ambient, sub, rel))


def _zero_rel(r):
    return IntegerMatrix.zeros(r, 0)


def _triple(prov: RegistryProvider, n: int, rplus=None):
    """The nodes R_+^{-n}, SR^{-n}, R_Z2^{-n} and the arrows pi, delta between them."""
    r = len(prov.graded(n))
    dmat = delta_map(prov, n).matrix
    cm = connecting_maps(prov, n)
    nodes = [
        _node(f"R+^-{n}", r, r_plus(prov, n), _zero_rel(r)),
        _node(f"SR^-{n}", r, IntegerMatrix.identity(r), dmat),
        _node(f"R_Z2^-{n}", r, IntegerMatrix.identity(r), _zero_rel(r)),
    ]
    arrows = [Arrow(f"pi^-{n}", cm["quotient_map"]), Arrow(f"delta^-{n}", cm["delta"])]
    return nodes, arrows


def _prefetch(prov: RegistryProvider, degrees, extra=()):
    """Touch every map first so registries stop growing before lattices are frozen."""
    for _ in range(2):
        for n in degrees:
            pi_matrix(prov, n)
            delta_map(prov, n)
        for fn in extra:
            fn()


def build_sequence(prov: RegistryProvider, variant: str) -> ExactSequence:
    variant = variant.replace("-", "_")
    if variant == "six_complex":
        if prov.field is not FieldTag.COMPLEX:
            raise ValueError("six_complex needs ComplexQi")
        _prefetch(prov, [0, 1], [lambda: restrict_map(prov, 0), lambda: wrap_restrict_map(prov)])
        nodes, arrows = [], []
        for n in (1, 0):
            ns, ars = _triple(prov, n)
            nodes += ns
            arrows += ars
            if n == 1:
                arrows.append(Arrow("i*^-1", restrict_map(prov, 0).matrix))
            else:
                arrows.append(Arrow("i*^0 (periodic)", wrap_restrict_map(prov).matrix))
        return ExactSequence("six_complex", nodes, arrows)
    if variant == "twentyfour":
        if prov.field is not FieldTag.REAL:
            raise ValueError("twentyfour needs RealQ")
        _prefetch(prov, range(8), [lambda: [restrict_map(prov, n) for n in range(7)],
                                   lambda: wrap_restrict_map(prov)])
        nodes, arrows = [], []
        for n in range(7, -1, -1):
            ns, ars = _triple(prov, n)
            nodes += ns
            arrows += ars
            if n > 0:
                arrows.append(Arrow(f"i*^-{n}", restrict_map(prov, n - 1).matrix))
            else:
                arrows.append(Arrow("i*^0 (periodic)", wrap_restrict_map(prov).matrix))
        return ExactSequence("twentyfour", nodes, arrows)
    raise ValueError(f"unknown variant {variant!r} (use six_real via build_six_real)")


def build_six_real(prov: RegistryProvider, n: int) -> ExactSequence:
    """R+^{-n} -> SR^{-n} -> R_Z2^{-n} -f-> R+^{-n-1} -> SR' -> R_Z2^{-n-1} -i*-> R+^{-n}.

    SR' = R_Z2^{-n-1} / f R_Z2^{-n} stands for SR^{n+1} of the barred algebra."""
    _prefetch(prov, [n, n + 1], [lambda: forget_shift_map(prov, n), lambda: restrict_map(prov, n)])
    nodes, arrows = _triple(prov, n)
    r1 = len(prov.graded(n + 1))
    fmat = forget_shift_map(prov, n).matrix
    cm = connecting_maps(prov, n)
    arrows.append(Arrow(f"f^-{n}", fmat))
    nodes.append(_node(f"R+^-{n + 1}", r1, r_plus(prov, n + 1), _zero_rel(r1)))
    arrows.append(Arrow(f"pi'^-{n + 1}", IntegerMatrix.identity(r1)))
    nodes.append(_node(f"SR'^-{n + 1}", r1, IntegerMatrix.identity(r1), fmat))
    arrows.append(Arrow(f"delta'^-{n + 1}", cm["delta_prime"]))
    nodes.append(_node(f"R_Z2^-{n + 1}", r1, IntegerMatrix.identity(r1), _zero_rel(r1)))
    arrows.append(Arrow(f"i*^-{n}", restrict_map(prov, n).matrix))
    return ExactSequence(f"six_real[{n}]", nodes, arrows)


def _span(*mats: IntegerMatrix) -> IntegerMatrix:
    out = mats[0]
    for m in mats[1:]:
        out = out.hstack(m)
    return out


def check_node(seq: ExactSequence, k: int) -> NodeVerdict:
    n = len(seq.nodes)
    here = seq.nodes[k].group
    prev = seq.nodes[(k - 1) % n].group
    nxt = seq.nodes[(k + 1) % n].group
    f = seq.arrows[(k - 1) % n].matrix
    g = seq.arrows[k].matrix
    image = _span(f @ prev.sub, here.relations)
    if not lattice_contains(here.sub, image):
        raise AssertionError(f"arrow into {seq.nodes[k].name} leaves the subgroup")
    if not lattice_contains(nxt.sub, g @ here.sub):
        raise AssertionError(f"arrow out of {seq.nodes[k].name} leaves the subgroup")
    # an arrow that does not respect the relations is reported at its source node
    well_defined = not here.relations.cols or all(nxt.contains_relation(c) for c in (g @ here.relations).columns())
    ga = g @ here.sub
    big = _span(ga, IntegerMatrix([[-x for x in r] for r in nxt.relations.data], nxt.ambient,
                                  nxt.relations.cols))
    ker = integer_kernel(big)
    y = IntegerMatrix([ker.data[i] for i in range(here.sub.cols)], here.sub.cols, ker.cols)
    kernel = _span(here.sub @ y, here.relations)
    composite = g @ f @ prev.sub
    zero = all(nxt.contains_relation(c) for c in composite.columns())
    rel = lattice_compare(image, kernel)
    exact = zero and well_defined and rel is LatticeRelation.EQUAL
    return NodeVerdict(seq.nodes[k].name, exact, zero, image, kernel, rel, well_defined)


def check_exactness(seq: ExactSequence) -> list[NodeVerdict]:
    return [check_node(seq, k) for k in range(len(seq.nodes))]


def corrupt_arrow(seq: ExactSequence, k: int, column: int = 0) -> ExactSequence:
    """Copy of seq with one column of arrow k zeroed (checker sanity tests)."""
    arrows = list(seq.arrows)
    m = arrows[k].matrix
    data = [list(r) for r in m.data]
    for r in data:
        r[column] = 0
    arrows[k] = Arrow(arrows[k].name + " (corrupted)", IntegerMatrix(data, m.rows, m.cols))
    return ExactSequence(seq.variant, list(seq.nodes), arrows)


# --- tables ------------------------------------------------------------------------


def point_provider(field: FieldTag) -> RegistryProvider:
    from .algebra import trivial_algebra
    return RegistryProvider(trivial_algebra(field))


def abs_table(field: FieldTag, degrees) -> list[GroupPresentation]:
    """SR^{-n} of the trivial algebra (the K-theory of a point)."""
    prov = point_provider(field)
    return [sr_group(prov, n) for n in degrees]


def kgroups(prov: RegistryProvider, n: int) -> dict:
    r = len(prov.graded(n))
    return {
        "degree": n,
        "generators": prov.graded(n).names(),
        "R_Z2": quotient_group(f"R_Z2^-{n}", r, _zero_rel(r)),
        "R+": quotient_group(f"R+^-{n}", r, _zero_rel(r), r_plus(prov, n)),
        "R-": quotient_group(f"R-^-{n}", r, _zero_rel(r), r_minus(prov, n)),
        "SR": sr_group(prov, n),
    }


def restriction_cokernel(prov: RegistryProvider, n: int) -> GroupPresentation:
    """R_+^{-n} / i* R_Z2^{-n-1}."""
    m = restrict_map(prov, n).matrix
    return cokernel(f"coker i*^-{n}", m, r_plus(prov, n))


def q1_provider(samples=(4, -4), field: FieldTag = FieldTag.COMPLEX, seed: int = DEFAULT_SEED) -> RegistryProvider:
    """q(1) registries restricted to the sampled eigenvalues of H (plus H = 0)."""
    from .classify import q1_context, q1_graded, q1_ungraded
    from .exactnum import scalar_sqrt
    from .supermodule import trivial_module
    ctx = q1_context(field)
    graded = [trivial_module(ctx), trivial_module(ctx, odd=True)]
    ungraded = [q1_ungraded(0, field)]
    for lam in samples:
        lam = field.coerce(lam)
        graded.append(q1_graded(lam, field))
        r = scalar_sqrt(lam, field)
        if r is None:
            raise ValueError(f"sample {lam} has no square root in {field.value}")
        ungraded += [q1_ungraded(r, field), q1_ungraded(-r, field)]
    return RegistryProvider(ctx.algebra, CliffordSignature(), graded, ungraded, seed)
