"""Supermodules over a shifted context and the functors between their
categories: parity reversal, conjugation, diagonal lift and its inverse,
regrading, restriction, tensor products, hom-spaces and isomorphism tests."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .algebra import (CliffordSignature, LieSuperAlgebra, RelationError, ShiftedContext,
                      clifford_relation_check)
from .exactnum import (ExactMatrix, FieldMismatch, FieldTag, mat_kernel, mat_rref, scalar_sqrt, sparse_kernel)
from .superspace import EVEN, ODD, GradedMap, SuperSpace, block_parity, koszul_sign, tensor_index

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not"
UNDECIDED = "undecided"


class SuperModule:
    """Action matrices of g-generators and Clifford generators (e's then f's).

    Graded modules keep the even basis block first.  Ungraded modules store
    dim_odd = 0 and carry no block constraints."""

    __slots__ = ("context", "dim_even", "dim_odd", "graded", "g_action", "cliff_action", "name")

    def __init__(self, context: ShiftedContext, dim_even: int, dim_odd: int, g_action: Sequence[ExactMatrix],
                 cliff_action: Sequence[ExactMatrix] = (), graded: bool = True, name: str = ""):
        if not graded and dim_odd:
            raise ValueError("ungraded modules store dim_odd = 0")
        self.context = context
        self.dim_even, self.dim_odd, self.graded = dim_even, dim_odd, graded
        self.g_action = tuple(g_action)
        self.cliff_action = tuple(cliff_action)
        self.name = name
        n = dim_even + dim_odd
        if len(self.g_action) != context.algebra.dim:
            raise ValueError(f"expected {context.algebra.dim} g-matrices, got {len(self.g_action)}")
        if len(self.cliff_action) != context.signature.n:
            raise ValueError(f"expected {context.signature.n} Clifford matrices, got {len(self.cliff_action)}")
        for m in self.g_action + self.cliff_action:
            if m.shape != (n, n):
                raise ValueError(f"action matrix of shape {m.shape} on a {n}-dimensional module")
            if m.field is not context.field:
                raise FieldMismatch("action matrix field differs from the algebra field")

    @property
    def field(self) -> FieldTag:
        return self.context.field

    @property
    def algebra(self) -> LieSuperAlgebra:
        return self.context.algebra

    @property
    def signature(self) -> CliffordSignature:
        return self.context.signature

    @property
    def dim(self) -> int:
        return self.dim_even + self.dim_odd

    @property
    def space(self) -> SuperSpace:
        return SuperSpace(self.dim_even, self.dim_odd, self.field)

    def grading(self) -> ExactMatrix:
        if not self.graded:
            raise ValueError("ungraded module has no grading operator")
        return self.space.grading_operator()

    def operators(self) -> list[tuple[ExactMatrix, int]]:
        """Every acting matrix with its parity: g-generators then Clifford generators."""
        ops = [(m, p) for m, p in zip(self.g_action, self.algebra.parities)]
        return ops + [(m, ODD) for m in self.cliff_action]

    def g_map(self, k: int) -> GradedMap:
        return GradedMap(self.space, self.space, self.g_action[k], self.algebra.parities[k])

    def replace(self, **kw) -> "SuperModule":
        args = dict(context=self.context, dim_even=self.dim_even, dim_odd=self.dim_odd, g_action=self.g_action,
                    cliff_action=self.cliff_action, graded=self.graded, name=self.name)
        args.update(kw)
        return SuperModule(**args)

    def key(self):
        return (self.context, self.dim_even, self.dim_odd, self.graded, self.g_action, self.cliff_action)

    def __eq__(self, other):
        return isinstance(other, SuperModule) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        kind = f"({self.dim_even}|{self.dim_odd})" if self.graded else f"ungraded dim {self.dim}"
        label = f" {self.name}" if self.name else ""
        return f"<SuperModule{label} {kind} over {self.context}>"


def zero_module(context: ShiftedContext, graded: bool = True) -> SuperModule:
    f = context.field
    z = ExactMatrix.zeros(0, 0, f)
    return SuperModule(context, 0, 0, [z] * context.algebra.dim, [z] * context.signature.n, graded)


def trivial_module(context: ShiftedContext, odd: bool = False) -> SuperModule:
    if context.signature.n:
        raise ValueError("the trivial module needs a context without Clifford generators")
    z = ExactMatrix.zeros(1, 1, context.field)
    return SuperModule(context, 0 if odd else 1, 1 if odd else 0, [z] * context.algebra.dim, (), True,
                       "Pi" if odd else "I")


# --- validation ------------------------------------------------------------


def validate_module(m: SuperModule) -> None:
    """Raise RelationError describing the first failing relation."""
    g = m.algebra
    f = m.field
    names = list(g.names) + m.signature.names()
    if m.graded:
        space = m.space
        for (mat, par), nm in zip(m.operators(), names):
            found = block_parity(mat, space, space)
            if found is None or (found != par and not mat.is_zero()):
                raise RelationError(f"{nm} acts with the wrong parity block pattern")
    for i in range(g.dim):
        for j in range(i, g.dim):
            a, b = m.g_action[i], m.g_action[j]
            s = koszul_sign(g.parities[i], g.parities[j])
            lhs = ExactMatrix.zeros(m.dim, m.dim, f)
            for k, c in g.bracket(i, j).items():
                lhs = lhs + m.g_action[k].scale(c)
            rhs = a @ b - (b @ a).scale(s)
            if lhs != rhs:
                raise RelationError(f"bracket [{g.names[i]},{g.names[j]}] not respected: residual "
                                    f"{(lhs - rhs).to_text()}")
    clifford_relation_check(m.signature, m.cliff_action)
    cnames = m.signature.names()
    for c, cn in zip(m.cliff_action, cnames):
        for k, a in enumerate(m.g_action):
            s = koszul_sign(ODD, g.parities[k])
            resid = c @ a - (a @ c).scale(s)
            if not resid.is_zero():
                rel = "anticommute" if s < 0 else "commute"
                raise RelationError(f"{cn} must {rel} with {g.names[k]}: residual {resid.to_text()}")


def is_valid(m: SuperModule) -> bool:
    try:
        validate_module(m)
    except RelationError:
        return False
    return True


# --- basis changes and elementary constructions ------------------------------


def from_unsorted(context: ShiftedContext, parities: Sequence[int], g_action, cliff_action, name="") -> SuperModule:
    """Build a graded module whose basis vectors have the given parities, sorting even first."""
    perm = [k for k, p in enumerate(parities) if p == EVEN] + [k for k, p in enumerate(parities) if p == ODD]
    d0 = sum(1 for p in parities if p == EVEN)
    return SuperModule(context, d0, len(parities) - d0, [m.permuted(perm) for m in g_action],
                       [m.permuted(perm) for m in cliff_action], True, name)


def change_basis(m: SuperModule, columns: Sequence[Sequence], dim_even: int | None = None,
                 graded: bool | None = None, context: ShiftedContext | None = None, drop_cliff: int | None = None,
                 name: str = "") -> SuperModule:
    """Express m in the basis given by `columns` (first dim_even of them even)."""
    f = m.field
    p = ExactMatrix.from_columns(list(columns), f)
    pinv = p.inverse()
    graded = m.graded if graded is None else graded
    d0 = (len(columns) if not graded else m.dim_even) if dim_even is None else dim_even
    cl = [pinv @ c @ p for k, c in enumerate(m.cliff_action) if k != drop_cliff]
    return SuperModule(context or m.context, d0 if graded else len(columns), len(columns) - d0 if graded else 0,
                       [pinv @ a @ p for a in m.g_action], cl, graded, name or m.name)


def parity_reverse(m: SuperModule) -> SuperModule:
    """Right parity reversal: the same operators on the same vectors, grading swapped."""
    if not m.graded:
        raise ValueError("parity reversal needs a graded module")
    perm = list(range(m.dim_even, m.dim)) + list(range(m.dim_even))
    nm = m.name[:-3] if m.name.endswith("^Pi") else (m.name + "^Pi" if m.name else "")
    if m.name == "I":
        nm = "Pi"
    elif m.name == "Pi":
        nm = "I"
    return SuperModule(m.context, m.dim_odd, m.dim_even, [a.permuted(perm) for a in m.g_action],
                       [c.permuted(perm) for c in m.cliff_action], True, nm)


def conjugate(m: SuperModule) -> SuperModule:
    """Negate every odd operator (odd g-generators and Clifford generators)."""
    g = [(-a if p == ODD else a) for a, p in zip(m.g_action, m.algebra.parities)]
    return m.replace(g_action=g, cliff_action=[-c for c in m.cliff_action],
                     name=(m.name + "^dag") if m.name else "")


def direct_sum(*mods: SuperModule) -> SuperModule:
    if not mods:
        raise ValueError("empty direct sum")
    first = mods[0]
    if any(x.context != first.context or x.graded != first.graded for x in mods):
        raise ValueError("direct sum of modules over different contexts")
    f = first.field
    if not first.graded:
        return SuperModule(first.context, sum(x.dim for x in mods), 0,
                           [ExactMatrix.block_diag([x.g_action[k] for x in mods], f) for k in range(first.algebra.dim)],
                           [ExactMatrix.block_diag([x.cliff_action[k] for x in mods], f)
                            for k in range(first.signature.n)], False)
    parities = [p for x in mods for p in x.space.parities()]
    g = [ExactMatrix.block_diag([x.g_action[k] for x in mods], f) for k in range(first.algebra.dim)]
    c = [ExactMatrix.block_diag([x.cliff_action[k] for x in mods], f) for k in range(first.signature.n)]
    return from_unsorted(first.context, parities, g, c, "+".join(x.name for x in mods if x.name))


def forget_grading(m: SuperModule) -> SuperModule:
    if not m.graded:
        return m
    return SuperModule(m.context, m.dim, 0, m.g_action, m.cliff_action, False, m.name)


def restrict_generator(m: SuperModule) -> SuperModule:
    """Drop the last e-generator."""
    sig = m.signature
    if sig.p == 0:
        raise ValueError("no e-generator to forget")
    keep = [c for k, c in enumerate(m.cliff_action) if k != sig.p - 1]
    return SuperModule(m.context.with_signature(CliffordSignature(sig.p - 1, sig.q)), m.dim_even, m.dim_odd,
                       m.g_action, keep, m.graded, m.name)


def diag_lift(u: SuperModule) -> SuperModule:
    """Ungraded U over (p,q) to the graded U+U over (p+1,q); new last e = [[0,-1],[1,0]] blockwise."""
    if u.graded:
        raise ValueError("diag_lift needs an ungraded module")
    f = u.field
    n = u.dim
    z = ExactMatrix.zeros(n, n, f)
    one = ExactMatrix.identity(n, f)

    def lift(a, parity):
        return ExactMatrix.block([[a, z], [z, a]] if parity == EVEN else [[z, a], [a, z]], f)

    g = [lift(a, p) for a, p in zip(u.g_action, u.algebra.parities)]
    sig = u.signature
    cl = [lift(c, ODD) for c in u.cliff_action]
    cl.insert(sig.p, ExactMatrix.block([[z, -one], [one, z]], f))
    ctx = u.context.with_signature(CliffordSignature(sig.p + 1, sig.q))
    return SuperModule(ctx, n, n, g, cl, True, f"lift({u.name})" if u.name else "")


def delta(u: SuperModule) -> SuperModule:
    return restrict_generator(diag_lift(u))


def project_even(m: SuperModule) -> SuperModule:
    """Graded over (p+1,q) to ungraded over (p,q): even operators restricted to V0,
    odd operators X replaced by (alpha X) on V0 with alpha = e_last (-1)^F."""
    if not m.graded:
        raise ValueError("project_even needs a graded module")
    sig = m.signature
    if sig.p == 0:
        raise ValueError("project_even needs an e-generator")
    alpha = m.cliff_action[sig.p - 1] @ m.grading()
    v0 = list(range(m.dim_even))
    g = [(a if p == EVEN else alpha @ a).submatrix(v0, v0) for a, p in zip(m.g_action, m.algebra.parities)]
    cl = [(alpha @ c).submatrix(v0, v0) for k, c in enumerate(m.cliff_action) if k != sig.p - 1]
    ctx = m.context.with_signature(CliffordSignature(sig.p - 1, sig.q))
    return SuperModule(ctx, m.dim_even, 0, g, cl, False, m.name)


def _eigen_split(m: SuperModule, op: ExactMatrix, drop: int, context: ShiftedContext, name: str) -> SuperModule:
    f = m.field
    one = ExactMatrix.identity(m.dim, f)
    plus = mat_kernel(op - one)
    minus = mat_kernel(op + one)
    if len(plus) + len(minus) != m.dim:
        raise RelationError("grading candidate is not an involution")
    return change_basis(m, plus + minus, dim_even=len(plus), graded=True, context=context, drop_cliff=drop,
                        name=name)


def degrade(m: SuperModule) -> SuperModule:
    """Graded over (p,q) to ungraded with the grading as one more Clifford generator:
    real: new last f = (-1)^F; complex: new last e = -i (-1)^F."""
    if not m.graded:
        raise ValueError("degrade needs a graded module")
    sig = m.signature
    cl = list(m.cliff_action)
    if m.field is FieldTag.REAL:
        cl.append(m.grading())
        new = CliffordSignature(sig.p, sig.q + 1)
    else:
        cl.insert(sig.p, m.grading().scale(-m.field.i))
        new = CliffordSignature(sig.p + 1, sig.q)
    return SuperModule(m.context.with_signature(new), m.dim, 0, m.g_action, cl, False, m.name)


def regrade(m: SuperModule) -> SuperModule:
    """Inverse of degrade: the last f (real) or i * last e (complex) becomes the grading."""
    if m.graded:
        raise ValueError("regrade needs an ungraded module")
    sig = m.signature
    if m.field is FieldTag.REAL:
        if sig.q == 0:
            raise ValueError("regrade over RealQ needs an f-generator")
        k = sig.n - 1
        op = m.cliff_action[k]
        new = CliffordSignature(sig.p, sig.q - 1)
    else:
        if sig.p == 0:
            raise ValueError("regrade over ComplexQi needs an e-generator")
        k = sig.p - 1
        op = m.cliff_action[k].scale(m.field.i)
        new = CliffordSignature(sig.p - 1, sig.q)
    return _eigen_split(m, op, k, m.context.with_signature(new), m.name)


def _check_same_algebra(a: SuperModule, b: SuperModule):
    if a.algebra != b.algebra:
        raise ValueError("modules over different algebras")
    if a.field is not b.field:
        raise FieldMismatch("modules over different fields")


def _merge_cliff(a_cl, a_sig, b_cl, b_sig):
    return (list(a_cl[:a_sig.p]) + list(b_cl[:b_sig.p]) + list(a_cl[a_sig.p:]) + list(b_cl[b_sig.p:]))


def tensor_modules(v: SuperModule, w: SuperModule) -> SuperModule:
    """Graded tensor product over the coproduct: X0 -> X0(x)1 + 1(x)X0,
    X1 -> X1(x)1 + (-1)^F(x)X1, first-slot Clifford c(x)1, second-slot (-1)^F(x)c."""
    if not (v.graded and w.graded):
        raise ValueError("tensor_modules needs graded inputs")
    _check_same_algebra(v, w)
    f = v.field
    table = tensor_index(v.space, w.space)
    nv, nw = v.dim, w.dim
    iv, iw, fv = ExactMatrix.identity(nv, f), ExactMatrix.identity(nw, f), v.grading()

    def k(a, b):
        full = a.kron(b)
        idx = [i * nw + j for i, j in table]
        return full.submatrix(idx, idx)

    g = []
    for a, b, p in zip(v.g_action, w.g_action, v.algebra.parities):
        g.append(k(a, iw) + k(iv if p == EVEN else fv, b))
    cl = _merge_cliff([k(c, iw) for c in v.cliff_action], v.signature,
                      [k(fv, c) for c in w.cliff_action], w.signature)
    space_even = v.dim_even * w.dim_even + v.dim_odd * w.dim_odd
    ctx = v.context.with_signature(v.signature + w.signature)
    name = f"{v.name}(x){w.name}" if v.name and w.name else ""
    return SuperModule(ctx, space_even, nv * nw - space_even, g, cl, True, name)


def tensor_mixed(v: SuperModule, u: SuperModule) -> SuperModule:
    """Graded V times ungraded U, an ungraded module (same action rules as tensor_modules)."""
    if not v.graded or u.graded:
        raise ValueError("tensor_mixed needs graded V and ungraded U")
    _check_same_algebra(v, u)
    f = v.field
    iv, iu, fv = ExactMatrix.identity(v.dim, f), ExactMatrix.identity(u.dim, f), v.grading()
    g = [a.kron(iu) + (iv if p == EVEN else fv).kron(b)
         for a, b, p in zip(v.g_action, u.g_action, v.algebra.parities)]
    cl = _merge_cliff([c.kron(iu) for c in v.cliff_action], v.signature,
                      [fv.kron(c) for c in u.cliff_action], u.signature)
    ctx = v.context.with_signature(v.signature + u.signature)
    return SuperModule(ctx, v.dim * u.dim, 0, g, cl, False)


def boxtimes(u: SuperModule, w: SuperModule) -> SuperModule:
    """(Delta U) (x) W = (U(x)W) + (U(x)W) graded by [[0, i], [-i, 0]]."""
    if u.graded or w.graded:
        raise ValueError("boxtimes needs ungraded inputs")
    _check_same_algebra(u, w)
    f = u.field
    if f is not FieldTag.COMPLEX:
        raise FieldMismatch("boxtimes needs ComplexQi: its grading operator uses i")
    iu, iw = ExactMatrix.identity(u.dim, f), ExactMatrix.identity(w.dim, f)
    n = u.dim * w.dim
    z = ExactMatrix.zeros(n, n, f)
    g = []
    for a, b, p in zip(u.g_action, w.g_action, u.algebra.parities):
        if p == EVEN:
            s = a.kron(iw) + iu.kron(b)
            g.append(ExactMatrix.block([[s, z], [z, s]], f))
        else:
            g.append(ExactMatrix.block([[iu.kron(b), a.kron(iw)], [a.kron(iw), -iu.kron(b)]], f))
    cl_u = [ExactMatrix.block([[z, c.kron(iw)], [c.kron(iw), z]], f) for c in u.cliff_action]
    cl_w = [ExactMatrix.block([[iu.kron(c), z], [z, -iu.kron(c)]], f) for c in w.cliff_action]
    cl = _merge_cliff(cl_u, u.signature, cl_w, w.signature)
    one = ExactMatrix.identity(n, f).scale(f.i)
    grading = ExactMatrix.block([[z, one], [-one, z]], f)
    raw = SuperModule(u.context.with_signature(u.signature + w.signature), 2 * n, 0, g, cl, False)
    ident = ExactMatrix.identity(2 * n, f)
    plus, minus = mat_kernel(grading - ident), mat_kernel(grading + ident)
    return change_basis(raw, plus + minus, dim_even=len(plus), graded=True)


def twist_odd(m: SuperModule, scalar, algebra: LieSuperAlgebra | None = None) -> SuperModule:
    """Multiply odd g-actions by a scalar (with i this turns g-modules into bar(g)-modules)."""
    c = m.field.coerce(scalar)
    g = [(a.scale(c) if p == ODD else a) for a, p in zip(m.g_action, m.algebra.parities)]
    ctx = ShiftedContext(algebra or m.algebra, m.signature)
    return m.replace(g_action=g, context=ctx)


def bar_module(m: SuperModule, algebra: LieSuperAlgebra) -> SuperModule:
    """A graded g-module read as a bar(g)-module: odd g-actions multiplied by (-1)^F."""
    if not m.graded:
        raise ValueError("bar_module needs a graded module")
    fop = m.grading()
    g = [(fop @ a if p == ODD else a) for a, p in zip(m.g_action, m.algebra.parities)]
    return m.replace(g_action=g, context=ShiftedContext(algebra, m.signature))


# --- hom-spaces and isomorphism ----------------------------------------------


@dataclass(frozen=True)
class HomSpace:
    source: SuperModule
    target: SuperModule
    parity: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)


def _positions(v: SuperModule, w: SuperModule, parity: int):
    if not (v.graded and w.graded):
        return [(i, j) for i in range(w.dim) for j in range(v.dim)]
    pv, pw = v.space.parities(), w.space.parities()
    return [(i, j) for i in range(w.dim) for j in range(v.dim) if (pv[j] + pw[i]) % 2 == parity]


def hom_space(v: SuperModule, w: SuperModule, parity: int = EVEN) -> HomSpace:
    """Maps T: V -> W in the given parity block pattern with T a_V = a_W T for every operator."""
    if v.context != w.context or v.graded != w.graded:
        raise ValueError("hom_space needs modules over the same context")
    f = v.field
    pos = _positions(v, w, parity)
    var = {p: k for k, p in enumerate(pos)}
    graded = v.graded
    pv = v.space.parities() if graded else None
    pw = w.space.parities() if graded else None
    equations = []
    for (av, par), (aw, _) in zip(v.operators(), w.operators()):
        cols_v = av.columns_nonzero()
        rows_w = aw.rows_nonzero()
        for i in range(w.dim):
            for j in range(v.dim):
                if graded and (pw[i] + pv[j]) % 2 != (parity + par) % 2:
                    continue
                eq = {}
                for kk, a in cols_v[j]:
                    x = var.get((i, kk))
                    if x is not None:
                        eq[x] = eq.get(x, 0) + a
                for kk, a in rows_w[i]:
                    x = var.get((kk, j))
                    if x is not None:
                        eq[x] = eq.get(x, 0) - a
                if eq:
                    equations.append(eq)
    basis = []
    for vec in sparse_kernel(equations, len(pos), f):
        rows = [[f.zero] * v.dim for _ in range(w.dim)]
        for (i, j), x in zip(pos, vec):
            rows[i][j] = x
        basis.append(ExactMatrix(rows, f))
    return HomSpace(v, w, parity, tuple(basis))


@dataclass(frozen=True)
class IsoResult:
    verdict: str
    witness: ExactMatrix | None = None

    def __bool__(self):
        return self.verdict == ISOMORPHIC


def _combine(basis, coeffs, f):
    out = None
    for c, b in zip(coeffs, basis):
        if c:
            t = b.scale(c)
            out = t if out is None else out + t
    return out


def iso_test(v: SuperModule, w: SuperModule, seed: int = 0, hom: HomSpace | None = None) -> IsoResult:
    """Search the even hom-space for an invertible map.

    Order: basis elements, two seeded random combinations, then pairs with
    unit coefficients.  When the
    hom-space is small an exhaustive grid on the determinant polynomial decides
    exactly; otherwise a few seeded random combinations are tried and the
    verdict is undecided if none is invertible."""
    if v.context != w.context or v.graded != w.graded:
        return IsoResult(NOT_ISOMORPHIC)
    if (v.dim_even, v.dim_odd) != (w.dim_even, w.dim_odd):
        return IsoResult(NOT_ISOMORPHIC)
    f = v.field
    if v.dim == 0:
        return IsoResult(ISOMORPHIC, ExactMatrix.zeros(0, 0, f))
    basis = list((hom or hom_space(v, w, EVEN)).basis)
    if not basis:
        return IsoResult(NOT_ISOMORPHIC)
    for b in basis:
        if b.is_invertible():
            return IsoResult(ISOMORPHIC, b)
    # a generic combination is invertible whenever any element is; cheap to try first
    rng = random.Random(seed)
    for _ in range(2):
        t = _combine(basis, [rng.randint(-40, 40) for _ in basis], f)
        if t is not None and t.is_invertible():
            return IsoResult(ISOMORPHIC, t)
    units = f.units()
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            for u in units:
                t = basis[a] + basis[b].scale(u)
                if t.is_invertible():
                    return IsoResult(ISOMORPHIC, t)
    k, d = len(basis), v.dim
    if k == 1:
        return IsoResult(NOT_ISOMORPHIC)
    if (d + 1) ** k <= 400:
        for coeffs in product(range(d + 1), repeat=k):
            t = _combine(basis, coeffs, f)
            if t is not None and t.is_invertible():
                return IsoResult(ISOMORPHIC, t)
        return IsoResult(NOT_ISOMORPHIC)
    for _ in range(8):
        t = _combine(basis, [rng.randint(-40, 40) for _ in basis], f)
        if t is not None and t.is_invertible():
            return IsoResult(ISOMORPHIC, t)
    return IsoResult(UNDECIDED)


def isomorphic(v: SuperModule, w: SuperModule, seed: int = 0) -> bool:
    r = iso_test(v, w, seed)
    if r.verdict == UNDECIDED:
        raise RuntimeError(f"isomorphism undecided between {v!r} and {w!r}")
    return r.verdict == ISOMORPHIC


@dataclass(frozen=True)
class InvolutionResult:
    verdict: str  # "yes" | "no" | "undecided"
    witness: ExactMatrix | None = None
    square: object = None


def _scalar_square(t: ExactMatrix):
    sq = t @ t
    return sq.data[0][0] if sq.is_scalar() else None


def involution_exists(v: SuperModule) -> InvolutionResult:
    """Is there an odd equivariant A with A^2 = 1 over the modelled field (R or C)?"""
    if not v.graded:
        raise ValueError("involution_exists needs a graded module")
    f = v.field
    basis = list(hom_space(v, v, ODD).basis)
    if not basis:
        return InvolutionResult("no")

    def accept(c):
        return c != 0 if f is FieldTag.COMPLEX else c > 0

    cands = list(basis)
    units = f.units()
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            cands.extend(basis[a] + basis[b].scale(u) for u in units)
    for t in cands:
        c = _scalar_square(t)
        if c is not None and accept(c):
            r = scalar_sqrt(c, f)
            return InvolutionResult("yes", t.scale(f.one / r) if r is not None else None, c)
    if len(basis) > 2:
        return InvolutionResult("undecided")
    squares = [_scalar_square(b) for b in basis]
    if any(s is None for s in squares):
        return InvolutionResult("undecided")
    if len(basis) == 1:
        return InvolutionResult("no", square=squares[0])
    cross = basis[0] @ basis[1] + basis[1] @ basis[0]
    if not cross.is_scalar():
        return InvolutionResult("undecided")
    a, b, s = squares[0], squares[1], cross.data[0][0]
    if f is FieldTag.COMPLEX:
        return InvolutionResult("yes" if (a or b or s) else "no")
    return InvolutionResult("yes" if (a > 0 or b > 0 or s * s - 4 * a * b > 0) else "no")


# --- Morita reduction --------------------------------------------------------


def morita_reduce(m: SuperModule) -> SuperModule:
    """Cut a module over (p,q) down to (p-2,q) [complex] or (p-1,q-1) [real].

    The two leading generators span a 2x2 matrix algebra after every other odd
    operator (and the grading) is twisted by omega = i e1 e2 resp. e1 f1;
    the result is the image of a rank-one idempotent of that algebra."""
    f = m.field
    sig = m.signature
    cl = list(m.cliff_action)
    if f is FieldTag.COMPLEX:
        if sig.p < 2:
            raise ValueError("complex Morita reduction needs p >= 2")
        a, b = 0, 1
        omega = (cl[a] @ cl[b]).scale(f.i)
        idem_gen = cl[a].scale(f.i)
        new_sig = CliffordSignature(sig.p - 2, sig.q)
    else:
        if sig.p < 1 or sig.q < 1:
            raise ValueError("real Morita reduction needs p >= 1 and q >= 1")
        a, b = 0, sig.p
        omega = cl[a] @ cl[b]
        idem_gen = cl[b]
        new_sig = CliffordSignature(sig.p - 1, sig.q - 1)
    one = ExactMatrix.identity(m.dim, f)
    image = mat_kernel(idem_gen - one)
    rest = [c @ omega for k, c in enumerate(cl) if k not in (a, b)]
    g = [(x @ omega if p == ODD else x) for x, p in zip(m.g_action, m.algebra.parities)]
    ops = g + rest
    cut = _restrict_to_invariant(ops, image, f)
    ctx = m.context.with_signature(new_sig)
    nal = m.algebra.dim
    flat = SuperModule(ctx, len(image), 0, cut[:nal], cut[nal:], False, m.name)
    if not m.graded:
        return flat
    grading = _restrict_to_invariant([m.grading() @ omega], image, f)[0]
    ident = ExactMatrix.identity(len(image), f)
    plus, minus = mat_kernel(grading - ident), mat_kernel(grading + ident)
    return change_basis(flat, plus + minus, dim_even=len(plus), graded=True)


def _restrict_to_invariant(ops, basis_vectors, f):
    """Matrices of operators restricted to an invariant subspace given by a basis."""
    b = ExactMatrix.from_columns(basis_vectors, f)
    k = b.cols
    _, rows_sel, _ = mat_rref(b.transpose())
    cols = list(range(k))
    sub_inv = b.submatrix(rows_sel, cols).inverse()
    return [sub_inv @ (op @ b).submatrix(rows_sel, cols) for op in ops]


def morita_embed(m: SuperModule) -> SuperModule:
    """Inverse of morita_reduce: tensor with the 2-dimensional model of the leading generators."""
    f = m.field
    sig = m.signature
    n = m.dim
    base = forget_grading(m) if m.graded else m
    if f is FieldTag.COMPLEX:
        i = f.i
        e1 = ExactMatrix.diagonal([-i, i], f)
        e2 = ExactMatrix([[0, -1], [1, 0]], f)
        omega = (e1 @ e2).scale(i)
        new_sig = CliffordSignature(sig.p + 2, sig.q)
        lead = [e1, e2]
    else:
        f1 = ExactMatrix([[1, 0], [0, -1]], f)
        e1 = ExactMatrix([[0, -1], [1, 0]], f)
        omega = e1 @ f1
        new_sig = CliffordSignature(sig.p + 1, sig.q + 1)
        lead = [e1, f1]
    i2 = ExactMatrix.identity(2, f)
    ident = ExactMatrix.identity(n, f)
    g = [(x.kron(omega) if p == ODD else x.kron(i2)) for x, p in zip(base.g_action, m.algebra.parities)]
    rest = [c.kron(omega) for c in base.cliff_action]
    lead_big = [ident.kron(x) for x in lead]
    if f is FieldTag.COMPLEX:
        cl = lead_big + rest
    else:
        cl = [lead_big[0]] + rest[:sig.p] + [lead_big[1]] + rest[sig.p:]
    ctx = m.context.with_signature(new_sig)
    flat = SuperModule(ctx, 2 * n, 0, g, cl, False, m.name)
    if not m.graded:
        return flat
    grading = m.grading().kron(omega)
    big = ExactMatrix.identity(2 * n, f)
    plus, minus = mat_kernel(grading - big), mat_kernel(grading + big)
    return change_basis(flat, plus + minus, dim_even=len(plus), graded=True)


def random_graded_basis_change(m: SuperModule, rng: random.Random, spread: int = 2) -> SuperModule:
    """Conjugate by a random invertible integer matrix that respects the grading."""
    f = m.field

    def block(n):
        while True:
            mat = ExactMatrix([[rng.randint(-spread, spread) for _ in range(n)] for _ in range(n)], f)
            if mat.is_invertible():
                return mat

    if m.graded:
        p = ExactMatrix.block_diag([block(m.dim_even), block(m.dim_odd)], f)
    else:
        p = block(m.dim)
    cols = [p.column(j) for j in range(p.cols)]
    return change_basis(m, cols, dim_even=m.dim_even if m.graded else None)
