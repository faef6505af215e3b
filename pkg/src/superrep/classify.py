"""Composition factors, type M/Q tags, and explicit irreducible Clifford modules."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations
from math import comb

from .algebra import CliffordSignature, RelationError, ShiftedContext, trivial_algebra
from .exactnum import ExactMatrix, FieldTag, GaussianRational, mat_kernel, row_space_basis, scalar_sqrt
from .superspace import EVEN, ODD
from .supermodule import (SuperModule, change_basis, conjugate, direct_sum, hom_space, involution_exists,
                          iso_test, parity_reverse, regrade, validate_module)

DEFAULT_SEED = 20240601


class NotRealIrreducible(ValueError):
    """The commutant is a split real quadratic algebra."""


# --- cyclic closure search ---------------------------------------------------


def _reduce(vec, basis, f):
    """Reduce vec against an echelon basis {pivot: row}; return the residual."""
    v = list(vec)
    for p, row in basis.items():
        c = v[p]
        if c:
            v = [x - c * y if y else x for x, y in zip(v, row)]
    return v


def _insert(vec, basis, f):
    p = next((k for k, x in enumerate(vec) if x), None)
    if p is None:
        return False
    inv = f.one / vec[p]
    row = [x * inv for x in vec]
    for q in list(basis):
        c = basis[q][p]
        if c:
            basis[q] = [x - c * y for x, y in zip(basis[q], row)]
    basis[p] = row
    return True


def cyclic_span(m: SuperModule, seed) -> list[list]:
    """Basis of the smallest invariant subspace containing the seed vector."""
    f = m.field
    ops = [op.rows_nonzero() for op, _ in m.operators()]
    basis: dict[int, list] = {}
    queue = []
    v = _reduce(seed, basis, f)
    if _insert(v, basis, f):
        queue.append(list(seed))
    while queue and len(basis) < m.dim:
        w = queue.pop()
        for rows in ops:
            img = [sum((x * w[j] for j, x in r), f.zero) for r in rows]
            res = _reduce(img, basis, f)
            if any(res):
                _insert(res, basis, f)
                queue.append(img)
                if len(basis) == m.dim:
                    break
    return [basis[p] for p in sorted(basis)]


def _groups(m: SuperModule):
    n = m.dim
    return [list(range(m.dim_even)), list(range(m.dim_even, n))] if m.graded else [list(range(n))]


def _choose(n, k):
    return comb(n, k)


def _seeds(m: SuperModule, rng: random.Random, random_tries: int):
    f = m.field
    n = m.dim
    groups = _groups(m)

    def vec(coeffs):
        v = [f.zero] * n
        for k, c in coeffs:
            v[k] = f.coerce(c)
        return v

    for grp in groups:
        for k in grp:
            yield vec([(k, 1)])
    for size in (2, 3):
        for grp in groups:
            for idx in combinations(grp, size):
                for signs in _sign_patterns(size):
                    yield vec(zip(idx, signs))
    for _ in range(random_tries):
        for grp in groups:
            if grp:
                yield vec([(k, rng.randint(-5, 5)) for k in grp])


def _sign_patterns(size):
    # first coefficient fixed to +1: the span is unchanged by an overall sign
    if size == 2:
        return [(1, 1), (1, -1)]
    return [(1, a, b) for a in (1, -1) for b in (1, -1)]


def operator_algebra(m: SuperModule) -> list[ExactMatrix]:
    """Basis of the associative algebra generated by the action (and the grading, if any)."""
    f = m.field
    n = m.dim
    gens = [op for op, _ in m.operators()]
    if m.graded:
        gens.append(m.grading())
    echelon: dict[int, list] = {}
    elems: list[ExactMatrix] = []

    def add(x):
        flat = [v for row in x.data for v in row]
        if _insert(_reduce(flat, echelon, f), echelon, f):
            elems.append(x)

    add(ExactMatrix.identity(n, f))
    k = 0
    while k < len(elems) and len(elems) < n * n:
        x = elems[k]
        k += 1
        for g in gens:
            add(g @ x)
    return elems


def _homogeneous_span(m: SuperModule, vectors) -> list[list]:
    if not m.graded:
        return row_space_basis(vectors, m.field)
    z = m.field.zero
    d = m.dim_even
    parts = []
    for v in vectors:
        parts.append(list(v[:d]) + [z] * (m.dim - d))
        parts.append([z] * d + list(v[d:]))
    return row_space_basis([p for p in parts if any(p)], m.field)


def radical_submodule(m: SuperModule, alg: list[ExactMatrix] | None = None):
    """J V for J the radical of the operator algebra (kernel of the trace form
    tr(xy), exact in characteristic zero).  Proper and nonzero iff J != 0."""
    alg = alg if alg is not None else operator_algebra(m)
    f = m.field
    n = m.dim
    flat = [[x for row in a.data for x in row] for a in alg]
    flat_t = [[a.data[j][i] for i in range(n) for j in range(n)] for a in alg]
    gram = ExactMatrix([[sum((x * y for x, y in zip(fa, tb) if x and y), f.zero) for tb in flat_t] for fa in flat],
                       f)
    cols = []
    for coeffs in mat_kernel(gram):
        j = None
        for c, a in zip(coeffs, alg):
            if c:
                j = a.scale(c) if j is None else j + a.scale(c)
        if j is not None:
            cols.extend(j.column(k) for k in range(n))
    span = _homogeneous_span(m, [c for c in cols if any(c)])
    return span if 0 < len(span) < n else None


def commutant_kernel(m: SuperModule):
    """Kernel of a singular nonzero even endomorphism, when the basis of the commutant offers one."""
    basis = list(hom_space(m, m, EVEN).basis)
    units = m.field.units()
    cands = basis + [a + b.scale(u) for a, b in combinations(basis, 2) for u in units]
    for c in cands:
        if c.is_zero():
            continue
        ker = mat_kernel(c)
        if ker:
            span = _homogeneous_span(m, ker)
            if 0 < len(span) < m.dim:
                return span
    return None


def find_submodule(m: SuperModule, seed: int = DEFAULT_SEED, random_tries: int = 24):
    """A proper nonzero invariant subspace (homogeneous basis), or None.

    Cyclic spans of simple seed vectors first, then kernels of endomorphisms,
    then the radical of the operator algebra, then seeded random vectors."""
    if m.dim <= 1:
        return None
    rng = random.Random(seed)
    seeds = _seeds(m, rng, random_tries)
    n_cheap = m.dim + sum(len(_sign_patterns(k)) * _choose(len(g), k)
                          for k in (2, 3) for g in _groups(m))
    for k, s in enumerate(seeds):
        if k == n_cheap:
            for span in (commutant_kernel(m), radical_submodule(m)):
                if span is not None:
                    return span
        span = cyclic_span(m, s)
        if 0 < len(span) < m.dim:
            return span
    return None


def split_module(m: SuperModule, span):
    """Submodule spanned by `span` and the corresponding quotient."""
    f = m.field
    n = m.dim
    if m.graded:
        even = [v for v in span if not any(v[m.dim_even:])]
        odd = [v for v in span if not any(v[:m.dim_even])]
        if len(even) + len(odd) != len(span):
            raise ValueError("submodule basis is not homogeneous")
    else:
        even, odd = list(span), []
    cols = []
    sub_idx, quo_idx = [], []
    blocks = [(even, range(m.dim_even)), (odd, range(m.dim_even, n))] if m.graded else [(even, range(n))]
    for part, rng_ in blocks:
        chosen = list(part)
        sub_idx.extend(range(len(cols), len(cols) + len(chosen)))
        cols.extend(chosen)
        comp = []
        for k in rng_:
            e = [f.zero] * n
            e[k] = f.one
            trial = ExactMatrix.from_columns(chosen + comp + [e], f)
            if trial.rank() == len(chosen) + len(comp) + 1:
                comp.append(e)
        quo_idx.extend(range(len(cols), len(cols) + len(comp)))
        cols.extend(comp)
    full = change_basis(m, cols, dim_even=m.dim_even if m.graded else None)
    sub_even = len(even) if m.graded else len(span)
    quo_even = m.dim_even - len(even) if m.graded else n - len(span)

    def piece(idx, d0):
        g = [a.submatrix(idx, idx) for a in full.g_action]
        c = [a.submatrix(idx, idx) for a in full.cliff_action]
        if m.graded:
            return SuperModule(m.context, d0, len(idx) - d0, g, c, True)
        return SuperModule(m.context, len(idx), 0, g, c, False)

    return piece(sub_idx, sub_even), piece(quo_idx, quo_even)


def _commutant_is_division(m: SuperModule, basis) -> bool:
    f = m.field
    if f is FieldTag.COMPLEX:
        return len(basis) == 1
    if len(basis) == 1:
        return True
    if len(basis) not in (2, 4):
        return False
    n = m.dim
    ident = ExactMatrix.identity(n, f)
    trace_free = []
    for b in basis:
        tr = sum((b.data[i][i] for i in range(n)), f.zero) / n
        t = b - ident.scale(tr)
        if not t.is_zero():
            trace_free.append(t)
    cands = list(trace_free) + [a + b for a, b in combinations(trace_free, 2)]
    for t in cands:
        sq = t @ t
        if not sq.is_scalar() or not sq.data[0][0] < 0:
            return False
    return True


def commutant_certifies(m: SuperModule) -> bool:
    """Exact irreducibility test: the even commutant D is a division algebra and the
    operator algebra is all of End_D(V), i.e. has dimension n^2 / dim D."""
    if m.dim == 0:
        return False
    basis = list(hom_space(m, m, EVEN).basis)
    if not _commutant_is_division(m, basis):
        return False
    return len(operator_algebra(m)) * len(basis) == m.dim * m.dim


@dataclass
class CompositionReport:
    factors: list = dc_field(default_factory=list)
    multiplicities: list = dc_field(default_factory=list)
    certified: list = dc_field(default_factory=list)

    def total_dim(self):
        return sum(f.dim * k for f, k in zip(self.factors, self.multiplicities))


def composition_factors(m: SuperModule, seed: int = DEFAULT_SEED) -> CompositionReport:
    """Split by cyclic closure until no proper submodule is found; merge isomorphic factors."""
    pending = [m] if m.dim else []
    leaves = []
    while pending:
        x = pending.pop()
        span = find_submodule(x, seed)
        if span is None:
            leaves.append(x)
        else:
            sub, quo = split_module(x, span)
            pending.extend([quo, sub])
    report = CompositionReport()
    for leaf in leaves:
        for k, known in enumerate(report.factors):
            if iso_test(known, leaf).verdict == "isomorphic":
                report.multiplicities[k] += 1
                break
        else:
            report.factors.append(leaf)
            report.multiplicities.append(1)
            report.certified.append(commutant_certifies(leaf))
    return report


# --- tags ------------------------------------------------------------------


@dataclass(frozen=True)
class IrreducibleTag:
    type: str  # "M" | "Q"
    real_division: str  # "R" | "C" | "H" | "n/a"
    self_dual: bool
    involution: str  # "yes" | "no" | "undecided"
    square: object = None


def real_division_type(m: SuperModule) -> str:
    if m.field is not FieldTag.REAL:
        return "n/a"
    basis = list(hom_space(m, m, EVEN).basis)
    if len(basis) == 1:
        return "R"
    n = m.dim
    ident = ExactMatrix.identity(n, m.field)
    for b in basis:
        tr = sum((b.data[i][i] for i in range(n)), m.field.zero) / n
        t = b - ident.scale(tr)
        if t.is_zero():
            continue
        sq = t @ t
        if sq.is_scalar() and sq.data[0][0] > 0:
            raise NotRealIrreducible("input not R-irreducible: commutant element with positive square")
    if len(basis) == 2:
        return "C"
    if len(basis) == 4:
        return "H"
    raise NotRealIrreducible(f"input not R-irreducible: commutant of dimension {len(basis)}")


def classify_irreducible(m: SuperModule) -> IrreducibleTag:
    if not m.graded:
        return IrreducibleTag("M", real_division_type(m), False, "n/a")
    odd = hom_space(m, m, ODD)
    kind = "Q" if odd.dim else "M"
    self_dual = iso_test(m, parity_reverse(m)).verdict == "isomorphic"
    inv = involution_exists(m)
    return IrreducibleTag(kind, real_division_type(m), self_dual, inv.verdict, inv.square)


# --- Clifford modules as minimal left ideals ---------------------------------


def _blade_product(a: int, b: int, squares) -> tuple[int, int]:
    """e_A e_B = sign e_{A xor B} for bitmask blades."""
    swaps = 0
    x = a >> 1
    while x:
        swaps += bin(x & b).count("1")
        x >>= 1
    sign = -1 if swaps % 2 else 1
    common = a & b
    k = 0
    while common:
        if common & 1 and squares[k] < 0:
            sign = -sign
        common >>= 1
        k += 1
    return sign, a ^ b


def _irreducible_dim(p: int, q: int, field: FieldTag) -> int:
    n = p + q
    if field is FieldTag.COMPLEX:
        return 2 ** (n // 2)
    r = (p - q) % 8
    return {0: 2 ** (n // 2), 6: 2 ** (n // 2), 1: 2 ** ((n + 1) // 2), 5: 2 ** ((n + 1) // 2),
            2: 2 ** ((n + 2) // 2), 4: 2 ** ((n + 2) // 2), 3: 2 ** ((n + 1) // 2),
            7: 2 ** ((n - 1) // 2)}[r]


def _count_irreducibles(p: int, q: int, field: FieldTag) -> int:
    n = p + q
    if field is FieldTag.COMPLEX:
        return 2 if n % 2 else 1
    return 2 if (p - q) % 4 == 3 else 1


def _involution_set(p: int, q: int, field: FieldTag):
    """Commuting, independent blade involutions (blade, phase) with (phase*blade)^2 = 1."""
    squares = [-1] * p + [1] * q
    n = p + q
    target = n - _irreducible_dim(p, q, field).bit_length() + 1
    blades = sorted(range(1, 1 << n), key=lambda b: (bin(b).count("1"), b))
    top = (1 << n) - 1
    if n and _count_irreducibles(p, q, field) == 2:
        blades.remove(top)
        blades.insert(0, top)

    def phase_for(b):
        s, _ = _blade_product(b, b, squares)
        if s == 1:
            return 1
        return GaussianRational(0, 1) if field is FieldTag.COMPLEX else None

    def commute(a, b):
        return _blade_product(a, b, squares)[0] == _blade_product(b, a, squares)[0]

    def span(masks):
        out = {0}
        for m in masks:
            out |= {x ^ m for x in out}
        return out

    def search(chosen, start):
        if len(chosen) == target:
            return chosen
        for idx in range(start, len(blades)):
            b = blades[idx]
            ph = phase_for(b)
            if ph is None or b in span([c for c, _ in chosen]):
                continue
            if all(commute(b, c) for c, _ in chosen):
                found = search(chosen + [(b, ph)], idx + 1)
                if found is not None:
                    return found
        return None

    found = search([], 0)
    if found is None:
        raise RuntimeError(f"no primitive idempotent found for Cl({p},{q})")
    return found, squares


def _ideal_module(p: int, q: int, field: FieldTag, invols, squares, context, name) -> SuperModule:
    n = p + q
    one = field.one
    group = {0: one}  # blade mask -> phase with e_mask P = phase P
    for b, ph in invols:
        new = {}
        for mask, val in group.items():
            s, res = _blade_product(mask, b, squares)
            new[res] = field.coerce(s) * val / field.coerce(ph)
        group.update(new)
    reps = sorted({min(x ^ h for h in group) for x in range(1 << n)})
    index = {r: k for k, r in enumerate(reps)}

    def locate(x):
        """e_x P = coeff * (e_rep P)."""
        for h, ph in group.items():
            rep = x ^ h
            if rep in index:
                t, res = _blade_product(rep, h, squares)
                if res == x:
                    return index[rep], field.coerce(t) * ph
        raise AssertionError("coset lookup failed")

    dim = len(reps)
    mats = []
    for g in range(n):
        rows = [[field.zero] * dim for _ in range(dim)]
        for col, a in enumerate(reps):
            u, x = _blade_product(1 << g, a, squares)
            row, coeff = locate(x)
            rows[row][col] = field.coerce(u) * coeff
        mats.append(ExactMatrix(rows, field))
    return SuperModule(context, dim, 0, [], mats, False, name)


@lru_cache(maxsize=None)
def _ungraded_clifford(p: int, q: int, field: FieldTag) -> tuple:
    ctx = ShiftedContext(trivial_algebra(field), CliffordSignature(p, q))
    invols, squares = _involution_set(p, q, field)
    out = [_ideal_module(p, q, field, invols, squares, ctx, f"S[{p},{q}]")]
    if _count_irreducibles(p, q, field) == 2:
        flipped = [(invols[0][0], -field.coerce(invols[0][1]))] + invols[1:]
        out.append(_ideal_module(p, q, field, flipped, squares, ctx, f"S'[{p},{q}]"))
    for m in out:
        validate_module(m)
    return tuple(out)


def clifford_irreducibles(p: int, q: int, field: FieldTag, graded: bool) -> list[SuperModule]:
    """Irreducible Cl(p,q)-modules over the trivial algebra.

    Ungraded modules are minimal left ideals Cl * P with P a product of
    (1 + s)/2 over a maximal commuting family of blade involutions s, so every
    generator acts by a signed (or, over Q(i), unit-scaled) permutation matrix.
    Graded modules are regraded ungraded modules with one more generator."""
    if p + q > 9 or p < 0 or q < 0:
        raise ValueError("signature too large (p + q <= 9)")
    if not graded:
        return list(_ungraded_clifford(p, q, field))
    if field is FieldTag.REAL:
        if p + q + 1 > 10:
            raise ValueError("signature too large")
        base = _ungraded_clifford(p, q + 1, field)
    else:
        base = _ungraded_clifford(p + 1, q, field)
    out = []
    for k, u in enumerate(base):
        g = regrade(u)
        out.append(g.replace(name=f"S{p + q}" + ("'" * k) if q == 0 else f"S[{p},{q}]" + "'" * k))
    return out


def lift_to_algebra(m: SuperModule, algebra) -> SuperModule:
    """A Clifford module over the trivial algebra viewed as a module with zero g-action."""
    z = ExactMatrix.zeros(m.dim, m.dim, m.field)
    return m.replace(context=ShiftedContext(algebra, m.signature), g_action=[z] * algebra.dim)


# --- complex degree shift ----------------------------------------------------


@dataclass
class ShiftEntry:
    module: SuperModule
    tag: str
    alpha_square: object = None


def odd_involution(m: SuperModule):
    """(alpha, c) where alpha spans the odd commutant, rescaled so alpha^2 = 1 when possible."""
    basis = hom_space(m, m, ODD).basis
    if len(basis) != 1:
        raise ValueError(f"expected a one-dimensional odd commutant, found {len(basis)}")
    a = basis[0]
    sq = a @ a
    if not sq.is_scalar() or not sq.data[0][0]:
        raise ValueError("odd commutant generator does not square to a nonzero scalar")
    c = sq.data[0][0]
    r = scalar_sqrt(c, m.field)
    if r is None:
        return a, c
    return a.scale(m.field.one / r), m.field.one


def shift_irreducibles(irreps, field: FieldTag = FieldTag.COMPLEX) -> list[SuperModule]:
    """Complex graded irreducibles at degree n to those at degree n+1.

    A type-M pair {M, M^Pi} gives M + M^Pi with e = (-1)^F swap; a type-Q module
    Q gives Q+ and Q- with e = +-(-1)^F alpha."""
    if field is not FieldTag.COMPLEX:
        raise ValueError("shift_irreducibles works over ComplexQi; real shifts use clifford_irreducibles")
    out = []
    used = set()
    mods = list(irreps)
    for k, m in enumerate(mods):
        if k in used:
            continue
        if m.field is not FieldTag.COMPLEX:
            raise ValueError("RealQ input")
        odd = hom_space(m, m, ODD)
        sig = m.signature
        new_ctx = m.context.with_signature(CliffordSignature(sig.p + 1, sig.q))
        if odd.dim == 0:
            partner = next((j for j in range(k + 1, len(mods)) if j not in used
                            and iso_test(mods[j], parity_reverse(m)).verdict == "isomorphic"), None)
            if partner is not None:
                used.add(partner)
            used.add(k)
            pi = parity_reverse(m)
            s = direct_sum(m, pi)
            swap = _swap_in_sum(m, pi, s)
            e = s.grading() @ swap
            cl = list(s.cliff_action)
            cl.insert(sig.p, e)
            nm = f"{m.name}+{pi.name}" if m.name else ""
            out.append(SuperModule(new_ctx, s.dim_even, s.dim_odd, s.g_action, cl, True, nm))
        else:
            used.add(k)
            alpha, _ = odd_involution(m)
            for sign, label in ((1, "+"), (-1, "-")):
                e = (m.grading() @ alpha).scale(sign)
                cl = list(m.cliff_action)
                cl.insert(sig.p, e)
                out.append(SuperModule(new_ctx, m.dim_even, m.dim_odd, m.g_action, cl, True,
                                       f"{m.name}{label}" if m.name else ""))
    for x in out:
        validate_module(x)
    return out


def _swap_in_sum(m: SuperModule, pi: SuperModule, s: SuperModule) -> ExactMatrix:
    """The map exchanging the copies of m and m^Pi inside s = m + m^Pi (sorted basis)."""
    f = m.field
    n = m.dim
    # unsorted positions: m occupies 0..n-1, pi occupies n..2n-1 with pi basis k = m basis perm[k]
    perm_pi = list(range(m.dim_even, n)) + list(range(m.dim_even))
    parities = m.space.parities() + pi.space.parities()
    order = [k for k, p in enumerate(parities) if p == EVEN] + [k for k, p in enumerate(parities) if p == ODD]
    where = {old: new for new, old in enumerate(order)}
    rows = [[f.zero] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        a = where[k]  # m basis vector k
        b = where[n + perm_pi.index(k)]  # same vector inside pi
        rows[b][a] = f.one
        rows[a][b] = f.one
    return ExactMatrix(rows, f)


def random_module(context: ShiftedContext, registry_modules, rng: random.Random, max_dim: int = 6,
                  graded: bool = True):
    """A random direct sum of given irreducibles (total dimension <= max_dim) in a random basis."""
    from .supermodule import random_graded_basis_change
    pool = [m for m in registry_modules if m.dim <= max_dim]
    if not pool:
        raise ValueError("no irreducible small enough")
    parts = []
    total = 0
    while True:
        cands = [m for m in pool if total + m.dim <= max_dim]
        if not cands or (parts and rng.random() < 0.4):
            break
        pick = rng.choice(cands)
        parts.append(pick)
        total += pick.dim
    m = direct_sum(*parts) if len(parts) > 1 else parts[0]
    return random_graded_basis_change(m, rng)


# --- q(1) families -----------------------------------------------------------


def q1_context(field: FieldTag = FieldTag.COMPLEX, signature: CliffordSignature | None = None) -> ShiftedContext:
    from .algebra import q1_algebra
    return ShiftedContext(q1_algebra(field), signature or CliffordSignature())


def q1_ungraded(mu, field: FieldTag = FieldTag.COMPLEX) -> SuperModule:
    """C_mu: one-dimensional, Q acts by mu and H by mu^2."""
    mu = field.coerce(mu)
    return SuperModule(q1_context(field), 1, 0, [ExactMatrix([[mu * mu]], field), ExactMatrix([[mu]], field)],
                       (), False, f"C[{mu}]")


def q1_graded(lam, field: FieldTag = FieldTag.COMPLEX) -> SuperModule:
    """L_lambda: (1|1) with H = lambda and Q^2 = lambda.

    Q = sqrt(lambda) [[0,1],[1,0]] when the root exists, else [[0,1],[lambda,0]]."""
    lam = field.coerce(lam)
    if not lam:
        raise ValueError("L_0 is not irreducible; use I + Pi")
    r = scalar_sqrt(lam, field)
    z = field.zero
    if r is not None:
        q = ExactMatrix([[z, r], [r, z]], field)
    else:
        q = ExactMatrix([[z, field.one], [lam, z]], field)
    h = ExactMatrix.identity(2, field).scale(lam)
    m = SuperModule(q1_context(field), 1, 1, [h, q], (), True, f"L[{lam}]")
    validate_module(m)
    return m
