"""Lie superalgebras by structure constants, Clifford signatures, and the
shifted context U(g) with Clifford generators adjoined."""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .exactnum import ExactMatrix, FieldTag, format_scalar
from .superspace import EVEN, ODD, koszul_sign


class RelationError(ValueError):
    """A defining relation fails; carries a human-readable residual."""


@dataclass(frozen=True)
class LieSuperAlgebra:
    field: FieldTag
    names: tuple[str, ...]
    parities: tuple[int, ...]
    # (i, j) -> ((k, coefficient), ...), only nonzero entries
    brackets: dict = dc_field(default_factory=dict, hash=False, compare=False)
    name: str = "custom"

    def __post_init__(self):
        if len(self.names) != len(self.parities):
            raise ValueError("one parity per generator required")
        clean = {}
        for (i, j), terms in self.brackets.items():
            row = {}
            for k, c in (terms.items() if isinstance(terms, dict) else terms):
                c = self.field.coerce(c)
                if c:
                    row[k] = row.get(k, self.field.zero) + c
            row = {k: c for k, c in row.items() if c}
            if row:
                clean[(i, j)] = row
        object.__setattr__(self, "brackets", clean)

    @property
    def dim(self):
        return len(self.names)

    def bracket(self, i: int, j: int) -> dict:
        return self.brackets.get((i, j), {})

    def constants_key(self):
        return tuple(sorted((i, j, k, str(c)) for (i, j), row in self.brackets.items() for k, c in row.items()))

    def __eq__(self, other):
        return isinstance(other, LieSuperAlgebra) and self.field is other.field and self.names == other.names \
            and self.parities == other.parities and self.constants_key() == other.constants_key()

    def __hash__(self):
        return hash((self.field, self.names, self.parities, self.constants_key()))

    def even_indices(self):
        return [i for i, p in enumerate(self.parities) if p == EVEN]

    def odd_indices(self):
        return [i for i, p in enumerate(self.parities) if p == ODD]


def _lin_bracket(g: LieSuperAlgebra, x: dict, y: dict) -> dict:
    out = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in g.bracket(i, j).items():
                out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v}


def _fmt_vec(g: LieSuperAlgebra, v: dict) -> str:
    if not v:
        return "0"
    return " + ".join(f"({format_scalar(c)}){g.names[k]}" for k, c in sorted(v.items()))


def check_jacobi(g: LieSuperAlgebra) -> None:
    """Raise RelationError listing every failing ordered triple; None on success."""
    n = g.dim
    for (i, j), row in g.brackets.items():
        if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in row):
            raise RelationError(f"bracket index out of range at ({i},{j})")
    for i in range(n):
        for j in range(n):
            s = koszul_sign(g.parities[i], g.parities[j])
            a, b = g.bracket(i, j), g.bracket(j, i)
            for k in set(a) | set(b):
                if a.get(k, 0) != -s * b.get(k, 0):
                    raise RelationError(
                        f"antisymmetry fails for ({g.names[i]},{g.names[j]}): "
                        f"[{g.names[i]},{g.names[j]}] = {_fmt_vec(g, a)}, [{g.names[j]},{g.names[i]}] = {_fmt_vec(g, b)}")
            for k in a:
                if g.parities[k] != (g.parities[i] + g.parities[j]) % 2:
                    raise RelationError(f"bracket parity fails: [{g.names[i]},{g.names[j]}] has a {g.names[k]} term")
    failures = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = {i: 1}, {j: 1}, {k: 1}
                lhs = _lin_bracket(g, x, _lin_bracket(g, y, z))
                rhs1 = _lin_bracket(g, _lin_bracket(g, x, y), z)
                rhs2 = _lin_bracket(g, y, _lin_bracket(g, x, z))
                s = koszul_sign(g.parities[i], g.parities[j])
                rhs = dict(rhs1)
                for key, v in rhs2.items():
                    rhs[key] = rhs.get(key, 0) + s * v
                rhs = {key: v for key, v in rhs.items() if v}
                if lhs != rhs:
                    failures.append(f"({g.names[i]},{g.names[j]},{g.names[k]}): "
                                    f"lhs = {_fmt_vec(g, lhs)}, rhs = {_fmt_vec(g, rhs)}")
    if failures:
        raise RelationError("Jacobi fails at " + "; ".join(failures))


def jacobi_holds(g: LieSuperAlgebra) -> bool:
    try:
        check_jacobi(g)
    except RelationError:
        return False
    return True


def bar(g: LieSuperAlgebra) -> LieSuperAlgebra:
    """The algebra with odd-odd brackets negated."""
    new = {}
    for (i, j), row in g.brackets.items():
        s = koszul_sign(g.parities[i], g.parities[j])
        new[(i, j)] = {k: s * c for k, c in row.items()}
    return LieSuperAlgebra(g.field, g.names, g.parities, new, name=f"bar({g.name})")


@dataclass(frozen=True)
class CliffordSignature:
    p: int = 0
    q: int = 0

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("negative Clifford signature")

    @property
    def n(self):
        return self.p + self.q

    def squares(self) -> list[int]:
        """Square of each generator in storage order (e's then f's)."""
        return [-1] * self.p + [1] * self.q

    def names(self) -> list[str]:
        return [f"e{k + 1}" for k in range(self.p)] + [f"f{k + 1}" for k in range(self.q)]

    def __add__(self, other):
        return CliffordSignature(self.p + other.p, self.q + other.q)

    def __str__(self):
        return f"Cl({self.p},{self.q})"


def clifford_relation_check(sig: CliffordSignature, actions) -> None:
    """Raise RelationError unless the matrices satisfy the signature's relations."""
    mats = [a.matrix if hasattr(a, "matrix") else a for a in actions]
    if len(mats) != sig.n:
        raise RelationError(f"{sig} needs {sig.n} generators, got {len(mats)}")
    names = sig.names()
    for k, (m, sq) in enumerate(zip(mats, sig.squares())):
        ident = ExactMatrix.identity(m.rows, m.field)
        resid = m @ m - ident.scale(sq)
        if not resid.is_zero():
            raise RelationError(f"{names[k]}^2 != {sq}: residual {resid.to_text()}")
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            resid = mats[a] @ mats[b] + mats[b] @ mats[a]
            if not resid.is_zero():
                raise RelationError(f"{names[a]}{names[b]} + {names[b]}{names[a]} != 0: residual {resid.to_text()}")


@dataclass(frozen=True)
class ShiftedContext:
    algebra: LieSuperAlgebra
    signature: CliffordSignature = CliffordSignature()

    @property
    def field(self):
        return self.algebra.field

    def with_signature(self, sig: CliffordSignature) -> "ShiftedContext":
        return ShiftedContext(self.algebra, sig)

    def __str__(self):
        return f"{self.algebra.name} (x) {self.signature}"


def trivial_algebra(field: FieldTag) -> LieSuperAlgebra:
    return LieSuperAlgebra(field, (), (), {}, name="trivial")


def q1_algebra(field: FieldTag) -> LieSuperAlgebra:
    """H even, Q odd, [Q,Q] = 2H, everything else zero."""
    return LieSuperAlgebra(field, ("H", "Q"), (EVEN, ODD), {(1, 1): {0: 2}}, name="q1")


_CLIFF = re.compile(r"^clifford:(\d+),(\d+)$")


def builtin(name: str, field: FieldTag = FieldTag.COMPLEX):
    """trivial, q1 (algebras) or clifford:p,q (a shifted context over the trivial algebra)."""
    key = name.strip().lower()
    if key == "trivial":
        return trivial_algebra(field)
    if key in ("q1", "q(1)"):
        return q1_algebra(field)
    m = _CLIFF.match(key)
    if m:
        return ShiftedContext(trivial_algebra(field), CliffordSignature(int(m.group(1)), int(m.group(2))))
    raise KeyError(f"unknown builtin {name!r}")
