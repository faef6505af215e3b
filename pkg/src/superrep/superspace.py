"""Super vector spaces with the even block first, homogeneous linear maps and the
Koszul sign rule for tensor products."""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import ExactMatrix, FieldMismatch, FieldTag

EVEN = 0
ODD = 1


def koszul_sign(p: int, q: int) -> int:
    return -1 if (p % 2 and q % 2) else 1


@dataclass(frozen=True)
class SuperSpace:
    dim_even: int
    dim_odd: int
    field: FieldTag = FieldTag.REAL

    @property
    def dim(self) -> int:
        return self.dim_even + self.dim_odd

    def parity_of(self, index: int) -> int:
        if not 0 <= index < self.dim:
            raise IndexError(index)
        return EVEN if index < self.dim_even else ODD

    def parities(self) -> list[int]:
        return [EVEN] * self.dim_even + [ODD] * self.dim_odd

    def grading_operator(self) -> ExactMatrix:
        return ExactMatrix.diagonal([1] * self.dim_even + [-1] * self.dim_odd, self.field)

    def __str__(self):
        return f"({self.dim_even}|{self.dim_odd})"


def block_parity(matrix: ExactMatrix, source: SuperSpace, target: SuperSpace) -> int | None:
    """EVEN or ODD when the matrix is homogeneous, None otherwise.  The zero map counts as even."""
    even_ok = odd_ok = True
    sp, tp = source.parities(), target.parities()
    for i, row in enumerate(matrix.data):
        for j, x in enumerate(row):
            if x:
                if tp[i] == sp[j]:
                    odd_ok = False
                else:
                    even_ok = False
                if not (even_ok or odd_ok):
                    return None
    return EVEN if even_ok else ODD


class GradedMap:
    """A homogeneous linear map between super vector spaces."""

    __slots__ = ("source", "target", "matrix", "parity")

    def __init__(self, source: SuperSpace, target: SuperSpace, matrix: ExactMatrix, parity: int):
        if matrix.shape != (target.dim, source.dim):
            raise ValueError(f"matrix shape {matrix.shape} does not match {source} -> {target}")
        if matrix.field is not source.field or source.field is not target.field:
            raise FieldMismatch("graded map over mixed fields")
        found = block_parity(matrix, source, target)
        if found is None or (found != parity and not matrix.is_zero()):
            raise ValueError(f"matrix is not homogeneous of parity {parity}")
        self.source, self.target, self.matrix, self.parity = source, target, matrix, parity

    @classmethod
    def infer(cls, source, target, matrix):
        p = block_parity(matrix, source, target)
        if p is None:
            raise ValueError("map is neither even nor odd")
        return cls(source, target, matrix, p)

    @classmethod
    def identity(cls, space: SuperSpace):
        return cls(space, space, ExactMatrix.identity(space.dim, space.field), EVEN)

    @classmethod
    def grading(cls, space: SuperSpace):
        return cls(space, space, space.grading_operator(), EVEN)

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self after other."""
        return GradedMap(other.source, self.target, self.matrix @ other.matrix, (self.parity + other.parity) % 2)

    def __eq__(self, other):
        return isinstance(other, GradedMap) and (self.source, self.target, self.parity, self.matrix) == \
            (other.source, other.target, other.parity, other.matrix)

    def __hash__(self):
        return hash((self.source, self.target, self.parity, self.matrix))


def tensor_index(v: SuperSpace, w: SuperSpace) -> list[tuple[int, int]]:
    """Basis of v (x) w as index pairs: V0W0, V1W1, then V1W0, V0W1."""
    v0, v1 = range(v.dim_even), range(v.dim_even, v.dim)
    w0, w1 = range(w.dim_even), range(w.dim_even, w.dim)
    order = []
    for a, b in ((v0, w0), (v1, w1), (v1, w0), (v0, w1)):
        order.extend((i, j) for i in a for j in b)
    return order


def tensor_space(v: SuperSpace, w: SuperSpace):
    """The tensor product space and the table position -> (i, j)."""
    if v.field is not w.field:
        raise FieldMismatch("tensor of spaces over different fields")
    space = SuperSpace(v.dim_even * w.dim_even + v.dim_odd * w.dim_odd,
                       v.dim_odd * w.dim_even + v.dim_even * w.dim_odd, v.field)
    return space, tensor_index(v, w)


def kron_in_tensor_basis(a: ExactMatrix, b: ExactMatrix, table_src, table_dst, b_cols: int, b_rows: int):
    """Plain Kronecker product a (x) b re-indexed into tensor-space bases."""
    k = a.kron(b)
    rows = [i * b_rows + j for i, j in table_dst]
    cols = [i * b_cols + j for i, j in table_src]
    return k.submatrix(rows, cols)


def map_tensor(f: GradedMap, g: GradedMap) -> GradedMap:
    """(f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w)."""
    src, tsrc = tensor_space(f.source, g.source)
    dst, tdst = tensor_space(f.target, g.target)
    sign_vec = [(-1 if (g.parity and f.source.parity_of(i)) else 1) for i in range(f.source.dim)]
    twisted = f.matrix @ ExactMatrix.diagonal(sign_vec, f.matrix.field)
    m = kron_in_tensor_basis(twisted, g.matrix, tsrc, tdst, g.source.dim, g.target.dim)
    return GradedMap(src, dst, m, (f.parity + g.parity) % 2)


def parity_reverse_space(v: SuperSpace):
    """The reversed space and the permutation: new basis k is old basis perm[k]."""
    perm = list(range(v.dim_even, v.dim)) + list(range(v.dim_even))
    return SuperSpace(v.dim_odd, v.dim_even, v.field), perm
