"""Exact scalars over Q and Q(i), dense matrices over those fields, and integer
lattice algebra (Smith normal form, integer kernels, sublattice comparison)."""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class FieldMismatch(ValueError):
    pass


class FieldTag(enum.Enum):
    REAL = "RealQ"
    COMPLEX = "ComplexQi"

    @classmethod
    def parse(cls, text: str) -> "FieldTag":
        key = text.strip()
        if key in ("R", "RealQ", "real"):
            return cls.REAL
        if key in ("C", "ComplexQi", "complex"):
            return cls.COMPLEX
        raise ValueError(f"unknown field {text!r}")

    @property
    def short(self) -> str:
        return "R" if self is FieldTag.REAL else "C"

    def coerce(self, x):
        if self is FieldTag.REAL:
            if isinstance(x, GaussianRational):
                if x.im != 0:
                    raise FieldMismatch(f"{x} is not real")
                return x.re
            return Fraction(x)
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(x)

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    @property
    def i(self):
        if self is FieldTag.REAL:
            raise FieldMismatch("sqrt(-1) is not available over RealQ")
        return GaussianRational(0, 1)

    def units(self):
        """Coefficients used by small exhaustive searches."""
        if self is FieldTag.REAL:
            return [Fraction(1), Fraction(-1)]
        return [GaussianRational(1), GaussianRational(-1), GaussianRational(0, 1), GaussianRational(0, -1)]


class GaussianRational:
    """a + b*i with a, b rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @staticmethod
    def _lift(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None."""
    x = Fraction(x)
    if x < 0:
        return None
    from math import isqrt

    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def scalar_sqrt(z, field: FieldTag):
    """A square root of z inside the field, or None when it does not exist there."""
    if field is FieldTag.REAL:
        return rational_sqrt(field.coerce(z))
    z = field.coerce(z)
    modulus = rational_sqrt(z.norm())
    if modulus is None:
        return None
    a2 = (z.re + modulus) / 2
    a = rational_sqrt(a2)
    if a is None:
        return None
    if a != 0:
        return GaussianRational(a, z.im / (2 * a))
    b = rational_sqrt(-z.re)
    if b is None:
        return None
    return GaussianRational(0, b)


_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS = re.compile(
    rf"^\s*(?:(?P<re>{_RAT})(?P<tail>[+-].*)?|(?P<only>[+-]?(?:\d+(?:/\d+)?\*?)?i))\s*$"
)
_IMAG = re.compile(r"^(?P<sign>[+-])(?P<mag>\d+(?:/\d+)?)?\*?i$")


def parse_scalar(text: str, field: FieldTag):
    s = str(text).replace(" ", "")
    if re.fullmatch(_RAT, s):
        return field.coerce(Fraction(s))
    m = _GAUSS.match(s)
    if not m:
        raise ValueError(f"cannot parse scalar {text!r}")
    if m.group("only") is not None:
        body = m.group("only")
        if body[0] not in "+-":
            body = "+" + body
        re_part, im_text = Fraction(0), body
    else:
        re_part, im_text = Fraction(m.group("re")), m.group("tail")
    im_match = _IMAG.match(im_text or "")
    if not im_match:
        raise ValueError(f"cannot parse scalar {text!r}")
    mag = Fraction(im_match.group("mag") or 1)
    im = mag if im_match.group("sign") == "+" else -mag
    return field.coerce(GaussianRational(re_part, im))


def format_scalar(x) -> str:
    if isinstance(x, GaussianRational):
        if x.im == 0:
            return str(x.re)
        im = "i" if abs(x.im) == 1 else f"{abs(x.im)}*i"
        sign = "-" if x.im < 0 else "+"
        if x.re == 0:
            return ("-" if x.im < 0 else "") + im
        return f"{x.re}{sign}{im}"
    return str(Fraction(x))


class ExactMatrix:
    """Immutable dense matrix over one exact field."""

    __slots__ = ("rows", "cols", "field", "data", "_cols_nz")

    def __init__(self, data: Sequence[Sequence], field: FieldTag, rows: int | None = None, cols: int | None = None):
        coerce = field.coerce
        self.data = tuple(tuple(coerce(x) for x in row) for row in data)
        self.rows = len(self.data) if rows is None else rows
        self.cols = (len(self.data[0]) if self.data else 0) if cols is None else cols
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged matrix data")
        self.field = field
        self._cols_nz = None

    @classmethod
    def _raw(cls, data, field, rows, cols):
        m = object.__new__(cls)
        m.data, m.field, m.rows, m.cols, m._cols_nz = data, field, rows, cols, None
        return m

    @classmethod
    def zeros(cls, rows, cols, field):
        z = field.zero
        return cls._raw(tuple((z,) * cols for _ in range(rows)), field, rows, cols)

    @classmethod
    def identity(cls, n, field):
        z, o = field.zero, field.one
        return cls._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field, n, n)

    @classmethod
    def diagonal(cls, values, field):
        vals = [field.coerce(v) for v in values]
        n = len(vals)
        z = field.zero
        return cls._raw(tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), field, n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field, rows: int | None = None):
        if not columns:
            return cls.zeros(rows or 0, 0, field)
        n = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(n)], field)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["ExactMatrix"]], field):
        out = []
        for brow in blocks:
            height = brow[0].rows
            for r in range(height):
                row = []
                for b in brow:
                    row.extend(b.data[r])
                out.append(tuple(row))
        cols = len(out[0]) if out else sum(b.cols for b in blocks[0]) if blocks else 0
        return cls._raw(tuple(out), field, len(out), cols)

    @classmethod
    def block_diag(cls, mats: Sequence["ExactMatrix"], field):
        n = sum(m.rows for m in mats)
        c = sum(m.cols for m in mats)
        z = field.zero
        out = [[z] * c for _ in range(n)]
        r0 = c0 = 0
        for m in mats:
            for i in range(m.rows):
                out[r0 + i][c0:c0 + m.cols] = m.data[i]
            r0 += m.rows
            c0 += m.cols
        return cls._raw(tuple(tuple(r) for r in out), field, n, c)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def columns_nonzero(self):
        """Per column, the list of (row, value) with value != 0."""
        if self._cols_nz is None:
            cols = [[] for _ in range(self.cols)]
            for i, row in enumerate(self.data):
                for j, x in enumerate(row):
                    if x:
                        cols[j].append((i, x))
            self._cols_nz = cols
        return self._cols_nz

    def rows_nonzero(self):
        return [[(j, x) for j, x in enumerate(row) if x] for row in self.data]

    def _check(self, other):
        if not isinstance(other, ExactMatrix):
            raise TypeError("expected ExactMatrix")
        if other.field is not self.field:
            raise FieldMismatch(f"{self.field.value} vs {other.field.value}")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return ExactMatrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
            self.field, self.rows, self.cols)

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in subtraction")
        return ExactMatrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
            self.field, self.rows, self.cols)

    def __neg__(self):
        return ExactMatrix._raw(tuple(tuple(-a for a in r) for r in self.data), self.field, self.rows, self.cols)

    def scale(self, c):
        c = self.field.coerce(c)
        return ExactMatrix._raw(tuple(tuple(c * a for a in r) for r in self.data), self.field, self.rows, self.cols)

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        z = self.field.zero
        ocols = other.columns_nonzero()
        rows_nz = self.rows_nonzero()
        out = []
        for rnz in rows_nz:
            if not rnz:
                out.append((z,) * other.cols)
                continue
            lookup = dict(rnz)
            row = []
            for cnz in ocols:
                s = z
                for k, y in cnz:
                    x = lookup.get(k)
                    if x is not None:
                        s = s + x * y
                row.append(s)
            out.append(tuple(row))
        return ExactMatrix._raw(tuple(out), self.field, self.rows, other.cols)

    def apply(self, vec: Sequence):
        z = self.field.zero
        out = []
        for row in self.data:
            s = z
            for a, b in zip(row, vec):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def transpose(self):
        return ExactMatrix._raw(tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)),
                                self.field, self.cols, self.rows)

    def kron(self, other):
        self._check(other)
        out = []
        for ra in self.data:
            for rb in other.data:
                out.append(tuple(a * b for a in ra for b in rb))
        return ExactMatrix._raw(tuple(out), self.field, self.rows * other.rows, self.cols * other.cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]):
        return ExactMatrix._raw(tuple(tuple(self.data[i][j] for j in cols) for i in rows),
                                self.field, len(rows), len(cols))

    def permuted(self, perm: Sequence[int]):
        """P^-1 A P where new basis vector k is old basis vector perm[k]."""
        return self.submatrix(perm, perm)

    def is_zero(self):
        return not any(x for r in self.data for x in r)

    def is_scalar(self):
        if self.rows != self.cols:
            return False
        if self.rows == 0:
            return True
        c = self.data[0][0]
        return all((x == c) if i == j else (not x) for i, r in enumerate(self.data) for j, x in enumerate(r))

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field is other.field and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.field, self.shape, self.data))

    def to_text(self):
        return [[format_scalar(x) for x in r] for r in self.data]

    def __repr__(self):
        return f"ExactMatrix({self.to_text()}, {self.field.value})"

    def rank(self):
        return mat_rref(self)[2]

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = ExactMatrix._raw(tuple(r + ExactMatrix.identity(n, self.field).data[i] for i, r in enumerate(self.data)),
                               self.field, n, 2 * n)
        red, piv, rank = mat_rref(aug)
        if n and (rank < n or piv[n - 1] != n - 1):
            raise ZeroDivisionError("matrix is singular")
        return red.submatrix(range(n), range(n, 2 * n))

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows

    def det(self):
        n = self.rows
        a = [list(r) for r in self.data]
        d = self.field.one
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                return self.field.zero
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            piv = a[c][c]
            d = d * piv
            for r in range(c + 1, n):
                if a[r][c]:
                    f = a[r][c] / piv
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return d


def mat_rref(m: ExactMatrix):
    """Reduced row echelon form, pivot columns and rank."""
    a = [list(r) for r in m.data]
    rows, cols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = m.field.one / a[r][c]
        a[r] = [x * inv for x in a[r]]
        pivot_row = a[r]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], pivot_row)]
        pivots.append(c)
        r += 1
    return ExactMatrix(a, m.field, rows, cols), tuple(pivots), len(pivots)


def mat_kernel(m: ExactMatrix) -> list[list]:
    red, pivots, _ = mat_rref(m)
    field = m.field
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * m.cols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -red.data[i][f]
        basis.append(v)
    return basis


def sparse_kernel(equations: Iterable[dict], nvars: int, field: FieldTag) -> list[list]:
    """Kernel of a sparse linear system given as {variable: coefficient} rows.

    Rows are kept fully reduced, so each pivot row mentions only its pivot and
    free variables; the kernel basis is read off directly."""
    pivots: dict[int, dict] = {}
    for eq in equations:
        row = {k: v for k, v in eq.items() if v}
        for c in [c for c in row if c in pivots]:
            f = row.get(c)
            if not f:
                continue
            for k, v in pivots[c].items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        if not row:
            continue
        p = min(row)
        inv = field.one / row[p]
        row = {k: v * inv for k, v in row.items()}
        for q, prow in pivots.items():
            f = prow.get(p)
            if f:
                for k, v in row.items():
                    nv = prow.get(k, 0) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        pivots[p] = row
    basis = []
    zero, one = field.zero, field.one
    for f in range(nvars):
        if f in pivots:
            continue
        v = [zero] * nvars
        v[f] = one
        for p, prow in pivots.items():
            c = prow.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def row_space_basis(vectors: Sequence[Sequence], field: FieldTag) -> list[list]:
    if not vectors:
        return []
    red, _, rank = mat_rref(ExactMatrix(vectors, field))
    return [list(red.data[i]) for i in range(rank)]


# --- integer matrices and lattices ---------------------------------------


class IntegerMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[int]], rows: int | None = None, cols: int | None = None):
        self.data = tuple(tuple(int(x) for x in r) for r in data)
        self.rows = len(self.data) if rows is None else rows
        self.cols = (len(self.data[0]) if self.data else 0) if cols is None else cols
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged integer matrix")

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int):
        return cls([[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    def columns(self):
        return [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ocols = other.columns()
        return IntegerMatrix([[sum(a * b for a, b in zip(r, c)) for c in ocols] for r in self.data],
                             self.rows, other.cols)

    def __sub__(self, other):
        return IntegerMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
                             self.rows, self.cols)

    def __add__(self, other):
        return IntegerMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
                             self.rows, self.cols)

    def hstack(self, other):
        return IntegerMatrix([r + s for r, s in zip(self.data, other.data)], self.rows, self.cols + other.cols)

    def select_columns(self, idx):
        return IntegerMatrix([[r[j] for j in idx] for r in self.data], self.rows, len(idx))

    def transpose(self):
        return IntegerMatrix(list(zip(*self.data)) if self.rows else [[] for _ in range(self.cols)],
                             self.cols, self.rows)

    def apply(self, vec):
        return [sum(a * b for a, b in zip(r, vec)) for r in self.data]

    def is_zero(self):
        return not any(x for r in self.data for x in r)

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return int(ExactMatrix(self.data, FieldTag.REAL, self.rows, self.cols).det())

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.rows == other.rows and self.cols == other.cols \
            and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def tolist(self):
        return [list(r) for r in self.data]

    def __repr__(self):
        return f"IntegerMatrix({self.tolist()})"


def smith_normal_form(a: IntegerMatrix):
    """Return (u, d, v) with u @ a @ v == d, u and v unimodular, d diagonal and
    each diagonal entry dividing the next."""
    m, n = a.rows, a.cols
    d = [list(r) for r in a.data]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        if k:
            d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
            u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        if k:
            for row in d:
                row[dst] += k * row[src]
            for row in v:
                row[dst] += k * row[src]

    for t in range(min(m, n)):
        entries = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // d[t][t]))
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // d[t][t]))
                    if d[t][j]:
                        dirty = True
            if dirty:
                cand = [(abs(d[i][t]), i, t) for i in range(t, m) if d[i][t]]
                cand += [(abs(d[t][j]), t, j) for j in range(t, n) if d[t][j]]
                _, i1, j1 = min(cand)
                swap_rows(t, i1)
                swap_cols(t, j1)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % d[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return IntegerMatrix(u, m, m), IntegerMatrix(d, m, n), IntegerMatrix(v, n, n)


def invariant_factors(a: IntegerMatrix) -> list[int]:
    _, d, _ = smith_normal_form(a)
    return [d.data[i][i] for i in range(min(d.rows, d.cols)) if d.data[i][i]]


def minor_gcd_invariants(a: IntegerMatrix) -> list[int]:
    """Invariant factors from gcds of k-by-k minors (slow; used as an oracle)."""
    from itertools import combinations

    out = []
    prev = 1
    for k in range(1, min(a.rows, a.cols) + 1):
        g = 0
        for rs in combinations(range(a.rows), k):
            for cs in combinations(range(a.cols), k):
                g = gcd(g, IntegerMatrix([[a.data[i][j] for j in cs] for i in rs]).det())
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def integer_kernel(a: IntegerMatrix) -> IntegerMatrix:
    """Columns form a Z-basis of {x in Z^cols : a x = 0}."""
    _, d, v = smith_normal_form(a)
    r = sum(1 for i in range(min(d.rows, d.cols)) if d.data[i][i])
    return v.select_columns(list(range(r, a.cols)))


def integer_solve(a: IntegerMatrix, b: Sequence[int], snf=None) -> list[int] | None:
    """Some x in Z^cols with a x = b, or None."""
    u, d, v = snf or smith_normal_form(a)
    ub = u.apply(b)
    y = [0] * a.cols
    for i in range(a.rows):
        di = d.data[i][i] if i < a.cols else 0
        if di:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
        elif ub[i]:
            return None
    return v.apply(y)


def lattice_contains(a: IntegerMatrix, b: IntegerMatrix) -> bool:
    """True when every column of b lies in the Z-span of the columns of a."""
    if b.cols == 0:
        return True
    if a.cols == 0:
        return b.is_zero()
    snf = smith_normal_form(a)
    return all(integer_solve(a, col, snf) is not None for col in b.columns())


class LatticeRelation(enum.Enum):
    EQUAL = "Equal"
    A_CONTAINS_B = "AcontainsB"
    B_CONTAINS_A = "BcontainsA"
    INCOMPARABLE = "Incomparable"


def lattice_compare(a: IntegerMatrix, b: IntegerMatrix) -> LatticeRelation:
    if a.rows != b.rows:
        raise ValueError("lattices live in different ambient ranks")
    ab = lattice_contains(a, b)
    ba = lattice_contains(b, a)
    if ab and ba:
        return LatticeRelation.EQUAL
    if ab:
        return LatticeRelation.A_CONTAINS_B
    if ba:
        return LatticeRelation.B_CONTAINS_A
    return LatticeRelation.INCOMPARABLE


def hermite_basis(a: IntegerMatrix) -> IntegerMatrix:
    """Canonical Z-basis (column Hermite form) of the lattice spanned by the columns of a."""
    rows = [list(c) for c in a.columns() if any(c)]
    n = a.rows
    out = []
    col = 0
    while rows and col < n:
        live = [r for r in rows if r[col]]
        if not live:
            col += 1
            continue
        while len([r for r in rows if r[col]]) > 1:
            live = sorted((r for r in rows if r[col]), key=lambda r: abs(r[col]))
            piv = live[0]
            for r in live[1:]:
                q = r[col] // piv[col]
                for k in range(n):
                    r[k] -= q * piv[k]
        piv = next(r for r in rows if r[col])
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        for prev in out:
            q = prev[col] // piv[col]
            if q:
                for k in range(n):
                    prev[k] -= q * piv[k]
        out.append(piv)
        rows = [r for r in rows if r is not piv and any(r)]
        col += 1
    return IntegerMatrix.from_columns(out, n) if out else IntegerMatrix.zeros(n, 0)
