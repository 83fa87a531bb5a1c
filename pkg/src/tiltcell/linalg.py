"""Exact dense linear algebra over the rationals and prime fields.

Scalars are `fractions.Fraction` over Q and plain int residues in [0, p)
over F_p; a `Field` value mediates all arithmetic.  Matrices and subspaces
are immutable.  Subspaces are stored with a reduced-row-echelon basis, so
two subspaces are equal as sets exactly when their basis matrices compare
equal entry by entry.  Everything is deterministic: no floats, no hashing
order, no randomness.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import DimensionMismatch, InconsistentSystem, InputError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f <= isqrt(n):
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """The rationals (p is None) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise InputError(f"field characteristic {p} is not prime")
        self.p = p

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"F{self.p}"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    # -- scalar arithmetic ---------------------------------------------------

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def of(self, n: int):
        return Fraction(n) if self.p is None else n % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of 0")
            return Fraction(1) / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- parsing and formatting ----------------------------------------------

    def parse(self, s):
        """Exact scalar from an int or a decimal-integer fraction string "a/b"."""
        if isinstance(s, bool) or isinstance(s, float):
            raise InputError(f"scalar {s!r} is not exact")
        if isinstance(s, int):
            return self.of(s)
        if not isinstance(s, str):
            raise InputError(f"cannot parse scalar {s!r}")
        text = s.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                num, den = int(num), int(den)
            else:
                num, den = int(text), 1
        except ValueError:
            raise InputError(f"cannot parse scalar {s!r}") from None
        if den == 0:
            raise InputError(f"zero denominator in {s!r}")
        if self.p is None:
            return Fraction(num, den)
        return self.mul(self.of(num), self.inv(self.of(den)))

    def fmt(self, a) -> str:
        return str(a)

    # -- sampling (for seeded randomized searches) ----------------------------

    def sample(self, rng, span: int = 3):
        """Small scalar from a seeded PRNG (full field when p is small)."""
        if self.p is None:
            return Fraction(rng.randint(-span, span))
        return rng.randint(0, min(self.p - 1, 2 * span))


class Matrix:
    """Immutable dense matrix with entries in a fixed field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries, cols: int | None = None):
        self.field = field
        rows = tuple(tuple(r) for r in entries)
        self.entries = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else (cols or 0)
        for r in rows:
            if len(r) != self.cols:
                raise DimensionMismatch("ragged matrix rows")

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero()
        return cls(field, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero(), field.one()
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, field, vec):
        return cls(field, [[v] for v in vec])

    @classmethod
    def row(cls, field, vec):
        return cls(field, [list(vec)])

    @classmethod
    def from_int_rows(cls, field, rows):
        return cls(field, [[field.of(x) for x in r] for r in rows])

    # -- identity / hashing ------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.fmt(x) for x in r) for r in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    # -- arithmetic ---------------------------------------------------------------

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other):
        self._check_same_shape(other)
        add = self.field.add
        return Matrix(self.field, [
            [add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)
        ], cols=self.cols)

    def __sub__(self, other):
        self._check_same_shape(other)
        sub = self.field.sub
        return Matrix(self.field, [
            [sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)
        ], cols=self.cols)

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.entries], cols=self.cols)

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in r] for r in self.entries], cols=self.cols)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        F = self.field
        zero = F.zero()
        ot = other.entries
        out = []
        for ra in self.entries:
            row = []
            for j in range(other.cols):
                acc = zero
                for k, a in enumerate(ra):
                    if a:
                        acc = F.add(acc, F.mul(a, ot[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix(F, out, cols=other.cols)

    def transpose(self):
        if self.rows == 0:
            return Matrix(self.field, [[] for _ in range(self.cols)], cols=0)
        return Matrix(self.field, list(zip(*self.entries)), cols=self.rows)

    def is_zero(self):
        z = self.field.zero()
        return all(a == z for r in self.entries for a in r)

    def trace(self):
        F = self.field
        acc = F.zero()
        for i in range(min(self.rows, self.cols)):
            acc = F.add(acc, self.entries[i][i])
        return acc

    def flat(self):
        return tuple(a for r in self.entries for a in r)

    def power(self, k: int):
        if self.rows != self.cols:
            raise DimensionMismatch("power of non-square matrix")
        acc = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                acc = acc @ base
            k >>= 1
            if k:
                base = base @ base
        return acc

    # -- elimination -----------------------------------------------------------------

    def rref(self):
        """Reduced row echelon form: (matrix, pivot column tuple, rank)."""
        F = self.field
        m = [list(r) for r in self.entries]
        nrows, ncols = self.rows, self.cols
        pivots = []
        prow = 0
        for col in range(ncols):
            sel = None
            for r in range(prow, nrows):
                if m[r][col] != F.zero():
                    sel = r
                    break
            if sel is None:
                continue
            m[prow], m[sel] = m[sel], m[prow]
            inv = F.inv(m[prow][col])
            m[prow] = [F.mul(inv, x) for x in m[prow]]
            for r in range(nrows):
                if r != prow and m[r][col] != F.zero():
                    c = m[r][col]
                    m[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[r], m[prow])]
            pivots.append(col)
            prow += 1
            if prow == nrows:
                break
        return Matrix(F, m, cols=ncols), tuple(pivots), len(pivots)

    def rank(self) -> int:
        return self.rref()[2]

    def kernel(self):
        """Canonical (RREF) basis of the right null space, as matrix rows."""
        F = self.field
        red, pivots, rank = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        if not free:
            return Matrix(F, [], cols=self.cols)
        vecs = []
        for fc in free:
            v = [F.zero()] * self.cols
            v[fc] = F.one()
            for i, pc in enumerate(pivots):
                v[pc] = F.neg(red.entries[i][fc])
            vecs.append(v)
        return Matrix(F, vecs).rref()[0]

    def solve(self, b: "Matrix"):
        """All solutions of self @ X = b: (particular X, kernel row basis).

        The particular solution sets every free variable to zero.  Raises
        InconsistentSystem when some column of b is outside the column space.
        """
        if b.rows != self.rows:
            raise DimensionMismatch("solve: row counts differ")
        F = self.field
        aug = Matrix(F, [list(ra) + list(rb) for ra, rb in zip(self.entries, b.entries)],
                     cols=self.cols + b.cols)
        red, pivots, _ = aug.rref()
        for pc in pivots:
            if pc >= self.cols:
                raise InconsistentSystem("right-hand side outside column space")
        zero = F.zero()
        part = [[zero] * b.cols for _ in range(self.cols)]
        for i, pc in enumerate(pivots):
            for j in range(b.cols):
                part[pc][j] = red.entries[i][self.cols + j]
        return Matrix(F, part, cols=b.cols), self.kernel()

    def inverse(self):
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of non-square matrix")
        n = self.rows
        red, pivots, rank = Matrix(
            self.field,
            [list(r) + list(e) for r, e in zip(self.entries, Matrix.identity(self.field, n).entries)],
        ).rref()
        if rank < n:
            raise InconsistentSystem("matrix is singular")
        return Matrix(self.field, [r[n:] for r in red.entries])

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows


# -- block assembly ------------------------------------------------------------


def hstack(mats):
    mats = list(mats)
    F = mats[0].field
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise DimensionMismatch("hstack: row counts differ")
    return Matrix(F, [sum((list(m.entries[i]) for m in mats), []) for i in range(rows)],
                  cols=sum(m.cols for m in mats))


def vstack(mats):
    mats = list(mats)
    F = mats[0].field
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise DimensionMismatch("vstack: column counts differ")
    out = []
    for m in mats:
        out.extend(list(r) for r in m.entries)
    return Matrix(F, out, cols=cols)


def block_diag(mats):
    mats = list(mats)
    F = mats[0].field
    total_r = sum(m.rows for m in mats)
    total_c = sum(m.cols for m in mats)
    out = [[F.zero()] * total_c for _ in range(total_r)]
    r0 = c0 = 0
    for m in mats:
        for i, row in enumerate(m.entries):
            for j, x in enumerate(row):
                out[r0 + i][c0 + j] = x
        r0 += m.rows
        c0 += m.cols
    return Matrix(F, out)


class Subspace:
    """A subspace of K^ambient with a canonical RREF row basis.

    Equal subspaces have literally equal basis matrices, which makes
    deduplication and equality checks trivial.
    """

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, basis: Matrix):
        self.ambient = ambient
        self.basis = basis
        if basis.cols not in (ambient, 0):
            raise DimensionMismatch("basis width differs from ambient dimension")

    @classmethod
    def from_rows(cls, field: Field, ambient: int, rows) -> "Subspace":
        rows = [[field.of(x) if isinstance(x, int) else x for x in r] for r in rows]
        if not rows:
            return cls(ambient, Matrix(field, [], cols=ambient))
        red, _, rank = Matrix(field, rows).rref()
        return cls(ambient, Matrix(field, red.entries[:rank], cols=ambient))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(ambient, Matrix(field, [], cols=ambient))

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(ambient, Matrix.identity(field, ambient))

    @property
    def field(self):
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of K^{self.ambient})"

    def contains_vector(self, vec) -> bool:
        if self.dim == 0:
            z = self.field.zero()
            return all(x == z for x in vec)
        stacked = Matrix(self.field, list(self.basis.entries) + [list(vec)])
        return stacked.rank() == self.dim

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(r) for r in other.basis.entries)

    def _check_ambient(self, other):
        if self.ambient != other.ambient:
            raise DimensionMismatch("subspaces live in different ambient spaces")

    def plus(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        rows = list(self.basis.entries) + list(other.basis.entries)
        return Subspace.from_rows(self.field, self.ambient, rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        # x in V cap W  <=>  x = a V = b W; solve [V^T | -W^T] null space.
        F = self.field
        vt = self.basis.transpose()
        wt = other.basis.transpose()
        ker = hstack([vt, -wt]).kernel()
        rows = []
        for kr in ker.entries:
            coeffs = Matrix.row(F, kr[: self.dim])
            rows.append((coeffs @ self.basis).entries[0])
        return Subspace.from_rows(F, self.ambient, rows)

    def complement_projection(self):
        """Projection onto non-pivot coordinates and its section.

        Returns (proj, section) with proj @ section = identity on the
        quotient and kernel(proj) = self; the quotient has dimension
        ambient - dim.
        """
        F = self.field
        pivots = self.basis.rref()[1]
        free = [c for c in range(self.ambient) if c not in pivots]
        q = len(free)
        # reduce a standard basis vector modulo self, then read free coords
        proj_rows = []
        for fi, c in enumerate(free):
            row = [F.zero()] * self.ambient
            row[c] = F.one()
            proj_rows.append(row)
        proj = Matrix(F, proj_rows, cols=self.ambient)
        if self.dim:
            # subtract the pivot-coordinate contribution described by the basis
            corr = [[F.zero()] * self.ambient for _ in range(q)]
            for fi, c in enumerate(free):
                for bi, pc in enumerate(pivots):
                    corr[fi][pc] = self.basis.entries[bi][c]
            proj = proj - Matrix(F, corr, cols=self.ambient)
        section = Matrix(F, [[F.one() if free[i] == r else F.zero() for i in range(q)]
                             for r in range(self.ambient)], cols=q)
        return proj, section
