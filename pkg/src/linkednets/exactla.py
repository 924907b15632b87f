"""Exact linear algebra over the rationals, prime fields and Q(t).

Everything here is exact: no floating point ever enters a matrix.  Matrices
are immutable row-major tuples; subspaces carry a basis in reduced row echelon
form so that two subspaces are equal exactly when their bases are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Iterable, Sequence


class DimensionMismatch(ValueError):
    pass


class PoleAtZero(ValueError):
    def __init__(self, row: int, col: int, entry):
        super().__init__(f"entry ({row}, {col}) = {entry} has a pole at t=0")
        self.row = row
        self.col = col


# ---------------------------------------------------------------------------
# Prime field elements


class Fp:
    """An element of the prime field Z/pZ."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixing different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.p) / self

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


# ---------------------------------------------------------------------------
# Polynomials over Q (tuples of Fractions, lowest degree first) and Q(t)


def _ptrim(c: Sequence[Fraction]) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        a = list(_ptrim(a))
    return _ptrim(q), tuple(a)


def _pgcd(a, b):
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if not a:
        return ()
    lead = a[-1]
    return tuple(x / lead for x in a)


class RatFunc:
    """A reduced fraction of polynomials in t with rational coefficients.

    The denominator is monic and coprime to the numerator, so equality of
    representations is equality of functions.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(Fraction(1),), _reduced=False):
        num = _ptrim(Fraction(x) for x in num)
        den = _ptrim(Fraction(x) for x in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (Fraction(1),)
            return
        if not _reduced:
            g = _pgcd(num, den)
            if len(g) > 1:
                num, _ = _pdivmod(num, g)
                den, _ = _pdivmod(den, g)
            lead = den[-1]
            if lead != 1:
                num = tuple(x / lead for x in num)
                den = tuple(x / lead for x in den)
        self.num, self.den = num, den

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls((Fraction(c),))

    @classmethod
    def t(cls) -> "RatFunc":
        return cls((Fraction(0), Fraction(1)), _reduced=True)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(_padd(self.num, o.num), self.den)
        return RatFunc(_padd(_pmul(self.num, o.den), _pmul(o.num, self.den)), _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return RatFunc()
        return RatFunc(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.num:
            raise ZeroDivisionError("division by zero in Q(t)")
        return RatFunc(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o / self

    def __pow__(self, k: int):
        out = RatFunc.const(1)
        base = self if k >= 0 else RatFunc.const(1) / self
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def has_pole_at_zero(self) -> bool:
        return self.den[0] == 0

    def at_zero(self) -> Fraction:
        if self.has_pole_at_zero():
            raise ZeroDivisionError("pole at t=0")
        return (self.num[0] if self.num else Fraction(0)) / self.den[0]

    def __repr__(self):
        return f"RatFunc({_fmt_poly(self.num)}|{_fmt_poly(self.den)})"

    def __str__(self):
        return f"{_fmt_poly(self.num)}|{_fmt_poly(self.den)}"


def _fmt_poly(c) -> str:
    return ",".join(str(x) for x in c) if c else "0"


# ---------------------------------------------------------------------------
# Fields


@dataclass(frozen=True)
class Field:
    """Base class of the three supported fields.  Instances are the FieldSpec."""

    kind: ClassVar[str] = ""

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, s: str):
        raise NotImplementedError

    def format(self, x) -> str:
        return str(self(x))

    def to_json(self) -> dict:
        return {"kind": self.kind}

    @staticmethod
    def from_json(d: dict) -> "Field":
        kind = d["kind"]
        if kind == "rationals":
            return QQ
        if kind == "prime_field":
            return PrimeField(int(d["p"]))
        if kind == "rational_functions_t":
            return QT
        raise ValueError(f"unknown field kind {kind!r}")


@dataclass(frozen=True)
class Rationals(Field):
    kind: ClassVar[str] = "rationals"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into the rationals")

    def parse(self, s: str):
        return Fraction(s.strip())

    def __repr__(self):
        return "QQ"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField(Field):
    p: int = 2
    kind: ClassVar[str] = "prime_field"

    def __post_init__(self):
        if not (_is_prime(self.p) and self.p <= 2**31):
            raise ValueError(f"{self.p} is not a prime at most 2^31")

    def __call__(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise ValueError("element of a different prime field")
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no reduction mod {self.p}")
            return Fp(x.numerator * pow(x.denominator, -1, self.p), self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def parse(self, s: str):
        return self(Fraction(s.strip()))

    def elements(self):
        return [Fp(i, self.p) for i in range(self.p)]

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": self.p}

    def __repr__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class RationalFunctions(Field):
    kind: ClassVar[str] = "rational_functions_t"

    def __call__(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into Q(t)")

    @property
    def t(self) -> RatFunc:
        return RatFunc.t()

    def parse(self, s: str):
        if "|" in s:
            num, den = s.split("|")
        else:
            num, den = s, "1"
        return RatFunc([Fraction(c) for c in num.split(",")], [Fraction(c) for c in den.split(",")])

    def __repr__(self):
        return "QQ(t)"


QQ = Rationals()
QT = RationalFunctions()


# ---------------------------------------------------------------------------
# Matrices


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Iterable], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix rows")
        return cls(field, rows, ncols)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def diag(cls, field: Field, entries: Sequence) -> "Matrix":
        n = len(entries)
        z = field.zero
        return cls(field, tuple(tuple(field(entries[i]) if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        return cls.from_rows(field, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def columns(self) -> list[tuple]:
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(self.columns()), self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot compose {self.shape} with {other.shape}")
        z = self.field.zero
        cols = other.columns()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = z
                for x, y in zip(r, c):
                    if x and y:
                        s = s + x * y
                row.append(s)
            out.append(tuple(row))
        return Matrix(self.field, tuple(out), other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch("shape mismatch in addition")
        return Matrix(self.field, tuple(tuple(x + y for x, y in zip(a, b)) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, tuple(tuple(-x for x in r) for r in self.rows), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, tuple(tuple(c * x for x in r) for r in self.rows), self.ncols)

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector length does not match matrix columns")
        z = self.field.zero
        out = []
        for r in self.rows:
            s = z
            for x, y in zip(r, vec):
                if x and y:
                    s = s + x * y
            out.append(s)
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def map_entries(self, f, field: Field | None = None) -> "Matrix":
        field = field or self.field
        return Matrix(field, tuple(tuple(f(x) for x in r) for r in self.rows), self.ncols)

    def to_strings(self) -> list[list[str]]:
        return [[self.field.format(x) for x in r] for r in self.rows]

    def __repr__(self):
        return f"Matrix({self.to_strings()})"


def vstack(mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise ValueError("nothing to stack")
    ncols = mats[0].ncols
    if any(m.ncols != ncols for m in mats):
        raise DimensionMismatch("vstack needs equal column counts")
    return Matrix(mats[0].field, tuple(r for m in mats for r in m.rows), ncols)


def hstack(mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise ValueError("nothing to stack")
    nrows = mats[0].nrows
    if any(m.nrows != nrows for m in mats):
        raise DimensionMismatch("hstack needs equal row counts")
    rows = tuple(tuple(x for m in mats for x in m.rows[i]) for i in range(nrows))
    return Matrix(mats[0].field, rows, sum(m.ncols for m in mats))


def block_diag(mats: Sequence[Matrix], field: Field) -> Matrix:
    nr = sum(m.nrows for m in mats)
    nc = sum(m.ncols for m in mats)
    z = field.zero
    rows = []
    c0 = 0
    for m in mats:
        for r in m.rows:
            rows.append((z,) * c0 + tuple(r) + (z,) * (nc - c0 - m.ncols))
        c0 += m.ncols
    return Matrix(field, tuple(rows), nc) if nr else Matrix(field, (), nc)


# ---------------------------------------------------------------------------
# Gaussian elimination


def rref(rows: Sequence[Sequence], ncols: int, field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    pr = 0
    for c in range(ncols):
        piv = None
        for i in range(pr, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        inv = field.one / m[pr][c]
        m[pr] = [x * inv for x in m[pr]]
        for i in range(len(m)):
            if i != pr and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[pr])]
        pivots.append(c)
        pr += 1
        if pr == len(m):
            break
    return m[:pr], pivots


def rank(M: Matrix) -> int:
    return len(rref(M.rows, M.ncols, M.field)[1])


def is_epi(M: Matrix) -> bool:
    return rank(M) == M.nrows


def is_mono(M: Matrix) -> bool:
    return rank(M) == M.ncols


def is_iso(M: Matrix) -> bool:
    return M.nrows == M.ncols and rank(M) == M.ncols


def inverse(M: Matrix) -> Matrix:
    n = M.nrows
    if M.ncols != n:
        raise DimensionMismatch("only square matrices are invertible")
    aug = [list(r) + list(e) for r, e in zip(M.rows, Matrix.identity(M.field, n).rows)]
    red, piv = rref(aug, 2 * n, M.field)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return Matrix(M.field, tuple(tuple(r[n:]) for r in red), n)


def compose(A: Matrix, B: Matrix) -> Matrix:
    """A after B."""
    return A @ B


# ---------------------------------------------------------------------------
# Subspaces


@dataclass(frozen=True)
class Subspace:
    field: Field
    ambient: int
    basis: tuple  # rows of an RREF matrix

    @classmethod
    def span(cls, field: Field, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [tuple(field(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise DimensionMismatch("vector length does not match ambient dimension")
        red, _ = rref(vecs, ambient, field)
        return cls(field, ambient, tuple(tuple(r) for r in red))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, Matrix.identity(field, ambient).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, vec) -> bool:
        return Subspace.span(self.field, self.ambient, list(self.basis) + [vec]).dim == self.dim

    def __le__(self, other: "Subspace") -> bool:
        return (self + other).dim == other.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionMismatch("subspaces of different ambient spaces")
        return Subspace.span(self.field, self.ambient, list(self.basis) + list(other.basis))

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def annihilator(self) -> "Subspace":
        if not self.basis:
            return Subspace.full(self.field, self.ambient)
        return kernel(Matrix(self.field, self.basis, self.ambient))

    def image_under(self, M: Matrix) -> "Subspace":
        if M.ncols != self.ambient:
            raise DimensionMismatch("map does not act on this subspace")
        return Subspace.span(self.field, M.nrows, [M.apply(b) for b in self.basis])

    def complement(self) -> "Subspace":
        """Canonical complement spanned by unit vectors off the pivot columns."""
        pivots = set()
        for r in self.basis:
            pivots.add(next(j for j, x in enumerate(r) if x))
        z, o = self.field.zero, self.field.one
        units = [tuple(o if j == c else z for j in range(self.ambient)) for c in range(self.ambient) if c not in pivots]
        return Subspace.span(self.field, self.ambient, units)


def kernel(M: Matrix) -> Subspace:
    red, piv = rref(M.rows, M.ncols, M.field)
    free = [c for c in range(M.ncols) if c not in piv]
    z, o = M.field.zero, M.field.one
    vecs = []
    for f in free:
        v = [z] * M.ncols
        v[f] = o
        for r, pc in zip(red, piv):
            v[pc] = -r[f]
        vecs.append(v)
    return Subspace.span(M.field, M.ncols, vecs)


def image(M: Matrix) -> Subspace:
    return Subspace.span(M.field, M.nrows, M.columns())


def intersect(S1: Subspace, S2: Subspace) -> Subspace:
    if S1.ambient != S2.ambient:
        raise DimensionMismatch("subspaces of different ambient spaces")
    return (S1.annihilator() + S2.annihilator()).annihilator()


def scalar_multiple_of(A: Matrix, B: Matrix):
    """Return c with A == c*B, or None.  The zero scalar is allowed."""
    if A.shape != B.shape:
        raise DimensionMismatch("scalar_multiple_of needs equal shapes")
    f = A.field
    c = None
    for ra, rb in zip(A.rows, B.rows):
        for a, b in zip(ra, rb):
            if b:
                if c is None:
                    c = a / b
                    break
        if c is not None:
            break
    if c is None:
        return f.zero if A.is_zero() else None
    for ra, rb in zip(A.rows, B.rows):
        for a, b in zip(ra, rb):
            if a != c * b:
                return None
    return c


def specialize_t0(M: Matrix) -> Matrix:
    """Evaluate a Q(t) matrix at t=0."""
    rows = []
    for i, r in enumerate(M.rows):
        row = []
        for j, x in enumerate(r):
            if x.has_pole_at_zero():
                raise PoleAtZero(i, j, x)
            row.append(x.at_zero())
        rows.append(tuple(row))
    return Matrix(QQ, tuple(rows), M.ncols)


def change_field(M: Matrix, field: Field) -> Matrix:
    """Coerce every entry of M into another field (e.g. reduce Q mod p)."""
    return M.map_entries(field, field)
