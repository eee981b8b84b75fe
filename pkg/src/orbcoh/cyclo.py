"""Exact arithmetic in cyclotomic fields Q(zeta_N) and linear algebra over them.

Elements are stored in the power basis 1, zeta, ..., zeta^(d-1) with
d = deg Phi_N, as tuples of Fractions reduced mod Phi_N.  The representation
is canonical (Fraction keeps lowest terms with positive denominator), so
equality and hashing are coordinate-wise and elements can key dictionaries.
No floating point is used anywhere in this module.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import IncompatibleConductor, InternalInconsistency, NotFiniteOrder

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n (ascending, monic, integer).

    Computed by exact division of x^n - 1 by the product of Phi_d over the
    proper divisors d of n.
    """
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        if d != n:
            num = _int_poly_div_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _int_poly_div_exact(num, den):
    """Divide integer polynomials (den monic); remainder must vanish."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        quot[i - dd] = c
        if c:
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return quot


def _poly_divmod(num, den):
    """divmod for Fraction coefficient lists (den nonzero)."""
    num = list(num)
    while num and not num[-1]:
        num.pop()
    dd = len(den) - 1
    while dd >= 0 and not den[dd]:
        dd -= 1
    if dd < 0:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) - 1 < dd:
        return [], num
    lead = den[dd]
    quot = [_ZERO] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / lead
        quot[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    rem = num[:dd]
    while rem and not rem[-1]:
        rem.pop()
    return quot, rem


class CycField:
    """The field Q(zeta_N) presented as Q[x]/(Phi_N).

    Use get_field() so that fields are interned; two fields compare equal
    iff they have the same conductor.
    """

    def __init__(self, conductor: int):
        self.conductor = conductor
        self.phi = cyclotomic_polynomial(conductor)
        self.degree = len(self.phi) - 1
        self._reduction = self._power_rows()

    def _power_rows(self):
        # coordinates of zeta^k for k = d .. 2d-2, all a product can produce
        d = self.degree
        rows = []
        if d >= 1:
            cur = [Fraction(-c) for c in self.phi[:d]]
            rows.append(tuple(cur))
            for _ in range(d - 2):
                top = cur[d - 1]
                nxt = [top * rows[0][0]] + [cur[i - 1] + top * rows[0][i] for i in range(1, d)]
                rows.append(tuple(nxt))
                cur = nxt
        return tuple(rows)

    def reduce_poly(self, coeffs) -> tuple[Fraction, ...]:
        """Reduce an arbitrary coefficient list mod Phi_N to canonical coords."""
        _, rem = _poly_divmod([Fraction(c) for c in coeffs], [Fraction(c) for c in self.phi])
        rem = list(rem) + [_ZERO] * (self.degree - len(rem))
        return tuple(rem)

    def zero(self) -> CycNum:
        return CycNum(self, (_ZERO,) * self.degree)

    def one(self) -> CycNum:
        return self.from_rational(1)

    def from_rational(self, q) -> CycNum:
        coeffs = (Fraction(q),) + (_ZERO,) * (self.degree - 1)
        return CycNum(self, coeffs)

    def zeta(self, power: int = 1) -> CycNum:
        power %= self.conductor
        if power < self.degree:
            coeffs = tuple(_ONE if i == power else _ZERO for i in range(self.degree))
            return CycNum(self, coeffs)
        return CycNum(self, self.reduce_poly([0] * power + [1]))

    def element(self, coeffs) -> CycNum:
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.degree:
            raise ValueError(
                f"expected {self.degree} coordinates for conductor {self.conductor}, got {len(coeffs)}"
            )
        return CycNum(self, coeffs)

    def __eq__(self, other):
        return isinstance(other, CycField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("CycField", self.conductor))

    def __repr__(self):
        return f"CycField({self.conductor})"


@lru_cache(maxsize=None)
def get_field(conductor: int) -> CycField:
    return CycField(conductor)


class CycNum:
    """An element of Q(zeta_N) in canonical reduced coordinates."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.field != self.field:
                return None
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycNum(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        conv = [_ZERO] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        conv[i + j] += a * b
        out = conv[:d]
        red = self.field._reduction
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = red[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return CycNum(self.field, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def inv(self) -> CycNum:
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # gcd(a, Phi_N) = 1 since Phi_N is irreducible over Q
        r0 = [Fraction(c) for c in self.field.phi]
        r1 = list(self.coeffs)
        s0, s1 = [], [_ONE]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        while r0 and not r0[-1]:
            r0.pop()
        if len(r0) != 1:
            raise ArithmeticError("gcd with Phi_N is not constant")
        scale = 1 / r0[0]
        return CycNum(self.field, self.field.reduce_poly([c * scale for c in s0]))

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.conductor, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def embed(self, conductor: int) -> CycNum:
        """Image in Q(zeta_L) under zeta_N -> zeta_L^(L/N); requires N | L."""
        n = self.field.conductor
        if conductor % n:
            raise IncompatibleConductor(f"conductor {n} does not divide {conductor}")
        if conductor == n:
            return self
        target = get_field(conductor)
        step = conductor // n
        coeffs = [_ZERO] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            coeffs[i * step] = c
        return CycNum(target, target.reduce_poly(coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = "z" if i == 1 else f"z^{i}"
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"CycNum({self.field.conductor}; {body})"


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


class CycMatrix:
    """A dense matrix over a single cyclotomic field, row-major, immutable."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: CycField, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        for e in entries:
            if e.field != field:
                raise ValueError("all entries must share the matrix field")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, field: CycField, row_lists) -> CycMatrix:
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = []
        for r in row_lists:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(field, rows, cols, flat)

    @classmethod
    def identity(cls, field: CycField, n: int) -> CycMatrix:
        one, zero = field.one(), field.zero()
        return cls(field, n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> CycNum:
        return self.entries[i * self.cols + j]

    def row(self, i: int):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def __mul__(self, other):
        if isinstance(other, CycMatrix):
            if self.cols != other.rows or self.field != other.field:
                raise ValueError("incompatible matrix product")
            out = []
            for i in range(self.rows):
                ra = self.row(i)
                for j in range(other.cols):
                    acc = self.field.zero()
                    for k in range(self.cols):
                        a = ra[k]
                        if not a.is_zero():
                            acc = acc + a * other.entry(k, j)
                    out.append(acc)
            return CycMatrix(self.field, self.rows, other.cols, out)
        if isinstance(other, (int, Fraction, CycNum)):
            s = other if isinstance(other, CycNum) else self.field.from_rational(other)
            return CycMatrix(self.field, self.rows, self.cols, tuple(e * s for e in self.entries))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, CycMatrix) or (self.rows, self.cols) != (other.rows, other.cols):
            return NotImplemented
        return CycMatrix(
            self.field, self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other):
        if not isinstance(other, CycMatrix) or (self.rows, self.cols) != (other.rows, other.cols):
            return NotImplemented
        return CycMatrix(
            self.field, self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self):
        return CycMatrix(self.field, self.rows, self.cols, tuple(-a for a in self.entries))

    def __pow__(self, k: int):
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        out = CycMatrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field.conductor, self.rows, self.cols, self.entries))

    def is_identity(self) -> bool:
        return self == CycMatrix.identity(self.field, self.rows)

    def trace(self) -> CycNum:
        acc = self.field.zero()
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entry(i, i)
        return acc

    def det(self) -> CycNum:
        """Exact determinant by Gaussian elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        rows = [list(self.row(i)) for i in range(n)]
        det = self.field.one()
        for c in range(n):
            p = next((i for i in range(c, n) if not rows[i][c].is_zero()), None)
            if p is None:
                return self.field.zero()
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = rows[c][c].inv()
            for i in range(c + 1, n):
                if not rows[i][c].is_zero():
                    f = rows[i][c] * inv
                    rows[i] = [rows[i][j] - f * rows[c][j] for j in range(n)]
        return det

    def embed(self, conductor: int) -> CycMatrix:
        field = get_field(conductor)
        return CycMatrix(field, self.rows, self.cols, tuple(e.embed(conductor) for e in self.entries))

    def __repr__(self):
        return f"CycMatrix({self.field.conductor}; {self.rows}x{self.cols})"


def vstack(matrices) -> CycMatrix:
    matrices = list(matrices)
    field, cols = matrices[0].field, matrices[0].cols
    flat = []
    for m in matrices:
        if m.cols != cols or m.field != field:
            raise ValueError("vstack needs matching widths and fields")
        flat.extend(m.entries)
    return CycMatrix(field, sum(m.rows for m in matrices), cols, flat)


def from_columns(field: CycField, columns, rows: int) -> CycMatrix:
    columns = list(columns)
    flat = []
    for i in range(rows):
        for col in columns:
            flat.append(col[i])
    return CycMatrix(field, rows, len(columns), flat)


def kernel_basis(m: CycMatrix):
    """Reduced-echelon kernel basis and rank, by exact Gaussian elimination.

    Each basis vector carries coordinate 1 at its free column and 0 at the
    other free columns, so coordinates w.r.t. the basis can be read off.
    """
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [rows[i][j] - f * rows[r][j] for j in range(m.cols)]
        pivots.append(c)
        r += 1
    rank = r
    pivot_set = set(pivots)
    zero, one = m.field.zero(), m.field.one()
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [zero] * m.cols
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(tuple(v))
    return basis, rank


def matrix_rank(m: CycMatrix) -> int:
    return kernel_basis(m)[1]


def matrix_order(m: CycMatrix, cap: int = 10_000) -> int:
    """Multiplicative order of m; raises NotFiniteOrder past the cap."""
    acc = m
    for k in range(1, cap + 1):
        if acc.is_identity():
            return k
        acc = acc * m
    raise NotFiniteOrder(f"no power up to {cap} equals the identity")


def eigenvalue_multiplicities(m: CycMatrix, order: int) -> list[int]:
    """Multiplicity of e^(2 pi i j/order) among the eigenvalues, j = 0..order-1.

    Requires m^order = I; each multiplicity is the kernel dimension of
    m - zeta^j computed over Q(zeta_lcm(N, order)).
    """
    if m.rows != m.cols:
        raise ValueError("eigenvalues of a non-square matrix")
    if not (m ** order).is_identity():
        raise NotFiniteOrder(f"matrix power {order} is not the identity")
    n = m.rows
    big = math.lcm(m.field.conductor, order)
    me = m.embed(big)
    field = get_field(big)
    mults = []
    for j in range(order):
        z = field.zeta(j * (big // order))
        shifted = me - CycMatrix.identity(field, n) * z
        mults.append(n - matrix_rank(shifted))
    if sum(mults) != n:
        raise InternalInconsistency("eigenvalue multiplicities do not sum to the dimension")
    return mults


def dft_multiplicities(m: CycMatrix, order: int) -> list[int]:
    """Eigenvalue multiplicities via the discrete Fourier formula.

    mult_j = (1/order) * sum_k trace(m^k) zeta^(-jk).  Retained as an
    independent cross-check for eigenvalue_multiplicities.
    """
    if not (m ** order).is_identity():
        raise NotFiniteOrder(f"matrix power {order} is not the identity")
    big = math.lcm(m.field.conductor, order)
    field = get_field(big)
    traces = []
    acc = CycMatrix.identity(m.field, m.rows)
    for _ in range(order):
        traces.append(acc.trace().embed(big))
        acc = acc * m
    out = []
    for j in range(order):
        s = field.zero()
        for k, t in enumerate(traces):
            s = s + t * field.zeta((-j * k) % order * (big // order))
        val = s.rational() / order
        if val.denominator != 1:
            raise InternalInconsistency("DFT multiplicity is not an integer")
        out.append(int(val))
    return out
