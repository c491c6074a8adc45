"""Square matrices over the split-quaternion tensor algebra.

Entries are :class:`~splitconf.algebra.TensorScalar` values; the
matrix product inlines the eight-coefficient scalar product so the hot
loops stay flat.  Exponentials are only provided for the two shapes
that close in this algebra, generators squaring to a multiple of the
identity and nilpotent generators squaring to zero, both checked
exactly before use.
"""

from fractions import Fraction

from .algebra import _MUL, ONE, TensorScalar, ZERO, is_exact

__all__ = [
    "TensorMatrix",
    "exp_involutory",
    "exp_nilpotent",
    "trace_product",
    "quadratic_form",
    "kron",
]

_Z8 = (0,) * 8


class TensorMatrix:
    """A square matrix with TensorScalar entries.

    Immutable by convention: methods return new matrices.  ``rows`` is
    a tuple of tuples of TensorScalar.
    """

    __slots__ = ("rows", "n")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
        self.rows = rows
        self.n = n

    @classmethod
    def identity(cls, n):
        return cls(
            tuple(
                tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
            )
        )

    @classmethod
    def zeros(cls, n):
        return cls(tuple(tuple(ZERO for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_blocks(cls, tl, tr, bl, br):
        """Assemble [[tl, tr], [bl, br]] from four equal-size blocks."""
        n = tl.n
        if not (tr.n == bl.n == br.n == n):
            raise ValueError("blocks must share one size")
        rows = []
        for i in range(n):
            rows.append(tl.rows[i] + tr.rows[i])
        for i in range(n):
            rows.append(bl.rows[i] + br.rows[i])
        return cls(rows)

    def blocks(self):
        """Split an even-size matrix back into (tl, tr, bl, br)."""
        if self.n % 2:
            raise ValueError("matrix size must be even")
        h = self.n // 2
        tl = TensorMatrix(tuple(r[:h] for r in self.rows[:h]))
        tr = TensorMatrix(tuple(r[h:] for r in self.rows[:h]))
        bl = TensorMatrix(tuple(r[:h] for r in self.rows[h:]))
        br = TensorMatrix(tuple(r[h:] for r in self.rows[h:]))
        return tl, tr, bl, br

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        if not isinstance(other, TensorMatrix):
            return NotImplemented
        return TensorMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other):
        if not isinstance(other, TensorMatrix):
            return NotImplemented
        return TensorMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __neg__(self):
        return TensorMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __matmul__(self, other):
        if not isinstance(other, TensorMatrix):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("size mismatch")
        n = self.n
        # Column-major view of other, as raw coefficient tuples.
        bcols = [
            [
                other.rows[k][j].coeffs if other.rows[k][j].nonzero else None
                for k in range(n)
            ]
            for j in range(n)
        ]
        arows = [[e.coeffs if e.nonzero else None for e in r] for r in self.rows]
        out_rows = []
        for i in range(n):
            arow = arows[i]
            out_row = []
            for j in range(n):
                bcol = bcols[j]
                acc = None
                for k in range(n):
                    a = arow[k]
                    if a is None:
                        continue
                    b = bcol[k]
                    if b is None:
                        continue
                    for p in range(8):
                        ap = a[p]
                        if ap:
                            row = _MUL[p]
                            for q in range(8):
                                bq = b[q]
                                if bq:
                                    if acc is None:
                                        acc = [0] * 8
                                    t, sgn = row[q]
                                    if sgn > 0:
                                        acc[t] = acc[t] + ap * bq
                                    else:
                                        acc[t] = acc[t] - ap * bq
                out_row.append(ZERO if acc is None else TensorScalar(acc))
            out_rows.append(tuple(out_row))
        return TensorMatrix(tuple(out_rows))

    def scale(self, s):
        """Multiply every entry by s on the left (TensorScalar or number)."""
        if isinstance(s, TensorScalar):
            return TensorMatrix(
                tuple(tuple(s * a for a in r) for r in self.rows)
            )
        return TensorMatrix(tuple(tuple(a * s for a in r) for r in self.rows))

    def __rmul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return self.scale(other)
        return NotImplemented

    def transpose(self):
        return TensorMatrix(tuple(zip(*self.rows)))

    def bar(self):
        """Entrywise complex conjugation (l -> -l)."""
        return TensorMatrix(tuple(tuple(a.bar() for a in r) for r in self.rows))

    def is_c_hermitian(self, tol=0):
        """True when the matrix equals its transpose with bar applied entrywise."""
        for i in range(self.n):
            for j in range(self.n):
                if not self.rows[i][j].approx_eq(self.rows[j][i].bar(), tol):
                    return False
        return True

    def star(self):
        """Entrywise split-quaternion conjugation (K, KL, L negated)."""
        return TensorMatrix(tuple(tuple(a.star() for a in r) for r in self.rows))

    def trace(self):
        t = ZERO
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t

    def trace_reversed(self):
        """Trace reversal: the matrix minus its trace times the identity."""
        t = self.trace()
        return TensorMatrix(
            tuple(
                tuple(
                    self.rows[i][j] - t if i == j else self.rows[i][j]
                    for j in range(self.n)
                )
                for i in range(self.n)
            )
        )

    def is_zero(self):
        return all(not a.nonzero for r in self.rows for a in r)

    def max_abs(self):
        m = 0
        for r in self.rows:
            for a in r:
                v = a.max_abs()
                if v > m:
                    m = v
        return m

    def approx_eq(self, other, tol):
        return (self - other).max_abs() <= tol

    def is_scalar_multiple(self, tol=0):
        """Return (True, s) when the matrix is s*I within tol, else (False, None)."""
        s = self.rows[0][0]
        for i in range(self.n):
            for j in range(self.n):
                target = s if i == j else ZERO
                if not self.rows[i][j].approx_eq(target, tol):
                    return False, None
        return True, s

    def to_dict(self):
        return [[a.to_dict() for a in r] for r in self.rows]

    @classmethod
    def from_dict(cls, data):
        return cls(
            tuple(tuple(TensorScalar.from_dict(d) for d in r) for r in data)
        )

    def __eq__(self, other):
        if not isinstance(other, TensorMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        cells = [[str(a) for a in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        lines = []
        for r in cells:
            lines.append("[ " + " | ".join(c.rjust(width) for c in r) + " ]")
        return "\n".join(lines)

    def __repr__(self):
        return "TensorMatrix(%dx%d)" % (self.n, self.n)


def trace_product(a, b):
    """trace(a @ b) without forming the full product."""
    if a.n != b.n:
        raise ValueError("size mismatch")
    n = a.n
    acc = [0] * 8
    touched = False
    for i in range(n):
        arow = a.rows[i]
        for k in range(n):
            x = arow[k]
            if not x.nonzero:
                continue
            y = b.rows[k][i]
            if not y.nonzero:
                continue
            touched = True
            xc, yc = x.coeffs, y.coeffs
            for p in range(8):
                xp = xc[p]
                if xp:
                    row = _MUL[p]
                    for q in range(8):
                        yq = yc[q]
                        if yq:
                            t, sgn = row[q]
                            if sgn > 0:
                                acc[t] = acc[t] + xp * yq
                            else:
                                acc[t] = acc[t] - xp * yq
    return TensorScalar(acc) if touched else ZERO


def _sincosh(theta, hyperbolic):
    import math

    if hyperbolic:
        if is_exact(theta) and theta == 0:
            return 1, 0
        return math.cosh(theta), math.sinh(theta)
    if is_exact(theta) and theta == 0:
        return 1, 0
    return math.cos(theta), math.sin(theta)


def exp_involutory(gen, theta):
    """exp(gen * theta) for gen with gen @ gen == +I or -I (checked exactly).

    Squares to +I: cosh(theta) I + sinh(theta) gen.
    Squares to -I: cos(theta) I + sin(theta) gen.
    """
    sq = gen @ gen
    n = gen.n
    ident = TensorMatrix.identity(n)
    if sq == ident:
        c, s = _sincosh(theta, True)
    elif sq == -ident:
        c, s = _sincosh(theta, False)
    else:
        raise ValueError("generator must square to +I or -I exactly")
    return ident.scale(c) + gen.scale(s)


def exp_nilpotent(gen, theta):
    """exp(gen * theta) for gen with gen @ gen == 0 (checked exactly)."""
    if not (gen @ gen).is_zero():
        raise ValueError("generator must square to zero exactly")
    return TensorMatrix.identity(gen.n) + gen.scale(theta)


def kron(a, b):
    """Kronecker product of real matrices, row-major block convention."""
    import numpy as np

    return np.kron(np.asarray(a), np.asarray(b))


def quadratic_form(x, tol=1e-9):
    """The scalar s with x @ x.trace_reversed() == s * I, for 2x2 x.

    Raises ValueError when the product is not a real scalar multiple of
    the identity to within tol.
    """
    if x.n != 2:
        raise ValueError("expected a 2x2 matrix")
    prod = x @ x.trace_reversed()
    s = prod.rows[0][0]
    use_tol = 0 if all(is_exact(c) for r in x.rows for a in r for c in a.coeffs) else tol
    if not s.is_real_scalar(use_tol):
        raise ValueError("product is not a real scalar: %s" % (s,))
    ok, _ = prod.is_scalar_multiple(use_tol)
    if not ok:
        raise ValueError("product is not a multiple of the identity")
    return s.scalar_part()
