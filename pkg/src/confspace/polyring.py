"""Exact sparse multivariate polynomial arithmetic over the integers.

Everything here is immutable and hashable, so values can be shared freely.
Coefficients are Python ints; rationals (``BigRational``) enter only at
evaluation points, never inside ring arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

BigRational = Fraction

# A monomial is a tuple of (variable, exponent) pairs, sorted by variable
# name, with all exponents > 0.  The empty tuple is the constant monomial.


def _mono_mul(m1, m2):
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in d.items() if e != 0))


def _mono_degree(m):
    return sum(e for _, e in m)


class MultiPoly:
    """Polynomial with integer coefficients in named variables.

    Internally a dict from monomial to nonzero coefficient.  The
    representation is canonical: no zero coefficients, no duplicate
    monomials, sorted exponent tuples.  Equal polynomials therefore
    compare and hash identically.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        clean = {}
        for mono, coeff in terms.items():
            if coeff:
                key = tuple(sorted((v, e) for v, e in mono if e != 0))
                clean[key] = clean.get(key, 0) + coeff
                if clean[key] == 0:
                    del clean[key]
        self._terms = clean
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls({(): int(c)})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.const(1)

    @classmethod
    def var(cls, name, exp=1):
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return cls.one()
        return cls({((name, exp),): 1})

    # -- inspection ------------------------------------------------------

    @property
    def terms(self):
        return self._terms

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self._terms.get((), 0)

    def variables(self):
        vs = set()
        for mono in self._terms:
            for v, _ in mono:
                vs.add(v)
        return sorted(vs)

    def total_degree(self):
        if not self._terms:
            return -1
        return max(_mono_degree(m) for m in self._terms)

    def degree_in(self, var):
        d = 0
        for mono in self._terms:
            for v, e in mono:
                if v == var:
                    d = max(d, e)
        return d

    def is_homogeneous(self, degree=None):
        if not self._terms:
            return True
        degs = {_mono_degree(m) for m in self._terms}
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def sorted_terms(self):
        """Terms in canonical graded-lexicographic order (leading first).

        Grading is by total degree; ties are broken lexicographically on
        the exponent vector taken over the sorted variable names.
        """
        all_vars = self.variables()

        def key(item):
            mono, _ = item
            d = dict(mono)
            return (_mono_degree(mono), tuple(d.get(v, 0) for v in all_vars))

        return sorted(self._terms.items(), key=key, reverse=True)

    # -- ring operations -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        res = MultiPoly.__new__(MultiPoly)
        res._terms = out
        res._hash = None
        return res

    __radd__ = __add__

    def __neg__(self):
        res = MultiPoly.__new__(MultiPoly)
        res._terms = {m: -c for m, c in self._terms.items()}
        res._hash = None
        return res

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return MultiPoly.zero()
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        res = MultiPoly.__new__(MultiPoly)
        res._terms = out
        res._hash = None
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- calculus and substitution ----------------------------------------

    def derivative(self, var):
        out = {}
        for mono, c in self._terms.items():
            d = dict(mono)
            e = d.get(var, 0)
            if e == 0:
                continue
            if e == 1:
                del d[var]
            else:
                d[var] = e - 1
            m = tuple(sorted(d.items()))
            out[m] = out.get(m, 0) + c * e
        return MultiPoly(out)

    def scalar_divide(self, k):
        """Divide every coefficient by the integer k; must be exact."""
        out = {}
        for mono, c in self._terms.items():
            q, r = divmod(c, k)
            if r:
                raise ValueError("coefficient %d not divisible by %d" % (c, k))
            out[mono] = q
        return MultiPoly(out)

    def substitute(self, mapping):
        """Substitute polynomials for variables; unmapped variables stay."""
        result = MultiPoly.zero()
        for mono, c in self._terms.items():
            term = MultiPoly.const(c)
            for v, e in mono:
                repl = mapping.get(v)
                if repl is None:
                    term = term * MultiPoly.var(v, e)
                else:
                    if isinstance(repl, int):
                        repl = MultiPoly.const(repl)
                    term = term * repl ** e
            result = result + term
        return result

    def evaluate(self, assignment):
        """Evaluate at a point with exact rational coordinates.

        Every variable of the polynomial must be assigned; a missing one
        raises a ValueError naming the variable.
        """
        total = Fraction(0)
        for mono, c in self._terms.items():
            val = Fraction(c)
            for v, e in mono:
                if v not in assignment:
                    raise ValueError("unassigned variable: %s" % v)
                val *= Fraction(assignment[v]) ** e
            total += val
        return total

    # -- exact division ----------------------------------------------------

    def _leading(self):
        items = self.sorted_terms()
        if not items:
            raise ZeroDivisionError("zero polynomial")
        return items[0]

    def exact_divide(self, divisor):
        """Exact polynomial division; raises ValueError if not exact."""
        if isinstance(divisor, int):
            return self.scalar_divide(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if divisor.is_constant():
            return self.scalar_divide(divisor.constant_value())
        rem = self
        quo = MultiPoly.zero()
        dm, dc = divisor._leading()
        dset = dict(dm)
        while not rem.is_zero():
            rm, rc = rem._leading()
            rset = dict(rm)
            mono = {}
            for v, e in dset.items():
                if rset.get(v, 0) < e:
                    raise ValueError("inexact polynomial division")
            for v, e in rset.items():
                k = e - dset.get(v, 0)
                if k:
                    mono[v] = k
            q, r = divmod(rc, dc)
            if r:
                raise ValueError("inexact polynomial division")
            t = MultiPoly({tuple(sorted(mono.items())): q})
            quo = quo + t
            rem = rem - t * divisor
        return quo

    # -- serialization ------------------------------------------------------

    def to_json_terms(self):
        """Canonically ordered [coefficient-string, {var: exp}] pairs."""
        return [[str(c), {v: e for v, e in mono}] for mono, c in self.sorted_terms()]

    @classmethod
    def from_json_terms(cls, data):
        terms = {}
        for coeff, expmap in data:
            mono = tuple(sorted((str(v), int(e)) for v, e in expmap.items()))
            terms[mono] = terms.get(mono, 0) + int(coeff)
        return cls(terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = "*".join(
                v if e == 1 else "%s^%d" % (v, e) for v, e in mono
            )
            if factors:
                parts.append("%d*%s" % (c, factors) if abs(c) != 1 else
                             ("-" + factors if c == -1 else factors))
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")


def poly_eval(p, assignment):
    """Evaluate p at a rational point; ring homomorphism in each argument."""
    return p.evaluate(assignment)


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ValueError("inexact integer division in elimination")
        return q
    if isinstance(a, int):
        a = MultiPoly.const(a)
    if isinstance(b, int):
        b = MultiPoly.const(b)
    return a.exact_divide(b)


def _is_zero(a):
    return a == 0 if isinstance(a, int) else a.is_zero()


def bareiss_det(matrix):
    """Fraction-free determinant of a square matrix.

    Entries may be ints or MultiPoly values (mixed is fine).  Uses the
    two-step Bareiss recurrence with row pivoting; every division is
    exact, so no fractions ever appear.
    """
    m = [list(row) for row in matrix]
    size = len(m)
    for row in m:
        if len(row) != size:
            raise ValueError("matrix is not square")
    if size == 0:
        return 1
    symbolic = any(isinstance(x, MultiPoly) for row in m for x in row)
    zero = MultiPoly.zero() if symbolic else 0
    sign = 1
    prev = 1
    for k in range(size - 1):
        if _is_zero(m[k][k]):
            pivot_row = None
            for i in range(k + 1, size):
                if not _is_zero(m[i][k]):
                    pivot_row = i
                    break
            if pivot_row is None:
                return zero
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = _exact_div(num, prev)
            m[i][k] = 0
        prev = m[k][k]
    det = m[size - 1][size - 1]
    if sign < 0:
        det = -det
    return det


# ---------------------------------------------------------------------------
# binary forms, resultants, discriminants
# ---------------------------------------------------------------------------


class BinaryForm:
    """Homogeneous form of degree n in (x, y) with polynomial coefficients.

    coeffs[i] multiplies x^(n-i) * y^i.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        coeffs = tuple(
            MultiPoly.const(c) if isinstance(c, int) else c for c in coeffs
        )
        if degree < 0:
            raise ValueError("degree must be non-negative")
        if len(coeffs) != degree + 1:
            raise ValueError("need exactly degree+1 coefficients")
        if all(c.is_zero() for c in coeffs):
            raise ValueError("the zero form is not a valid BinaryForm")
        self.degree = degree
        self.coeffs = coeffs

    def __eq__(self, other):
        return (
            isinstance(other, BinaryForm)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return "BinaryForm(%d, %r)" % (self.degree, list(self.coeffs))

    def multiply(self, other):
        n, m = self.degree, other.degree
        out = [MultiPoly.zero()] * (n + m + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BinaryForm(n + m, out)

    def x_derivative(self):
        # d/dx of sum c_i x^(n-i) y^i
        n = self.degree
        return [(n - i) * MultiPoly.one() * self.coeffs[i] for i in range(n)]

    def dehomogenized(self):
        """Coefficients of f(t, 1) from highest power of t down."""
        return list(self.coeffs)

    def discriminant(self):
        return discriminant_of(self.coeffs)

    def to_multipoly(self, x="x", y="y"):
        n = self.degree
        acc = MultiPoly.zero()
        for i, c in enumerate(self.coeffs):
            acc = acc + c * MultiPoly.var(x, n - i) * MultiPoly.var(y, i)
        return acc


def sylvester_matrix(f, g):
    """Sylvester matrix of two coefficient sequences (leading first)."""
    f = list(f)
    g = list(g)
    n = len(f) - 1
    m = len(g) - 1
    if n < 0 or m < 0:
        raise ValueError("empty coefficient sequence")
    size = n + m
    mat = [[0] * size for _ in range(size)]
    for r in range(m):
        for j, c in enumerate(f):
            mat[r][r + j] = c
    for r in range(n):
        for j, c in enumerate(g):
            mat[m + r][r + j] = c
    return mat


def resultant(f, g):
    """Sylvester resultant of two forms or coefficient sequences.

    Zero iff the inputs share a projective root over the closure.
    """
    fc = f.coeffs if isinstance(f, BinaryForm) else list(f)
    gc = g.coeffs if isinstance(g, BinaryForm) else list(g)
    if all(_is_zero(c) for c in fc) or all(_is_zero(c) for c in gc):
        raise ValueError("resultant of the zero polynomial is undefined")
    if len(fc) < 2 or len(gc) < 2:
        raise ValueError("resultant needs degrees >= 1")
    return bareiss_det(sylvester_matrix(fc, gc))


def _disc_matrix(coeffs):
    """Discriminant determinant matrix for a degree-n coefficient sequence.

    This is the Sylvester matrix of the form and its x-derivative with the
    leading coefficient factored out of the first column, so the
    determinant is homogeneous of degree 2(n-1) in the coefficients and no
    division is needed even when the leading coefficient vanishes.
    """
    coeffs = list(coeffs)
    n = len(coeffs) - 1
    if n < 1:
        raise ValueError("degree must be at least 1")
    deriv = [(n - i) * c if isinstance(c, int) else c * (n - i)
             for i, c in enumerate(coeffs[:-1])]
    mat = sylvester_matrix(coeffs, deriv)
    one = 1 if isinstance(coeffs[0], int) else MultiPoly.one()
    mat[0][0] = one
    mat[n - 1][0] = n * one if isinstance(one, int) else one * n
    return mat


def discriminant_of(coeffs):
    """Discriminant of the binary form with the given coefficients.

    Sign convention comes from the factored Sylvester determinant: for
    t^2 + w1*t + w2 this yields 4*w2 - w1^2.
    """
    return bareiss_det(_disc_matrix(coeffs))


@lru_cache(maxsize=None)
def discriminant_projective(n):
    """Discriminant of the generic degree-n binary form, in z_0..z_n.

    Homogeneous of degree 2(n-1).  Supported for n >= 2.
    """
    if n < 2:
        raise ValueError("unsupported degree: n must be >= 2")
    zs = [MultiPoly.var("z%d" % i) for i in range(n + 1)]
    return discriminant_of(zs)


@lru_cache(maxsize=None)
def discriminant_monic(n):
    """Discriminant of t^n + w_1 t^(n-1) + ... + w_n, in w_1..w_n."""
    if n < 2:
        raise ValueError("unsupported degree: n must be >= 2")
    ws = [MultiPoly.one()] + [MultiPoly.var("w%d" % i) for i in range(1, n + 1)]
    return discriminant_of(ws)


# ---------------------------------------------------------------------------
# fast univariate integer paths
# ---------------------------------------------------------------------------


def _int_poly_trim(p):
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return p[i:]


def _int_poly_prem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, leading first."""
    d = len(a) - len(b)
    lb = b[0]
    r = list(a)
    steps = 0
    while len(r) >= len(b):
        lr = r[0]
        r = [lb * c for c in r[1:]]
        for i in range(len(b) - 1):
            r[i] -= lr * b[i + 1]
        r = _int_poly_trim(r)
        steps += 1
    if steps < d + 1:
        scale = lb ** (d + 1 - steps)
        r = [c * scale for c in r]
    return r


def resultant_int(f, g):
    """Resultant of two integer polynomials (coefficients leading first).

    Subresultant remainder-sequence computation; agrees exactly with the
    Sylvester determinant, which the tests check against bareiss_det.
    """
    f = _int_poly_trim(list(f))
    g = _int_poly_trim(list(g))
    if not f or not g:
        raise ValueError("resultant of the zero polynomial is undefined")
    n, m = len(f) - 1, len(g) - 1
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    s = 1
    a, b = f, g
    if n < m:
        a, b = b, a
        if n % 2 == 1 and m % 2 == 1:
            s = -s
    gg = 1
    h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = _int_poly_prem(a, b)
        if not r:
            return 0  # positive-degree common factor
        a = b
        denom = gg * h ** delta
        b = [c // denom for c in r]
        gg = a[0]
        if delta == 1:
            h = gg
        elif delta > 1:
            h = gg ** delta // h ** (delta - 1)
        if len(b) == 1:
            da = len(a) - 1
            return s * (b[0] ** da // h ** (da - 1))


def discriminant_int(coeffs):
    """Value of the discriminant polynomial at integer coefficients.

    Matches discriminant_of exactly, including at points where the
    leading coefficient vanishes (falls back to the determinant there).
    """
    coeffs = list(coeffs)
    n = len(coeffs) - 1
    if coeffs[0] == 0:
        return bareiss_det(_disc_matrix(coeffs))
    deriv = [(n - i) * c for i, c in enumerate(coeffs[:-1])]
    res = resultant_int(coeffs, deriv)
    q, r = divmod(res, coeffs[0])
    if r:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return q
