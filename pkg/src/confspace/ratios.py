"""Simple and cross ratios of marked points and their divisibility complexes.

Vertices are the rational functions (q_k-q_i)/(q_k-q_j) on three marks and
(q_l-q_i)(q_j-q_k)/((q_l-q_j)(q_i-q_k)) on four marks; a vertex divides
another when their quotient is again such a function.  Pairwise divisors
span simplices; the complexes here are the flag complexes of that relation,
together with the symmetric-group action, orbit normal forms, the function
catalogue on doubly punctured planes, and a brute-force search for
three-term product identities.

A subtlety the pure-family complexes depend on: two simple ratios sharing
both base marks but not the top mark (sr_ijk and sr_ijl) have a cross ratio
as quotient.  Such pairs are divisible in the full catalogue sense (family
"l" keeps them, and divides_oracle/divides_rule report them), but they are
not edges of the pure "sr" complex, whose simplices all share a numerator
or a denominator.  The "cr" complex is identical under both readings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polyring import MultiPoly
from . import homology

SR = "sr"
CR = "cr"
FAMILIES = (SR, CR, "l")


class CapacityError(RuntimeError):
    """Raised when an exhaustive search would exceed its supported range."""


def klein_canonical(indices):
    """Lexicographically smallest tuple in the 4-element stabilizer orbit."""
    i, j, k, l = indices
    return min([(i, j, k, l), (j, i, l, k), (k, l, i, j), (l, k, j, i)])


@dataclass(frozen=True, order=True)
class RatioVertex:
    kind: str
    indices: tuple

    def __post_init__(self):
        if self.kind not in (SR, CR):
            raise ValueError("kind must be 'sr' or 'cr'")
        want = 3 if self.kind == SR else 4
        if len(self.indices) != want:
            raise ValueError("%s vertex needs %d indices" % (self.kind, want))
        if len(set(self.indices)) != want:
            raise ValueError("indices must be pairwise distinct")
        if any(i < 1 for i in self.indices):
            raise ValueError("indices must be positive")
        if self.kind == CR and klein_canonical(self.indices) != self.indices:
            raise ValueError("cross-ratio indices must be Klein-canonical")

    @property
    def support(self):
        return frozenset(self.indices)


def sr_vertex(i, j, k):
    return RatioVertex(SR, (i, j, k))


def cr_vertex(i, j, k, l):
    return RatioVertex(CR, klein_canonical((i, j, k, l)))


@dataclass(frozen=True)
class DiffProduct:
    """A signed product of powers of mark differences.

    Represents scalar * prod (q_a - q_b)^e over ordered pairs a < b; the
    reorientation q_b - q_a = -(q_a - q_b) is folded into the scalar.
    """

    scalar: int
    powers: tuple  # sorted tuple of ((a, b), e) with a < b and e != 0

    def __post_init__(self):
        if self.scalar not in (1, -1):
            raise ValueError("scalar must be +1 or -1")

    @classmethod
    def from_factors(cls, factors):
        """Build from oriented factors ((top, bottom), exponent)."""
        sign = 1
        powers = {}
        for (a, b), e in factors:
            if a == b:
                raise ValueError("degenerate difference")
            if a > b:
                a, b = b, a
                if e % 2:
                    sign = -sign
            powers[(a, b)] = powers.get((a, b), 0) + e
        cleaned = tuple(sorted((p, e) for p, e in powers.items() if e != 0))
        return cls(sign, cleaned)

    def __mul__(self, other):
        merged = {}
        for p, e in self.powers:
            merged[p] = merged.get(p, 0) + e
        for p, e in other.powers:
            merged[p] = merged.get(p, 0) + e
        cleaned = tuple(sorted((p, e) for p, e in merged.items() if e != 0))
        return DiffProduct(self.scalar * other.scalar, cleaned)

    def inverse(self):
        return DiffProduct(self.scalar,
                           tuple((p, -e) for p, e in self.powers))

    def divide(self, other):
        return self * other.inverse()

    @property
    def support(self):
        out = set()
        for (a, b), _ in self.powers:
            out.add(a)
            out.add(b)
        return frozenset(out)

    def evaluate(self, values):
        """Exact value at a point; indices map to Fractions."""
        acc = Fraction(self.scalar)
        for (a, b), e in self.powers:
            d = Fraction(values[a]) - Fraction(values[b])
            if d == 0:
                raise ZeroDivisionError("marks %d and %d collide" % (a, b))
            acc *= d ** e
        return acc


def as_diff_product(v):
    """Exact signed exponent-vector form of a vertex; injective."""
    if v.kind == SR:
        i, j, k = v.indices
        factors = [((k, i), 1), ((k, j), -1)]
    else:
        i, j, k, l = v.indices
        factors = [((l, i), 1), ((j, k), 1), ((l, j), -1), ((i, k), -1)]
    return DiffProduct.from_factors(factors)


def _vertex_from_diff_product(dp):
    """The catalogue vertex equal to dp, or None."""
    powers = dict(dp.powers)
    if len(powers) == 2:
        plus = [p for p, e in powers.items() if e == 1]
        minus = [p for p, e in powers.items() if e == -1]
        if len(plus) != 1 or len(minus) != 1:
            return None
        common = set(plus[0]) & set(minus[0])
        if len(common) != 1:
            return None
        k = common.pop()
        i = next(x for x in plus[0] if x != k)
        j = next(x for x in minus[0] if x != k)
        cand = sr_vertex(i, j, k)
        return cand if as_diff_product(cand) == dp else None
    if len(powers) == 4:
        plus = [p for p, e in powers.items() if e == 1]
        minus = [p for p, e in powers.items() if e == -1]
        if len(plus) != 2 or len(minus) != 2:
            return None
        for pair in plus:
            for i, l in (pair, pair[::-1]):
                mk = [p for p in minus if i in p]
                ml = [p for p in minus if l in p]
                if len(mk) != 1 or len(ml) != 1:
                    continue
                k = next(x for x in mk[0] if x != i)
                j = next(x for x in ml[0] if x != l)
                if len({i, j, k, l}) != 4:
                    continue
                cand = cr_vertex(i, j, k, l)
                if as_diff_product(cand) == dp:
                    return cand
        return None
    return None


def divides_oracle(nu, mu):
    """True iff mu/nu is again a catalogue function (exact, signed)."""
    if nu == mu:
        raise ValueError("divisibility is defined on distinct vertices")
    q = as_diff_product(mu).divide(as_diff_product(nu))
    return _vertex_from_diff_product(q) is not None


def _cr_slot4_frame(t, odd):
    """Klein representative of tuple t with index ``odd`` in slot 4."""
    i, j, k, l = t
    for rep in ((i, j, k, l), (j, i, l, k), (k, l, i, j), (l, k, j, i)):
        if rep[3] == odd:
            return rep[:3]
    raise ValueError("index not in tuple")


def _sr_divisors_of_cr(cr):
    a, b, c, d = cr.indices
    return {(a, b, d), (b, a, c), (d, c, a), (c, d, b)}


def divides_rule(nu, mu):
    """Index-replacement divisibility criterion; equals divides_oracle.

    Simple/simple pairs divide when they share the top mark and exactly
    one base mark (simple-ratio quotient) or share both base marks with
    different top marks (cross-ratio quotient).  Cross/cross pairs divide
    when one is obtained from the other by replacing a single index, i.e.
    the supports overlap in 3 marks and the aligned frames agree.  A
    mixed pair divides exactly when the simple ratio is one of the four
    two-factor divisors of the cross ratio.
    """
    if nu == mu:
        raise ValueError("divisibility is defined on distinct vertices")
    if nu.kind == SR and mu.kind == SR:
        i1, j1, k1 = nu.indices
        i2, j2, k2 = mu.indices
        if k1 == k2:
            return (i1 == i2) != (j1 == j2)
        return i1 == i2 and j1 == j2
    if nu.kind == CR and mu.kind == CR:
        common = nu.support & mu.support
        if len(common) != 3:
            return False
        x = next(iter(nu.support - common))
        y = next(iter(mu.support - common))
        return _cr_slot4_frame(nu.indices, x) == _cr_slot4_frame(mu.indices, y)
    sr, cr = (nu, mu) if nu.kind == SR else (mu, nu)
    return sr.indices in _sr_divisors_of_cr(cr)


def _pure_edge(nu, mu):
    """Divisibility with the quotient confined to the vertex's own family."""
    if nu.kind == SR and mu.kind == SR:
        i1, j1, k1 = nu.indices
        i2, j2, k2 = mu.indices
        return k1 == k2 and ((i1 == i2) != (j1 == j2))
    if nu.kind == CR and mu.kind == CR:
        return divides_rule(nu, mu)
    return False


# ---------------------------------------------------------------------------
# complexes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Simplex:
    vertices: tuple

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("simplex must be non-empty")
        if tuple(sorted(self.vertices)) != self.vertices:
            raise ValueError("vertices must be canonically sorted")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertices must be distinct")
        for a in range(len(self.vertices)):
            for b in range(a + 1, len(self.vertices)):
                if not divides_oracle(self.vertices[a], self.vertices[b]):
                    raise ValueError("vertices must pairwise divide")

    @property
    def dimension(self):
        return len(self.vertices) - 1

    @property
    def support(self):
        out = set()
        for v in self.vertices:
            out |= v.support
        return frozenset(out)


def make_simplex(vertices):
    return Simplex(tuple(sorted(vertices)))


def catalogue(n, family):
    """All vertices of the given family supported on marks 1..n."""
    vs = []
    if family in (SR, "l"):
        for t in itertools.permutations(range(1, n + 1), 3):
            vs.append(RatioVertex(SR, t))
    if family in (CR, "l"):
        seen = set()
        for t in itertools.permutations(range(1, n + 1), 4):
            c = klein_canonical(t)
            if c not in seen:
                seen.add(c)
                vs.append(RatioVertex(CR, c))
    return sorted(vs)


class RatioComplex:
    """Flag complex of the divisibility graph on a ratio catalogue.

    ``family`` selects the vertex set ("sr", "cr" or "l").  Pure-family
    complexes use family-internal divisibility; the full complex uses the
    catalogue relation.  Maximal simplices come from Bron-Kerbosch with
    pivoting and are canonically sorted.
    """

    def __init__(self, n, family):
        family = family.lower()
        if family not in FAMILIES:
            raise ValueError("family must be one of %r" % (FAMILIES,))
        minimum = 4 if family == CR else 3
        if n < minimum:
            raise ValueError("family %r needs n >= %d" % (family, minimum))
        self.n = n
        self.family = family
        self.vertices = catalogue(n, family)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        edge_pred = divides_oracle if family == "l" else _pure_edge
        V = len(self.vertices)
        adj = [0] * V
        edges = []
        for a in range(V):
            va = self.vertices[a]
            for b in range(a + 1, V):
                if edge_pred(va, self.vertices[b]):
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a
                    edges.append((a, b))
        self._adj = adj
        self._by_dim = None
        self.divisibility_edges = edges
        self.maximal_simplices = self._maximal_cliques()

    # -- clique machinery ------------------------------------------------

    def _maximal_cliques(self):
        adj = self._adj
        out = []

        def expand(r, p, x):
            if not p and not x:
                out.append(tuple(sorted(r)))
                return
            pivot_pool = p | x
            u = (pivot_pool & -pivot_pool).bit_length() - 1
            best, bestdeg = u, -1
            pool = pivot_pool
            while pool:
                v = (pool & -pool).bit_length() - 1
                pool &= pool - 1
                deg = (p & adj[v]).bit_count()
                if deg > bestdeg:
                    best, bestdeg = v, deg
            cand = p & ~adj[best]
            while cand:
                v = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                expand(r + [v], p & adj[v], x & adj[v])
                p &= ~(1 << v)
                x |= 1 << v

        expand([], (1 << len(self.vertices)) - 1, 0)
        cliques = sorted(out)
        return [make_simplex([self.vertices[i] for i in c]) for c in cliques]

    def all_simplices_by_dim(self):
        """Every simplex (clique), grouped by dimension, indices sorted."""
        if self._by_dim is not None:
            return self._by_dim
        adj = self._adj
        V = len(self.vertices)
        by_size = {}

        def rec(clique, cand):
            by_size.setdefault(len(clique), []).append(tuple(clique))
            m = cand
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                higher = ~((1 << (v + 1)) - 1)
                rec(clique + [v], cand & adj[v] & higher)

        full = (1 << V) - 1
        m = full
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            higher = ~((1 << (v + 1)) - 1)
            rec([v], adj[v] & higher)
        top = max(by_size) if by_size else 0
        self._by_dim = [sorted(by_size.get(k + 1, ())) for k in range(top)]
        return self._by_dim

    def simplex_counts(self):
        return [len(s) for s in self.all_simplices_by_dim()]

    def to_json(self):
        return {
            "n": self.n,
            "family": self.family,
            "vertices": [[v.kind, *v.indices] for v in self.vertices],
            "edges": [list(e) for e in self.divisibility_edges],
            "maximal_simplices": [
                [self._index[v] for v in s.vertices]
                for s in self.maximal_simplices
            ],
        }


@lru_cache(maxsize=32)
def _cached_complex(n, family):
    return RatioComplex(n, family)


def build_complex(n, family):
    """Complexes are immutable once built, so instances are shared."""
    return _cached_complex(n, family.lower())


def complex_dimension(c):
    return max(s.dimension for s in c.maximal_simplices)


def euler_characteristic(c):
    chi = 0
    for k, count in enumerate(c.simplex_counts()):
        chi += count if k % 2 == 0 else -count
    return chi


def betti_numbers(c):
    """Integral homology: per dimension, (betti rank, torsion summands)."""
    return homology.homology_ranks(c.all_simplices_by_dim())


def homology_report(c):
    data = betti_numbers(c)
    return {
        "betti": [b for b, _ in data],
        "torsion": [list(t) for _, t in data],
        "chi": euler_characteristic(c),
    }


# ---------------------------------------------------------------------------
# symmetric-group action, orbits, normal forms
# ---------------------------------------------------------------------------


def _apply_perm_vertex(sigma, v):
    mapped = tuple(sigma[i - 1] for i in v.indices)
    if v.kind == SR:
        return RatioVertex(SR, mapped)
    return RatioVertex(CR, klein_canonical(mapped))


def act(sigma, s):
    """Relabel a simplex by a permutation given as a 1-based image tuple."""
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError("not a permutation of 1..n")
    if isinstance(s, RatioVertex):
        return _apply_perm_vertex(sigma, s)
    return make_simplex([_apply_perm_vertex(sigma, v) for v in s.vertices])


def involution(v):
    """The vertex representing the reciprocal function."""
    if v.kind == SR:
        i, j, k = v.indices
        return RatioVertex(SR, (j, i, k))
    i, j, k, l = v.indices
    return cr_vertex(j, i, k, l)


def _is_pure_simplex(s):
    kinds = {v.kind for v in s.vertices}
    if len(kinds) != 1:
        return None
    vs = s.vertices
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            if not _pure_edge(vs[a], vs[b]):
                return None
    return kinds.pop()


def _complete_permutation(partial, n):
    """Extend a partial 1-based mapping to a permutation tuple of 1..n."""
    used = set(partial.values())
    free = [x for x in range(1, n + 1) if x not in used]
    out = []
    it = iter(free)
    for i in range(1, n + 1):
        out.append(partial[i] if i in partial else next(it))
    return tuple(out)


def delta_s(m, sign=1):
    """The reference simple m-simplex (sign < 0 gives the reciprocal one)."""
    if sign >= 0:
        return make_simplex([sr_vertex(t, 2, 1) for t in range(3, m + 4)])
    return make_simplex([sr_vertex(2, t, 1) for t in range(3, m + 4)])


def delta_c(m):
    """The reference cross m-simplex."""
    return make_simplex([cr_vertex(1, 2, 3, t) for t in range(4, m + 5)])


def normal_form(s, n=None):
    """Carry a pure simplex to its reference form.

    Returns (sigma, canonical) with act(sigma, s) == canonical.  Mixed
    input, or a set of same-family vertices that is not a simplex of the
    pure complex, is rejected.
    """
    kind = _is_pure_simplex(s)
    if kind is None:
        raise ValueError("normal forms defined for pure families")
    if n is None:
        n = max(max(v.indices) for v in s.vertices)
    m = s.dimension
    if kind == SR:
        if m == 0:
            i, j, k = s.vertices[0].indices
            sigma = _complete_permutation({i: 3, j: 2, k: 1}, n)
            canonical = delta_s(0)
        else:
            tops = {v.indices[2] for v in s.vertices}
            firsts = {v.indices[0] for v in s.vertices}
            k = tops.pop()
            if len(firsts) == 1:
                # common numerator: map the varying base marks upward
                i = firsts.pop()
                partial = {i: 2, k: 1}
                js = sorted(v.indices[1] for v in s.vertices)
                for t, j in enumerate(js):
                    partial[j] = t + 3
                sigma = _complete_permutation(partial, n)
                canonical = delta_s(m, sign=-1)
            else:
                j = s.vertices[0].indices[1]
                partial = {j: 2, k: 1}
                tops_i = sorted(v.indices[0] for v in s.vertices)
                for t, i in enumerate(tops_i):
                    partial[i] = t + 3
                sigma = _complete_permutation(partial, n)
                canonical = delta_s(m)
    else:
        if m == 0:
            a, b, c, d = s.vertices[0].indices
            sigma = _complete_permutation({a: 1, b: 2, c: 3, d: 4}, n)
            canonical = delta_c(0)
        else:
            common = s.vertices[0].support
            for v in s.vertices[1:]:
                common &= v.support
            if len(common) != 3:
                raise ValueError("not a simplex of the pure complex")
            frames = set()
            odd = []
            for v in s.vertices:
                x = next(iter(v.support - common))
                frames.add(_cr_slot4_frame(v.indices, x))
                odd.append(x)
            if len(frames) != 1:
                raise ValueError("not a simplex of the pure complex")
            f1, f2, f3 = frames.pop()
            partial = {f1: 1, f2: 2, f3: 3}
            for t, x in enumerate(sorted(odd)):
                partial[x] = t + 4
            sigma = _complete_permutation(partial, n)
            canonical = delta_c(m)
    if act(sigma, s) != canonical:
        raise AssertionError("normalization failed for %r" % (s,))
    return sigma, canonical


def orbit_decomposition(n, family, m):
    """Representatives and sizes of the relabeling orbits of m-simplices."""
    if family not in (SR, CR):
        raise ValueError("orbit decomposition is defined for pure families")
    c = build_complex(n, family)
    dim = complex_dimension(c)
    if m > dim:
        raise ValueError("no simplices of dimension %d (max %d)" % (m, dim))
    by_dim = c.all_simplices_by_dim()
    counts = {}
    for idx_tuple in by_dim[m]:
        s = make_simplex([c.vertices[i] for i in idx_tuple])
        _, canonical = normal_form(s, n=n)
        counts[canonical] = counts.get(canonical, 0) + 1
    return sorted(counts.items(), key=lambda kv: kv[0].vertices)


# ---------------------------------------------------------------------------
# holomorphic-function catalogue on the doubly punctured plane
# ---------------------------------------------------------------------------


def enumerate_punctured(m):
    """Non-constant holomorphic maps of m distinct marks avoiding 0 and 1.

    Marks m+1, m+2, m+3 are pinned to 0, 1 and infinity; every function is
    a four-mark ratio on the extended set, with the infinity factors
    cancelling.  Returns the catalogue as DiffProducts over marks 1..m+2,
    where m+1 stands for the value 0 and m+2 for the value 1.
    """
    if m < 1:
        raise ValueError("need at least one free mark")
    inf = m + 3
    out = []
    for v in catalogue(m + 3, CR):
        i, j, k, l = v.indices
        factors = [((l, i), 1), ((j, k), 1), ((l, j), -1), ((i, k), -1)]
        kept = []
        sign = 1
        for (top, bottom), e in factors:
            if top == inf:
                continue  # (q - mark) over the escaping mark tends to 1
            if bottom == inf:
                # the escaping mark enters negated; its limit leaves a sign
                sign = -sign if e % 2 else sign
                continue
            kept.append(((top, bottom), e))
        dp = DiffProduct.from_factors(kept)
        if sign < 0:
            dp = DiffProduct(-dp.scalar, dp.powers)
        out.append(dp)
    if len(set(out)) != len(out):
        raise AssertionError("catalogue entries are not distinct")
    return out


def punctured_value(h, coords):
    """Evaluate a catalogue function at free marks q_1..q_m."""
    values = {i: Fraction(c) for i, c in enumerate(coords, start=1)}
    values[len(coords) + 1] = Fraction(0)
    values[len(coords) + 2] = Fraction(1)
    return h.evaluate(values)


# ---------------------------------------------------------------------------
# three-term product identities
# ---------------------------------------------------------------------------


def _expand_product(pairs):
    p = MultiPoly.one()
    for a, b in pairs:
        p = p * (MultiPoly.var("z%d" % a) - MultiPoly.var("z%d" % b))
    return p


def _classify_triple(products):
    degs = sorted(len(p) for p in products)
    if degs == [1, 1, 1]:
        edges = [p[0] for p in products]
        marks = set()
        for a, b in edges:
            marks.add(a)
            marks.add(b)
        if len(marks) == 3 and len(set(edges)) == 3:
            return "simple"
        return "other"
    if degs == [2, 2, 2]:
        marks = set()
        for p in products:
            for a, b in p:
                marks.add(a)
                marks.add(b)
        if len(marks) != 4:
            return "other"
        matchings = set()
        for p in products:
            if len(set(p[0]) | set(p[1])) != 4:
                return "other"
            matchings.add(tuple(sorted(p)))
        return "double" if len(matchings) == 3 else "other"
    return "other"


def verify_abc(n, degree_bound, capacity=2_000_000):
    """Brute-force search for coprime three-term vanishing sums.

    Enumerates unordered triples of distinct monic difference-products of
    total degree <= degree_bound that are pairwise coprime and not all
    constant, solves a*P + b*Q + c*R = 0 exactly, and classifies every
    solution family.  Passes when only the one- and two-factor patterns
    occur.
    """
    if n < 3:
        raise ValueError("need at least three variables")
    if degree_bound < 1:
        raise ValueError("degree bound must be at least 1")
    base_pairs = list(itertools.combinations(range(1, n + 1), 2))
    products = [()]
    for d in range(1, degree_bound + 1):
        products.extend(
            itertools.combinations_with_replacement(base_pairs, d))
    total = len(products)
    n_triples = total * (total - 1) * (total - 2) // 6
    if n_triples > capacity:
        raise CapacityError(
            "%d candidate triples exceed the supported %d"
            % (n_triples, capacity))
    expanded = [_expand_product(p) for p in products]
    monos = sorted({m for p in expanded for m in p.terms})
    mono_index = {m: i for i, m in enumerate(monos)}
    vectors = []
    for p in expanded:
        vec = {}
        for mono, coeff in p.terms.items():
            vec[mono_index[mono]] = coeff
        vectors.append(vec)
    solutions = []
    counts = {"simple": 0, "double": 0, "other": 0}
    for ia, ib, ic in itertools.combinations(range(total), 3):
        pa, pb, pc = products[ia], products[ib], products[ic]
        if not (pa or pb or pc):
            continue
        if set(pa) & set(pb) or set(pa) & set(pc) or set(pb) & set(pc):
            continue
        rows = sorted(set(vectors[ia]) | set(vectors[ib]) | set(vectors[ic]))
        if len(rows) < 2:
            continue
        triples = [
            (vectors[ia].get(r, 0), vectors[ib].get(r, 0),
             vectors[ic].get(r, 0))
            for r in rows
        ]
        kernel = None
        for r1 in range(len(triples)):
            for r2 in range(r1 + 1, len(triples)):
                a1, b1, c1 = triples[r1]
                a2, b2, c2 = triples[r2]
                cross = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2,
                         a1 * b2 - b1 * a2)
                if any(cross):
                    kernel = cross
                    break
            if kernel:
                break
        if kernel is None or not all(kernel):
            continue
        ka, kb, kc = kernel
        if any(a * ka + b * kb + c * kc for a, b, c in triples):
            continue
        pattern = _classify_triple([pa, pb, pc])
        counts[pattern] += 1
        solutions.append({
            "pattern": pattern,
            "products": [list(map(list, p)) for p in (pa, pb, pc)],
            "scalars": [ka, kb, kc],
        })
    return {
        "n": n,
        "bound": degree_bound,
        "counts": counts,
        "solutions": solutions,
        "pass": counts["other"] == 0 and counts["simple"] > 0,
    }
