"""Braid words, an exact word-problem decision procedure, and exhaustive
classification of their finite symmetric-group images at small rank.

Words are sequences of nonzero integers: letter g means generator |g| with
sign(g) as exponent.  Equality of braids is decided through the left-greedy
canonical form: a power of the half twist followed by a left-weighted
sequence of permutation factors, which is a complete invariant.

Permutations multiply left-to-right: (p * q) means "apply p, then q".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm


class CapacityError(RuntimeError):
    """Raised when an exhaustive search would exceed its supported range."""


# ---------------------------------------------------------------------------
# permutations (1-based externally, tuples of images internally)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Perm:
    """A permutation of 1..k in one-line image notation."""

    images: tuple

    def __post_init__(self):
        k = len(self.images)
        if sorted(self.images) != list(range(1, k + 1)):
            raise ValueError("not a bijection of 1..%d" % k)

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, k):
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def from_cycles(cls, k, *cycles):
        imgs = list(range(1, k + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + (cyc[0],)):
                imgs[a - 1] = b
        return cls(tuple(imgs))

    @classmethod
    def transposition(cls, k, i):
        imgs = list(range(1, k + 1))
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        return cls(tuple(imgs))

    def __call__(self, x):
        return self.images[x - 1]

    def __mul__(self, other):
        # apply self first, then other
        return Perm(tuple(other.images[i - 1] for i in self.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Perm(tuple(inv))

    def cycles(self):
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self):
        return lcm(*(len(c) for c in self.cycles()))

    def is_identity(self):
        return all(self.images[i] == i + 1 for i in range(self.degree))

    def __repr__(self):
        return "Perm(%s)" % (" ".join(map(str, self.images)))


def conjugacy_class_reps(k):
    """One permutation per cycle type of degree k, deterministic."""
    reps = []
    for part in _partitions(k):
        imgs = []
        start = 1
        cycles = []
        for size in part:
            cycles.append(tuple(range(start, start + size)))
            start += size
        reps.append(Perm.from_cycles(k, *cycles))
    return reps


def _partitions(k, largest=None):
    if largest is None:
        largest = k
    if k == 0:
        return [()]
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            out.append((first,) + rest)
    return out


# ---------------------------------------------------------------------------
# braid words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need at least two strands")
        for g in self.letters:
            if g == 0 or abs(g) > self.n - 1:
                raise ValueError("letter %r out of range for %d strands"
                                 % (g, self.n))

    @classmethod
    def parse(cls, n, text):
        letters = tuple(int(tok) for tok in text.split())
        return cls(n, letters)

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("mismatched strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.n, tuple(-g for g in reversed(self.letters)))


def word(n, *letters):
    return BraidWord(n, tuple(letters))


def alpha_word(n):
    """sigma_1 sigma_2 ... sigma_(n-1)."""
    return BraidWord(n, tuple(range(1, n)))


def sphere_kernel_word(n):
    """sigma_1 ... sigma_(n-1) sigma_(n-1) ... sigma_1 (a pure braid)."""
    up = tuple(range(1, n))
    return BraidWord(n, up + up[::-1])


def full_twist_word(n):
    """(sigma_1 ... sigma_(n-1))^n, generating the center."""
    return BraidWord(n, tuple(range(1, n)) * n)


def mu_image(w):
    """Image under the standard projection sending generator i to (i, i+1)."""
    p = Perm.identity(w.n)
    for g in w.letters:
        p = p * Perm.transposition(w.n, abs(g))
    return p


def exponent_sum(w):
    """Sum of letter signs; invariant under all defining relations."""
    return sum(1 if g > 0 else -1 for g in w.letters)


# ---------------------------------------------------------------------------
# left-greedy canonical form
# ---------------------------------------------------------------------------
#
# A permutation factor is encoded as a 0-based image tuple p with p[i] the
# final position of the strand starting at i.  Products read left to right.


def _pmul(p, q):
    return tuple(q[p[i]] for i in range(len(p)))


def _pinv(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _pid(n):
    return tuple(range(n))


def _pdelta(n):
    return tuple(range(n - 1, -1, -1))


def _ptransp(n, i):
    p = list(range(n))
    p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def _starting_set(p):
    """Generators that can begin a positive word for the factor."""
    return {i for i in range(len(p) - 1) if p[i] > p[i + 1]}


def _finishing_set(p):
    return _starting_set(_pinv(p))


def _left_gcd(x, y):
    """Greatest common prefix of two permutation factors."""
    n = len(x)
    u = _pid(n)
    while True:
        common = _starting_set(x) & _starting_set(y)
        if not common:
            return u
        i = min(common)
        t = _ptransp(n, i)
        u = _pmul(u, t)
        x = _pmul(t, x)
        y = _pmul(t, y)


class CanonicalBraid:
    """Left-weighted canonical form: infimum power of the half twist plus a
    sequence of permutation factors, none trivial, none the half twist."""

    __slots__ = ("n", "infimum", "factors")

    def __init__(self, n, infimum, factors):
        self.n = n
        self.infimum = infimum
        self.factors = tuple(factors)

    def __eq__(self, other):
        return (
            isinstance(other, CanonicalBraid)
            and self.n == other.n
            and self.infimum == other.infimum
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.n, self.infimum, self.factors))

    def __repr__(self):
        return "CanonicalBraid(n=%d, inf=%d, len=%d)" % (
            self.n, self.infimum, len(self.factors))


def _normalize_factors(n, factors):
    """Left-weight a factor sequence; returns (delta_shift, factors)."""
    fs = [f for f in factors if f != _pid(n)]
    delta = _pdelta(n)
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            a, b = fs[i], fs[i + 1]
            if _starting_set(b) <= _finishing_set(a):
                continue
            rc = _pmul(_pinv(a), delta)  # right complement: a * rc = delta
            u = _left_gcd(rc, b)
            if u != _pid(n):
                fs[i] = _pmul(a, u)
                fs[i + 1] = _pmul(_pinv(u), b)
                changed = True
        fs = [f for f in fs if f != _pid(n)]
    shift = 0
    while fs and fs[0] == delta:
        shift += 1
        fs.pop(0)
    return shift, fs


def canonical_form(w):
    """Left-greedy canonical form of a braid word."""
    n = w.n
    delta = _pdelta(n)
    inf = 0
    factors = []
    for g in w.letters:
        i = abs(g) - 1
        t = _ptransp(n, i)
        if g > 0:
            factors.append(t)
        else:
            # inverse generator = half-twist^-1 times a permutation factor;
            # pushing the negative half twist left conjugates what came before
            factors = [_pmul(_pmul(delta, f), delta) for f in factors]
            inf -= 1
            factors.append(_pmul(delta, t))
        if len(factors) > 4 * n:
            shift, factors = _normalize_factors(n, factors)
            inf += shift
    shift, factors = _normalize_factors(n, factors)
    inf += shift
    return CanonicalBraid(n, inf, factors)


def words_equal(w1, w2):
    """Exact word-problem decision via canonical forms."""
    if w1.n != w2.n:
        raise ValueError("mismatched strand counts")
    return canonical_form(w1) == canonical_form(w2)


def gorin_words(n):
    """Both sides of the commutator identity relating generators 1..3."""
    if n < 4:
        raise ValueError("needs at least four strands")
    g1 = [3, -1]
    g2 = [1, -2]
    inv = lambda w: [-x for x in reversed(w)]
    commutator = inv(g1) + inv(g2) + g1 + g2
    lhs = BraidWord(n, tuple(g1))
    rhs = BraidWord(n, tuple([-2, -1] + commutator + [1, 2]))
    return lhs, rhs


# ---------------------------------------------------------------------------
# homomorphisms to symmetric groups
# ---------------------------------------------------------------------------

ARTIN = "artin"
SPHERE = "sphere"


@dataclass(frozen=True)
class SymHom:
    """A homomorphism from the n-strand group to S(k), by generator images."""

    n: int
    k: int
    images: tuple  # images of generators 1..n-1
    presentation: str = ARTIN

    def __post_init__(self):
        bad = check_relations(self.images, self.n, self.k, self.presentation)
        if bad is not None:
            raise ValueError("defining relation violated: %s" % (bad,))

    def apply(self, w):
        if w.n != self.n:
            raise ValueError("mismatched strand counts")
        p = Perm.identity(self.k)
        for g in w.letters:
            img = self.images[abs(g) - 1]
            p = p * (img if g > 0 else img.inverse())
        return p

def check_relations(images, n, k, presentation=ARTIN):
    """First violated defining relation, or None if all hold."""
    if len(images) != n - 1:
        raise ValueError("need %d generator images" % (n - 1))
    for im in images:
        if im.degree != k:
            raise ValueError("images must have degree %d" % k)
    for i in range(n - 2):
        a, b = images[i], images[i + 1]
        if a * b * a != b * a * b:
            return ("braid", i + 1, i + 2)
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            if images[i] * images[j] != images[j] * images[i]:
                return ("commute", i + 1, j + 1)
    if presentation == SPHERE:
        p = Perm.identity(k)
        for i in list(range(n - 1)) + list(range(n - 2, -1, -1)):
            p = p * images[i]
        if not p.is_identity():
            return ("sphere",)
    return None


def verify_sym_hom(images, n, k, presentation=ARTIN):
    """The homomorphism if all relations hold, else None."""
    if check_relations(images, n, k, presentation) is not None:
        return None
    return SymHom(n, k, tuple(images), presentation)


def hom_from_pair(s, a, n, k):
    """Homomorphism determined by the images of generator 1 and of the
    descending product of all generators; None if inconsistent."""
    images = [s]
    ainv = a.inverse()
    for _ in range(n - 2):
        images.append(a * images[-1] * ainv)
    if check_relations(images, n, k) is not None:
        return None
    prod = images[0]
    for im in images[1:]:
        prod = prod * im
    if prod != a:
        return None
    return SymHom(n, k, tuple(images))


def is_transitive(h):
    """Whether the generator images act with a single orbit on 1..k."""
    return len(_orbits(list(h.images), h.k)) == 1


def hom_properties(h):
    """Transitivity, image order, cyclicity and a block system if any.

    Computes the full image closure, so intended for small degrees; use
    is_transitive for bulk transitivity scans.
    """
    gens = [im for im in h.images]
    orbits = _orbits(gens, h.k)
    transitive = len(orbits) == 1
    elements = _closure(gens, h.k)
    order = len(elements)
    cyclic = any(e.order() == order for e in elements)
    blocks = _nontrivial_blocks(gens, h.k) if transitive else None
    return {
        "transitive": transitive,
        "image_order": order,
        "cyclic_image": cyclic,
        "surjective": order == _factorial(h.k),
        "blocks": blocks,
    }


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _orbits(gens, k):
    parent = list(range(k + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(1, k + 1):
            a, b = find(x), find(g(x))
            if a != b:
                parent[a] = b
    groups = {}
    for x in range(1, k + 1):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def _closure(gens, k):
    identity = Perm.identity(k)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def _min_block_with(gens, k, beta):
    """Smallest block containing {1, beta}; the classical refinement."""
    parent = list(range(k + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return None
        parent[rx] = ry
        return rx

    union(1, beta)
    queue = [(1, beta)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            gx, gy = g(x), g(y)
            if find(gx) != find(gy):
                union(gx, gy)
                queue.append((gx, gy))
    groups = {}
    for x in range(1, k + 1):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def _nontrivial_blocks(gens, k):
    """A nontrivial block system of a transitive action, or None."""
    for beta in range(2, k + 1):
        blocks = _min_block_with(gens, k, beta)
        sizes = {len(b) for b in blocks}
        if len(blocks) > 1 and sizes != {1}:
            return blocks
    return None


def are_conjugate(h1, h2):
    """A conjugating permutation between two homomorphisms, or None."""
    if (h1.n, h1.k) != (h2.n, h2.k):
        raise ValueError("homomorphisms must share (n, k)")
    gens1 = h1.images
    gens2 = h2.images
    for a, b in zip(gens1, gens2):
        if a.cycle_type() != b.cycle_type():
            return None
    k = h1.k

    # depth-first search for t with t^-1 * g1 * t == g2 for all generators,
    # propagating t(g1(x)) = g2(t(x)) from each assignment
    assign = {}
    used = set()

    def propagate(pairs):
        added = []
        stack = list(pairs)
        while stack:
            x, y = stack.pop()
            if x in assign:
                if assign[x] != y:
                    for a in added:
                        used.discard(assign[a])
                        del assign[a]
                    return None
                continue
            if y in used:
                for a in added:
                    used.discard(assign[a])
                    del assign[a]
                return None
            assign[x] = y
            used.add(y)
            added.append(x)
            for g1, g2 in zip(gens1, gens2):
                stack.append((g1(x), g2(y)))
        return added

    def search():
        free = [x for x in range(1, k + 1) if x not in assign]
        if not free:
            return True
        x = free[0]
        for y in range(1, k + 1):
            if y in used:
                continue
            added = propagate([(x, y)])
            if added is None:
                continue
            if search():
                return True
            for a in added:
                used.discard(assign[a])
                del assign[a]
        return False

    if search():
        return Perm(tuple(assign[x] for x in range(1, k + 1)))
    return None


def search_homs(n, k, include_cyclic=True):
    """Conjugacy classes of homomorphisms into S(k), exhaustively.

    Every homomorphism is determined by the image pair (generator 1, full
    descending product); up to conjugacy the first image can be fixed to a
    cycle-type representative, so scanning representatives against all of
    S(k) is exhaustive.  Classes come back deterministically sorted and
    labeled.
    """
    if k > 8:
        raise CapacityError("exhaustive search supported for k <= 8")
    if n < 3:
        raise ValueError("need at least three strands")
    found = []
    for s in conjugacy_class_reps(k):
        for a_imgs in itertools.permutations(range(1, k + 1)):
            a = Perm(a_imgs)
            h = hom_from_pair(s, a, n, k)
            if h is None:
                continue
            props = hom_properties(h)
            if not include_cyclic and props["cyclic_image"]:
                continue
            for other, _ in found:
                if are_conjugate(h, other) is not None:
                    break
            else:
                found.append((h, props))

    def sort_key(item):
        h, props = item
        alpha = h.apply(alpha_word(n))
        return (
            h.images[0].cycle_type(),
            alpha.cycle_type(),
            tuple(im.images for im in h.images),
        )

    out = []
    for h, props in sorted(found, key=sort_key):
        out.append({
            "hom": h,
            "cyclic": props["cyclic_image"],
            "transitive": props["transitive"],
            "surjective": props["surjective"],
            "image_order": props["image_order"],
        })
    return out


# ---------------------------------------------------------------------------
# the named homomorphisms
# ---------------------------------------------------------------------------


def standard_mu(n):
    return SymHom(n, n, tuple(
        Perm.transposition(n, i) for i in range(1, n)))


def exceptional_six():
    s = Perm.from_cycles(6, (1, 2), (3, 4), (5, 6))
    a = Perm.from_cycles(6, (1, 2, 3), (4, 5))
    h = hom_from_pair(s, a, 6, 6)
    if h is None:
        raise AssertionError("exceptional pair failed the relations")
    return h


def exceptional_four(which):
    pairs = {
        1: (Perm.from_cycles(4, (1, 2, 3, 4)), Perm.from_cycles(4, (1, 2))),
        2: (Perm.from_cycles(4, (1, 3, 2, 4)),
            Perm.from_cycles(4, (1, 2, 3, 4))),
        3: (Perm.from_cycles(4, (1, 2, 3)),
            Perm.from_cycles(4, (1, 2), (3, 4))),
    }
    s, a = pairs[which]
    h = hom_from_pair(s, a, 4, 4)
    if h is None:
        raise AssertionError("exceptional pair failed the relations")
    return h


def doubling_hom(n, which, presentation=ARTIN):
    """The three transitive homomorphisms into S(2n), generator by generator.

    which=1: the bare 4-cycle (2i-1, 2i+2, 2i, 2i+1);
    which=2: pair swaps away from the window, two transpositions inside;
    which=3: pair swaps away from the window, the 4-cycle inside.
    """
    images = []
    k = 2 * n
    for i in range(1, n):
        cycles = []
        if which in (2, 3):
            for j in range(1, n + 1):
                if j not in (i, i + 1):
                    cycles.append((2 * j - 1, 2 * j))
        if which == 2:
            cycles.append((2 * i - 1, 2 * i + 1))
            cycles.append((2 * i, 2 * i + 2))
        else:
            cycles.append((2 * i - 1, 2 * i + 2, 2 * i, 2 * i + 1))
        images.append(Perm.from_cycles(k, *cycles))
    return SymHom(n, k, tuple(images), presentation)


def lattice_hom(n, r, x, y):
    """Homomorphism into S(rn) acting on the r-by-n lattice of residues.

    Point m-1 = R + r*N with 0 <= R < r, 0 <= N < n.  Generator i shifts
    the first coordinate by y away from columns i-1 and i, advances column
    i-1 and pulls column i back with a shift by x.
    """
    k = r * n

    def encode(R, N):
        return (R % r) + r * (N % n) + 1

    images = []
    for i in range(1, n):
        imgs = [0] * k
        for m in range(k):
            R, N = m % r, m // r
            if N == i - 1:
                tgt = encode(R, N + 1)
            elif N == i:
                tgt = encode(R + x, N - 1)
            else:
                tgt = encode(R + y, N)
            imgs[m] = tgt
        images.append(Perm(tuple(imgs)))
    return SymHom(n, k, tuple(images))


def standard_gallery(name, n=None, r=None, x=None, y=None):
    """Named homomorphisms by construction, relation-verified."""
    name = name.lower()
    if name == "mu":
        if n is None:
            raise ValueError("mu needs n")
        return standard_mu(n)
    if name == "nu6":
        return exceptional_six()
    if name in ("nu41", "nu42", "nu43"):
        return exceptional_four(int(name[-1]))
    if name in ("phi1", "phi2", "phi3"):
        if n is None:
            raise ValueError("%s needs n" % name)
        which = int(name[-1])
        # the second map kills the sphere kernel, so it carries the
        # stronger presentation marker
        return doubling_hom(n, which, SPHERE if which == 2 else ARTIN)
    if name == "phixy":
        if None in (n, r, x, y):
            raise ValueError("phixy needs n, r, x, y")
        return lattice_hom(n, r, x, y)
    raise ValueError("unknown gallery homomorphism %r" % name)
