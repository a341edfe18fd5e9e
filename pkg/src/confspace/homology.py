"""Integral simplicial homology via Smith normal form.

Simplices are tuples of vertex indices in strictly increasing order, so the
orientation convention is fixed by the vertex order and the boundary maps
satisfy d(k) . d(k+1) = 0.
"""

from __future__ import annotations


def boundary_matrix(faces, simplices):
    """Matrix of the boundary map into the span of ``faces``.

    Rows are indexed by the (k-1)-simplices in ``faces``, columns by the
    k-simplices in ``simplices``; the entry for dropping vertex i is (-1)^i.
    """
    index = {f: r for r, f in enumerate(faces)}
    rows = len(faces)
    cols = len(simplices)
    mat = [[0] * cols for _ in range(rows)]
    for c, s in enumerate(simplices):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            mat[index[face]][c] = -1 if i % 2 else 1
    return mat


def smith_diagonal(mat):
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Destructive on a copy; returns the non-zero diagonal of the Smith
    normal form as positive integers.
    """
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # locate a smallest-magnitude nonzero pivot in the trailing block
        best = None
        for i in range(t, rows):
            ri = m[i]
            for j in range(t, cols):
                v = ri[j]
                if v:
                    a = abs(v)
                    if best is None or a < best[0]:
                        best = (a, i, j)
                        if a == 1:
                            break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        for row in m:
            row[t], row[bj] = row[bj], row[t]
        while True:
            pivot = m[t][t]
            done = True
            for i in range(t + 1, rows):
                v = m[i][t]
                if v:
                    q = v // pivot
                    if q:
                        mt = m[t]
                        mi = m[i]
                        for j in range(t, cols):
                            mi[j] -= q * mt[j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        done = False
                        break
            if not done:
                continue
            for j in range(t + 1, cols):
                v = m[t][j]
                if v:
                    q = v // pivot
                    if q:
                        for row in m:
                            row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        done = False
                        break
            if done:
                break
        # invariant factor condition: pivot must divide the trailing block
        pivot = m[t][t]
        fixed = False
        for i in range(t + 1, rows):
            if fixed:
                break
            ri = m[i]
            for j in range(t + 1, cols):
                if ri[j] % pivot:
                    mt = m[t]
                    for jj in range(t, cols):
                        mt[jj] += ri[jj]
                    fixed = True
                    break
        if fixed:
            continue
        diag.append(abs(pivot))
        t += 1
    return diag


def homology_ranks(simplices_by_dim):
    """Betti numbers and torsion of a complex given all simplices per dim.

    Returns a list, one entry per dimension, of (betti, [torsion d > 1]).
    """
    dims = len(simplices_by_dim)
    ranks = []
    torsions = []
    for k in range(dims):
        if k == 0:
            ranks.append(0)
            torsions.append([])
            continue
        mat = boundary_matrix(simplices_by_dim[k - 1], simplices_by_dim[k])
        d = smith_diagonal(mat)
        ranks.append(len(d))
        torsions.append([x for x in d if x > 1])
    out = []
    for k in range(dims):
        n_k = len(simplices_by_dim[k])
        rank_in = ranks[k + 1] if k + 1 < dims else 0
        betti = n_k - ranks[k] - rank_in
        out.append((betti, torsions[k + 1] if k + 1 < dims else []))
    return out
