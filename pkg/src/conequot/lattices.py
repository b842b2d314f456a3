"""Exact integer lattice arithmetic.

Hermite and Smith normal forms over the integers, plus the sublattice
operations the rest of the package is built on: spans, images,
intersections, membership and index computations.  Everything runs on
plain Python integers, so results are exact for arbitrarily large
entries; nothing in this package ever touches floating point.

A sublattice of Z^n is stored as its row basis in Hermite normal form
(row echelon, positive pivots, entries above each pivot reduced into
``[0, pivot)``).  HNF is a canonical representative: two ``Sublattice``
values describe the same lattice if and only if they compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass

IntVec = tuple[int, ...]
IntRows = tuple[IntVec, ...]


def _check_rows(rows, cols: int) -> list[list[int]]:
    out = []
    for r in rows:
        r = list(r)
        if len(r) != cols:
            raise ValueError(f"row length {len(r)} != expected {cols}")
        out.append(r)
    return out


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def hermite_with_transform(
    rows, cols: int
) -> tuple[list[list[int]], list[list[int]], int]:
    """Row HNF with a unimodular witness.

    Returns ``(h, u, rank)`` where ``u`` is unimodular, ``u * rows = h``,
    the first ``rank`` rows of ``h`` are the canonical HNF basis of the
    row lattice and the remaining rows are zero.
    """
    m = _check_rows(rows, cols)
    n = len(m)
    u = _identity(n)

    def row_sub(i: int, j: int, q: int) -> None:
        # row_i -= q * row_j
        mi, mj = m[i], m[j]
        for k in range(cols):
            mi[k] -= q * mj[k]
        ui, uj = u[i], u[j]
        for k in range(n):
            ui[k] -= q * uj[k]

    piv = 0
    for col in range(cols):
        if piv == n:
            break
        while True:
            nz = [i for i in range(piv, n) if m[i][col]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(m[i][col]), i))
            if i0 != piv:
                m[piv], m[i0] = m[i0], m[piv]
                u[piv], u[i0] = u[i0], u[piv]
            if m[piv][col] < 0:
                m[piv] = [-x for x in m[piv]]
                u[piv] = [-x for x in u[piv]]
            p = m[piv][col]
            clean = True
            for i in range(piv + 1, n):
                if m[i][col]:
                    row_sub(i, piv, m[i][col] // p)
                    if m[i][col]:
                        clean = False
            if clean:
                break
        if piv < n and m[piv][col]:
            p = m[piv][col]
            for i in range(piv):
                q = m[i][col] // p
                if q:
                    row_sub(i, piv, q)
            piv += 1
    return m, u, piv


def hnf(rows, cols: int) -> IntRows:
    """Canonical HNF basis of the row lattice (zero rows dropped)."""
    h, _, rank = hermite_with_transform(rows, cols)
    return tuple(tuple(r) for r in h[:rank])


def left_kernel(rows, cols: int) -> IntRows:
    """HNF basis of ``{x : x * rows = 0}``; a saturated sublattice."""
    rows = list(rows)
    h, u, rank = hermite_with_transform(rows, cols)
    return hnf(u[rank:], len(rows))


def right_kernel(rows, cols: int) -> IntRows:
    """HNF basis of the integral vectors orthogonal to every given row."""
    rows = list(rows)
    if not rows:
        return tuple(
            tuple(1 if i == j else 0 for j in range(cols)) for i in range(cols)
        )
    transpose = [[r[i] for r in rows] for i in range(cols)]
    return left_kernel(transpose, len(rows))


def smith_normal_form(mat) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form with unimodular witnesses.

    Returns ``(s, u, v)`` with ``u * mat * v = s``, ``s`` diagonal with
    nonnegative entries ``d_1 | d_2 | ...``, and ``det u, det v = +-1``.
    """
    mat = list(mat)
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    s = _check_rows(mat, cols)
    u = _identity(rows)
    v = _identity(cols)

    def row_sub(i: int, j: int, q: int) -> None:
        for k in range(cols):
            s[i][k] -= q * s[j][k]
        for k in range(rows):
            u[i][k] -= q * u[j][k]

    def col_sub(i: int, j: int, q: int) -> None:
        # col_i -= q * col_j
        for k in range(rows):
            s[k][i] -= q * s[k][j]
        for k in range(cols):
            v[k][i] -= q * v[k][j]

    t = 0
    bound = min(rows, cols)
    while t < bound:
        pick = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                val = abs(s[i][j])
                if val and (best is None or val < best):
                    best, pick = val, (i, j)
        if pick is None:
            break
        i0, j0 = pick
        if i0 != t:
            s[t], s[i0] = s[i0], s[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            for k in range(rows):
                s[k][t], s[k][j0] = s[k][j0], s[k][t]
            for k in range(cols):
                v[k][t], v[k][j0] = v[k][j0], v[k][t]

        while True:
            # clear below the pivot, reducing the pivot via remainders
            for i in range(t + 1, rows):
                while s[i][t]:
                    q = s[i][t] // s[t][t]
                    row_sub(i, t, q)
                    if s[i][t]:
                        s[t], s[i] = s[i], s[t]
                        u[t], u[i] = u[i], u[t]
            for j in range(t + 1, cols):
                while s[t][j]:
                    q = s[t][j] // s[t][t]
                    col_sub(j, t, q)
                    if s[t][j]:
                        for k in range(rows):
                            s[k][t], s[k][j] = s[k][j], s[k][t]
                        for k in range(cols):
                            v[k][t], v[k][j] = v[k][j], v[k][t]
            if all(s[i][t] == 0 for i in range(t + 1, rows)) and all(
                s[t][j] == 0 for j in range(t + 1, cols)
            ):
                break

        d = s[t][t]
        fix = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if s[i][j] % d:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            row_sub(t, fix, -1)  # row_t += row_fix, then re-clear
            continue
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return s, u, v


def det(mat) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    mat = list(mat)
    n = len(mat)
    a = _check_rows(mat, n)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True, slots=True)
class Sublattice:
    """A sublattice of Z^n given by its HNF row basis."""

    ambient_rank: int
    basis: IntRows

    @staticmethod
    def from_generators(ambient_rank: int, vectors) -> "Sublattice":
        vs = [tuple(v) for v in vectors]
        for v in vs:
            if len(v) != ambient_rank:
                raise ValueError(
                    f"generator length {len(v)} != ambient rank {ambient_rank}"
                )
        return Sublattice(ambient_rank, hnf(vs, ambient_rank))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        v = list(v)
        if len(v) != self.ambient_rank:
            raise ValueError("vector length mismatch")
        for row in self.basis:
            j = next(i for i, x in enumerate(row) if x)
            if v[j] % row[j]:
                return False
            c = v[j] // row[j]
            if c:
                for k in range(self.ambient_rank):
                    v[k] -= c * row[k]
        return not any(v)


def generates_full_lattice(vectors, rank: int) -> bool:
    """Do the vectors span all of Z^rank over the integers?"""
    if rank == 0:
        for v in vectors:
            if len(tuple(v)) != 0:
                raise ValueError("vector length mismatch")
        return True
    sub = Sublattice.from_generators(rank, vectors)
    identity = tuple(
        tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)
    )
    return sub.basis == identity


def image_lattice(q_rows, generators) -> Sublattice:
    """Lattice spanned by ``q * v`` for each generator ``v``.

    ``q_rows`` is a k x r integer matrix given by rows; generators live
    in Z^r and images in Z^k.
    """
    q = [tuple(row) for row in q_rows]
    k = len(q)
    r = len(q[0]) if q else 0
    images = []
    for v in generators:
        v = tuple(v)
        if len(v) != r:
            raise ValueError(f"generator length {len(v)} != matrix width {r}")
        images.append(tuple(sum(q[i][j] * v[j] for j in range(r)) for i in range(k)))
    return Sublattice.from_generators(k, images)


def intersect_sublattices(a: Sublattice, b: Sublattice) -> Sublattice:
    if a.ambient_rank != b.ambient_rank:
        raise ValueError("ambient rank mismatch")
    n = a.ambient_rank
    if not a.basis or not b.basis:
        return Sublattice.from_generators(n, [])
    stacked = list(a.basis) + list(b.basis)
    kernel = left_kernel(stacked, n)
    p = len(a.basis)
    gens = []
    for row in kernel:
        gens.append(
            tuple(
                sum(row[i] * a.basis[i][j] for i in range(p)) for j in range(n)
            )
        )
    return Sublattice.from_generators(n, gens)


def sublattice_index(sub: Sublattice, ambient_rank: int) -> int | None:
    """Index of the sublattice in Z^ambient_rank, or None when infinite."""
    if sub.ambient_rank != ambient_rank:
        raise ValueError("ambient rank mismatch")
    if sub.rank < ambient_rank:
        return None
    idx = 1
    for i, row in enumerate(sub.basis):
        idx *= row[i]
    return idx
