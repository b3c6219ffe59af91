"""Exact integer linear algebra: Smith normal form with transforms,
kernels and affine solutions of systems of congruences.

Matrices are lists of lists of Python ints (arbitrary precision).  The
congruence solvers process one row at a time, maintaining a basis of the
current solution lattice; this keeps intermediate entries small compared
with running a full SNF on relation-augmented matrices.
"""

from __future__ import annotations


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    if not A or not B:
        return [[] for _ in A]
    n, m, p = len(A), len(B), len(B[0])
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for k in range(m):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(p):
                    Oi[j] += a * Bk[j]
    return out


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def smith_normal_form(A):
    """Return (S, U, Uinv, V) with S = U*A*V in Smith normal form.

    U and V are unimodular; Uinv is the inverse of U (tracked during
    elimination, not recomputed).  S has nonnegative diagonal entries,
    each dividing the next.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [list(row) for row in A]
    U = identity_matrix(m)
    Uinv = identity_matrix(m)
    V = identity_matrix(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]
        for r in Uinv:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in S:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, c):
        # row i += c * row j
        S[i] = [a + c * b for a, b in zip(S[i], S[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        for r in Uinv:
            r[j] -= c * r[i]

    def add_col(i, j, c):
        # col i += c * col j
        for r in S:
            r[i] += c * r[j]
        for r in V:
            r[i] += c * r[j]

    def negate_row(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]
        for r in Uinv:
            r[i] = -r[i]

    t = 0
    while t < min(m, n):
        # find a pivot in the remaining submatrix
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = S[i][j]
                if a and (best is None or abs(a) < best):
                    best = abs(a)
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        while True:
            # clear column t
            dirty = False
            for i in range(m):
                if i != t and S[i][t]:
                    q = S[i][t] // S[t][t]
                    add_row(i, t, -q)
                    if S[i][t]:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(n):
                if j != t and S[t][j]:
                    q = S[t][j] // S[t][t]
                    add_col(j, t, -q)
                    if S[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        if S[t][t] < 0:
            negate_row(t)
        # enforce divisibility of later entries by the pivot
        fixed = False
        d = S[t][t]
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if S[i][j] % d != 0:
                    add_row(t, i, 1)
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        t += 1
    return S, U, Uinv, V


def snf_diagonal(A):
    S, _, _, _ = smith_normal_form(A)
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


def _sweep_row(top, cols):
    """Destructively gcd-sweep `top` (a list of ints) via column operations,
    mirroring each operation on the columns in `cols` (lists of equal
    length).  Returns the index of the single surviving nonzero top entry,
    or None if the top row is zero."""
    n = len(top)
    while True:
        nz = [j for j in range(n) if top[j]]
        if not nz:
            return None
        if len(nz) == 1:
            return nz[0]
        # the smallest |entry| is the pivot; reduce the others by division
        p = min(nz, key=lambda j: abs(top[j]))
        for j in nz:
            if j == p:
                continue
            q = top[j] // top[p]
            top[j] -= q * top[p]
            cp = cols[p]
            cj = cols[j]
            for k in range(len(cj)):
                cj[k] -= q * cp[k]


def kernel_of_congruences(A, moduli, column_moduli=None):
    """Basis of the lattice {x : (A x)_i == 0 mod moduli[i]} in Z^n.

    moduli[i] == 0 means exact equality on row i.  Returns a list of
    linearly independent column vectors generating the solution lattice.

    Rows are processed one at a time: each congruence row constrains the
    current basis through a single gcd sweep over an augmented slack
    column, so no large relation-augmented SNF is ever formed.

    If column_moduli is given, the solution lattice is known to contain
    every column_moduli[j] * e_j (as happens for cochain lattices, where
    these are the torsion relations); basis entries are then reduced
    modulo these to keep intermediate integers small, and the relation
    vectors are folded back into the returned basis.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    basis = [[1 if i == j else 0 for i in range(n)] for j in range(n)]  # columns
    for i in range(m):
        if not basis:
            break
        row = A[i]
        d = moduli[i]
        top = []
        for b in basis:
            v = sum(r * x for r, x in zip(row, b))
            top.append(v % d if d else v)
        cols = [list(b) for b in basis]
        if d:
            top.append(d)
            cols.append([0] * n)
        p = _sweep_row(top, cols)
        if p is None:
            # only possible for an exact row that already vanishes on the
            # whole basis lattice
            basis = cols
        else:
            basis = [c for j, c in enumerate(cols) if j != p]
            basis = [c for c in basis if any(c)]
        if column_moduli is not None:
            for c in basis:
                for j, dm in enumerate(column_moduli):
                    if dm:
                        c[j] %= dm
            basis = [c for c in basis if any(c)]
    if column_moduli is not None:
        relations = []
        for j, dm in enumerate(column_moduli):
            if dm:
                col = [0] * n
                col[j] = dm
                relations.append(col)
        basis = lattice_basis(basis + relations, n)
    return basis


def solve_congruences(A, b, moduli):
    """One solution x of (A x)_i == b_i mod moduli[i], or None.

    moduli[i] == 0 means exact equality on row i.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    basis = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    part = [0] * n
    for i in range(m):
        row = A[i]
        d = moduli[i]
        c = b[i] - sum(r * x for r, x in zip(row, part))
        if d:
            c %= d
        top = []
        for col in basis:
            v = sum(r * x for r, x in zip(row, col))
            top.append(v % d if d else v)
        cols = [list(col) for col in basis]
        if d:
            top.append(d)
            cols.append([0] * n)
        # track how each current column combines into a particular solution
        p = _sweep_row(top, cols)
        if p is None:
            if c != 0:
                return None
            basis = [col for col in cols if any(col)]
            continue
        g = top[p]
        if c % g != 0:
            return None
        q = c // g
        part = [x + q * y for x, y in zip(part, cols[p])]
        basis = [col for j, col in enumerate(cols) if j != p and any(col)]
    return part


def integer_kernel(A):
    """Basis of the integer kernel of A."""
    m = len(A)
    return kernel_of_congruences(A, [0] * m)


def solve_integer(A, b):
    """One integer solution of A x = b, or None."""
    m = len(A)
    return solve_congruences(A, b, [0] * m)


def lattice_basis(generators, dim):
    """Independent basis of the lattice spanned by `generators`
    (list of column vectors of length `dim`)."""
    if not generators:
        return []
    M = [[g[i] for g in generators] for i in range(dim)]
    S, _, Uinv, _ = smith_normal_form(M)
    basis = []
    for t in range(min(len(S), len(S[0]))):
        d = S[t][t]
        if d:
            basis.append([Uinv[i][t] * d for i in range(dim)])
    return basis


class LatticeQuotient:
    """The quotient (span of z_basis) / (span of b_generators), where the
    b-lattice is contained in the z-lattice.

    factors:     cyclic orders (0 = infinite), unit factors dropped.
    generators:  one column vector (in Z^n) generating each cyclic factor.
    class_of(x): class coordinates of a vector of the z-lattice, one
                 coordinate per factor; None if x is outside the z-lattice.
    """

    def __init__(self, z_basis, b_generators):
        r = len(z_basis)
        n = len(z_basis[0]) if z_basis else 0
        self._Zb = [[z_basis[j][i] for j in range(r)] for i in range(n)]
        # one SNF of the ambient basis matrix, reused for every membership
        # solve (much cheaper than a fresh elimination per generator)
        if r:
            S, U, _, V = smith_normal_form(self._Zb)
            self._sU = U
            self._sV = V
            self._sdiag = [S[t][t] for t in range(min(n, r))]
        coords = []
        for g in b_generators:
            w = self._solve_in_z(g)
            if w is None:
                raise ValueError("generator not inside the ambient lattice")
            coords.append(w)
        if coords and r:
            Y = [[c[i] for c in coords] for i in range(r)]
            S, U, Uinv, _ = smith_normal_form(Y)
            ncols = len(S[0]) if S else 0
            diag = [S[i][i] if i < min(r, ncols) else 0 for i in range(r)]
        else:
            U = identity_matrix(r)
            Uinv = identity_matrix(r)
            diag = [0] * r
        self._U = U
        self._diag = diag
        self.factors = []
        self.generators = []
        for i in range(r):
            d = diag[i]
            if d == 1:
                continue
            self.factors.append(d)
            gen_coords = [Uinv[k][i] for k in range(r)]
            self.generators.append(mat_vec(self._Zb, gen_coords) if n else [])

    def _solve_in_z(self, x):
        """Coordinates w with Zb * w = x, via the cached SNF, or None."""
        r = len(self._Zb[0]) if self._Zb else 0
        if r == 0:
            return [] if not any(x) else None
        y = mat_vec(self._sU, x)
        u = [0] * r
        for t, v in enumerate(y):
            d = self._sdiag[t] if t < len(self._sdiag) else 0
            if d:
                if v % d:
                    return None
                u[t] = v // d
            elif v:
                return None
        return mat_vec(self._sV, u)

    def class_of(self, x):
        r = len(self._U)
        if r == 0:
            return ()
        w = self._solve_in_z(x)
        if w is None:
            return None
        uw = mat_vec(self._U, w)
        out = []
        for i in range(r):
            d = self._diag[i]
            if d == 1:
                continue
            out.append(uw[i] % d if d else uw[i])
        return tuple(out)
