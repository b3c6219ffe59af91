"""Abelian Gamma-modules and their cohomology in degrees 0..2.

A module is a finitely generated abelian group (invariant factors plus a
free rank) with an action of a finite group Gamma by integer matrices.
Cohomology is computed from the full inhomogeneous bar complex by exact
integer linear algebra; torsion coordinates are handled as congruences.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import intlin
from .errors import NotACocycle, NotCyclic
from .fingrp import FiniteGroup, cyclic_group


def _endo_columns_ok(factors, free_rank, M):
    """Column j of an action matrix must be killed by the order of
    generator j for the map to be well defined."""
    k = len(factors) + free_rank
    orders = list(factors) + [0] * free_rank
    for j in range(k):
        dj = orders[j]
        if dj == 0:
            continue
        for i in range(k):
            di = orders[i]
            v = dj * M[i][j]
            if di == 0:
                if v != 0:
                    return False
            elif v % di != 0:
                return False
    return True


def _endo_eq(factors, free_rank, M1, M2):
    k = len(factors) + free_rank
    orders = list(factors) + [0] * free_rank
    for i in range(k):
        di = orders[i]
        for j in range(k):
            a, b = M1[i][j], M2[i][j]
            if di == 0:
                if a != b:
                    return False
            elif (a - b) % di != 0:
                return False
    return True


@dataclass(frozen=True)
class AbelianGammaModule:
    gamma: FiniteGroup
    invariant_factors: tuple  # each >= 2
    free_rank: int
    action: tuple  # one k x k integer matrix per gamma element, as tuples

    def __post_init__(self):
        k = self.rank
        for m in self.invariant_factors:
            if m < 2:
                raise ValueError("invariant factors must be >= 2")
        if len(self.action) != self.gamma.order:
            raise ValueError("one action matrix per gamma element required")
        for M in self.action:
            if len(M) != k or any(len(row) != k for row in M):
                raise ValueError("action matrix has wrong shape")
            if not _endo_columns_ok(self.invariant_factors, self.free_rank, M):
                raise ValueError("action matrix is not a well-defined endomorphism")
        ident = intlin.identity_matrix(k)
        if not _endo_eq(
            self.invariant_factors,
            self.free_rank,
            [list(r) for r in self.action[self.gamma.identity]],
            ident,
        ):
            raise ValueError("identity of gamma must act as the identity matrix")
        for s in self.gamma.elements:
            for t in self.gamma.elements:
                prod = intlin.mat_mul(
                    [list(r) for r in self.action[s]], [list(r) for r in self.action[t]]
                )
                st = self.gamma.mul(s, t)
                if not _endo_eq(
                    self.invariant_factors,
                    self.free_rank,
                    prod,
                    [list(r) for r in self.action[st]],
                ):
                    raise ValueError(
                        f"action is not a homomorphism at pair ({s}, {t})"
                    )

    @property
    def rank(self):
        return len(self.invariant_factors) + self.free_rank

    @property
    def coordinate_orders(self):
        return list(self.invariant_factors) + [0] * self.free_rank

    def reduce(self, v):
        """Canonical representative of a module element."""
        out = []
        for x, d in zip(v, self.coordinate_orders):
            out.append(x % d if d else x)
        return tuple(out)

    def zero(self):
        return (0,) * self.rank

    def add(self, v, w):
        return self.reduce(tuple(a + b for a, b in zip(v, w)))

    def neg(self, v):
        return self.reduce(tuple(-a for a in v))

    def act(self, s, v):
        return self.reduce(tuple(intlin.mat_vec([list(r) for r in self.action[s]], list(v))))

    def is_zero(self, v):
        return self.reduce(v) == self.zero()

    def elements(self):
        """All elements (torsion modules only)."""
        if self.free_rank:
            raise ValueError("module is infinite")
        return [tuple(v) for v in itertools.product(*[range(d) for d in self.invariant_factors])]

    def to_json(self):
        return {
            "gamma": self.gamma.to_json(),
            "invariant_factors": list(self.invariant_factors),
            "free_rank": self.free_rank,
            "action": {
                str(s): [list(row) for row in self.action[s]] for s in self.gamma.elements
            },
        }


def make_module(gamma, invariant_factors, free_rank, action_matrices) -> AbelianGammaModule:
    action = tuple(
        tuple(tuple(row) for row in action_matrices[s]) for s in gamma.elements
    )
    return AbelianGammaModule(
        gamma=gamma,
        invariant_factors=tuple(invariant_factors),
        free_rank=free_rank,
        action=action,
    )


def trivial_action_module(gamma, invariant_factors, free_rank=0) -> AbelianGammaModule:
    k = len(invariant_factors) + free_rank
    ident = intlin.identity_matrix(k)
    return make_module(gamma, invariant_factors, free_rank, [ident] * gamma.order)


@dataclass
class Cochain:
    """A total map Gamma^n -> M, stored on all n-tuples of element indices."""

    module: AbelianGammaModule
    degree: int
    values: dict  # tuple of gamma indices -> module element tuple

    def __post_init__(self):
        g = self.module.gamma
        for tup in itertools.product(g.elements, repeat=self.degree):
            if tup not in self.values:
                raise ValueError(f"cochain is not total: missing tuple {tup}")
        self.values = {
            t: self.module.reduce(v) for t, v in self.values.items()
        }

    def __call__(self, *args):
        return self.values[tuple(args)]

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.values == other.values
        )

    def to_vector(self, tuples):
        out = []
        for t in tuples:
            out.extend(self.values[t])
        return out

    def to_json(self):
        return {
            ",".join(str(i) for i in t): list(v) for t, v in sorted(self.values.items())
        }


def zero_cochain(M, n) -> Cochain:
    g = M.gamma
    return Cochain(M, n, {t: M.zero() for t in itertools.product(g.elements, repeat=n)})


def tuples_of(M, n):
    return list(itertools.product(M.gamma.elements, repeat=n))


def differential(M: AbelianGammaModule, n: int, cochain: Cochain) -> Cochain:
    """Inhomogeneous bar-resolution differential, degrees 0 and 1 (and 2,
    used internally for cocycle checking)."""
    if cochain.degree != n:
        raise ValueError("cochain degree does not match n")
    g = M.gamma
    out = {}
    if n == 0:
        v = cochain.values[()]
        for (s,) in itertools.product(g.elements, repeat=1):
            out[(s,)] = M.add(M.act(s, v), M.neg(v))
    elif n == 1:
        for s, t in itertools.product(g.elements, repeat=2):
            val = M.act(s, cochain.values[(t,)])
            val = M.add(val, M.neg(cochain.values[(g.mul(s, t),)]))
            val = M.add(val, cochain.values[(s,)])
            out[(s, t)] = val
    elif n == 2:
        for s, t, u in itertools.product(g.elements, repeat=3):
            val = M.act(s, cochain.values[(t, u)])
            val = M.add(val, M.neg(cochain.values[(g.mul(s, t), u)]))
            val = M.add(val, cochain.values[(s, g.mul(t, u))])
            val = M.add(val, M.neg(cochain.values[(s, t)]))
            out[(s, t, u)] = val
    else:
        raise ValueError("differential implemented for degrees 0..2 only")
    return Cochain(M, n + 1, out)


def is_cocycle(M, cochain) -> bool:
    d = differential(M, cochain.degree, cochain)
    return all(M.is_zero(v) for v in d.values.values())


def _differential_matrix(M, n):
    """Integer matrix of the degree-n differential, acting on flattened
    cochain vectors (tuples enumerated lexicographically, k coordinates
    per tuple)."""
    g = M.gamma
    k = M.rank
    src = tuples_of(M, n)
    dst = tuples_of(M, n + 1)
    src_pos = {t: i for i, t in enumerate(src)}
    rows = len(dst) * k
    cols = len(src) * k
    D = [[0] * cols for _ in range(rows)]

    def add_block(dst_i, src_t, mat, sign):
        base_r = dst_i * k
        base_c = src_pos[src_t] * k
        for i in range(k):
            row = D[base_r + i]
            for j in range(k):
                row[base_c + j] += sign * mat[i][j]

    ident = intlin.identity_matrix(k)
    for di, tup in enumerate(dst):
        if n == 0:
            (s,) = tup
            add_block(di, (), [list(r) for r in M.action[s]], 1)
            add_block(di, (), ident, -1)
        elif n == 1:
            s, t = tup
            add_block(di, (t,), [list(r) for r in M.action[s]], 1)
            add_block(di, (g.mul(s, t),), ident, -1)
            add_block(di, (s,), ident, 1)
        elif n == 2:
            s, t, u = tup
            add_block(di, (t, u), [list(r) for r in M.action[s]], 1)
            add_block(di, (g.mul(s, t), u), ident, -1)
            add_block(di, (s, g.mul(t, u)), ident, 1)
            add_block(di, (s, t), ident, -1)
        else:
            raise ValueError("degree out of range")
    return D


def _coordinate_moduli(M, n):
    """Per-coordinate moduli of the flattened degree-n cochain space."""
    return M.coordinate_orders * len(tuples_of(M, n))


def _relation_columns(M, n):
    """Columns m_i * e for the torsion coordinates of C^n."""
    orders = _coordinate_moduli(M, n)
    dim = len(orders)
    cols = []
    for i, d in enumerate(orders):
        if d:
            col = [0] * dim
            col[i] = d
            cols.append(col)
    return cols


def _vector_to_cochain(M, n, vec) -> Cochain:
    k = M.rank
    values = {}
    for i, t in enumerate(tuples_of(M, n)):
        values[t] = M.reduce(tuple(vec[i * k : (i + 1) * k]))
    return Cochain(M, n, values)


@dataclass
class CohomologyGroup:
    degree: int
    invariant_factors: list  # cyclic orders, 0 = infinite, units dropped
    generators: list = field(default_factory=list)  # Cochain per cyclic factor
    _quotient: object = None
    _module: object = None

    @property
    def order(self):
        if any(f == 0 for f in self.invariant_factors):
            return None
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    def is_trivial(self):
        return not self.invariant_factors

    @property
    def torsion_factors(self):
        return sorted(f for f in self.invariant_factors if f)

    def class_of(self, cochain: Cochain):
        """Class coordinates of a cocycle, one per cyclic factor."""
        M = self._module
        if not is_cocycle(M, cochain):
            raise NotACocycle("cochain does not satisfy the cocycle law")
        vec = cochain.to_vector(tuples_of(M, self.degree))
        coords = self._quotient.class_of(vec)
        if coords is None:
            raise NotACocycle("cocycle vector escapes the cocycle lattice")
        return coords

    def representatives(self):
        """One representative cocycle per class (finite groups only),
        ordered lexicographically by class coordinates."""
        if self.order is None:
            raise ValueError("cohomology group is infinite")
        M = self._module
        n = self.degree
        reps = []
        gen_vecs = [g.to_vector(tuples_of(M, n)) for g in self.generators]
        for coords in itertools.product(*[range(f) for f in self.invariant_factors]):
            vec = [0] * (M.rank * len(tuples_of(M, n)))
            for c, gv in zip(coords, gen_vecs):
                vec = [a + c * b for a, b in zip(vec, gv)]
            reps.append(_vector_to_cochain(M, n, vec))
        return reps


def cohomology(M: AbelianGammaModule, n: int) -> CohomologyGroup:
    """H^n(Gamma, M) for n in {0, 1, 2}, with explicit representatives."""
    if n not in (0, 1, 2):
        raise ValueError("cohomology implemented for degrees 0..2 only")
    Dn = _differential_matrix(M, n)
    moduli_next = _coordinate_moduli(M, n + 1)
    z_basis = intlin.kernel_of_congruences(
        Dn, moduli_next, column_moduli=_coordinate_moduli(M, n)
    )
    b_gens = list(_relation_columns(M, n))
    if n > 0:
        Dprev = _differential_matrix(M, n - 1)
        for j in range(len(Dprev[0]) if Dprev else 0):
            b_gens.append([Dprev[i][j] for i in range(len(Dprev))])
    quot = intlin.LatticeQuotient(z_basis, b_gens)
    generators = [_vector_to_cochain(M, n, g) for g in quot.generators]
    return CohomologyGroup(
        degree=n,
        invariant_factors=list(quot.factors),
        generators=generators,
        _quotient=quot,
        _module=M,
    )


def is_coboundary2(M: AbelianGammaModule, z: Cochain):
    """A 1-cochain a with da = z, or None.  Raises NotACocycle if z does
    not satisfy the 2-cocycle law."""
    if z.degree != 2:
        raise ValueError("expected a 2-cochain")
    if not is_cocycle(M, z):
        raise NotACocycle("the degree-2 cocycle law fails")
    D1 = _differential_matrix(M, 1)
    moduli = _coordinate_moduli(M, 2)
    target = z.to_vector(tuples_of(M, 2))
    sol = intlin.solve_congruences(D1, target, moduli)
    if sol is None:
        return None
    return _vector_to_cochain(M, 1, sol)


def tate_cyclic_oracle(M: AbelianGammaModule, n: int):
    """Invariant factors of H^n (n = 1 or 2) for cyclic Gamma, computed
    independently via the norm map:  H^2 = M^Gamma / N M  and
    H^1 = ker N / (s - 1) M  for a generator s.

    Used only as a cross-check oracle for cohomology().
    """
    g = M.gamma
    gen = None
    for s in g.elements:
        if g.element_order(s) == g.order:
            gen = s
            break
    if gen is None:
        raise NotCyclic("gamma is not cyclic")
    k = M.rank
    orders = M.coordinate_orders
    norm = [[0] * k for _ in range(k)]
    s = g.identity
    for _ in range(g.order):
        A = M.action[s]
        for i in range(k):
            for j in range(k):
                norm[i][j] += A[i][j]
        s = g.mul(s, gen)
    shift = [list(row) for row in M.action[gen]]
    for i in range(k):
        shift[i][i] -= 1
    relations = []
    for i, d in enumerate(orders):
        if d:
            col = [0] * k
            col[i] = d
            relations.append(col)
    if n == 2:
        z_basis = intlin.kernel_of_congruences(shift, orders)
        b_gens = relations + [[norm[i][j] for i in range(k)] for j in range(k)]
    elif n == 1:
        z_basis = intlin.kernel_of_congruences(norm, orders)
        b_gens = relations + [[shift[i][j] for i in range(k)] for j in range(k)]
    else:
        raise ValueError("the cyclic oracle covers degrees 1 and 2 only")
    quot = intlin.LatticeQuotient(z_basis, b_gens)
    return sorted(f for f in quot.factors if f != 1)


def permutation_module(gamma: FiniteGroup, subgroup_elements) -> AbelianGammaModule:
    """The lattice on left cosets of a subgroup, with the permutation
    action of gamma."""
    sub = sorted(set(subgroup_elements))
    coset_of = {}
    reps = []
    for x in gamma.elements:
        if x in coset_of:
            continue
        coset = sorted(gamma.mul(x, h) for h in sub)
        rep = coset[0]
        reps.append(rep)
        for y in coset:
            coset_of[y] = rep
    reps.sort()
    index = {r: i for i, r in enumerate(reps)}
    k = len(reps)
    mats = []
    for s in gamma.elements:
        Ms = [[0] * k for _ in range(k)]
        for r in reps:
            Ms[index[coset_of[gamma.mul(s, r)]]][index[r]] = 1
        mats.append(Ms)
    return make_module(gamma, [], k, mats)


def negation_module(gamma_order=2) -> AbelianGammaModule:
    """Z with the generator of a cyclic group acting by -1."""
    g = cyclic_group(gamma_order)
    mats = []
    for s in g.elements:
        sign = -1 if s % 2 else 1
        mats.append([[sign]])
    return make_module(g, [], 1, mats)
