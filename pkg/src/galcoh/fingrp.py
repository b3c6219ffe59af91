"""Finite groups as closed Cayley tables, with homs, subgroups, quotients
and exhaustive automorphism enumeration.

Elements are indices 0..order-1.  Everything is immutable after
construction and all operations are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotAHomomorphism,
    NotASubgroup,
    NotNormal,
    SearchBudgetExceeded,
)

AUTOMORPHISM_ORDER_BOUND = 64


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple  # tuple of tuples of element indices
    identity: int
    inverse: tuple = field(compare=False)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    def conj(self, g, x):
        """g * x * g^-1"""
        return self.mul(self.mul(g, x), self.inv(g))

    def power(self, g, n):
        if n < 0:
            return self.power(self.inv(g), -n)
        r = self.identity
        for _ in range(n):
            r = self.mul(r, g)
        return r

    def element_order(self, g):
        n = 1
        x = g
        while x != self.identity:
            x = self.mul(x, g)
            n += 1
        return n

    @property
    def elements(self):
        return range(self.order)

    def is_abelian(self):
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(a)
        )

    def to_json(self):
        return {"order": self.order, "table": [list(row) for row in self.table]}


def make_group(table) -> FiniteGroup:
    """Validate a Cayley table and wrap it as a FiniteGroup.

    Raises NoIdentity / NoInverse / NonAssociative naming the first
    violating element or triple found.
    """
    n = len(table)
    rows = tuple(tuple(row) for row in table)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"table row {i} has length {len(row)}, expected {n}")
        for v in row:
            if not (0 <= v < n):
                raise ValueError(f"table entry {v} out of range 0..{n - 1}")
    identity = None
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity()
    inverse = []
    for x in range(n):
        found = None
        for y in range(n):
            if rows[x][y] == identity and rows[y][x] == identity:
                found = y
                break
        if found is None:
            raise NoInverse(x)
        inverse.append(found)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                    raise NonAssociative(a, b, c)
    return FiniteGroup(order=n, table=rows, identity=identity, inverse=tuple(inverse))


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.source.order:
            raise NotAHomomorphism("images length does not match source order")
        if self.images[self.source.identity] != self.target.identity:
            raise NotAHomomorphism("identity is not mapped to identity")
        for a in range(self.source.order):
            for b in range(self.source.order):
                lhs = self.images[self.source.mul(a, b)]
                rhs = self.target.mul(self.images[a], self.images[b])
                if lhs != rhs:
                    raise NotAHomomorphism(
                        f"multiplicativity fails at pair ({a}, {b})"
                    )

    def __call__(self, x):
        return self.images[x]

    def is_bijective(self):
        return (
            self.source.order == self.target.order
            and len(set(self.images)) == self.source.order
        )

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other (other first)."""
        if other.target is not self.source and other.target != self.source:
            raise NotAHomomorphism("composition source/target mismatch")
        return GroupHom(
            source=other.source,
            target=self.target,
            images=tuple(self.images[other.images[x]] for x in range(other.source.order)),
        )

    def to_json(self):
        return {"images": list(self.images)}


class Automorphism(GroupHom):
    """A bijective GroupHom with source == target."""

    def __post_init__(self):
        super().__post_init__()
        if self.source != self.target:
            raise NotAHomomorphism("automorphism must have source == target")
        if not self.is_bijective():
            raise NotAHomomorphism("images are not a permutation")

    def inverse_automorphism(self) -> "Automorphism":
        inv = [0] * self.source.order
        for x in range(self.source.order):
            inv[self.images[x]] = x
        return Automorphism(self.source, self.target, tuple(inv))

    def then(self, other: "Automorphism") -> "Automorphism":
        """other after self as an Automorphism."""
        return Automorphism(
            self.source,
            self.source,
            tuple(other.images[self.images[x]] for x in range(self.source.order)),
        )


def identity_automorphism(G: FiniteGroup) -> Automorphism:
    return Automorphism(G, G, tuple(range(G.order)))


def inner_automorphism(G: FiniteGroup, g) -> Automorphism:
    return Automorphism(G, G, tuple(G.conj(g, x) for x in G.elements))


def is_subgroup(G: FiniteGroup, elements) -> bool:
    s = set(elements)
    if G.identity not in s:
        return False
    return all(G.mul(a, b) in s for a in s for b in s) and all(G.inv(a) in s for a in s)


def subgroup(G: FiniteGroup, elements):
    """Induced group on a subset of element indices (sorted ascending),
    with the inclusion hom into G."""
    elems = sorted(set(elements))
    if not is_subgroup(G, elems):
        raise NotASubgroup(f"{elems} is not closed under product/inverse")
    index = {g: i for i, g in enumerate(elems)}
    table = [[index[G.mul(a, b)] for b in elems] for a in elems]
    S = make_group(table)
    incl = GroupHom(S, G, tuple(elems))
    return S, incl


def center(G: FiniteGroup):
    elems = [
        z
        for z in G.elements
        if all(G.mul(z, x) == G.mul(x, z) for x in G.elements)
    ]
    return subgroup(G, elems)


def generated_subgroup(G: FiniteGroup, gens):
    closure = {G.identity}
    frontier = list(set(gens) | {G.identity})
    closure.update(frontier)
    while frontier:
        nxt = []
        for a in list(closure):
            for b in frontier:
                c = G.mul(a, b)
                if c not in closure:
                    closure.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(closure)


def is_normal(G: FiniteGroup, elements) -> bool:
    s = set(elements)
    return all(G.conj(g, x) in s for g in G.elements for x in s)


def quotient(G: FiniteGroup, normal_elements):
    """Quotient group by a normal subgroup given as element indices.

    Cosets are canonicalized by their least element index and ordered by it,
    so the output is deterministic.  Returns (quotient group, projection).
    """
    elems = sorted(set(normal_elements))
    if not is_subgroup(G, elems):
        raise NotASubgroup(f"{elems} is not a subgroup")
    if not is_normal(G, elems):
        raise NotNormal(f"subgroup {elems} is not normal")
    coset_of = {}
    reps = []
    for g in G.elements:
        if g in coset_of:
            continue
        coset = sorted(G.mul(g, n) for n in elems)
        rep = coset[0]
        reps.append(rep)
        for x in coset:
            coset_of[x] = rep
    reps.sort()
    index = {r: i for i, r in enumerate(reps)}
    table = [
        [index[coset_of[G.mul(a, b)]] for b in reps]
        for a in reps
    ]
    Q = make_group(table)
    proj = GroupHom(G, Q, tuple(index[coset_of[g]] for g in G.elements))
    return Q, proj


def minimal_generators(G: FiniteGroup):
    """A small generating sequence, chosen greedily by element index."""
    gens = []
    closure = {G.identity}
    for g in G.elements:
        if g not in closure:
            gens.append(g)
            closure = set(generated_subgroup(G, gens))
            if len(closure) == G.order:
                break
    return gens


def automorphism_list(G: FiniteGroup, order_bound=AUTOMORPHISM_ORDER_BOUND):
    """All automorphisms of G by exhaustive generator-image search.

    Candidate images must match element orders; partial assignments are
    extended by closure and rejected on the first inconsistency.
    """
    if G.order > order_bound:
        raise SearchBudgetExceeded(order_bound)
    gens = minimal_generators(G)
    if not gens:
        return [identity_automorphism(G)]
    orders = {g: G.element_order(g) for g in G.elements}
    candidates = [
        [h for h in G.elements if orders[h] == orders[g]] for g in gens
    ]
    # express every element as a word in the generators, by BFS
    word = {G.identity: ()}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for i, g in enumerate(gens):
                y = G.mul(x, g)
                if y not in word:
                    word[y] = word[x] + (i,)
                    nxt.append(y)
        frontier = nxt

    results = []
    for choice in itertools.product(*candidates):
        images = [None] * G.order
        ok = True
        for x in G.elements:
            y = G.identity
            for i in word[x]:
                y = G.mul(y, choice[i])
            images[x] = y
        if len(set(images)) != G.order:
            continue
        for a in G.elements:
            for b in G.elements:
                if images[G.mul(a, b)] != G.mul(images[a], images[b]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            results.append(Automorphism(G, G, tuple(images)))
    return results


# -- constructors for common small groups ----------------------------------

def trivial_group() -> FiniteGroup:
    return make_group([[0]])


def cyclic_group(n: int) -> FiniteGroup:
    return make_group([[(a + b) % n for b in range(n)] for a in range(n)])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    n = G.order * H.order
    def idx(g, h):
        return g * H.order + h
    table = [[0] * n for _ in range(n)]
    for g1 in G.elements:
        for h1 in H.elements:
            for g2 in G.elements:
                for h2 in H.elements:
                    table[idx(g1, h1)][idx(g2, h2)] = idx(G.mul(g1, g2), H.mul(h1, h2))
    return make_group(table)


def symmetric_group(n: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(n))] for q in perms]
        for p in perms
    ]
    return make_group(table)


def quaternion_group() -> FiniteGroup:
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k (in that order)."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    index = {s: n for n, s in enumerate(names)}

    def mul(a, b):
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        base = {
            ("1", "1"): (1, "1"),
        }
        for u in "ijk":
            base[("1", u)] = (1, u)
            base[(u, "1")] = (1, u)
            base[(u, u)] = (-1, "1")
        base[("i", "j")] = (1, "k")
        base[("j", "k")] = (1, "i")
        base[("k", "i")] = (1, "j")
        base[("j", "i")] = (-1, "k")
        base[("k", "j")] = (-1, "i")
        base[("i", "k")] = (-1, "j")
        s, r = base[(a, b)]
        sign *= s
        return index[r if sign == 1 else "-" + r]

    table = [[mul(names[a], names[b]) for b in range(8)] for a in range(8)]
    return make_group(table)


def dihedral_group(n: int) -> FiniteGroup:
    """D_n of order 2n; element 2*k is rotation r^k, 2*k+1 is r^k * s."""
    order = 2 * n

    def mul(a, b):
        ka, fa = divmod(a, 2)
        a_rot, a_flip = ka, fa
        kb, fb = divmod(b, 2)
        if a_flip == 0:
            rot = (a_rot + kb) % n
            flip = fb
        else:
            rot = (a_rot - kb) % n
            flip = 1 - fb
        return 2 * rot + flip

    table = [[mul(a, b) for b in range(order)] for a in range(order)]
    return make_group(table)
