"""Nonabelian Gamma-group cohomology: 1-cocycles, classes, twisting, and
the neutrality test for 2-cocycles pushed forward from an abelian center.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotACocycle, NotAHomomorphism, SearchBudgetExceeded
from .fingrp import (
    FiniteGroup,
    identity_automorphism,
    inner_automorphism,
)

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class GammaGroup:
    """A finite group with an action of Gamma by automorphisms."""

    gamma: FiniteGroup
    group: FiniteGroup
    action: tuple  # one Automorphism per gamma element

    def __post_init__(self):
        if len(self.action) != self.gamma.order:
            raise ValueError("one automorphism per gamma element required")
        for a in self.action:
            if a.source != self.group:
                raise ValueError("automorphism acts on the wrong group")
        ident = identity_automorphism(self.group)
        if self.action[self.gamma.identity].images != ident.images:
            raise NotAHomomorphism("identity of gamma must act trivially")
        for s in self.gamma.elements:
            for t in self.gamma.elements:
                st = self.gamma.mul(s, t)
                comp = tuple(
                    self.action[s].images[self.action[t].images[x]]
                    for x in self.group.elements
                )
                if comp != self.action[st].images:
                    raise NotAHomomorphism(
                        f"gamma action is not a homomorphism at pair ({s}, {t})"
                    )

    def act(self, s, x):
        return self.action[s].images[x]

    def to_json(self):
        return {
            "gamma": self.gamma.to_json(),
            "group": self.group.to_json(),
            "action": {str(s): list(self.action[s].images) for s in self.gamma.elements},
        }


def trivial_gamma_group(gamma: FiniteGroup, group: FiniteGroup) -> GammaGroup:
    ident = identity_automorphism(group)
    return GammaGroup(gamma, group, tuple(ident for _ in gamma.elements))


@dataclass(frozen=True)
class NonabCocycle1:
    parent: GammaGroup
    values: tuple  # one group element per gamma element

    def __post_init__(self):
        if not is_cocycle1(self.parent, self.values):
            raise NotACocycle("degree-1 cocycle condition fails")

    def __call__(self, s):
        return self.values[s]

    def to_json(self):
        return {str(s): self.values[s] for s in self.parent.gamma.elements}


def is_cocycle1(A: GammaGroup, values) -> bool:
    """c_{st} = c_s * (s . c_t) for all pairs."""
    g = A.gamma
    grp = A.group
    if len(values) != g.order:
        return False
    for s in g.elements:
        for t in g.elements:
            if values[g.mul(s, t)] != grp.mul(values[s], A.act(s, values[t])):
                return False
    return True


def cohomologous1(A: GammaGroup, c: NonabCocycle1, c2: NonabCocycle1):
    """Witness b with c2_s = b^-1 * c_s * (s . b) for all s, or None.
    Exhaustive over the group."""
    g = A.gamma
    grp = A.group
    for b in grp.elements:
        binv = grp.inv(b)
        if all(
            c2.values[s] == grp.mul(grp.mul(binv, c.values[s]), A.act(s, b))
            for s in g.elements
        ):
            return b
    return None


def enumerate_cocycles1(A: GammaGroup, budget=DEFAULT_BUDGET):
    """All 1-cocycles, in lexicographic order of their value vectors."""
    g = A.gamma
    grp = A.group
    non_identity = [s for s in g.elements if s != g.identity]
    if grp.order ** len(non_identity) > budget:
        raise SearchBudgetExceeded(budget)
    out = []
    for choice in itertools.product(grp.elements, repeat=len(non_identity)):
        values = [None] * g.order
        values[g.identity] = grp.identity
        for s, v in zip(non_identity, choice):
            values[s] = v
        values = tuple(values)
        if is_cocycle1(A, values):
            out.append(NonabCocycle1(A, values))
    return out


def h1_classes(A: GammaGroup, budget=DEFAULT_BUDGET):
    """One representative per H^1 class: enumerate Z^1, partition by the
    coboundary action, keep the lexicographically least cocycle of each
    orbit."""
    cocycles = enumerate_cocycles1(A, budget=budget)
    reps = []
    seen = [False] * len(cocycles)
    for i, c in enumerate(cocycles):
        if seen[i]:
            continue
        reps.append(c)
        for j in range(i, len(cocycles)):
            if not seen[j] and cohomologous1(A, c, cocycles[j]) is not None:
                seen[j] = True
    return reps


def twist(A: GammaGroup, c: NonabCocycle1) -> GammaGroup:
    """Twist the action by a group-valued cocycle: s maps to
    inn(c_s) after the old action."""
    if c.parent.gamma != A.gamma or c.parent.group != A.group:
        raise NotACocycle("cocycle does not live on this gamma group")
    if not is_cocycle1(A, c.values):
        raise NotACocycle("twisting requires a 1-cocycle for the given action")
    new_action = tuple(
        A.action[s].then(inner_automorphism(A.group, c.values[s]))
        for s in A.gamma.elements
    )
    return GammaGroup(A.gamma, A.group, new_action)


def twist_by_automorphisms(A: GammaGroup, auts) -> GammaGroup:
    """Twist by an Aut-valued cocycle (one Automorphism per gamma element),
    where Gamma acts on Aut(group) by conjugation with the old action."""
    g = A.gamma
    for s in g.elements:
        for t in g.elements:
            # cocycle law in Aut: c_{st} = c_s o (s . c_t),
            # with (s . f) = sigma_s o f o sigma_s^-1
            sct = A.action[s].inverse_automorphism().then(auts[t]).then(A.action[s])
            lhs = auts[g.mul(s, t)].images
            rhs = sct.then(auts[s]).images
            if lhs != rhs:
                raise NotACocycle(f"Aut-valued cocycle law fails at pair ({s}, {t})")
    new_action = tuple(A.action[s].then(auts[s]) for s in g.elements)
    return GammaGroup(g, A.group, new_action)


def inverse_cocycle(twisted: GammaGroup, c: NonabCocycle1) -> NonabCocycle1:
    """The cocycle s -> c_s^-1, which is a 1-cocycle for the c-twisted
    action and undoes the twist."""
    grp = twisted.group
    values = tuple(grp.inv(c.values[s]) for s in twisted.gamma.elements)
    return NonabCocycle1(twisted, values)


@dataclass(frozen=True)
class Twisted2Cocycle:
    """A 2-cocycle with values in a Gamma-group A.  In this artifact the
    values always commute pairwise (they come from an abelian center via an
    equivariant map), and the abelian 2-cocycle law holds through the
    action."""

    coefficients: GammaGroup
    values: tuple  # flat tuple indexed by s * |gamma| + t

    def __post_init__(self):
        g = self.coefficients.gamma
        grp = self.coefficients.group
        if len(self.values) != g.order * g.order:
            raise ValueError("one value per pair of gamma elements required")
        vals = set(self.values)
        for a in vals:
            for b in vals:
                if grp.mul(a, b) != grp.mul(b, a):
                    raise NotACocycle("2-cocycle values do not commute")
        for s in g.elements:
            for t in g.elements:
                for u in g.elements:
                    lhs = grp.mul(
                        self.coefficients.act(s, self(t, u)), self(s, g.mul(t, u))
                    )
                    rhs = grp.mul(self(s, t), self(g.mul(s, t), u))
                    if lhs != rhs:
                        raise NotACocycle(
                            f"degree-2 cocycle law fails at triple ({s}, {t}, {u})"
                        )

    def __call__(self, s, t):
        return self.values[s * self.coefficients.gamma.order + t]

    def to_json(self):
        g = self.coefficients.gamma
        return {f"{s},{t}": self(s, t) for s in g.elements for t in g.elements}


def make_twisted2(A: GammaGroup, value_map) -> Twisted2Cocycle:
    g = A.gamma
    values = tuple(
        value_map[(s, t)] for s in g.elements for t in g.elements
    )
    return Twisted2Cocycle(A, values)


def identity_twisted2(A: GammaGroup) -> Twisted2Cocycle:
    g = A.gamma
    e = A.group.identity
    return Twisted2Cocycle(A, (e,) * (g.order * g.order))


def is_neutral2(A: GammaGroup, z: Twisted2Cocycle, budget=None):
    """Search for a map a: Gamma -> A with

        a_s * (s . a_t) * z(s, t) * a_{st}^-1 = identity   for all s, t.

    Returns the witness (tuple of group elements, least in search order)
    or None after exhausting the space.  The value at the Gamma-identity
    is forced; later values are propagated from products of already
    assigned elements.  A budget below the exhaustive bound raises
    SearchBudgetExceeded when hit.
    """
    if z.coefficients != A:
        raise NotACocycle("2-cocycle does not live on this gamma group")
    g = A.gamma
    grp = A.group
    n = g.order
    # s = t = identity forces a_e = z(e, e)^-1
    a0 = grp.inv(z(g.identity, g.identity))
    order = [g.identity] + [s for s in g.elements if s != g.identity]
    assigned = {g.identity: a0}
    nodes = 0

    def consistent(limit_known):
        for s in limit_known:
            for t in limit_known:
                st = g.mul(s, t)
                if st not in assigned:
                    continue
                lhs = grp.mul(
                    grp.mul(assigned[s], A.act(s, assigned[t])), z(s, t)
                )
                if lhs != assigned[st]:
                    return False
        return True

    def propagate():
        """Fill in forced values a_{st} from assigned pairs; returns the
        set of newly forced keys or None on conflict."""
        added = []
        changed = True
        while changed:
            changed = False
            known = list(assigned.keys())
            for s in known:
                for t in known:
                    st = g.mul(s, t)
                    forced = grp.mul(
                        grp.mul(assigned[s], A.act(s, assigned[t])), z(s, t)
                    )
                    if st in assigned:
                        if assigned[st] != forced:
                            for k in added:
                                del assigned[k]
                            return None
                    else:
                        assigned[st] = forced
                        added.append(st)
                        changed = True
        return added

    def search(pos):
        nonlocal nodes
        if pos == len(order):
            return consistent(list(assigned.keys()))
        s = order[pos]
        if s in assigned:
            return search(pos + 1)
        for cand in grp.elements:
            nodes += 1
            if budget is not None and nodes > budget:
                raise SearchBudgetExceeded(budget)
            assigned[s] = cand
            added = propagate()
            if added is not None:
                if search(pos + 1):
                    return True
                for k in added:
                    del assigned[k]
            del assigned[s]
        return False

    seed = propagate()
    if seed is None:
        return None
    if search(0):
        witness = tuple(assigned[s] for s in g.elements)
        assert verify_neutrality_witness(A, z, witness)
        return witness
    return None


def verify_neutrality_witness(A: GammaGroup, z: Twisted2Cocycle, witness) -> bool:
    """Re-check the neutrality identity verbatim on every pair."""
    g = A.gamma
    grp = A.group
    for s in g.elements:
        for t in g.elements:
            v = grp.mul(witness[s], A.act(s, witness[t]))
            v = grp.mul(v, z(s, t))
            v = grp.mul(v, grp.inv(witness[g.mul(s, t)]))
            if v != grp.identity:
                return False
    return True
