"""Shared instance generators for the test suite.

Random instances are built from a fixed catalog of small groups, all
homomorphisms Gamma -> Aut(A) (enumerated once and cached), and module
families built from permutation lattices and their torsion quotients.
"""

import functools
import itertools
import random

from galcoh import fingrp, gmod, nonab
from galcoh.fingrp import (
    FiniteGroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    quaternion_group,
    symmetric_group,
)
from galcoh.nonab import GammaGroup


def group_catalog():
    return {
        "C2": cyclic_group(2),
        "C3": cyclic_group(3),
        "C4": cyclic_group(4),
        "C6": cyclic_group(6),
        "C8": cyclic_group(8),
        "C2xC2": direct_product(cyclic_group(2), cyclic_group(2)),
        "C4xC2": direct_product(cyclic_group(4), cyclic_group(2)),
        "C2xC6": direct_product(cyclic_group(2), cyclic_group(6)),
        "S3": symmetric_group(3),
        "Q8": quaternion_group(),
        "D4": dihedral_group(4),
    }


GAMMA_NAMES = ("C2", "C3", "C4", "C2xC2", "S3")


@functools.lru_cache(maxsize=None)
def all_homs(G: FiniteGroup, H: FiniteGroup):
    """Every homomorphism G -> H, as image tuples, by generator-image
    search with closure."""
    gens = fingrp.minimal_generators(G)
    if not gens:
        return [tuple([H.identity] * G.order)]
    out = []
    for choice in itertools.product(H.elements, repeat=len(gens)):
        images = [None] * G.order
        images[G.identity] = H.identity
        for g, h in zip(gens, choice):
            if images[g] is not None and images[g] != h:
                break
            images[g] = h
        else:
            ok = True
            changed = True
            while changed and ok:
                changed = False
                known = [x for x in G.elements if images[x] is not None]
                for a in known:
                    for b in known:
                        ab = G.mul(a, b)
                        img = H.mul(images[a], images[b])
                        if images[ab] is None:
                            images[ab] = img
                            changed = True
                        elif images[ab] != img:
                            ok = False
                            break
                    if not ok:
                        break
            if ok and all(v is not None for v in images):
                out.append(tuple(images))
    return out


@functools.lru_cache(maxsize=None)
def _aut_group(A: FiniteGroup):
    """(FiniteGroup of Aut(A), list of Automorphism in element order)."""
    auts = fingrp.automorphism_list(A)
    index = {a.images: i for i, a in enumerate(auts)}
    n = len(auts)
    table = tuple(
        tuple(index[auts[j].then(auts[i]).images] for j in range(n))
        for i in range(n)
    )
    # reorder so the canonical constructor validation passes as-is
    return fingrp.make_group(table), auts


@functools.lru_cache(maxsize=None)
def gamma_actions(gamma: FiniteGroup, A: FiniteGroup):
    """All GammaGroup structures of gamma on A."""
    aut_grp, auts = _aut_group(A)
    out = []
    for hom in all_homs(gamma, aut_grp):
        action = tuple(auts[hom[s]] for s in gamma.elements)
        out.append(GammaGroup(gamma, A, action))
    return out


def random_gamma_group(rng: random.Random, gamma, A) -> GammaGroup:
    return rng.choice(gamma_actions(gamma, A))


def module_family(gamma: FiniteGroup):
    """A list of Gamma-modules over the given group: permutation lattices
    over every subgroup, their torsion quotients, the sign lattice when
    the order is even, and a couple of direct sums."""
    subs = _all_subgroups(gamma)
    mods = []
    for sub in subs:
        perm = gmod.permutation_module(gamma, sub)
        mods.append(perm)
        k = perm.rank
        for m in (2, 3, 4):
            mods.append(gmod.make_module(gamma, [m] * k, 0, perm.action))
    if gamma.order % 2 == 0:
        sign = _sign_module(gamma)
        mods.append(sign)
        mods.append(gmod.make_module(gamma, [4], 0, sign.action))
    mods.append(gmod.trivial_action_module(gamma, [2]))
    mods.append(gmod.trivial_action_module(gamma, [6], free_rank=1))
    return mods


@functools.lru_cache(maxsize=None)
def _all_subgroups(gamma: FiniteGroup):
    found = set()
    for r in range(gamma.order + 1):
        if r > 3:
            break
        for gens in itertools.combinations(gamma.elements, r):
            sub = tuple(fingrp.generated_subgroup(gamma, list(gens)))
            found.add(sub)
    return sorted(found)


def _sign_module(gamma: FiniteGroup):
    """Z with x acting by -1 exactly when x has even... rather: by the
    unique surjection onto {+-1} if one exists, else trivially."""
    C2 = cyclic_group(2)
    homs = [h for h in all_homs(gamma, C2) if 1 in h]
    if not homs:
        return gmod.trivial_action_module(gamma, [], free_rank=1)
    h = homs[0]
    mats = [[[-1]] if h[s] else [[1]] for s in gamma.elements]
    return gmod.make_module(gamma, [], 1, mats)


def random_module(rng: random.Random, gamma) -> gmod.AbelianGammaModule:
    return rng.choice(module_family(gamma))


# --- central extension instances ------------------------------------------


def extension_instances():
    """(name, group, central subgroup elements) triples used for the
    randomized connecting-map tests."""
    cat = group_catalog()
    out = []
    C4 = cat["C4"]
    out.append(("C4/mu2", C4, [0, 2]))
    C8 = cat["C8"]
    out.append(("C8/mu2", C8, [0, 4]))
    out.append(("C8/mu4", C8, [0, 2, 4, 6]))
    Q8 = cat["Q8"]
    out.append(("Q8/center", Q8, sorted(fingrp.center(Q8)[1].images)))
    D4 = cat["D4"]
    out.append(("D4/center", D4, sorted(fingrp.center(D4)[1].images)))
    C4xC2 = cat["C4xC2"]
    twos = [x for x in C4xC2.elements if C4xC2.element_order(x) <= 2 and x != 0]
    for z in twos:
        out.append((f"C4xC2/{z}", C4xC2, [0, z]))
    C2xC6 = cat["C2xC6"]
    invol = next(x for x in C2xC6.elements if C2xC6.element_order(x) == 2)
    out.append(("C2xC6/mu2", C2xC6, [0, invol]))
    return out


def lambda_instance(rng: random.Random):
    """A compatible pair of central extensions related by dividing out a
    central subgroup K:

        1 -> Z -> Gt -> Gbar -> 1        (Z the center of Gt)
        1 -> Z/K -> Gt/K -> Gbar -> 1

    Returns (Etilde, E, phi, c, cE) where phi identifies the two quotient
    Gamma-groups and cE is the transported cocycle.
    """
    from galcoh import extension as ext

    cat = group_catalog()
    while True:
        Gt = cat[rng.choice(("Q8", "D4", "C4xC2", "C8"))]
        zelems = sorted(fingrp.center(Gt)[1].images)
        ksubs = [
            list(s)
            for s in _all_subgroups_of_subset(Gt, zelems)
            if len(s) < len(zelems)
        ]
        K = rng.choice(ksubs)
        gamma = cat[rng.choice(("C2", "C3", "C2xC2"))]
        actions = [
            A
            for A in gamma_actions(gamma, Gt)
            if all(A.act(s, z) in set(K) for s in gamma.elements for z in K)
        ]
        if not actions:
            continue
        A = rng.choice(actions)
        Etilde = ext.central_extension(A, zelems)
        cocycles = nonab.enumerate_cocycles1(Etilde.Gbar)
        c = rng.choice(cocycles)

        Q, projK = fingrp.quotient(Gt, K)
        bar = []
        for s in gamma.elements:
            imgs = [None] * Q.order
            for x in Gt.elements:
                imgs[projK(x)] = projK(A.act(s, x))
            bar.append(fingrp.Automorphism(Q, Q, tuple(imgs)))
        AQ = GammaGroup(gamma, Q, tuple(bar))
        zq = sorted({projK(z) for z in zelems})
        E = ext.central_extension(AQ, zq)

        # the two residual quotients are canonically identified
        phi = [None] * Etilde.Gbar.group.order
        for x in Gt.elements:
            phi[Etilde.proj(x)] = E.proj(projK(x))
        cE = nonab.NonabCocycle1(
            E.Gbar, tuple(phi[c.values[s]] for s in gamma.elements)
        )
        return Etilde, E, projK, phi, c, cE


def _all_subgroups_of_subset(G, elements):
    out = set()
    elems = list(elements)
    for r in range(len(elems) + 1):
        for gens in itertools.combinations(elems, r):
            sub = tuple(fingrp.generated_subgroup(G, list(gens)))
            if set(sub) <= set(elems):
                out.add(sub)
    return sorted(out)


def stabilizing_actions(gamma, G, zelems):
    """Gamma-group structures on G whose action preserves the subgroup."""
    zset = set(zelems)
    return [
        A
        for A in gamma_actions(gamma, G)
        if all(A.act(s, z) in zset for s in gamma.elements for z in zset)
    ]


def random_extension(rng: random.Random, gammas=None):
    """A random (CentralExtension, cocycle list) pair; cocycles are the
    full Z^1 of the quotient when small enough."""
    from galcoh import extension as ext

    if gammas is None:
        gammas = [group_catalog()[n] for n in ("C2", "C3", "C2xC2")]
    while True:
        name, G, zelems = rng.choice(extension_instances())
        gamma = rng.choice(gammas)
        actions = stabilizing_actions(gamma, G, zelems)
        if not actions:
            continue
        A = rng.choice(actions)
        E = ext.central_extension(A, zelems)
        cocycles = nonab.enumerate_cocycles1(E.Gbar)
        if cocycles:
            return E, cocycles
