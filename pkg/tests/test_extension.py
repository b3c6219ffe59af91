import random

import pytest

from galcoh import extension as ext
from galcoh import fingrp, gmod, nonab
from galcoh.errors import NotASubgroup, NotEquivariant
from galcoh.fingrp import cyclic_group, direct_product, quaternion_group, symmetric_group

import conftest as cf


def test_abelian_invariant_decomposition():
    cases = [
        (cyclic_group(4), [4]),
        (direct_product(cyclic_group(2), cyclic_group(2)), [2, 2]),
        (cyclic_group(6), [6]),
        (direct_product(cyclic_group(4), cyclic_group(2)), [4, 2]),
        (direct_product(cyclic_group(2), cyclic_group(6)), [6, 2]),
    ]
    for A, expected in cases:
        factors, gens, elem_to_vec = ext.abelian_invariant_decomposition(A)
        assert factors == expected
        assert len(elem_to_vec) == A.order
        for x, vec in elem_to_vec.items():
            y = A.identity
            for g, e in zip(gens, vec):
                y = A.mul(y, A.power(g, e))
            assert y == x


def test_central_extension_rejects_noncentral():
    S3 = symmetric_group(3)
    C2 = cyclic_group(2)
    A = nonab.trivial_gamma_group(C2, S3)
    normal3 = [x for x in S3.elements if S3.element_order(x) in (1, 3)]
    with pytest.raises(NotASubgroup):
        ext.central_extension(A, normal3)


def test_central_extension_rejects_unstable_subgroup():
    C2 = cyclic_group(2)
    V = direct_product(cyclic_group(2), cyclic_group(2))
    swap = fingrp.Automorphism(V, V, (0, 2, 1, 3))
    A = nonab.GammaGroup(C2, V, (fingrp.identity_automorphism(V), swap))
    with pytest.raises(NotEquivariant):
        ext.central_extension(A, [0, 1])


def test_connecting_delta_mu4_example():
    # 1 -> mu2 -> mu4 -> C2 -> 1, trivial Galois action: the projection of
    # i has delta class z(g,g) = i^2 = -1, which does not lift
    C2 = cyclic_group(2)
    C4 = cyclic_group(4)
    A = nonab.trivial_gamma_group(C2, C4)
    E = ext.central_extension(A, [0, 2])
    c = nonab.NonabCocycle1(E.Gbar, (0, 1))
    z = ext.connecting_delta(E, c)
    assert z.values[(1, 1)] == (1,)
    assert gmod.is_cocycle(E.module, z)
    assert ext.lifts_to_cocycle(E, c) is None
    # with the inversion action the same cocycle lifts
    inv = fingrp.Automorphism(C4, C4, tuple(C4.inv(x) for x in C4.elements))
    Ai = nonab.GammaGroup(C2, C4, (fingrp.identity_automorphism(C4), inv))
    Ei = ext.central_extension(Ai, [0, 2])
    ci = nonab.NonabCocycle1(Ei.Gbar, (0, 1))
    lift = ext.lifts_to_cocycle(Ei, ci)
    assert lift is not None
    assert all(Ei.proj(lift.values[s]) == ci.values[s] for s in C2.elements)


def test_lift_iff_coboundary_randomized():
    rng = random.Random(11)
    for _ in range(40):
        E, cocycles = cf.random_extension(rng)
        c = rng.choice(cocycles)
        z = ext.connecting_delta(E, c)
        lift = ext.lifts_to_cocycle(E, c)
        cob = gmod.is_coboundary2(E.module, z)
        assert (lift is None) == (cob is None)
        if lift is not None:
            assert nonab.is_cocycle1(E.G, lift.values)


def test_delta_section_independent_up_to_class():
    rng = random.Random(12)
    for _ in range(25):
        E, cocycles = cf.random_extension(rng)
        c = rng.choice(cocycles)
        h2 = gmod.cohomology(E.module, 2)
        base = h2.class_of(ext.connecting_delta(E, c))
        # a random section: any preimage per coset
        G = E.G.group
        sec = []
        for q in E.Gbar.group.elements:
            pre = [x for x in G.elements if E.proj(x) == q]
            sec.append(rng.choice(pre))
        E2 = ext.central_extension(E.G, list(E.kernel_elements()), section=sec)
        c2 = nonab.NonabCocycle1(E2.Gbar, c.values)
        assert h2.class_of(ext.connecting_delta(E2, c2)) == base


def test_delta_class_independent_on_cohomologous_cocycles():
    rng = random.Random(13)
    for _ in range(25):
        E, cocycles = cf.random_extension(rng)
        c = rng.choice(cocycles)
        h2 = gmod.cohomology(E.module, 2)
        base = h2.class_of(ext.connecting_delta(E, c))
        Q = E.Gbar.group
        b = rng.choice(Q.elements)
        shifted = tuple(
            Q.mul(Q.mul(Q.inv(b), c.values[s]), E.Gbar.act(s, b))
            for s in E.G.gamma.elements
        )
        c2 = nonab.NonabCocycle1(E.Gbar, shifted)
        assert h2.class_of(ext.connecting_delta(E, c2)) == base


def test_identity_center_map_and_pushforward():
    C2 = cyclic_group(2)
    Q8 = quaternion_group()
    A = nonab.trivial_gamma_group(C2, Q8)
    E = ext.central_extension(A, sorted(fingrp.center(Q8)[1].images))
    kappa = ext.identity_center_map(E)
    # kappa is a bijection center-module -> center subgroup
    seen = {kappa(v) for v in E.module.elements()}
    assert len(seen) == E.Z.order
    # pushforward of the zero cocycle is the identity 2-cocycle
    z0 = gmod.zero_cochain(E.module, 2)
    zA = ext.pushforward2(kappa, z0)
    assert all(v == kappa.target.group.identity for v in zA.values)
