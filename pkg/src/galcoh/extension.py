"""Central extensions of Gamma-groups, the connecting map into degree-2
cohomology of the center, cocycle lifting, and pushforward along an
equivariant map to an automorphism group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import gmod, nonab
from .errors import (
    InternalInvariantViolation,
    NotACocycle,
    NotEquivariant,
    NotASubgroup,
)
from .fingrp import (
    Automorphism,
    FiniteGroup,
    GroupHom,
    is_subgroup,
    quotient,
    subgroup,
)
from .gmod import AbelianGammaModule, Cochain
from .nonab import GammaGroup, NonabCocycle1, Twisted2Cocycle


def abelian_invariant_decomposition(A: FiniteGroup):
    """Invariant factors (largest first) of a finite abelian group, with a
    generator tuple realizing the direct-sum decomposition.

    Returns (factors, generators, elem_to_vec) where elem_to_vec maps each
    element index to its unique coordinate vector over the generators.
    """
    if not A.is_abelian():
        raise ValueError("group is not abelian")
    if A.order == 1:
        return [], [], {A.identity: ()}

    # invariant factor chain via repeated maximal-order quotients
    def chain(G):
        if G.order == 1:
            return []
        d = max(G.element_order(g) for g in G.elements)
        g = min(x for x in G.elements if G.element_order(x) == d)
        cyc = sorted({G.power(g, i) for i in range(d)})
        Q, _ = quotient(G, cyc)
        return [d] + chain(Q)

    factors = chain(A)
    # brute-force generators matching the factor orders
    candidates = [
        [g for g in A.elements if A.element_order(g) == d] for d in factors
    ]
    for gens in itertools.product(*candidates):
        elem_to_vec = {}
        ok = True
        for vec in itertools.product(*[range(d) for d in factors]):
            x = A.identity
            for g, e in zip(gens, vec):
                x = A.mul(x, A.power(g, e))
            if x in elem_to_vec:
                ok = False
                break
            elem_to_vec[x] = vec
        if ok and len(elem_to_vec) == A.order:
            return list(factors), list(gens), elem_to_vec
    raise InternalInvariantViolation("no invariant-factor basis found")


@dataclass(frozen=True)
class CentralExtension:
    """1 -> Z -> G -> Gbar -> 1 with compatible Gamma-actions.

    Z is carried both multiplicatively (a central subgroup of G, via incl)
    and additively (an AbelianGammaModule with an explicit coordinate
    correspondence).
    """

    G: GammaGroup
    Z: FiniteGroup
    incl: GroupHom  # Z -> G.group
    Gbar: GammaGroup
    proj: GroupHom  # G.group -> Gbar.group
    section: tuple  # one G-element per Gbar-element, proj o section = id
    module: AbelianGammaModule
    _z_gens: tuple = field(compare=False, default=())
    _z_elem_to_vec: dict = field(compare=False, default=None)

    def module_to_group(self, vec):
        """Module element (coordinate vector) -> element index of G."""
        x = self.Z.identity
        for g, e in zip(self._z_gens, self.module.reduce(vec)):
            x = self.Z.mul(x, self.Z.power(g, e))
        return self.incl(x)

    def group_to_module(self, g_elt):
        """Element of G lying in Z -> module coordinate vector."""
        z = self._incl_preimage.get(g_elt)
        if z is None:
            raise InternalInvariantViolation(
                f"element {g_elt} of G does not lie in the central subgroup"
            )
        return tuple(self._z_elem_to_vec[z])

    @property
    def _incl_preimage(self):
        return {self.incl(z): z for z in self.Z.elements}

    def kernel_elements(self):
        return sorted(self.incl(z) for z in self.Z.elements)


def central_extension(
    Ggamma: GammaGroup, center_elements, section=None
) -> CentralExtension:
    """Build the extension of Ggamma by a central, Gamma-stable subgroup
    given by its element indices in G.

    The quotient inherits the Gamma-action; equivariance of inclusion and
    projection is checked eagerly.  The default section picks the least
    preimage index for every coset.
    """
    G = Ggamma.group
    zelems = sorted(set(center_elements))
    if not is_subgroup(G, zelems):
        raise NotASubgroup(f"{zelems} is not a subgroup of G")
    for z in zelems:
        for x in G.elements:
            if G.mul(z, x) != G.mul(x, z):
                raise NotASubgroup(f"element {z} is not central (fails at {x})")
    for s in Ggamma.gamma.elements:
        for z in zelems:
            if Ggamma.act(s, z) not in zelems:
                raise NotEquivariant(
                    f"gamma element {s} moves {z} outside the subgroup"
                )
    Zgrp, incl = subgroup(G, zelems)
    Qgrp, proj = quotient(G, zelems)

    bar_action = []
    for s in Ggamma.gamma.elements:
        images = [None] * Qgrp.order
        for x in G.elements:
            images[proj(x)] = proj(Ggamma.act(s, x))
        bar_action.append(
            Automorphism(Qgrp, Qgrp, tuple(images))
        )
    Gbar = GammaGroup(Ggamma.gamma, Qgrp, tuple(bar_action))

    if section is None:
        sec = []
        for q in Qgrp.elements:
            sec.append(min(x for x in G.elements if proj(x) == q))
        section = tuple(sec)
    else:
        section = tuple(section)
        for q in Qgrp.elements:
            if proj(section[q]) != q:
                raise ValueError(f"section value {section[q]} does not project to {q}")

    factors, gens, elem_to_vec = abelian_invariant_decomposition(Zgrp)
    k = len(factors)
    # action matrices of Gamma on the module coordinates
    mats = []
    inv_incl = {incl(z): z for z in Zgrp.elements}
    for s in Ggamma.gamma.elements:
        cols = []
        for g in gens:
            img = inv_incl[Ggamma.act(s, incl(g))]
            cols.append(list(elem_to_vec[img]))
        mats.append([[cols[j][i] for j in range(k)] for i in range(k)])
    module = gmod.make_module(Ggamma.gamma, factors, 0, mats)

    return CentralExtension(
        G=Ggamma,
        Z=Zgrp,
        incl=incl,
        Gbar=Gbar,
        proj=proj,
        section=section,
        module=module,
        _z_gens=tuple(gens),
        _z_elem_to_vec=elem_to_vec,
    )


def connecting_delta(E: CentralExtension, c: NonabCocycle1) -> Cochain:
    """The 2-cocycle (s, t) -> lift_s * (s . lift_t) * lift_{st}^-1 in the
    center, for a 1-cocycle c in the quotient, as a module-valued
    2-cochain."""
    if c.parent.gamma != E.G.gamma or c.parent.group != E.Gbar.group:
        raise NotACocycle("cocycle does not live in the quotient of this extension")
    g = E.G.gamma
    grp = E.G.group
    lift = {s: E.section[c.values[s]] for s in g.elements}
    values = {}
    for s in g.elements:
        for t in g.elements:
            v = grp.mul(lift[s], E.G.act(s, lift[t]))
            v = grp.mul(v, grp.inv(lift[g.mul(s, t)]))
            values[(s, t)] = E.group_to_module(v)  # raises if it escapes Z
    z = Cochain(E.module, 2, values)
    if not gmod.is_cocycle(E.module, z):
        raise InternalInvariantViolation(
            "connecting cochain violates the degree-2 cocycle law"
        )
    return z


def lifts_to_cocycle(E: CentralExtension, c: NonabCocycle1):
    """A 1-cocycle in G projecting to c, or None.  Solves the coboundary
    problem for the connecting 2-cocycle and corrects the section lift."""
    z = connecting_delta(E, c)
    a = gmod.is_coboundary2(E.module, z)
    if a is None:
        return None
    g = E.G.gamma
    grp = E.G.group
    values = []
    for s in g.elements:
        corr = E.module_to_group(a.values[(s,)])
        values.append(grp.mul(grp.inv(corr), E.section[c.values[s]]))
    lifted = NonabCocycle1(E.G, tuple(values))
    for s in g.elements:
        if E.proj(lifted.values[s]) != c.values[s]:
            raise InternalInvariantViolation("lift does not project to c")
    return lifted


@dataclass(frozen=True)
class CenterToAutMap:
    """Gamma-equivariant homomorphism from the additive center (module
    coordinates) to a Gamma-group, given by generator images."""

    module: AbelianGammaModule
    target: GammaGroup
    gen_images: tuple  # one target element per module generator

    def __post_init__(self):
        if self.module.free_rank:
            raise ValueError("the center must be a torsion module")
        k = self.module.rank
        if len(self.gen_images) != k:
            raise ValueError("one image per module generator required")
        grp = self.target.group
        for a in self.gen_images:
            for b in self.gen_images:
                if grp.mul(a, b) != grp.mul(b, a):
                    raise NotEquivariant("generator images do not commute")
        for j, d in enumerate(self.module.invariant_factors):
            if grp.power(self.gen_images[j], d) != grp.identity:
                raise NotEquivariant(
                    f"image of generator {j} is not killed by its order {d}"
                )
        for s in self.module.gamma.elements:
            for j in range(k):
                ej = [0] * k
                ej[j] = 1
                lhs = self(self.module.act(s, tuple(ej)))
                rhs = self.target.act(s, self.gen_images[j])
                if lhs != rhs:
                    raise NotEquivariant(
                        f"map is not equivariant at gamma element {s}, generator {j}"
                    )

    def __call__(self, vec):
        grp = self.target.group
        x = grp.identity
        for img, e in zip(self.gen_images, self.module.reduce(vec)):
            x = grp.mul(x, grp.power(img, e))
        return x


def identity_center_map(E: CentralExtension) -> CenterToAutMap:
    """The center acting on itself: kappa = id, with the center as the
    coefficient Gamma-group."""
    images = [None] * E.Z.order
    inv_incl = {E.incl(z): z for z in E.Z.elements}
    auts = []
    for s in E.G.gamma.elements:
        imgs = tuple(inv_incl[E.G.act(s, E.incl(z))] for z in E.Z.elements)
        auts.append(Automorphism(E.Z, E.Z, imgs))
    Zgamma = GammaGroup(E.G.gamma, E.Z, tuple(auts))
    gen_imgs = tuple(
        inv_incl[E.module_to_group(tuple(1 if i == j else 0 for i in range(E.module.rank)))]
        for j in range(E.module.rank)
    )
    return CenterToAutMap(E.module, Zgamma, gen_imgs)


def pushforward2(kappa: CenterToAutMap, z: Cochain) -> Twisted2Cocycle:
    """Valuewise image of an abelian 2-cocycle under kappa, typed as a
    2-cocycle with coefficients in kappa's target."""
    if z.degree != 2 or z.module != kappa.module:
        raise NotACocycle("expected a 2-cochain over kappa's source module")
    if not gmod.is_cocycle(kappa.module, z):
        raise NotACocycle("degree-2 cocycle law fails")
    g = kappa.module.gamma
    value_map = {
        (s, t): kappa(z.values[(s, t)]) for s in g.elements for t in g.elements
    }
    return nonab.make_twisted2(kappa.target, value_map)
