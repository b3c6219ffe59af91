"""The four decision procedures, each returning a verdict with a
re-checkable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import extension as ext
from . import gmod, nonab
from .errors import NotACocycle
from .extension import CentralExtension, CenterToAutMap
from .fingrp import FiniteGroup, center
from .nonab import GammaGroup, NonabCocycle1


@dataclass(frozen=True)
class ModelExistenceProblem:
    extension: CentralExtension
    aut_group: GammaGroup  # the equivariant-automorphism coefficients
    kappa: CenterToAutMap
    cocycle: NonabCocycle1  # in the quotient of the extension

    def __post_init__(self):
        if self.kappa.module != self.extension.module:
            raise ValueError("kappa source must be the extension's center")
        if self.kappa.target != self.aut_group:
            raise ValueError("kappa target must be the coefficient gamma group")
        if (
            self.cocycle.parent.gamma != self.extension.G.gamma
            or self.cocycle.parent.group != self.extension.Gbar.group
        ):
            raise NotACocycle("cocycle must live in the extension quotient")


@dataclass(frozen=True)
class Verdict:
    answer: bool
    certificate: dict
    assumed_hypotheses: tuple = ()

    def to_json(self):
        return {
            "answer": "yes" if self.answer else "no",
            "certificate": self.certificate,
            "assumed_hypotheses": list(self.assumed_hypotheses),
        }


def decide_model_existence(p: ModelExistenceProblem, budget=None) -> Verdict:
    """Yes iff the pushforward of the connecting class of the cocycle is
    neutral in degree-2 cohomology of the automorphism coefficients."""
    z = ext.connecting_delta(p.extension, p.cocycle)
    zA = ext.pushforward2(p.kappa, z)
    witness = nonab.is_neutral2(p.aut_group, zA, budget=budget)
    if witness is not None:
        assert nonab.verify_neutrality_witness(p.aut_group, zA, witness)
        return Verdict(
            True,
            {
                "neutrality_witness": list(witness),
                "pushed_cocycle": zA.to_json(),
            },
        )
    g = p.extension.G.gamma
    space = p.aut_group.group.order ** max(g.order - 1, 0)
    return Verdict(
        False,
        {
            "nonneutral_cocycle": zA.to_json(),
            "exhausted_search_space": space,
        },
    )


def tits_class(Etilde: CentralExtension, c: NonabCocycle1):
    """The connecting class of c in degree-2 cohomology of the center of
    the covering extension.  Returns (cochain, class coordinates, H2)."""
    z = ext.connecting_delta(Etilde, c)
    h2 = gmod.cohomology(Etilde.module, 2)
    return z, h2.class_of(z), h2


def decide_tits(
    Etilde: CentralExtension, kappa_tilde: CenterToAutMap, c: NonabCocycle1, budget=None
) -> Verdict:
    """Yes iff the image of the tits_class under kappa_tilde is neutral."""
    z, cls, h2 = tits_class(Etilde, c)
    zA = ext.pushforward2(kappa_tilde, z)
    witness = nonab.is_neutral2(kappa_tilde.target, zA, budget=budget)
    if witness is not None:
        return Verdict(
            True,
            {
                "tits_class": list(cls),
                "neutrality_witness": list(witness),
            },
        )
    g = Etilde.G.gamma
    return Verdict(
        False,
        {
            "tits_class": list(cls),
            "nonneutral_cocycle": zA.to_json(),
            "exhausted_search_space": kappa_tilde.target.group.order
            ** max(g.order - 1, 0),
        },
    )


def decide_hxh(H: FiniteGroup, sigma1: GammaGroup, sigma2: GammaGroup) -> Verdict:
    """Yes iff the second action is a pure inner twist of the first:
    (a) each sigma2_s differs from sigma1_s by conjugation by some w_s;
    (b) the images of the w_s in H mod its center form a 1-cocycle;
    (c) that cocycle lifts through the central extension of H by its
        center.
    """
    if sigma1.group != H or sigma2.group != H:
        raise ValueError("both actions must act on the given group")
    if sigma1.gamma != sigma2.gamma:
        raise ValueError("both actions must share the same gamma")
    g = sigma1.gamma
    witnesses = {}
    for s in g.elements:
        found = None
        for w in H.elements:
            if all(
                sigma2.act(s, x) == H.conj(w, sigma1.act(s, x)) for x in H.elements
            ):
                found = w
                break
        if found is None:
            return Verdict(
                False,
                {
                    "reason": "not_inner",
                    "gamma_element": s,
                    "exhausted_search_space": H.order,
                },
            )
        witnesses[s] = found

    Zelems = center(H)[1].images
    E = ext.central_extension(sigma1, list(Zelems))
    cvals = tuple(E.proj(witnesses[s]) for s in g.elements)
    if not nonab.is_cocycle1(E.Gbar, cvals):
        raise NotACocycle(
            "inner-twist witnesses do not project to a 1-cocycle; "
            "the supplied actions are not both homomorphisms"
        )
    c = NonabCocycle1(E.Gbar, cvals)
    lift = ext.lifts_to_cocycle(E, c)
    if lift is not None:
        return Verdict(
            True,
            {
                "inner_witnesses": {str(s): witnesses[s] for s in g.elements},
                "lifted_cocycle": lift.to_json(),
            },
        )
    z = ext.connecting_delta(E, c)
    h2 = gmod.cohomology(E.module, 2)
    return Verdict(
        False,
        {
            "reason": "obstruction_class_nontrivial",
            "inner_witnesses": {str(s): witnesses[s] for s in g.elements},
            "nontrivial_class": list(h2.class_of(z)),
        },
    )


GU_ASSUMPTION = (
    "the pushforward from the center to the torus coefficients is injective "
    "(quasi-trivial torus reduction); verified here only at the lattice level"
)


def decide_gu(E: CentralExtension, c: NonabCocycle1) -> Verdict:
    """Yes iff c lifts to a 1-cocycle in the full group, i.e. the twist is
    a pure inner form."""
    lift = ext.lifts_to_cocycle(E, c)
    if lift is not None:
        return Verdict(
            True,
            {"lifted_cocycle": lift.to_json()},
            assumed_hypotheses=(GU_ASSUMPTION,),
        )
    z = ext.connecting_delta(E, c)
    h2 = gmod.cohomology(E.module, 2)
    return Verdict(
        False,
        {"nontrivial_class": list(h2.class_of(z))},
        assumed_hypotheses=(GU_ASSUMPTION,),
    )


def verify_certificate(kind, payload_problem, verdict: Verdict) -> bool:
    """Re-verify a yes-certificate against its defining identities."""
    if not verdict.answer:
        return True
    cert = verdict.certificate
    if kind in ("decide-model", "decide-tits"):
        if kind == "decide-model":
            p = payload_problem
            z = ext.connecting_delta(p.extension, p.cocycle)
            zA = ext.pushforward2(p.kappa, z)
            A = p.aut_group
        else:
            Etilde, kappa_tilde, c = payload_problem
            z = ext.connecting_delta(Etilde, c)
            zA = ext.pushforward2(kappa_tilde, z)
            A = kappa_tilde.target
        return nonab.verify_neutrality_witness(
            A, zA, tuple(cert["neutrality_witness"])
        )
    if kind in ("decide-gu", "decide-hxh"):
        if kind == "decide-gu":
            E, c = payload_problem
        else:
            H, sigma1, sigma2 = payload_problem
            Zelems = center(H)[1].images
            E = ext.central_extension(sigma1, list(Zelems))
            c = NonabCocycle1(
                E.Gbar,
                tuple(
                    E.proj(cert["inner_witnesses"][str(s)])
                    for s in sigma1.gamma.elements
                ),
            )
        lifted = cert["lifted_cocycle"]
        values = tuple(lifted[str(s)] for s in E.G.gamma.elements)
        if not nonab.is_cocycle1(E.G, values):
            return False
        return all(
            E.proj(values[s]) == c.values[s] for s in E.G.gamma.elements
        )
    raise ValueError(f"unknown verdict kind {kind!r}")
