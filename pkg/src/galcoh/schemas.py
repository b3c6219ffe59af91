"""JSON problem parsing.  Every validation failure raises SchemaError
carrying the JSON path of the offending field, e.g. ".payload.G.table".
"""

from __future__ import annotations

from .errors import GalcohError, SchemaError
from . import extension as ext
from . import fingrp, gmod, nonab
from .fingrp import FiniteGroup
from .nonab import GammaGroup

KINDS = (
    "cohomology",
    "delta",
    "neutral",
    "decide-model",
    "decide-tits",
    "decide-hxh",
    "decide-gu",
    "verify-example",
)

SCHEMA_VERSION = 1


def _get(obj, key, path, typ=None, required=True, default=None):
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    if key not in obj:
        if required:
            raise SchemaError(f"{path}.{key}", "missing required field")
        return default
    v = obj[key]
    if typ is not None and not isinstance(v, typ):
        raise SchemaError(f"{path}.{key}", f"expected {typ.__name__}")
    return v


def _int_list(v, path):
    if not isinstance(v, list) or not all(isinstance(x, int) for x in v):
        raise SchemaError(path, "expected a list of integers")
    return v


def parse_group(obj, path) -> FiniteGroup:
    table = _get(obj, "table", path, list)
    n = len(table)
    if n == 0:
        raise SchemaError(f"{path}.table", "empty multiplication table")
    rows = []
    for i, row in enumerate(table):
        r = _int_list(row, f"{path}.table[{i}]")
        if len(r) != n:
            raise SchemaError(f"{path}.table", "table is not square")
        for j, x in enumerate(r):
            if not 0 <= x < n:
                raise SchemaError(
                    f"{path}.table[{i}][{j}]", f"element index {x} out of range"
                )
        rows.append(tuple(r))
    try:
        return fingrp.make_group(tuple(rows))
    except GalcohError as e:
        raise SchemaError(f"{path}.table", str(e))


def _parse_images(v, path, order):
    imgs = _int_list(v, path)
    if len(imgs) != order or any(not 0 <= x < order for x in imgs):
        raise SchemaError(path, f"expected {order} element indices in range")
    return tuple(imgs)


def parse_gamma_group(obj, path) -> GammaGroup:
    gamma = parse_group(_get(obj, "gamma", path, dict), f"{path}.gamma")
    group = parse_group(_get(obj, "group", path, dict), f"{path}.group")
    action_obj = _get(obj, "action", path, dict)
    auts = []
    for s in gamma.elements:
        key = str(s)
        if key not in action_obj:
            raise SchemaError(
                f"{path}.action.{key}", "missing automorphism for this element"
            )
        imgs = _parse_images(action_obj[key], f"{path}.action.{key}", group.order)
        try:
            auts.append(fingrp.Automorphism(group, group, imgs))
        except GalcohError as e:
            raise SchemaError(f"{path}.action.{key}", str(e))
    try:
        return GammaGroup(gamma, group, tuple(auts))
    except (GalcohError, ValueError) as e:
        raise SchemaError(f"{path}.action", str(e))


def parse_module(obj, path) -> gmod.AbelianGammaModule:
    gamma = parse_group(_get(obj, "gamma", path, dict), f"{path}.gamma")
    factors = _int_list(
        _get(obj, "invariant_factors", path, list), f"{path}.invariant_factors"
    )
    free_rank = _get(obj, "free_rank", path, int, required=False, default=0)
    k = len(factors) + free_rank
    action_obj = _get(obj, "action", path, dict)
    mats = []
    for s in gamma.elements:
        key = str(s)
        if key not in action_obj:
            raise SchemaError(f"{path}.action.{key}", "missing action matrix")
        mat = action_obj[key]
        if not isinstance(mat, list) or len(mat) != k:
            raise SchemaError(f"{path}.action.{key}", f"expected a {k}x{k} matrix")
        rows = []
        for i, row in enumerate(mat):
            r = _int_list(row, f"{path}.action.{key}[{i}]")
            if len(r) != k:
                raise SchemaError(f"{path}.action.{key}", f"expected a {k}x{k} matrix")
            rows.append(r)
        mats.append(rows)
    try:
        return gmod.make_module(gamma, factors, free_rank, mats)
    except (GalcohError, ValueError) as e:
        raise SchemaError(f"{path}.action", str(e))


def parse_cochain(obj, path, module, degree) -> gmod.Cochain:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object mapping tuples to vectors")
    k = module.rank
    values = {}
    for key, vec in obj.items():
        try:
            tup = tuple(int(p) for p in key.split(",")) if key else ()
        except ValueError:
            raise SchemaError(f"{path}.{key}", "key is not a comma-separated tuple")
        if len(tup) != degree or any(
            not 0 <= s < module.gamma.order for s in tup
        ):
            raise SchemaError(
                f"{path}.{key}",
                f"expected {degree} gamma element indices in range",
            )
        v = _int_list(vec, f"{path}.{key}")
        if len(v) != k:
            raise SchemaError(f"{path}.{key}", f"expected a vector of length {k}")
        values[tup] = tuple(v)
    try:
        return gmod.Cochain(module, degree, values)
    except (GalcohError, ValueError) as e:
        raise SchemaError(path, str(e))


def parse_extension(obj, path) -> ext.CentralExtension:
    G = parse_gamma_group(_get(obj, "G", path, dict), f"{path}.G")
    center = _int_list(_get(obj, "center", path, list), f"{path}.center")
    for i, z in enumerate(center):
        if not 0 <= z < G.group.order:
            raise SchemaError(f"{path}.center[{i}]", f"element index {z} out of range")
    section = _get(obj, "section", path, required=False)
    if section is not None:
        section = _int_list(section, f"{path}.section")
    try:
        return ext.central_extension(G, center, section=section)
    except (GalcohError, ValueError) as e:
        raise SchemaError(f"{path}.center", str(e))


def parse_cocycle1(obj, path, parent: GammaGroup) -> nonab.NonabCocycle1:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object mapping gamma elements to values")
    values = [None] * parent.gamma.order
    for s in parent.gamma.elements:
        key = str(s)
        if key not in obj:
            raise SchemaError(f"{path}.{key}", "missing cocycle value")
        v = obj[key]
        if not isinstance(v, int) or not 0 <= v < parent.group.order:
            raise SchemaError(f"{path}.{key}", f"element index {v} out of range")
        values[s] = v
    try:
        return nonab.NonabCocycle1(parent, tuple(values))
    except GalcohError as e:
        raise SchemaError(path, str(e))


def parse_twisted2(obj, path, A: GammaGroup) -> nonab.Twisted2Cocycle:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object keyed by 's,t' pairs")
    g = A.gamma
    value_map = {}
    for s in g.elements:
        for t in g.elements:
            key = f"{s},{t}"
            if key not in obj:
                raise SchemaError(f"{path}.{key}", "missing 2-cocycle value")
            v = obj[key]
            if not isinstance(v, int) or not 0 <= v < A.group.order:
                raise SchemaError(f"{path}.{key}", f"element index {v} out of range")
            value_map[(s, t)] = v
    try:
        return nonab.make_twisted2(A, value_map)
    except GalcohError as e:
        raise SchemaError(path, str(e))


def parse_kappa(obj, path, E: ext.CentralExtension, target: GammaGroup):
    gen_images = _int_list(_get(obj, "gen_images", path, list), f"{path}.gen_images")
    for i, v in enumerate(gen_images):
        if not 0 <= v < target.group.order:
            raise SchemaError(
                f"{path}.gen_images[{i}]", f"element index {v} out of range"
            )
    try:
        return ext.CenterToAutMap(E.module, target, tuple(gen_images))
    except (GalcohError, ValueError) as e:
        raise SchemaError(f"{path}.gen_images", str(e))


def parse_problem(obj):
    """Validate the top-level envelope.  Returns (kind, payload object,
    assumed_hypotheses)."""
    kind = _get(obj, "kind", "", str)
    if kind not in KINDS:
        raise SchemaError(".kind", f"unknown kind {kind!r}")
    payload = _get(obj, "payload", "", dict)
    hyps = _get(obj, "assumed_hypotheses", "", list, required=False, default=[])
    for i, h in enumerate(hyps):
        if not isinstance(h, str):
            raise SchemaError(f".assumed_hypotheses[{i}]", "expected a string")
    version = _get(obj, "schema_version", "", int, required=False, default=SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SchemaError(".schema_version", f"unsupported version {version}")
    return kind, payload, list(hyps)
