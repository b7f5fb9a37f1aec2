"""Exact loop coproducts on spherical space forms."""

import json as _json

from ._core import (
    Error,
    Group,
    LoopClass,
    Map,
    Space,
    TensorClass,
    act_tensor,
    add,
    check_pi1_invariance,
    check_sullivan,
    check_sullivan_circle,
    contract_left,
    contract_right,
    coproduct,
    coproduct_circle,
    coproduct_circle_str,
    coproduct_via,
    coproduct_via_universal_cover,
    coproduct_witness,
    covering,
    cyclic,
    group_from_table,
    infinite_pi1,
    infinite_pi1_rule,
    monomial,
    multiply,
    parse,
    pushforward,
    quaternion,
    scale,
    smith_normal_form,
    sphere,
    sphere_quotient,
    sphere_self_map,
    subtract,
)
from . import _core


def group_homology(group, max_degree, **kwargs):
    """Graded integer homology of a finite group, as plain dicts."""
    return _json.loads(_core.group_homology_json(group, max_degree, **kwargs))


def cyclic_periodic_homology(order, max_degree):
    """Same table from the periodic resolution of a cyclic group."""
    return _json.loads(_core.cyclic_periodic_homology_json(order, max_degree))


def quotient_space_homology(n, group, **kwargs):
    """Integer homology of the space form S^n / group."""
    return _json.loads(_core.quotient_space_homology_json(n, group, **kwargs))


def loop_table(space, max_degree, **kwargs):
    """Free loop space homology table, components and totals."""
    return _json.loads(_core.loop_table_json(space, max_degree, **kwargs))


__all__ = [
    "Error",
    "Group",
    "LoopClass",
    "Map",
    "Space",
    "TensorClass",
    "act_tensor",
    "add",
    "check_pi1_invariance",
    "check_sullivan",
    "check_sullivan_circle",
    "contract_left",
    "contract_right",
    "coproduct",
    "coproduct_circle",
    "coproduct_circle_str",
    "coproduct_via",
    "coproduct_via_universal_cover",
    "coproduct_witness",
    "covering",
    "cyclic",
    "cyclic_periodic_homology",
    "group_from_table",
    "group_homology",
    "infinite_pi1",
    "infinite_pi1_rule",
    "loop_table",
    "monomial",
    "multiply",
    "parse",
    "pushforward",
    "quaternion",
    "quotient_space_homology",
    "scale",
    "smith_normal_form",
    "sphere",
    "sphere_quotient",
    "sphere_self_map",
    "subtract",
]
