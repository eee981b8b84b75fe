"""Built-in catalog of example models, shipped as JSON data files.

Group files: cyclic subgroups of SL(2) (diag(zeta_m, zeta_m^-1) for
m = 2, 3, 4, 6), the scalar Z3 in SL(3), the quaternion group, the binary
dihedral group of order 12, and S3/S4 as permutation matrices.  One torus
file: the dimension-4 torus with the -I involution.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .group import FiniteMatrixGroup
from .models import TorusModel
from .serialize import load_json, parse_group_doc, parse_torus_doc

GROUP_NAMES = ("z2", "z3", "z4", "z6", "z3sl3", "q8", "bd12", "s3", "s4")
TORUS_NAMES = ("kummer",)


def names() -> list[str]:
    return list(GROUP_NAMES + TORUS_NAMES)


def path(name: str) -> str:
    """Filesystem path of a catalog file (name with or without .json)."""
    base = name[:-5] if name.endswith(".json") else name
    if base not in GROUP_NAMES + TORUS_NAMES:
        raise KeyError(f"no catalog entry named {name!r}")
    return str(resources.files("orbcoh").joinpath("data", f"{base}.json"))


@lru_cache(maxsize=None)
def load_group(name: str) -> FiniteMatrixGroup:
    return parse_group_doc(load_json(path(name)), where=name)


def load_torus(name: str) -> TorusModel:
    return parse_torus_doc(load_json(path(name)), where=name)


def groups(max_order: int | None = None):
    """(name, group) for every catalog matrix group, optionally capped."""
    out = []
    for name in GROUP_NAMES:
        g = load_group(name)
        if max_order is None or g.order <= max_order:
            out.append((name, g))
    return out
