"""Translation quivers, dg Auslander algebras and their homological invariants.

Thin wrapper around the compiled ``_meshforge`` module; everything heavy is
exact rational arithmetic in C++.
"""

import json as _json
import os as _os
import sys as _sys

try:
    from . import _meshforge as _core  # installed layout
except ImportError:  # in-repo layout: module next to the CMake build tree
    _dir = _os.environ.get("MESHFORGE_MODULE_DIR")
    if _dir and _dir not in _sys.path:
        _sys.path.insert(0, _dir)
    import _meshforge as _core

MeshforgeError = _core.MeshforgeError

gen_ade = _core.gen_ade
validate = _core.validate
canonical = _core.canonical
h0_dims = _core.h0_dims
ext_table = _core.ext_table
koszul_cohomology = _core.koszul_cohomology
stable_algebra_json = _core.stable_algebra_json
fixture = _core.fixture
run_cli = _core.run_cli


def gen_ade_dict(family, index, dim):
    """ADE translation quiver as a python dict (parsed json)."""
    return _json.loads(gen_ade(family, index, dim, "json"))


__all__ = [
    "MeshforgeError",
    "gen_ade",
    "gen_ade_dict",
    "validate",
    "canonical",
    "h0_dims",
    "ext_table",
    "koszul_cohomology",
    "stable_algebra_json",
    "fixture",
    "run_cli",
]
