# SPDX-License-Identifier: Apache-2.0
"""Exact McKay quivers of finite matrix groups over cyclotomic fields.

The heavy lifting happens in the compiled ``_mckay`` extension; this package
re-exports its API.  Arithmetic is exact throughout: group elements live in
``GL(m, Q(zeta_N))``, character tables are computed over a prime field and
lifted to cyclotomic integers, and quiver arrow counts are exact inner
products of characters.
"""

try:
    from mckay._mckay import (  # installed layout: extension inside the package
        Group,
        McKayError,
        character_table,
        covering,
        embed_special_linear,
        group,
        group_from_file,
        preset,
        presets,
        quiver,
        quiver_dot,
        quiver_json,
        quiver_with_twist_arrows,
        scalar_extend,
        self_check,
        strip_diagonal,
    )
except ImportError:  # in-tree build: extension sits directly on sys.path
    from _mckay import (
        Group,
        McKayError,
        character_table,
        covering,
        embed_special_linear,
        group,
        group_from_file,
        preset,
        presets,
        quiver,
        quiver_dot,
        quiver_json,
        quiver_with_twist_arrows,
        scalar_extend,
        self_check,
        strip_diagonal,
    )

__all__ = [
    "Group",
    "McKayError",
    "character_table",
    "covering",
    "embed_special_linear",
    "group",
    "group_from_file",
    "preset",
    "presets",
    "quiver",
    "quiver_dot",
    "quiver_json",
    "quiver_with_twist_arrows",
    "scalar_extend",
    "self_check",
    "strip_diagonal",
]

__version__ = "0.1.0"
