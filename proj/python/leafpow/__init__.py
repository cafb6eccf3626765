"""Leaf power gadgets, exact root verification, recognition and obstructions."""

import os as _os

from ._core import (
    Graph,
    LeafPowError,
    LeafTree,
    assemble_Hn,
    bot_gadget,
    bot_root,
    emit_graph,
    emit_graph_dot,
    emit_tree,
    extract_minimal,
    interior_gadget,
    interior_root_R,
    interior_root_T,
    is_chordal,
    is_strongly_chordal,
    linear_top_gadget,
    linear_top_root,
    merged_root_minus_bot,
    merged_root_minus_top,
    parse_graph,
    parse_graph_dot,
    parse_tree,
    recognize,
    top_gadget,
    top_root,
    verify_leaf_root,
)


def cli_path():
    """Path of the bundled command-line tool, when installed as a wheel."""
    path = _os.path.join(_os.path.dirname(__file__), "bin", "leafpow")
    return path if _os.path.exists(path) else None


__all__ = [name for name in dir() if not name.startswith("_")]
