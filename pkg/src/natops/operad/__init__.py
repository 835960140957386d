"""The tree operad B, its differential and its suboperads."""

from .dg import Chain, Convention, DEFAULT, compose, differential
from .enumerate import count_basis, enumerate_basis, types_in_window
from .generators import brace_generator, cup_generator, realize_interval
from .sums import TreeSum, insert_sums
from .trees import BAR, DOT, Tree, TreeType, black, canonicalize, insert, leg, special, sym_act, white
from .truncation import suboperad_filter, truncated_complex

__all__ = ["Chain", "Convention", "DEFAULT", "compose", "differential", "count_basis", "enumerate_basis",
           "types_in_window", "brace_generator", "cup_generator", "realize_interval", "TreeSum",
           "insert_sums", "BAR", "DOT", "Tree", "TreeType", "black", "canonicalize", "insert", "leg",
           "special", "sym_act", "white", "suboperad_filter", "truncated_complex"]
