"""Kernels, k-kernels and the 3-substitution method on finite digraphs."""

from ._core import (
    Digraph,
    Error,
    check_circuit_hypothesis,
    check_cycle_hypothesis,
    circuits,
    closure,
    cycles,
    directed_cycle,
    distance_matrix,
    every_cycle_has_symmetric_arc,
    find_kernel,
    format,
    is_3_kernel_perfect,
    is_kernel,
    is_kernel_perfect,
    is_strongly_connected,
    parse,
    parse_document,
    properties,
    random_digraph,
    random_strongly_connected,
    substitute,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
