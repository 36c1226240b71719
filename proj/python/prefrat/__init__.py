"""Rationality numbers of preference matrices.

Thin re-export of the compiled ``_prefrat`` extension. Matrices travel as
``PreferenceMatrix`` objects; profiles, certificates, and reports travel as
the same JSON documents the command-line tool reads and writes.
"""

try:
    # installed layout: the extension sits inside the package
    from ._prefrat import (
        PreferenceMatrix,
        PrefratError,
        analyze,
        brute_alpha_integral,
        components,
        dichromatic_number,
        greedy_dicoloring,
        profile_width,
        random_kpartite_matrix,
        random_tournament_matrix,
        verify,
        verify_triangle_property,
    )
except ImportError:  # build-tree layout: extension on sys.path
    from _prefrat import (
        PreferenceMatrix,
        PrefratError,
        analyze,
        brute_alpha_integral,
        components,
        dichromatic_number,
        greedy_dicoloring,
        profile_width,
        random_kpartite_matrix,
        random_tournament_matrix,
        verify,
        verify_triangle_property,
    )

__all__ = [
    "PreferenceMatrix",
    "PrefratError",
    "analyze",
    "brute_alpha_integral",
    "components",
    "dichromatic_number",
    "greedy_dicoloring",
    "profile_width",
    "random_kpartite_matrix",
    "random_tournament_matrix",
    "verify",
    "verify_triangle_property",
]
