"""Word metrics on finite groups, group actions and star-sets.

Subsets are passed as lists of element indices.  Lengths and distances
come back as ints, with ``math.inf`` for unreachable elements.
"""

from ._wordmetrics import (
    Group,
    GroupAction,
    GroupAxiomError,
    SpecError,
    StarSet,
    StarSetError,
    catalog_names,
    delta,
    diam_nfg,
    rank_n,
    run_cli,
    run_criterion,
)

__all__ = [
    "Group",
    "GroupAction",
    "GroupAxiomError",
    "SpecError",
    "StarSet",
    "StarSetError",
    "catalog_names",
    "delta",
    "diam_nfg",
    "rank_n",
    "run_cli",
    "run_criterion",
]
