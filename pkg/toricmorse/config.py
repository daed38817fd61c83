"""
Run-wide configuration.
"""

import pyrsistent as pyrs


class ComputeConfig(pyrs.PClass):
    """
    Contains the tunable parameters of a computation. This is a "pyrsistent"
    class, which means it's immutable, but a modified copy can be efficiently
    created with the set() method.
    """

    # Highest homology degree computed from a nerve; None means the height of
    # the category.
    max_deg = pyrs.field(initial=None)

    # Base chamber of A_0 as a sign string like "-+-"; None selects the
    # lexicographically least chamber.
    base_chamber = pyrs.field(initial=None)
    # Optional explicit linear extension of the poset of regions of A_0, as a
    # list of sign strings.
    region_extension = pyrs.field(initial=None)

    skip_colimit = pyrs.field(initial=False)
    colimit_samples = pyrs.field(initial=200)

    # Fibers with at most this many objects are searched without a budget.
    exhaustive_limit = pyrs.field(initial=20)
    search_budget = pyrs.field(initial=200000)

    split_nonprimitive = pyrs.field(initial=False)


DEFAULT_CONFIG = ComputeConfig()
