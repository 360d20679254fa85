"""Meander graphs and the index of seaweed subalgebras of gl_n, so_N and sp_2n."""

from .compositions import (Composition, RootSubset, SeaweedSpec, SpecError,
                           canonicalize_seaweed_D, seaweed, spec_from_subsets)
from .graph import MeanderGraph, build_meander, components
from .index import index_A, index_BC, index_D, index_of
from .reduction import reduce_trace

__all__ = [
    "Composition", "RootSubset", "SeaweedSpec", "SpecError", "MeanderGraph",
    "canonicalize_seaweed_D", "seaweed", "spec_from_subsets", "build_meander",
    "components", "index_A", "index_BC", "index_D", "index_of", "reduce_trace",
]
__version__ = "0.1.0"
