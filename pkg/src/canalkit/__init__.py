"""Detection, generation and classification of canalizing Boolean functions."""

from .bf import (
    TruthTable,
    complement,
    cofactor,
    concat,
    enumerate_all,
    evaluate,
    format_tt,
    hamming,
    merge,
    min_const_hd,
    parse,
    projection,
    weight,
)
from .canalizing import (
    CanalizingTriple,
    GenerationStats,
    canalizing_triples,
    census_canalizing,
    generate_next,
    is_canalizing,
)
from .kmap import KMap, SubMap, build_kmap, decompose, detect_canalizing_kmap, region, similar
from .ncf import HDMatrix, NestedChain, enumerate_ncf, hd_histogram, hd_matrix, ncf_chain
from .pncf import DepthReport, canalizing_depth, depth_census, depth_families

__version__ = "0.1.0"
