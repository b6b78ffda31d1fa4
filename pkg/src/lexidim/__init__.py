"""Exact metric and adjacency dimension, with lexicographic products."""

from .closed_forms import closed_form
from .errors import FormulaNotApplicable, GraphError, OracleCapExceeded, ParseError
from .formats import emit, parse
from .graph import (
    Graph,
    build_graph,
    complement,
    complete,
    complete_multipartite,
    cycle,
    empty,
    fan,
    is_connected,
    join,
    lex_product,
    path,
    wheel,
)
from .lex import Case, classify_h, construct_witness, lex_dimension
from .resolving import (
    DimensionResult,
    adjacency_representation,
    dimension,
    enumerate_adjacency_bases,
    is_resolving,
    lower_bound,
    metric_representation,
    resolves_subset,
)
from .twins import TwinPartition, TwinType, are_twins, twin_partition

__version__ = "0.1.0"
