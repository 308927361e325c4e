"""Exact decomposition of multiple zeta values into Kontsevich graph weights.

The package rewrites any normalized MZV, via its binary-word encoding and
the Lyndon shuffle basis, as an exact Q-linear combination of weights of
explicitly constructed Kontsevich graphs, and produces integer unit-fraction
certificates from Bernoulli numbers and the Von Staudt-Clausen theorem.
"""

__version__ = "0.1.0"

from .decompose import (
    WEDGE,
    Certificate,
    MzvDecomposition,
    WedgeGenerator,
    Weight5Report,
    decompose_mzv,
    decompose_word,
    exact_tree_value,
    unit_fraction_certificate,
    weight5_obstruction,
)
from .graphs import (
    WEDGE_VALUE,
    GraphSum,
    KGraph,
    append_graph,
    base_ladder,
    build_graph,
    emit_graph,
    graph_of_tree,
    join_graphs,
    prepend_graph,
    wedge_graph,
)
from .lyndon import (
    LyndonBasisDecomposition,
    LyndonFactorization,
    chen_fox_lyndon,
    is_lyndon,
    lyndon_basis_decompose,
    radford_expand,
)
from .numerics import (
    MzvValue,
    ToleranceError,
    bernoulli,
    bernoulli_table,
    eval_mzv,
    eval_word,
    eval_word_sum,
)
from .trees import (
    RUNG,
    Append,
    Join,
    Prepend,
    Rung,
    SyntaxTree,
    TreeParseError,
    TreeSum,
    canonicalize,
    parse_tree,
    render,
    to_words,
    tree_weight,
)
from .words import (
    Composition,
    Word,
    WordSum,
    admissible_words,
    append_word,
    composition_from_word,
    dual_word,
    prepend_word,
    shuffle,
    shuffle_sum,
    word_from_composition,
)
