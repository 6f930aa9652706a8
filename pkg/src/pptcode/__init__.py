"""Primitive Pythagorean triples: generation, indexing, six-class coding and window analysis."""

from .analysis import (
    KGramIndex,
    UniquenessReport,
    build_index,
    class_frequencies,
    invert,
    min_unique_window,
    per_position_window,
)
from .classes import ClassLabel, DivisibilityProfile, classify, classify_from_st, profile
from .coding import (
    DEFAULT_ALPHABET,
    Alphabet36,
    WSequence,
    decode_text,
    digits,
    encode_text,
    keystream_decrypt,
    keystream_encrypt,
    w_stream,
)
from .enumeration import Ordering, enumerate_st, hypotenuse_ordered, nth_by_hypotenuse, theta
from .tree import (
    generation,
    gh_children,
    iter_depth_first,
    matrix_children,
    middle_child_ratio,
    node_at,
    successor_a_values,
)
from .triples import (
    GhQuad,
    Ppt,
    StPair,
    TripleKind,
    ValidationError,
    gh_from_st,
    polynomial_family,
    ppt_from_gh,
    ppt_from_st,
    st_from_ppt,
    validate_triple,
)

__version__ = "0.1.0"
