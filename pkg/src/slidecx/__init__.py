"""
Pipe dreams, subword complexes and slide complexes in type A.

Schubert, Grothendieck, slide and glide polynomials are computed both from
pipe dreams and from divided difference operators, and the complexes that
index them can be classified, shelled and explored through their flip graphs.
"""

from .coxeter import (
    Permutation, Word, apply_word, demazure_product, length, permutation_from_one_line, reduced_word,
    tilde_delta, word_from_string,
)
from .complex import (
    Classification, Complex, Face, FlipGraph, build_complex, classify, euler_characteristic, faces, flip_graph,
    interior_decomposition, vertex_decomposition_shelling, verify_shelling,
)
from .errors import SlideCxError
from .pipedream import (
    PipeDream, destandardize, enumerate_pipe_dreams, enumerate_quasi_yamanouchi, glide_polynomial,
    grothendieck_from_pipedreams, schubert_from_pipedreams, slide_move, slide_polynomial,
)
from .polynomial import Polynomial, grothendieck_oracle, schubert_oracle

__version__ = "0.1.0"

__all__ = [
    "Permutation", "Word", "apply_word", "demazure_product", "length", "permutation_from_one_line",
    "reduced_word", "tilde_delta", "word_from_string",
    "Classification", "Complex", "Face", "FlipGraph", "build_complex", "classify", "euler_characteristic",
    "faces", "flip_graph", "interior_decomposition", "vertex_decomposition_shelling", "verify_shelling",
    "SlideCxError",
    "PipeDream", "destandardize", "enumerate_pipe_dreams", "enumerate_quasi_yamanouchi", "glide_polynomial",
    "grothendieck_from_pipedreams", "schubert_from_pipedreams", "slide_move", "slide_polynomial",
    "Polynomial", "grothendieck_oracle", "schubert_oracle",
]
