"""Unknotting numbers of Lorenz knots, by closed form, grid diagram and braid."""
from .braid import BraidData, alexander_polynomial, inversion_count, lorenz_braid
from .grid import (
    Crossing,
    GridDiagram,
    alexander_direct,
    build_grid,
    enumerate_crossings,
    export,
    j_pairing,
    trace_word,
    winding_number,
)
from .harness import enumerate_words, verify_corpus, verify_word
from .invariants import InvariantRecord, closed_form_invariants, positive_braid_unknotting
from .laurent import LaurentPoly
from .unknotting import CutMode, epsilon_delta, string_labels, unknotting_set
from .words import LorenzWord, OrbitCombinatorics, orbit_combinatorics, parse_word, syllables

__version__ = "0.1.0"
