"""Grid diagrams, Cromwell moves, braids, and Legendrian front invariants.

The package models links as square grids with one X and one O per row
and column, implements the move calculus connecting grid diagrams to
braid words and to the classical Legendrian/transverse invariants, and
decides grid equivalence under selectable move sets with bounded,
honest search (Yes with witness, No with invariant, or Unknown).
"""

from gridknot._kernels import BACKEND as KERNEL_BACKEND
from gridknot.braid import (
    BraidInvariants,
    BraidWord,
    BwStep,
    OracleResult,
    birman_wrinkle_script,
    conjugacy_oracle,
    conjugate,
    destab,
    exchange,
    exchange_related,
    free_reduce,
    invariants,
    markov_oracle,
    neg_stab,
    parse_word,
    format_word,
    pos_stab,
    verify_steps,
    word,
    words_equal,
)
from gridknot.convert import (
    ClassicalInvariants,
    FrontData,
    RectilinearBraidDiagram,
    braid_to_grid,
    classical_invariants,
    directional_braid,
    grid_to_braid,
    grid_to_front,
    grid_to_rectilinear,
    mirror_word,
    rectilinear_to_word,
    reverse_word,
    sl_from_braid,
)
from gridknot.equiv import (
    EquivResult,
    MOVE_CLASSES,
    SearchBudget,
    equivalent,
    orbit_size,
    tc_orbit_equal,
)
from gridknot.grid import (
    Crossing,
    GridCensus,
    GridDiagram,
    census,
    parse,
    render_ascii,
    serialize,
    validate,
)
from gridknot.moves import (
    CommuteCols,
    CommuteRows,
    Destabilize,
    Move,
    MoveScript,
    Stabilize,
    Translate,
    apply,
    inverse_move,
    legal_moves,
    o_stab_script,
    parse_script,
    serialize_script,
    stab_type_image,
    symmetry,
    symmetry_marker_image,
)

__version__ = "0.1.0"
