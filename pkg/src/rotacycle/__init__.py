"""Binary rotation algebra and generalized kn+c cycle machinery."""

__version__ = "0.1.0"

from .words import (
    BinaryWord,
    CongruenceSolution,
    LengthMismatch,
    bit_length,
    distance_table,
    divisibility_probe,
    hamming_weight,
    max_rotation,
    min_rotation,
    rotate_left,
    rotate_right,
    rotational_distance,
    solve_rotation_congruence,
    witness_a,
    word,
)
from .cycles import (
    Cycle,
    ExistenceReport,
    NoSuchCycle,
    ParityVector,
    ReducedWordSpec,
    build_cycle,
    compute_A,
    enumerate_cycles,
    existence_report,
    first_appearance_c,
    is_primitive,
    max_structure_check,
    parity,
    reduce_cycle,
    shared_parity_check,
    smallest_member,
    spec_from_parity,
    step,
    z_map,
)
from .boundary import boundary_M, boundary_N, containment_check, table_M
from .periodic import class_census, orbit_sequence, orbit_sum
