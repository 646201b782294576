from .abacus import CCoords, XCoords, c_to_partition, c_to_x, partition_to_c, size_from_c, x_to_c
from .counting import cat, count_cores_by_lattice, count_via_lattice
from .errors import InvariantViolation, SimulcoreError
from .extremal import CConstraintSystem, construct_largest_selfconj_sss
from .oracle import EnumerationBudget, enumerate_cores, oracle_stats
from .partitions import CoreSpec, Partition, hook_length, is_t_core, satisfies_spec
from .zcoords import WindowConstraint, ZCoords, solution_set, x_to_z, z_to_x

__all__ = [
    'CCoords', 'XCoords', 'c_to_partition', 'c_to_x', 'partition_to_c', 'size_from_c', 'x_to_c',
    'cat', 'count_cores_by_lattice', 'count_via_lattice',
    'InvariantViolation', 'SimulcoreError',
    'CConstraintSystem', 'construct_largest_selfconj_sss',
    'EnumerationBudget', 'enumerate_cores', 'oracle_stats',
    'CoreSpec', 'Partition', 'hook_length', 'is_t_core', 'satisfies_spec',
    'WindowConstraint', 'ZCoords', 'solution_set', 'x_to_z', 'z_to_x',
]
