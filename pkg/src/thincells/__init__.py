"""Exact computations on thin Schubert cells of complex flag varieties."""
from .errors import (EmptyCell, ExchangeViolation, InvalidFamily, InvalidParameter,
                     InvalidSignature, NotASubspace, NotNested, RankDeficient,
                     SamplingExhausted, ThinCellError, TooLarge)
from .setfam import (Permutation, Subset, apply_permutation_to_subset, binomial,
                     enumerate_subsets, inversion_sign)
from .matroid import (Matroid, Plurimatroid, check_exchange, enumerate_matroids,
                      enumerate_plurimatroids, new_matroid, orbit_representatives,
                      permute_matroid, permute_plurimatroid, uniform_matroid)
from .exactla import (DiagonalTorusElement, PluckerVector, RationalMatrix, act_sn_plucker,
                      act_sn_subspace, act_torus_plucker, act_torus_subspace,
                      matroid_of_subspace, plucker_vector, rref)
from .flags import (CharacterLattice, Flag, cell_membership, check_flag, incidence_pairing,
                    plurimatroid_of_flag, random_flag, stabilizer_dimensions, witness_flag)
from .classify import (CellClass, CountRecord, KPair, brute_force_counts,
                       count_global, count_restricted, dimension, k_sets, zone, zone_table)

__version__ = "0.1.0"
