"""Exact and numeric checks for the Spin_10 representation-theoretic identities
behind an L-function of Spin_10 x GL_2."""
from .errors import ConfigurationError, ConsistencyError, DomainError, SpincheckError
from .lie_core import D5, RootSystem, Weight, WeylElement, build_root_system, dominant_representative, enumerate_weyl_group
from .characters import (
    SatakeClass,
    WeightDiagram,
    dimension,
    eval_character,
    eval_character_alternant,
    k_factor,
    weight_multiplicities,
    weyl_denominator,
)
from .polynomials import LaurentPoly, MultiLaurent, TruncatedSeries
from .rep_ring import VirtualCharacter, brauer_shift_product, okada_rhs, tensor_decompose
from .series import brion_spin_series, euler_factor_series, evaluate_series, p_poly, spin_cartan_series
from .report import CheckReport
from .orbits import Comparison, Partition, dominance_compare, greater_or_not_related, is_orthogonal_partition, paper_orbit_facts
from .bruhat import build_parabolic, support_for, verify_lemma3
from .verifier import (
    verify_brion,
    verify_g_identity,
    verify_h_collapse,
    verify_main_identity,
    verify_okada,
    verify_p_annihilation,
    verify_prop4_euler,
    verify_q_sums,
)

__version__ = "0.1.0"
