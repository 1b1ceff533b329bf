"""Exact combinatorics of the pillowcase distribution on partitions."""

from .characters import (SkewShape, char_involution, character, f_eta,
                         lr_coefficient, skew_char_involution, skew_character,
                         skew_dimension)
from .hurwitz import (HurwitzQuery, hurwitz_brute_force, hurwitz_number,
                      pillowcase_cover_series)
from .observables import evaluate, parse_observable
from .partitions import (EMPTY, MayaDiagram, Partition, TwoQuotient, contour,
                         core_size, dimension, from_two_quotient, hook_lengths,
                         is_balanced, maya, parse_partition, partitions_of,
                         sigma, two_quotient)
from .qseries import (Estimate, HalfSeries, RationalSeries, dedekind_eta,
                      eisenstein, eval_at_h, theta_expansion)
from .quasimodular import (FitFailure, LaurentAsymptotics, QuasimodularPoly,
                           asymptotics, quasimodular_fit)
from .report import ReportBundle, report
from .shifted import p_bar_k, p_k, shifted_schur
from .stats import (ExpectationQuery, concentration_stat, expect, expectation,
                    g_nu_direct, g_nu_formula, meinardus_ratio, pillowcase_weight,
                    sobolev_norm_sq, vanishing_sum, weight_def, weight_hooks,
                    z_series)

__version__ = "0.1.0"
