"""Two-zero dual cyclic codes C(q, m, h, e): construction and weight census."""

from .charsum import (CyclotomicIntegerValue, character_sum, gaussian_period,
                      gaussian_period_closed_form_N2)
from .codes import (CodeParams, PartitionLabel, WeightDistribution, build_code_params,
                    classify_codeword, codeword, enumerate_weight_distribution,
                    hamming_weight, partition_census, predict_partition_counts,
                    predict_table1, predict_table2, y_census, y_value,
                    zero_count_direct, zero_count_formula)
from .curves import (JacobiIntersection, PointCount, QuadricPairCurve, WeierstrassCurve,
                     count_quadric_pair, count_S0_S3_direct, count_weierstrass,
                     explore_family6, jacobi_to_weierstrass, quadratic_twist,
                     weierstrass_to_jacobi)
from .errors import (ExceptionalPointError, InternalCheckError, ParameterError,
                     TwoZeroError, WorkCapError)
from .ffield import (FieldTower, build_field, cyclotomic_class, discrete_log,
                     find_primitive_poly, trace_to_prime, trace_to_subfield)

__version__ = "0.1.0"
