"""Quadratic-form approximation of RBF-kernel SVM models.

Compresses a support-vector model into scalars (b, c, gamma), a dense
vector v and a symmetric matrix M, so a prediction costs O(d^2) regardless
of the number of support vectors, with a built-in validity bound.
"""

from .approx import (build_approx, decide_approx, decide_approx_batch,
                     maclaurin_exp, maclaurin_relative_error)
from .backend import BACKEND
from .bench import (ComparisonReport, SizeReport, TimingReport, compare,
                    size_report, synthetic_classifier_model, synthetic_dataset,
                    time_prediction)
from .bounds import (BoundReport, bound_report, cauchy_bound_holds,
                     exponent_bound_holds, gamma_max_for_dataset,
                     gamma_max_for_model)
from .errors import (ApproxRbfError, DimensionError, FormatVersionError,
                     ParseError, UnsupportedModelError)
from .exact import decide_exact, decide_exact_batch, rbf_kernel
from .model_io import (parse_approx_model, parse_dataset, parse_exact_model,
                       write_approx_model)
from .models import (ApproxModel, Dataset, DecisionValue, ExactModel,
                     Poly2Params)
from .poly2 import Poly2Expansion, expand_poly2, poly2_kernel, scaling_factor
from .sparse import SparseVector

__version__ = "0.1.0"
