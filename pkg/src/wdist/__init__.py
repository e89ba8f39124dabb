"""Weight distributions of two-zero p-ary cyclic codes over GF(p^m)."""

from .codes import WeightDistribution, codeword, weight_direct, weight_distribution, weight_fast
from .cyclo import CycInt
from .gf import FieldCtx, FieldElem, build_field, default_modulus
from .predict import predicted_distribution, verify
from .structure import CaseTag, CodeSpec, make_spec, match_exponent

__version__ = "0.1.0"
