"""Exact computer algebra for a q-deformed tensor algebra.

The package implements, over the exact field Q(v) with v^2 = q:

* the Iwahori-Hecke algebra of type A in the T_w basis (`hecke`),
* a graded algebra mixing it with tensor powers of C^n, with a confluent
  normal form for the balanced product (`xtensor`),
* right multiplications, derivations and weight operators on it, and the
  commutation relations they satisfy (`operators`),
* the quantum enveloping algebra action on tensor powers, its L-operators,
  and the bridge identifying them with multiply/derive chains (`uqgl`),
* the q-Euler operator and a machine verification of q-Schur-Weyl duality
  by exact double-commutant computations (`duality`),
* a CLI exposing the verification suites and an expression evaluator (`cli`).
"""

__version__ = "0.1.0"

from .scalars import (LaurentPoly, RationalScalar, q_factorial, q_falling,
                      q_int, multiindex_factorial, specialize)
from .permutations import Permutation
from .hecke import HeckeElement
from .xtensor import XTensorElement, embed_tensor
from .operators import (Compose, Derivation, Identity, KPower, MulHecke,
                        MulVector, Scale, Sum, apply_derivation,
                        apply_mul_hecke, apply_mul_vector, apply_K,
                        raw_derivation)
from .uqgl import EndoMatrix, UqGenerator, l_operator, pi_generator, restrict_operator
from .duality import CommutantReport, MonotoneIndexSet, euler_apply

__all__ = [
    "LaurentPoly", "RationalScalar", "q_int", "q_factorial", "q_falling",
    "multiindex_factorial", "specialize", "Permutation", "HeckeElement",
    "XTensorElement", "embed_tensor", "Identity", "MulVector", "Derivation",
    "MulHecke", "KPower", "Scale", "Sum", "Compose", "apply_mul_vector",
    "apply_mul_hecke", "apply_derivation", "apply_K", "raw_derivation",
    "EndoMatrix", "UqGenerator", "pi_generator", "l_operator",
    "restrict_operator", "CommutantReport", "MonotoneIndexSet", "euler_apply",
    "__version__",
]
