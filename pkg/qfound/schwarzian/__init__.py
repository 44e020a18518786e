from .models import RealGrid, SampledFunction, InteriorSamples, TransformedW, MoebiusMap
from .stencils import derivative_stack
from .calculus import (schwarzian, apply_moebius, moebius_invariance_deviation, affine_invariance_deviation,
                       cocycle_deviation, inhomogeneous_term, transform_W)
