"""Three-parameter Mittag-Leffler (Prabhakar) function, its spectral
distribution, and the non-Debye relaxation models built on it."""

__version__ = "0.1.0"

from .asymptotics import (AsymptoticExpansion, Regime, build_expansion, eval_expansion,
                          leading_term)
from .core import (EvalResult, Method, ParameterTriple, eval_e_at_zero, laplace_transform,
                   ml3_series)
from .errors import (DomainError, InvalidModelError, NonConvergenceError, PoleError,
                     PrabhakarError, QuadratureFailure)
from .evaluate import derivative, eval_e
from .ilt import ContourParams, eval_e_ilt, select_contour
from .relaxation import (ModelKind, RelaxationModel, response_function, susceptibility,
                         to_triple)
from .spectral import (SpectralCurve, SpectralPoint, eval_e_spectral, is_licm, spectral_curve,
                       spectral_density, spectral_normalization, theta)
from .special import binom_neg_gamma, gamma, pochhammer, rgamma
