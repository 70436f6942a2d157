from .chebyshev import ChebyshevPoly, chebyshev_deriv_at_one, chebyshev_deriv_product_form
from .elimination import determinant, residuals, solve_dense
from .certificates import APCertificate, certificate_at_one, certificate_at_zero, higher_certificate
from .vandermonde import elementary_symmetric, vandermonde_skip_check
from .derivative import derivative_bound_check, uniform_grid
from .trig import IDENTITIES, trig_identity_suite
