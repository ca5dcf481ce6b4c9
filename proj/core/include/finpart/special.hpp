#pragma once

#include "finpart/complex_param.hpp"

namespace finpart {

/// Gamma function on the complex plane minus {0,-1,-2,...}.
/// Relative accuracy is better than 1e-12 for |Re z|,|Im z| <= 50 away
/// from the poles. Throws PoleError inside the pole guard.
Cplx gamma(Cplx z);

/// A logarithm of Gamma: exp(log_gamma(z)) == gamma(z), branch unspecified.
/// Safe for arguments whose Gamma would overflow a double.
Cplx log_gamma(Cplx z);

/// Reciprocal Gamma, entire: returns exactly 0 at 0,-1,-2,...
Cplx gamma_reciprocal(Cplx z);

/// Beta function Gamma(r)Gamma(s)/Gamma(r+s). Requires r, s and r+s to
/// stay off {0,-1,-2,...}; switches to log space once |r|+|s| > 30.
Cplx beta(Cplx r, Cplx s);

/// Beta by analytic continuation in r+s: where Gamma(r+s) has a pole the
/// value is 0 (computed through the reciprocal Gamma). r and s themselves
/// must still be off the poles.
Cplx beta_continued(Cplx r, Cplx s);

} // namespace finpart
