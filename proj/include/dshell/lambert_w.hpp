#pragma once

#include <complex>

namespace dshell {

using cplx = std::complex<double>;

/// Branch index of the Lambert W function. Any integer is valid.
struct WBranch {
  int n = 0;
};

/**
 * Branch `branch.n` of the complex Lambert W function, the solution w of
 * w e^w = z.
 *
 * Branch cuts follow the principal logarithm: on the negative real axis the
 * value is the limit taken from Im z > 0. With this convention W_0 and W_{-1}
 * are both real on [-1/e, 0), and W_{-(n+1)}(x) = conj(W_n(x)) there for n >= 1.
 *
 * Throws Error(InvalidInput) for non-finite z or z = 0 off branch 0, and
 * Error(NonConvergence) if Halley refinement fails to settle.
 */
cplx lambert_w(WBranch branch, cplx z);

inline cplx lambert_w(int branch, cplx z) { return lambert_w(WBranch{branch}, z); }

/// |w e^w - z|, the defining-identity residual.
double lambert_w_residual(cplx w, cplx z);

}  // namespace dshell
