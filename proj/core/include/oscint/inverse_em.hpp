#pragma once

#include <vector>

#include "oscint/complex_arith.hpp"
#include "oscint/precision.hpp"

namespace oscint {

/// Filon moments S(d) = int_{-1}^{1} e^{i pi y} y^d dy and S_bar = S/d!.
struct MomentTable {
  int max_d = 0;
  std::vector<Complex> S;
  std::vector<Complex> S_bar;
};

/// Builds the moments by the recurrence
///   S(d+1) = (i/pi) [ (1+(-1)^d) + (d+1) S(d) ],  S(0)=0,
/// and cross-checks S_bar against the even/odd closed forms.
MomentTable moments(const PrecisionContext& ctx, int max_d);

/// One-sided Fourier-Euler-Maclaurin partial sum truncated at d_max,
/// assembled into an M_I estimate.  g = f^(1), derivatives taken at m+1;
/// m odd, default 1 (so M_I = (i/pi)(F - 2)).
Complex em_estimate(const PrecisionContext& ctx, int d_max, int m = 1);

struct EmProfileRow {
  int d_max = 0;
  Complex estimate;
  Real abs_error{0};
};

struct EmProfile {
  std::vector<EmProfileRow> rows;
};

/// Error profile of em_estimate for d_max = 1..d_limit against a reference;
/// exposes the convergence-then-divergence shape.
EmProfile em_profile(const PrecisionContext& ctx, int d_limit,
                     const Complex& reference);

}  // namespace oscint
