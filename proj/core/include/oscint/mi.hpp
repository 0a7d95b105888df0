#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "oscint/coefficients.hpp"
#include "oscint/fichtenholz.hpp"
#include "oscint/quadrature.hpp"

namespace oscint {

struct MiEstimate {
  Complex value;
  std::string algorithm;
  std::map<std::string, std::string> params;
  bool series_flag = false;
};

struct ConvergenceReport {
  std::vector<MiEstimate> rows;
  std::string caption;
};

/// Composite-Simpson value of int_{x0}^{x1} e^{i pi x} x^{1/x} dx.
Complex finite_segment(const PrecisionContext& ctx, const Real& x0,
                       const Real& x1, std::int64_t subintervals);

/// Partial-integration ladder mapped onto y in [0, 1/2]:
/// b(n) + (i/pi)^n int e^{i pi x(y)} f^(n)(x(y)) dy/y^2.  n in 2..12.
MiEstimate mi_partial_int(const PrecisionContext& ctx, int n,
                          std::int64_t subintervals);

/// The x = 1/u variant on [0, 1]; about one digit worse.  n in 2..12.
MiEstimate mi_inverse_map(const PrecisionContext& ctx, int n,
                          std::int64_t subintervals);

/// Exponential scaling: n partial integrations in z = log x, then u = e^-z;
/// M_I = -2i/pi + (i/pi) F_1.  n in 1..12.
MiEstimate mi_exp_scaling(const PrecisionContext& ctx, int n,
                          std::int64_t subintervals);

/// Longman splitting with CVZ acceleration of the half-period series.
/// rule simpson reproduces the paper's convergence table (oscillation sampled
/// with the integrand); rule filon_simpson applies the exact-phase panel
/// weights and gains between one and two digits at equal points.
/// base_subintervals 0 selects max(4*points, 2^20), doubled as a guard.
MiEstimate mi_longman(const PrecisionContext& ctx, int m, std::int64_t points,
                      std::int64_t l_terms,
                      QuadratureRule rule = QuadratureRule::simpson,
                      std::int64_t base_subintervals = 0);

/// Partial sums of -2i/pi + sum_{n<=k} V(pi,n,n)/n! for k = 1..n_max.
ConvergenceReport mi_log_expansion(const PrecisionContext& ctx, int n_max,
                                   const VTable& v_source);

/// Contour deformation: -i/pi + Simpson along z = 1 + t(1+tau i),
/// t in [0, 2N-1], with the final ordinate dropped (the contour is truncated
/// where the integrand has decayed to the tail estimate).
MiEstimate mi_contour(const PrecisionContext& ctx, std::int64_t subintervals,
                      int big_n, const Real& tau);

/// Closed-form tail guideline (i/pi) e^{2 pi i N (1 + i tau)}.
Complex contour_tail_estimate(const PrecisionContext& ctx, int big_n,
                              const Real& tau);

}  // namespace oscint
