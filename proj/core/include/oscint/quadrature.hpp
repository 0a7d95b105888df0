#pragma once

#include <cstdint>
#include <functional>

#include "oscint/complex_arith.hpp"
#include "oscint/precision.hpp"

namespace oscint {

enum class QuadratureRule { simpson, filon_simpson };

struct QuadratureResult {
  Complex value;
  std::int64_t nodes = 0;
  QuadratureRule rule = QuadratureRule::simpson;
};

using Sampler = std::function<Complex(const Real&)>;

/// Composite Simpson with `subintervals` (even) panels of width (b-a)/n.
/// Sampler must be pure; nodes may be evaluated concurrently but the
/// reduction is performed in fixed index order.
QuadratureResult simpson_composite(const PrecisionContext& ctx,
                                   const Sampler& sampler, const Real& a,
                                   const Real& b, std::int64_t subintervals);

/// One Filon-Simpson panel [y0, y0+2h]: the rule integrates
/// e^{i pi y} Q(y) exactly for every quadratic Q through the three nodes.
struct PanelRule {
  Real y0;
  Real h;
  Complex w0, w1, w2;
};

PanelRule filon_panel_weights(const PrecisionContext& ctx, const Real& y0,
                              const Real& h);

/// Composite Filon-Simpson over `panels` equal panels of [a, b]; the sampler
/// supplies the smooth factor G only, the e^{i pi y} factor lives in the
/// weights.
QuadratureResult filon_simpson_composite(const PrecisionContext& ctx,
                                         const Sampler& sampler, const Real& a,
                                         const Real& b, std::int64_t panels);

namespace detail {
/// The three h-dependent bracket factors K0,K1,K2 with w_j = e^{i pi y0} K_j.
/// Evaluated at boosted precision to absorb the ~h^-3 cancellation.
struct FilonBrackets {
  Complex k0, k1, k2;
};
FilonBrackets filon_brackets(const PrecisionContext& ctx, const Real& h);
}  // namespace detail

}  // namespace oscint
