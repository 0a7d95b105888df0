#pragma once

#include <cstdint>
#include <functional>

#include "oscint/quadrature.hpp"
#include "oscint/series.hpp"

namespace oscint::detail {

struct LongmanTail {
  Complex value;  // F_m = int_m^inf e^{i pi x} g(x) dx
  bool series_flag = false;
};

/// Half-period splitting of int_m^inf e^{i pi x} g(x) dx:
///   F_m = (-1)^m int_0^1 e^{i pi y} sum_l (-1)^l g(m+l+y) dy,
/// the l-series CVZ-accelerated with l_terms terms at every quadrature node.
/// rule simpson: `points` Simpson subintervals with the phase sampled;
/// rule filon_simpson: `points` Filon panels with the phase in the weights.
LongmanTail longman_tail(const PrecisionContext& ctx,
                         const std::function<Complex(const Real&)>& g, int m,
                         std::int64_t points, std::int64_t l_terms,
                         QuadratureRule rule);

}  // namespace oscint::detail
