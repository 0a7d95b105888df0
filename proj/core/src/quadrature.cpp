#include "oscint/quadrature.hpp"

#include <cmath>

#include "oscint/detail/parallel.hpp"

namespace oscint {

namespace {
constexpr std::int64_t chunk_size = 2048;
}

QuadratureResult simpson_composite(const PrecisionContext& ctx,
                                   const Sampler& sampler, const Real& a,
                                   const Real& b, std::int64_t subintervals) {
  if (subintervals < 2 || (subintervals & 1)) {
    throw parameter_error("simpson_composite: subintervals must be even, >= 2");
  }
  ScopedPrecision guard(ctx);
  if (!(a < b)) throw parameter_error("simpson_composite: requires a < b");

  const int wd = ctx.working_digits();
  const Real h = (b - a) / Real(subintervals);

  // Interior nodes j = 1..n-1 with weights 4 (odd j) and 2 (even j).
  Complex interior = detail::chunked_sum(
      wd, subintervals - 1, chunk_size,
      [&](std::int64_t begin, std::int64_t end) {
        Complex part;
        for (std::int64_t idx = begin; idx < end; ++idx) {
          const std::int64_t j = idx + 1;
          Complex v = sampler(a + Real(j) * h);
          v += v;  // x2
          if (j & 1) v += v;  // x4
          part += v;
        }
        return part;
      });

  Complex sum = sampler(a) + sampler(b) + interior;
  sum *= h / 3;
  return {sum, subintervals + 1, QuadratureRule::simpson};
}

namespace detail {

FilonBrackets filon_brackets(const PrecisionContext& ctx, const Real& h) {
  ScopedPrecision guard(ctx);
  if (h <= 0) throw parameter_error("filon weights: h must be positive");
  if (h < Real(1e-12)) {
    throw parameter_error(
        "filon weights: h below 1e-12 exhausts the cancellation budget");
  }
  // The brackets are O(h^3) differences of O(1) terms; evaluate them with
  // 3*log10(1/h) extra digits so the returned weights are accurate at wd.
  const long e2 = mpfr_get_exp(h.backend().data());
  const int lost = std::max(0, static_cast<int>(-e2 * 0.302) + 1) * 3;
  ScopedPrecision boosted(ctx.working_digits() + lost + 8);

  Real pi(0);
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  const Real hpi = h * pi;
  const Real h2pi2 = hpi * hpi;
  const Complex e2h = unit_phase(2 * hpi);  // e^{2 i pi h}

  // br0 = -2 + 2h^2pi^2 - 3ih pi + (2 - h pi i) e^{2 i pi h}
  Complex br0 = Complex(-2 + 2 * h2pi2, -3 * hpi) +
                Complex(Real(2), -hpi) * e2h;
  // br1 = -i + h pi + (i + h pi) e^{2 i pi h}
  Complex br1 = Complex(hpi, Real(-1)) + Complex(hpi, Real(1)) * e2h;
  // br2 = 2 + h pi i + (-2 + 2h^2pi^2 + 3ih pi) e^{2 i pi h}
  Complex br2 = Complex(Real(2), hpi) +
                Complex(-2 + 2 * h2pi2, 3 * hpi) * e2h;

  const Real denom2 = 2 * h * h * pi * pi * pi;  // 2 h^2 pi^3
  // K0 = i br0 / (2h^2pi^3); K1 = -2 br1 / (h^2pi^3); K2 = -i br2 / (2h^2pi^3)
  Complex k0 = mul_i(br0) / denom2;
  Complex k1 = br1 * Real(-4) / denom2;
  Complex k2 = -mul_i(br2) / denom2;

  // Round the results back down to the working precision.
  auto shrink = [wd = ctx.working_digits()](Complex z) {
    z.re.precision(wd);
    z.im.precision(wd);
    return z;
  };
  return {shrink(k0), shrink(k1), shrink(k2)};
}

}  // namespace detail

PanelRule filon_panel_weights(const PrecisionContext& ctx, const Real& y0,
                              const Real& h) {
  auto br = detail::filon_brackets(ctx, h);
  ScopedPrecision guard(ctx);
  const Real pi = constant(ctx, Constant::pi);
  const Complex pre = unit_phase(pi * y0);
  return {y0, h, pre * br.k0, pre * br.k1, pre * br.k2};
}

QuadratureResult filon_simpson_composite(const PrecisionContext& ctx,
                                         const Sampler& sampler, const Real& a,
                                         const Real& b, std::int64_t panels) {
  if (panels < 1) {
    throw parameter_error("filon_simpson_composite: panels must be >= 1");
  }
  ScopedPrecision guard(ctx);
  if (!(a < b)) throw parameter_error("filon_simpson_composite: requires a < b");

  const int wd = ctx.working_digits();
  const Real h = (b - a) / Real(2 * panels);
  const auto br = detail::filon_brackets(ctx, h);
  const Real pi = constant(ctx, Constant::pi);

  // Node j carries weight e^{i pi y_{2p}} K0 (+ e^{i pi y_{2(p-1)}} K2) for
  // even j, e^{i pi y_{j-1}} K1 for odd j; one sampler call per node.
  const std::int64_t nodes = 2 * panels + 1;
  Complex sum = detail::chunked_sum(
      wd, nodes, chunk_size, [&](std::int64_t begin, std::int64_t end) {
        Complex part;
        for (std::int64_t j = begin; j < end; ++j) {
          const Real yj = a + Real(j) * h;
          const Complex g = sampler(yj);
          Complex w;
          if (j & 1) {
            w = unit_phase(pi * (yj - h)) * br.k1;
          } else {
            if (j > 0) w += unit_phase(pi * (yj - 2 * h)) * br.k2;
            if (j < nodes - 1) w += unit_phase(pi * yj) * br.k0;
          }
          part += w * g;
        }
        return part;
      });
  return {sum, nodes, QuadratureRule::filon_simpson};
}

}  // namespace oscint
