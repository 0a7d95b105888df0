#include "oscint/mi.hpp"

#include "oscint/detail/longman.hpp"
#include "oscint/detail/parallel.hpp"

namespace oscint {

namespace {

constexpr std::int64_t chunk_size = 2048;

void require_order(int n, int lo, int hi, const char* who) {
  if (n < lo || n > hi) {
    throw parameter_error(std::string(who) + ": order n must lie in " +
                          std::to_string(lo) + ".." + std::to_string(hi));
  }
}

std::string fmt_int(std::int64_t v) { return std::to_string(v); }

}  // namespace

namespace detail {

LongmanTail longman_tail(const PrecisionContext& ctx,
                         const std::function<Complex(const Real&)>& g, int m,
                         std::int64_t points, std::int64_t l_terms,
                         QuadratureRule rule) {
  if (l_terms < 4) throw parameter_error("longman_tail: l_terms must be >= 4");
  ScopedPrecision guard(ctx);

  auto accelerated = [&](const Real& y) {
    AlternatingSeries series{
        [&g, &y, m](std::int64_t l) { return g(Real(m + l) + y); }, 0};
    return cvz_accelerate(ctx, series, l_terms);
  };

  // Diagnostic flag from one representative node.
  const bool flag = accelerated(Real(0)).monotonicity_flag;

  QuadratureResult q;
  if (rule == QuadratureRule::simpson) {
    const Real pi = constant(ctx, Constant::pi);
    q = simpson_composite(
        ctx,
        [&](const Real& y) { return unit_phase(pi * y) * accelerated(y).value; },
        Real(0), Real(1), points);
  } else {
    q = filon_simpson_composite(
        ctx, [&](const Real& y) { return accelerated(y).value; }, Real(0),
        Real(1), points);
  }
  Complex fm = q.value;
  if (m & 1) fm = -fm;
  return {fm, flag};
}

}  // namespace detail

Complex finite_segment(const PrecisionContext& ctx, const Real& x0,
                       const Real& x1, std::int64_t subintervals) {
  ScopedPrecision guard(ctx);
  if (x0 < 1) throw parameter_error("finite_segment: x0 must be >= 1");
  if (!(x1 > x0)) throw parameter_error("finite_segment: x1 must exceed x0");
  const Real pi = constant(ctx, Constant::pi);
  return simpson_composite(
             ctx,
             [&pi](const Real& x) {
               return unit_phase(pi * x) * exp(log(x) / x);
             },
             x0, x1, subintervals)
      .value;
}

MiEstimate mi_partial_int(const PrecisionContext& ctx, int n,
                          std::int64_t subintervals) {
  require_order(n, 2, 12, "mi_partial_int");
  ScopedPrecision guard(ctx);
  auto sampler = detail::pi_map_sampler(ctx, n);
  auto q = simpson_composite(ctx, sampler, Real(0), Real(1) / 2, subintervals);
  const Real pi = constant(ctx, Constant::pi);
  Complex value =
      boundary_terms(ctx, n).value + pow_int(Complex(Real(0), 1 / pi), n) * q.value;
  return {value,
          "pi",
          {{"n", fmt_int(n)}, {"s", fmt_int(subintervals)}},
          false};
}

MiEstimate mi_inverse_map(const PrecisionContext& ctx, int n,
                          std::int64_t subintervals) {
  require_order(n, 2, 12, "mi_inverse_map");
  ScopedPrecision guard(ctx);
  auto sampler = detail::inverse_map_sampler(ctx, n);
  auto q = simpson_composite(ctx, sampler, Real(0), Real(1), subintervals);
  const Real pi = constant(ctx, Constant::pi);
  Complex value =
      boundary_terms(ctx, n).value + pow_int(Complex(Real(0), 1 / pi), n) * q.value;
  return {value,
          "invmap",
          {{"n", fmt_int(n)}, {"s", fmt_int(subintervals)}},
          false};
}

MiEstimate mi_exp_scaling(const PrecisionContext& ctx, int n,
                          std::int64_t subintervals) {
  require_order(n, 1, 12, "mi_exp_scaling");
  ScopedPrecision guard(ctx);

  // The z=0 boundary ladder uses h_j(0); these equal f^(j+1)(1) exactly, and
  // the first one must reproduce the explicit m=1 boundary value -i/pi, i.e.
  // h_0(0) = 1.  Both checks are exact integer identities.
  for (int j = 1; j <= n; ++j) {
    if (detail::h_at_zero(j - 1) != detail::f_derivative_at_one(j)) {
      throw internal_error(
          "mi_exp_scaling: beta boundary value disagrees with alpha ladder at "
          "order " +
          std::to_string(j));
    }
  }

  const Real pi = constant(ctx, Constant::pi);
  const Complex i_over_pi(Real(0), 1 / pi);
  Complex f1;
  for (int j = 1; j <= n; ++j) {
    f1 -= pow_int(i_over_pi, j) * Real(detail::h_at_zero(j - 1));
  }
  auto sampler = detail::esc_map_sampler(ctx, n);
  auto q = simpson_composite(ctx, sampler, Real(0), Real(1), subintervals);
  f1 += pow_int(i_over_pi, n) * q.value;

  Complex value = Complex(Real(0), -2 / pi) + i_over_pi * f1;
  return {value,
          "esc",
          {{"n", fmt_int(n)}, {"s", fmt_int(subintervals)}},
          false};
}

MiEstimate mi_longman(const PrecisionContext& ctx, int m, std::int64_t points,
                      std::int64_t l_terms, QuadratureRule rule,
                      std::int64_t base_subintervals) {
  if (m < 3 || (m % 2) == 0) {
    throw parameter_error("mi_longman: m must be odd and >= 3");
  }
  ScopedPrecision guard(ctx);

  std::int64_t base_n = base_subintervals;
  if (base_n == 0) base_n = std::max<std::int64_t>(4 * points, std::int64_t(1) << 20);
  if (base_n & 1) ++base_n;

  const Complex base = finite_segment(ctx, Real(1), Real(m), base_n);
  const Complex base_half = finite_segment(ctx, Real(1), Real(m), base_n / 2);
  if (abs(base - base_half) / 15 > Real(1e-20) * (1 + abs(base))) {
    throw precision_error(
        "mi_longman: base interval did not self-converge; raise "
        "base_subintervals");
  }

  auto g = detail::oscillating_f_sampler(ctx, 1);
  // The sampler carries the phase; the half-period series wants bare g.
  auto rt = detail::realized_table(TableKind::alpha, 1, ctx.working_digits());
  auto bare_g = [rt](const Real& x) {
    const Real L = log(x);
    const Real t = 1 / x;
    return Complex(exp(L * t) * detail::eval_realized(*rt, t, L));
  };
  auto tail = detail::longman_tail(ctx, bare_g, m, points, l_terms, rule);

  const Real pi = constant(ctx, Constant::pi);
  const Real m_root = pow_self_root(ctx, Real(m));
  // m odd: (-)^m m^{1/m} - 1 = -(m^{1/m} + 1)
  Complex value = base + Complex(Real(0), -(m_root + 1) / pi) +
                  mul_i(tail.value) / pi;
  return {value,
          "longman",
          {{"m", fmt_int(m)},
           {"points", fmt_int(points)},
           {"l", fmt_int(l_terms)},
           {"rule", rule == QuadratureRule::simpson ? "simpson" : "filon"}},
          tail.series_flag};
}

ConvergenceReport mi_log_expansion(const PrecisionContext& ctx, int n_max,
                                   const VTable& v_source) {
  if (n_max < 1 || n_max > 15) {
    throw parameter_error("mi_log_expansion: n_max must lie in 1..15");
  }
  ScopedPrecision guard(ctx);
  const Real pi = constant(ctx, Constant::pi);

  ConvergenceReport report;
  report.caption = "partial sums of -2i/pi + sum V(pi,n,n)/n!";
  Complex sum(Real(0), -2 / pi);
  Real factorial(1);
  for (int n = 1; n <= n_max; ++n) {
    factorial *= n;
    if (!v_source.contains({n, n})) {
      throw dependency_error("mi_log_expansion: missing V entry (k=" +
                             std::to_string(n) + ", s=" + std::to_string(n) +
                             ")");
    }
    sum += v_source.at({n, n}).value / factorial;
    report.rows.push_back(
        {sum, "logexp", {{"n_max", fmt_int(n)}}, false});
  }
  return report;
}

MiEstimate mi_contour(const PrecisionContext& ctx, std::int64_t subintervals,
                      int big_n, const Real& tau) {
  if (subintervals < 2 || (subintervals & 1)) {
    throw parameter_error("mi_contour: subintervals must be even, >= 2");
  }
  if (big_n < 1) throw parameter_error("mi_contour: N must be >= 1");
  ScopedPrecision guard(ctx);
  if (!(tau > 0)) throw parameter_error("mi_contour: tau must be positive");

  const int wd = ctx.working_digits();
  const Real pi = constant(ctx, Constant::pi);
  const Complex w(Real(1), tau);
  const Real span = Real(2 * big_n - 1);
  const Real h = span / Real(subintervals);

  auto f = [&](std::int64_t j) {
    const Complex z = Complex(Real(1)) + w * (Real(j) * h);
    const Complex lz = log(z);
    // exp(i pi z + log z / z)
    return exp(mul_i(z * pi) + lz / z);
  };

  // Simpson ordinates 1,4,2,...,4 with the final ordinate dropped: the
  // integrand there is below the tail estimate and the paper's rows are
  // reproduced only with this truncation.
  Complex sum = detail::chunked_sum(
      wd, subintervals, chunk_size, [&](std::int64_t begin, std::int64_t end) {
        Complex part;
        for (std::int64_t j = begin; j < end; ++j) {
          Complex v = f(j);
          if (j > 0) {
            v += v;
            if (j & 1) v += v;
          }
          part += v;
        }
        return part;
      });
  sum *= h / 3;
  Complex value = Complex(Real(0), -1 / pi) + w * sum;

  return {value,
          "contour",
          {{"s", fmt_int(subintervals)},
           {"N", fmt_int(big_n)},
           {"tau", to_decimal(tau, 6)}},
          false};
}

Complex contour_tail_estimate(const PrecisionContext& ctx, int big_n,
                              const Real& tau) {
  if (big_n < 1) throw parameter_error("contour_tail_estimate: N must be >= 1");
  ScopedPrecision guard(ctx);
  if (tau < 0) throw parameter_error("contour_tail_estimate: tau must be >= 0");
  const Real pi = constant(ctx, Constant::pi);
  // (i/pi) e^{2 pi i N (1 + i tau)}
  const Complex e = exp(Complex(-2 * pi * big_n * tau, 2 * pi * big_n));
  return mul_i(e) / pi;
}

}  // namespace oscint
