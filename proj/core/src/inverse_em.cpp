#include "oscint/inverse_em.hpp"

#include "oscint/coefficients.hpp"
#include "oscint/mi.hpp"

namespace oscint {

MomentTable moments(const PrecisionContext& ctx, int max_d) {
  if (max_d < 1) throw parameter_error("moments: max_d must be >= 1");
  ScopedPrecision guard(ctx);
  const Real pi = constant(ctx, Constant::pi);
  const Complex i_over_pi(Real(0), 1 / pi);

  MomentTable t;
  t.max_d = max_d;
  t.S.resize(static_cast<std::size_t>(max_d) + 1);
  t.S_bar.resize(static_cast<std::size_t>(max_d) + 1);
  t.S[0] = Complex{};
  for (int d = 0; d < max_d; ++d) {
    Real parity = (d & 1) ? Real(0) : Real(2);  // 1 + (-1)^d
    t.S[static_cast<std::size_t>(d) + 1] =
        i_over_pi * (Complex(parity) + t.S[static_cast<std::size_t>(d)] * Real(d + 1));
  }
  Real fact(1);
  for (int d = 0; d <= max_d; ++d) {
    if (d >= 2) fact *= d;
    t.S_bar[static_cast<std::size_t>(d)] = t.S[static_cast<std::size_t>(d)] / fact;
  }

  // Closed forms:
  //   S_bar(2d+1) = 2i (-)^d pi^-(2d+1) sum_{j=0}^{d}   (-pi^2)^j/(2j+1)!
  //   S_bar(2d)   = 2  (-)^d pi^-(2d)   sum_{j=0}^{d-1} (-pi^2)^j/(2j+1)!
  const Real tol = pow(Real(10), -(ctx.working_digits() - 5));
  const Real mpi2 = -pi * pi;
  for (int d = 0; d <= max_d; ++d) {
    const int dd = (d & 1) ? (d - 1) / 2 : d / 2;
    const int jmax = (d & 1) ? dd : dd - 1;
    Real sum(0), term(1);
    for (int j = 0; j <= jmax; ++j) {
      if (j > 0) {
        term *= mpi2;
        term /= Real(2 * j) * Real(2 * j + 1);
      }
      sum += term;
    }
    Real mag = 2 * sum / pow(pi, d);
    if (dd & 1) mag = -mag;
    Complex closed = (d & 1) ? Complex(Real(0), mag) : Complex(mag);
    if (abs(t.S_bar[static_cast<std::size_t>(d)] - closed) > tol) {
      throw internal_error(
          "moments: recurrence and closed form disagree at d = " +
          std::to_string(d));
    }
  }
  return t;
}

Complex em_estimate(const PrecisionContext& ctx, int d_max, int m) {
  if (d_max < 1 || d_max > 20) {
    throw parameter_error("em_estimate: d_max must lie in 1..20");
  }
  if (m < 1 || (m % 2) == 0) {
    throw parameter_error("em_estimate: m must be odd and >= 1");
  }
  ScopedPrecision guard(ctx);
  const Real pi = constant(ctx, Constant::pi);
  const auto mt = moments(ctx, d_max + 1);
  const auto& Sb = mt.S_bar;

  const Real x(m + 1);
  // 2(-)^{m+1} F = -S_bar(1) g(x) + sum_d coef_d g^(d)(x), g = f^(1).
  Complex acc = -(Sb[1] * f_derivative(ctx, 1, x));
  for (int d = 1; d <= d_max; ++d) {
    Complex coef = Sb[static_cast<std::size_t>(d)] -
                   Sb[static_cast<std::size_t>(d) + 1];
    for (int l = 0; l <= (d - 1) / 2; ++l) {
      const Real b = bernoulli_number(ctx, 2 + 2 * l);
      Real fact(1);
      for (int i = 2; i <= 2 + 2 * l; ++i) fact *= i;
      coef -= Sb[static_cast<std::size_t>(d - 1 - 2 * l)] *
              (b / fact * pow(Real(2), 2 + 2 * l));
    }
    acc += coef * f_derivative(ctx, 1 + d, x);
  }
  // m odd: 2(-)^{m+1} = 2
  const Complex F = acc / Real(2);

  if (m == 1) {
    return mul_i(F - Complex(Real(2))) / pi;
  }
  // General odd m: assemble like the Longman splitting,
  // M_I = int_1^m + (i/pi)[(-)^m m^{1/m} - 1] + (i/pi) F_m.
  const Complex base = finite_segment(ctx, Real(1), Real(m), 1 << 18);
  const Real m_root = pow_self_root(ctx, Real(m));
  return base + Complex(Real(0), -(m_root + 1) / pi) + mul_i(F) / pi;
}

EmProfile em_profile(const PrecisionContext& ctx, int d_limit,
                     const Complex& reference) {
  if (d_limit < 8) throw parameter_error("em_profile: d_limit must be >= 8");
  ScopedPrecision guard(ctx);
  EmProfile profile;
  for (int d = 1; d <= d_limit; ++d) {
    Complex est = em_estimate(ctx, d);
    Real err = abs(est - reference);
    profile.rows.push_back({d, std::move(est), std::move(err)});
  }
  return profile;
}

}  // namespace oscint
