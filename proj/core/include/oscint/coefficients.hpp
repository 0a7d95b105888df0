#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "oscint/complex_arith.hpp"
#include "oscint/precision.hpp"

namespace oscint {

inline constexpr int max_table_order = 64;

enum class TableKind { alpha, beta };

/// Exact integer coefficients of the n-th derivative structure of x^{1/x}:
///   alpha: f^(n)(x) = x^{1/x} sum alpha_{n,r,s} log^s(x) / x^r
///   beta:  h_n(z)   = e^{z e^-z} sum beta_{n,r,s} z^s e^{-rz}
/// Both obey the same recurrence and differ only in the order-0 seed.
struct CoefficientTable {
  int order = 0;
  std::map<std::pair<int, int>, boost::multiprecision::mpz_int> entries;
};

const CoefficientTable& alpha_table(int n);
const CoefficientTable& beta_table(int n);

/// b(n) of the partial-integration ladder: b(0)=0, b(1)=-2i/pi,
/// b(n+1) = b(n) - (i/pi)^{n+1} f^(n)(1) for n >= 1.
struct BoundaryTerms {
  int order = 0;
  Complex value;
};

BoundaryTerms boundary_terms(const PrecisionContext& ctx, int n);

/// n-th derivative of x^{1/x} evaluated through the alpha expansion; x > 0.
Real f_derivative(const PrecisionContext& ctx, int n, const Real& x);

/// Integrand of the y = 1/(1+x) map: e^{i pi x(y)} f^(n)(x(y)) / y^2 on
/// [0, 1/2], zero at y = 0. Requires n >= 2.
Complex mapped_integrand_pi(const PrecisionContext& ctx, int n, const Real& y);

/// Integrand of the u = e^-z map: e^{i pi/u} h_n(-log u) / u^2 on [0, 1],
/// zero at u = 0. Requires n >= 1.
Complex mapped_integrand_esc(const PrecisionContext& ctx, int n, const Real& u);

namespace detail {

/// Coefficient rows realized as Real polynomials in log-space for Horner
/// evaluation; rows[r - min_r][s] is the coefficient of t^r L^s.
struct RealizedTable {
  int order = 0;
  int min_r = 0;
  std::vector<std::vector<Real>> rows;
};

std::shared_ptr<const RealizedTable> realized_table(TableKind kind, int n,
                                                    int working_digits);

/// sum_r t^r P_r(L) = t^{min_r} * Horner; returns the full sum.
Real eval_realized(const RealizedTable& rt, const Real& t, const Real& L);

/// f^(n)(1) = sum_r alpha_{n,r,0}; exact integer.
boost::multiprecision::mpz_int f_derivative_at_one(int n);
/// h_n(0) = sum_r beta_{n,r,0}; exact integer.
boost::multiprecision::mpz_int h_at_zero(int n);

/// Hot-loop samplers with the realized table bound once; inputs are assumed
/// in range (the public mapped_integrand_* wrappers validate).
std::function<Complex(const Real&)> pi_map_sampler(const PrecisionContext& ctx,
                                                   int n);
std::function<Complex(const Real&)> esc_map_sampler(const PrecisionContext& ctx,
                                                    int n);
std::function<Complex(const Real&)> inverse_map_sampler(
    const PrecisionContext& ctx, int n);
/// e^{i pi x} f^(n)(x); used by the raw-integrand segment and figure dumps.
std::function<Complex(const Real&)> oscillating_f_sampler(
    const PrecisionContext& ctx, int n);

}  // namespace detail

}  // namespace oscint
