#include "oscint/precision.hpp"

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cctype>
#include <mutex>
#include <vector>

namespace oscint {

namespace {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Exact Bernoulli numbers, grown on demand.  B_1 = -1/2 convention.
std::vector<Rational>& bernoulli_cache() {
  static std::vector<Rational> cache{Rational(1)};
  return cache;
}
std::mutex bernoulli_mutex;

Rational bernoulli_exact(int n) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  auto& cache = bernoulli_cache();
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -sum_{k<m} C(m+1,k) B_k / (m+1)
    Rational sum(0);
    Integer binom(1);  // C(m+1,0)
    for (int k = 0; k < m; ++k) {
      sum += Rational(binom) * cache[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    cache.push_back(-sum / (m + 1));
  }
  return cache[n];
}

}  // namespace

PrecisionContext make_context(int digits) {
  return make_context(digits, default_guard_digits);
}

PrecisionContext make_context(int digits, int guard_digits) {
  if (digits < min_digits) {
    throw config_error("precision context requires digits >= " +
                       std::to_string(min_digits) + ", got " +
                       std::to_string(digits));
  }
  if (guard_digits < 1) {
    throw config_error("guard_digits must be positive");
  }
  return PrecisionContext{digits, guard_digits};
}

Real constant(const PrecisionContext& ctx, Constant which) {
  ScopedPrecision guard(ctx);
  Real r(0);
  switch (which) {
    case Constant::pi:
      mpfr_const_pi(r.backend().data(), MPFR_RNDN);
      break;
    case Constant::euler_gamma:
      mpfr_const_euler(r.backend().data(), MPFR_RNDN);
      break;
    case Constant::zeta3:
      mpfr_zeta_ui(r.backend().data(), 3, MPFR_RNDN);
      break;
  }
  return r;
}

Real constant(const PrecisionContext& ctx, std::string_view name) {
  if (name == "pi") return constant(ctx, Constant::pi);
  if (name == "euler_gamma") return constant(ctx, Constant::euler_gamma);
  if (name == "zeta3") return constant(ctx, Constant::zeta3);
  throw config_error("unknown constant: " + std::string(name));
}

Real bernoulli_number(const PrecisionContext& ctx, int n) {
  if (n < 0) throw domain_error("bernoulli_number: n must be >= 0");
  ScopedPrecision guard(ctx);
  const Rational b = bernoulli_exact(n);
  return Real(numerator(b)) / Real(denominator(b));
}

Real pow_self_root(const PrecisionContext& ctx, const Real& x) {
  if (x <= 0) throw domain_error("pow_self_root: x must be positive");
  ScopedPrecision guard(ctx);
  return exp(log(x) / x);
}

std::string to_decimal(const Real& x, int significant_digits) {
  if (significant_digits < 1) {
    throw parameter_error("to_decimal: need at least one digit");
  }
  if (x.is_zero()) return "0";

  // mpfr_get_str renders round-to-nearest significant digits plus the
  // decimal exponent e with the point implied before the first digit.
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10,
                           static_cast<std::size_t>(significant_digits),
                           x.backend().data(), MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }

  std::string out;
  if (e <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
  } else if (static_cast<std::size_t>(e) >= digits.size()) {
    out = digits + std::string(static_cast<std::size_t>(e) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(e)) + "." +
          digits.substr(static_cast<std::size_t>(e));
  }
  // trim a trailing point (integer case never produces one, but be safe)
  if (!out.empty() && out.back() == '.') out.pop_back();
  return sign + out;
}

std::string to_fixed(const Real& x, int decimal_places) {
  if (decimal_places < 0) {
    throw parameter_error("to_fixed: decimal_places must be >= 0");
  }
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rf", decimal_places, x.backend().data());
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

Real parse_decimal(const PrecisionContext& ctx, std::string_view text) {
  ScopedPrecision guard(ctx);
  std::string s(text);
  if (s.empty()) throw parse_error("empty decimal string");
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw parse_error("malformed decimal: '" + s + "'");
  }
}

}  // namespace oscint
