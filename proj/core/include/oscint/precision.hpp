#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

#include "oscint/errors.hpp"

namespace oscint {

/// Arbitrary-precision real scalar. Precision of freshly constructed values is
/// taken from the process default, which ScopedPrecision manages. Expression
/// templates are off so every operation yields a materialized value; lambdas
/// returning arithmetic results stay safe.
using Real =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

inline constexpr int min_digits = 30;
inline constexpr int default_guard_digits = 10;

/// Display precision plus guard digits; immutable and shareable.
struct PrecisionContext {
  int digits = 50;
  int guard_digits = default_guard_digits;

  int working_digits() const noexcept { return digits + guard_digits; }
};

PrecisionContext make_context(int digits);
PrecisionContext make_context(int digits, int guard_digits);

/// Sets the default construction precision for Real while alive.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(int digits10)
      : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits10));
  }
  explicit ScopedPrecision(const PrecisionContext& ctx)
      : ScopedPrecision(ctx.working_digits()) {}
  ~ScopedPrecision() { Real::default_precision(saved_); }

  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

enum class Constant { pi, euler_gamma, zeta3 };

Real constant(const PrecisionContext& ctx, Constant which);
Real constant(const PrecisionContext& ctx, std::string_view name);

/// Bernoulli number B_n from the exact rational recurrence
/// sum_{k=0}^{n} C(n+1,k) B_k = 0, rendered at working precision.
Real bernoulli_number(const PrecisionContext& ctx, int n);

/// x^{1/x} = exp(log(x)/x); requires x > 0.
Real pow_self_root(const PrecisionContext& ctx, const Real& x);

/// Fixed-point decimal rendering at `significant_digits`, no exponent,
/// '-' sign only when negative. Round-to-nearest in the last place.
std::string to_decimal(const Real& x, int significant_digits);

/// Fixed-point rendering with exactly `decimal_places` digits after the
/// point (paper-table style).
std::string to_fixed(const Real& x, int decimal_places);

/// Parse a decimal string at the context's working precision.
Real parse_decimal(const PrecisionContext& ctx, std::string_view text);

}  // namespace oscint
