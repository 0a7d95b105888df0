#pragma once

#include <cstdint>
#include <functional>

#include "oscint/complex_arith.hpp"
#include "oscint/precision.hpp"

namespace oscint {

enum class AccelMethod { direct, euler, cvz };

/// Series sum_{k=offset}^inf (-1)^k a_k. term(k) yields the magnitude a_k;
/// the accelerators own the alternating sign.
struct AlternatingSeries {
  std::function<Complex(std::int64_t)> term;
  std::int64_t offset = 0;

  static AlternatingSeries from_real(std::function<Real(std::int64_t)> f,
                                     std::int64_t offset) {
    return {[f = std::move(f)](std::int64_t k) { return Complex(f(k)); },
            offset};
  }
};

struct AccelerationResult {
  Complex value;
  std::int64_t terms_used = 0;
  AccelMethod method = AccelMethod::direct;
  /// Raised when the first 16 supplied magnitudes are not real, positive and
  /// decreasing; acceleration proceeds regardless.
  bool monotonicity_flag = false;
};

/// Partial sum over k = offset..k_max inclusive.
AccelerationResult direct_sum(const PrecisionContext& ctx,
                              const AlternatingSeries& series,
                              std::int64_t k_max);

/// Euler transform of the first k_max terms: partial sums, then iterated
/// pairwise averaging down to a single value.
AccelerationResult euler_accelerate(const PrecisionContext& ctx,
                                    const AlternatingSeries& series,
                                    std::int64_t k_max);

/// Cohen-Rodriguez Villegas-Zagier algorithm 1 on the first n_terms terms.
/// Error decays like (3+sqrt(8))^-n for totally monotone magnitudes.
AccelerationResult cvz_accelerate(const PrecisionContext& ctx,
                                  const AlternatingSeries& series,
                                  std::int64_t n_terms);

/// The MRB constant sum_{k>=1} (-1)^k (k^{1/k}-1) by the chosen method.
/// direct: partial sum through k = terms. euler: first `terms` terms from
/// k=1. cvz: the paper's indexing, terms a_2..a_{terms+2} with n = terms+1.
AccelerationResult mrb_constant(const PrecisionContext& ctx, AccelMethod method,
                                std::int64_t terms);

/// a_k = k^{1/k} - 1 with the series starting at k = offset.
AlternatingSeries mrb_series(const PrecisionContext& ctx,
                             std::int64_t offset = 1);

namespace detail {
/// Cached CVZ coefficients: value = (sum_k c[k]*a_k) / d. The alternating
/// sign is folded into c.
struct CvzWeights {
  std::vector<Real> c;
  Real d;
};
const CvzWeights& cvz_weights(int working_digits, std::int64_t n);
}  // namespace detail

}  // namespace oscint
