#include "oscint/series.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace oscint {

namespace detail {

namespace {
std::mutex cvz_mutex;
std::map<std::pair<int, std::int64_t>, std::unique_ptr<CvzWeights>> cvz_cache;
}  // namespace

const CvzWeights& cvz_weights(int working_digits, std::int64_t n) {
  std::lock_guard<std::mutex> lock(cvz_mutex);
  auto key = std::make_pair(working_digits, n);
  auto it = cvz_cache.find(key);
  if (it != cvz_cache.end()) return *it->second;

  ScopedPrecision guard(working_digits);
  auto w = std::make_unique<CvzWeights>();
  Real d = pow(Real(3) + sqrt(Real(8)), static_cast<unsigned>(n));
  d = (d + 1 / d) / 2;
  Real b(-1);
  Real c = -d;
  w->c.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    c = b - c;
    w->c.push_back(c);
    b *= Real(k + n) * Real(k - n);
    b /= (Real(k) + Real(1) / 2) * Real(k + 1);
  }
  w->d = d;
  auto [pos, inserted] = cvz_cache.emplace(key, std::move(w));
  (void)inserted;
  return *pos->second;
}

}  // namespace detail

namespace {

bool check_head_monotone(const std::vector<Complex>& terms) {
  const std::size_t n = std::min<std::size_t>(terms.size(), 16);
  for (std::size_t i = 0; i < n; ++i) {
    if (!terms[i].im.is_zero()) return false;
    if (terms[i].re <= 0) return false;
    if (i > 0 && terms[i].re > terms[i - 1].re) return false;
  }
  return true;
}

std::vector<Complex> collect_terms(const AlternatingSeries& series,
                                   std::int64_t count) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t j = 0; j < count; ++j) {
    out.push_back(series.term(series.offset + j));
  }
  return out;
}

}  // namespace

AccelerationResult direct_sum(const PrecisionContext& ctx,
                              const AlternatingSeries& series,
                              std::int64_t k_max) {
  if (k_max < series.offset) {
    throw parameter_error("direct_sum: k_max below series offset");
  }
  ScopedPrecision guard(ctx);
  const std::int64_t count = k_max - series.offset + 1;
  auto terms = collect_terms(series, count);

  Complex sum;
  for (std::int64_t j = 0; j < count; ++j) {
    const std::int64_t k = series.offset + j;
    if (k & 1) {
      sum -= terms[static_cast<std::size_t>(j)];
    } else {
      sum += terms[static_cast<std::size_t>(j)];
    }
  }
  return {sum, count, AccelMethod::direct, !check_head_monotone(terms)};
}

AccelerationResult euler_accelerate(const PrecisionContext& ctx,
                                    const AlternatingSeries& series,
                                    std::int64_t k_max) {
  if (k_max < 2) throw parameter_error("euler_accelerate: k_max must be >= 2");
  ScopedPrecision guard(ctx);
  auto terms = collect_terms(series, k_max);
  const bool flag = !check_head_monotone(terms);

  std::vector<Complex> ps(terms.size());
  Complex run;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const std::int64_t k = series.offset + static_cast<std::int64_t>(j);
    if (k & 1) {
      run -= terms[j];
    } else {
      run += terms[j];
    }
    ps[j] = run;
  }
  const Real half = Real(1) / 2;
  for (std::size_t len = ps.size(); len > 1; --len) {
    for (std::size_t i = 0; i + 1 < len; ++i) {
      ps[i] = (ps[i] + ps[i + 1]) * half;
    }
  }
  return {ps[0], k_max, AccelMethod::euler, flag};
}

AccelerationResult cvz_accelerate(const PrecisionContext& ctx,
                                  const AlternatingSeries& series,
                                  std::int64_t n_terms) {
  if (n_terms < 2) throw parameter_error("cvz_accelerate: n_terms must be >= 2");
  ScopedPrecision guard(ctx);
  auto terms = collect_terms(series, n_terms);
  const bool flag = !check_head_monotone(terms);

  const auto& w = detail::cvz_weights(ctx.working_digits(), n_terms);
  Complex s;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    s += terms[k] * w.c[k];
  }
  s /= w.d;
  if (series.offset & 1) s = -s;
  return {s, n_terms, AccelMethod::cvz, flag};
}

AlternatingSeries mrb_series(const PrecisionContext& ctx, std::int64_t offset) {
  const int wd = ctx.working_digits();
  return AlternatingSeries::from_real(
      [wd](std::int64_t k) {
        ScopedPrecision guard(wd);
        Real x(k);
        return exp(log(x) / x) - 1;
      },
      offset);
}

AccelerationResult mrb_constant(const PrecisionContext& ctx, AccelMethod method,
                                std::int64_t terms) {
  if (terms < 2) throw parameter_error("mrb_constant: terms must be >= 2");
  switch (method) {
    case AccelMethod::direct:
      return direct_sum(ctx, mrb_series(ctx, 1), terms);
    case AccelMethod::euler:
      return euler_accelerate(ctx, mrb_series(ctx, 1), terms);
    case AccelMethod::cvz:
      // Table 3's convention: the zero term k=1 is dropped and the row
      // labelled k uses n = k+1 terms (0-based internal index up to k).
      return cvz_accelerate(ctx, mrb_series(ctx, 2), terms + 1);
  }
  throw parameter_error("mrb_constant: unknown method");
}

}  // namespace oscint
