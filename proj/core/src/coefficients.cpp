#include "oscint/coefficients.hpp"

#include <mutex>

namespace oscint {

namespace {

using Int = boost::multiprecision::mpz_int;
using Entries = std::map<std::pair<int, int>, Int>;

Int get(const Entries& e, int r, int s) {
  if (r < 0 || s < 0) return 0;
  auto it = e.find({r, s});
  return it == e.end() ? Int(0) : it->second;
}

// alpha_{n+1,r,s} = alpha_{n,r-2,s} - alpha_{n,r-2,s-1}
//                 + (s+1) alpha_{n,r-1,s+1} - (r-1) alpha_{n,r-1,s}
Entries recurrence_step(const Entries& prev) {
  Entries next;
  for (const auto& [rs, c] : prev) {
    (void)c;
    const auto [r, s] = rs;
    for (auto [rr, ss] : {std::pair{r + 2, s}, std::pair{r + 2, s + 1},
                          std::pair{r + 1, s - 1}, std::pair{r + 1, s}}) {
      if (ss < 0 || next.count({rr, ss})) continue;
      Int v = get(prev, rr - 2, ss) - get(prev, rr - 2, ss - 1) +
              (ss + 1) * get(prev, rr - 1, ss + 1) -
              (rr - 1) * get(prev, rr - 1, ss);
      if (v != 0) next.emplace(std::pair{rr, ss}, std::move(v));
    }
  }
  return next;
}

std::mutex table_mutex;

std::vector<CoefficientTable>& table_store(TableKind kind) {
  static std::vector<CoefficientTable> alpha{{0, {{{0, 0}, Int(1)}}}};
  static std::vector<CoefficientTable> beta{
      {0, {{{2, 0}, Int(1)}, {{2, 1}, Int(-1)}}}};
  return kind == TableKind::alpha ? alpha : beta;
}

const CoefficientTable& table(TableKind kind, int n) {
  if (n < 0) throw parameter_error("coefficient table: order must be >= 0");
  if (n > max_table_order) {
    throw parameter_error("coefficient table: order capped at " +
                          std::to_string(max_table_order));
  }
  std::lock_guard<std::mutex> lock(table_mutex);
  auto& store = table_store(kind);
  while (static_cast<int>(store.size()) <= n) {
    CoefficientTable t;
    t.order = static_cast<int>(store.size());
    t.entries = recurrence_step(store.back().entries);
    store.push_back(std::move(t));
  }
  return store[static_cast<std::size_t>(n)];
}

std::mutex realized_mutex;
std::map<std::tuple<TableKind, int, int>,
         std::shared_ptr<const detail::RealizedTable>>
    realized_cache;

}  // namespace

const CoefficientTable& alpha_table(int n) { return table(TableKind::alpha, n); }
const CoefficientTable& beta_table(int n) { return table(TableKind::beta, n); }

namespace detail {

std::shared_ptr<const RealizedTable> realized_table(TableKind kind, int n,
                                                    int working_digits) {
  {
    std::lock_guard<std::mutex> lock(realized_mutex);
    auto it = realized_cache.find({kind, n, working_digits});
    if (it != realized_cache.end()) return it->second;
  }
  const CoefficientTable& src = table(kind, n);

  ScopedPrecision guard(working_digits);
  auto rt = std::make_shared<RealizedTable>();
  rt->order = n;
  int min_r = 0, max_r = 0, max_s = 0;
  if (!src.entries.empty()) {
    min_r = max_r = src.entries.begin()->first.first;
    for (const auto& [rs, c] : src.entries) {
      (void)c;
      min_r = std::min(min_r, rs.first);
      max_r = std::max(max_r, rs.first);
      max_s = std::max(max_s, rs.second);
    }
  }
  rt->min_r = min_r;
  rt->rows.assign(static_cast<std::size_t>(max_r - min_r + 1),
                  std::vector<Real>(static_cast<std::size_t>(max_s + 1),
                                    Real(0)));
  for (const auto& [rs, c] : src.entries) {
    rt->rows[static_cast<std::size_t>(rs.first - min_r)]
            [static_cast<std::size_t>(rs.second)] = Real(c);
  }

  std::lock_guard<std::mutex> lock(realized_mutex);
  auto [pos, inserted] =
      realized_cache.emplace(std::tuple{kind, n, working_digits}, rt);
  (void)inserted;
  return pos->second;
}

Real eval_realized(const RealizedTable& rt, const Real& t, const Real& L) {
  Real acc(0);
  for (auto row = rt.rows.rbegin(); row != rt.rows.rend(); ++row) {
    Real p(0);
    for (auto c = row->rbegin(); c != row->rend(); ++c) {
      p *= L;
      p += *c;
    }
    acc *= t;
    acc += p;
  }
  return acc * pow(t, rt.min_r);
}

boost::multiprecision::mpz_int f_derivative_at_one(int n) {
  Int sum = 0;
  for (const auto& [rs, c] : alpha_table(n).entries) {
    if (rs.second == 0) sum += c;
  }
  return sum;
}

boost::multiprecision::mpz_int h_at_zero(int n) {
  Int sum = 0;
  for (const auto& [rs, c] : beta_table(n).entries) {
    if (rs.second == 0) sum += c;
  }
  return sum;
}

}  // namespace detail

BoundaryTerms boundary_terms(const PrecisionContext& ctx, int n) {
  if (n < 0) throw parameter_error("boundary_terms: n must be >= 0");
  if (n > max_table_order) {
    throw parameter_error("boundary_terms: order capped at " +
                          std::to_string(max_table_order));
  }
  ScopedPrecision guard(ctx);
  if (n == 0) return {0, Complex{}};

  const Real pi = constant(ctx, Constant::pi);
  const Complex i_over_pi(Real(0), 1 / pi);
  Complex b(Real(0), -2 / pi);  // b(1)
  for (int j = 1; j < n; ++j) {
    b -= pow_int(i_over_pi, j + 1) * Real(detail::f_derivative_at_one(j));
  }
  return {n, b};
}

Real f_derivative(const PrecisionContext& ctx, int n, const Real& x) {
  if (x <= 0) throw domain_error("f_derivative: x must be positive");
  ScopedPrecision guard(ctx);
  auto rt = detail::realized_table(TableKind::alpha, n, ctx.working_digits());
  const Real L = log(x);
  const Real t = 1 / x;
  return exp(L * t) * detail::eval_realized(*rt, t, L);
}

namespace detail {

std::function<Complex(const Real&)> pi_map_sampler(const PrecisionContext& ctx,
                                                   int n) {
  auto rt = realized_table(TableKind::alpha, n, ctx.working_digits());
  const Real pi = constant(ctx, Constant::pi);
  return [rt, pi](const Real& y) {
    if (y.is_zero()) return Complex{};
    const Real x = 1 / y - 1;
    const Real L = log(x);
    const Real t = 1 / x;
    const Real f = exp(L * t) * eval_realized(*rt, t, L);
    return unit_phase(pi * x) * (f / (y * y));
  };
}

std::function<Complex(const Real&)> esc_map_sampler(const PrecisionContext& ctx,
                                                    int n) {
  auto rt = realized_table(TableKind::beta, n, ctx.working_digits());
  const Real pi = constant(ctx, Constant::pi);
  return [rt, pi](const Real& u) {
    if (u.is_zero()) return Complex{};
    const Real L = -log(u);  // z = -log u >= 0
    // h_n(z)/u^2 = u^{-u} sum beta z^s u^{r-2}; u^{-2} folds into the power.
    Real acc(0);
    for (auto row = rt->rows.rbegin(); row != rt->rows.rend(); ++row) {
      Real p(0);
      for (auto c = row->rbegin(); c != row->rend(); ++c) {
        p *= L;
        p += *c;
      }
      acc *= u;
      acc += p;
    }
    acc *= pow(u, rt->min_r - 2);
    acc *= exp(u * L);  // u^{-u}
    return unit_phase(pi / u) * acc;
  };
}

std::function<Complex(const Real&)> inverse_map_sampler(
    const PrecisionContext& ctx, int n) {
  auto rt = realized_table(TableKind::alpha, n, ctx.working_digits());
  const Real pi = constant(ctx, Constant::pi);
  return [rt, pi](const Real& u) {
    if (u.is_zero()) return Complex{};
    const Real x = 1 / u;
    const Real L = log(x);
    const Real f = exp(L * u) * eval_realized(*rt, u, L);
    return unit_phase(pi * x) * (f / (u * u));
  };
}

std::function<Complex(const Real&)> oscillating_f_sampler(
    const PrecisionContext& ctx, int n) {
  auto rt = realized_table(TableKind::alpha, n, ctx.working_digits());
  const Real pi = constant(ctx, Constant::pi);
  return [rt, pi](const Real& x) {
    const Real L = log(x);
    const Real t = 1 / x;
    const Real f = exp(L * t) * eval_realized(*rt, t, L);
    return unit_phase(pi * x) * f;
  };
}

}  // namespace detail

Complex mapped_integrand_pi(const PrecisionContext& ctx, int n, const Real& y) {
  if (n < 2) {
    throw parameter_error(
        "mapped_integrand_pi: order n >= 2 required (integrand diverges "
        "logarithmically at y = 0 for n = 1)");
  }
  ScopedPrecision guard(ctx);
  if (y < 0 || y > Real(1) / 2) {
    throw domain_error("mapped_integrand_pi: y must lie in [0, 1/2]");
  }
  return detail::pi_map_sampler(ctx, n)(y);
}

Complex mapped_integrand_esc(const PrecisionContext& ctx, int n, const Real& u) {
  if (n < 1) {
    throw parameter_error(
        "mapped_integrand_esc: order n >= 1 required (integrand does not "
        "vanish at u = 0 for n = 0)");
  }
  ScopedPrecision guard(ctx);
  if (u < 0 || u > 1) {
    throw domain_error("mapped_integrand_esc: u must lie in [0, 1]");
  }
  return detail::esc_map_sampler(ctx, n)(u);
}

}  // namespace oscint
