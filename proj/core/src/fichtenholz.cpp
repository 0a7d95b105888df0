#include "oscint/fichtenholz.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "oscint/detail/longman.hpp"
#include "oscint/detail/parallel.hpp"
#include "oscint/quadrature.hpp"

namespace oscint {

namespace {

// Tail series sum_{n>=1} (ia)^{n+j} / ((n+j)! n^2), truncated when the term
// drops below 10^{-(wd+5)}.
Complex tail_series(const PrecisionContext& ctx, const Real& a, int j) {
  const int wd = ctx.working_digits();
  const Real cutoff = pow(Real(10), -(wd + 5));
  const Complex ia(Real(0), a);
  // t_n = (ia)^{n+j}/(n+j)!; start at n = 1.
  Complex t = pow_int(ia, j + 1);
  for (int i = 2; i <= j + 1; ++i) t /= Real(i);
  Complex sum;
  for (int n = 1;; ++n) {
    sum += t / Real(n * n);
    t *= ia;
    t /= Real(n + j + 1);
    if (n > 4 && abs(t) < cutoff) break;
    if (n > 10000) throw internal_error("tail_series failed to converge");
  }
  return sum;
}

Real log_or_throw(const PrecisionContext& ctx, const Real& a) {
  ScopedPrecision guard(ctx);
  if (!(a > 0)) throw domain_error("V closed forms require a > 0");
  return log(a);
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::closed: return "closed";
    case Provenance::numeric: return "numeric";
    case Provenance::telescoped: return "telescoped";
  }
  return "?";
}

Provenance provenance_from_string(std::string_view s) {
  if (s == "closed") return Provenance::closed;
  if (s == "numeric") return Provenance::numeric;
  if (s == "telescoped") return Provenance::telescoped;
  throw parse_error("unknown provenance: " + std::string(s));
}

const VEntry& VTable::at(VKey key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    throw dependency_error("VTable: missing entry (k=" + std::to_string(key.k) +
                           ", s=" + std::to_string(key.s) + ")");
  }
  return it->second;
}

void save_vtable(const VTable& table, const PrecisionContext& ctx,
                 std::ostream& out) {
  ScopedPrecision guard(ctx);
  out << "k,s,re,im,provenance,digits\n";
  for (const auto& [key, e] : table.entries()) {
    const int d = std::max(1, e.digits);
    out << key.k << ',' << key.s << ',' << to_decimal(e.value.re, d) << ','
        << to_decimal(e.value.im, d) << ',' << to_string(e.provenance) << ','
        << e.digits << '\n';
  }
}

VTable load_vtable(const PrecisionContext& ctx, std::istream& in) {
  ScopedPrecision guard(ctx);
  VTable table(constant(ctx, Constant::pi));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line.rfind("k,s,", 0) != 0) {
        throw parse_error("vtable csv line 1: missing header");
      }
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) {
      throw parse_error("vtable csv line " + std::to_string(lineno) +
                        ": expected 6 columns");
    }
    try {
      VKey key{std::stoi(cells[0]), std::stoi(cells[1])};
      VEntry e;
      e.value = Complex(parse_decimal(ctx, cells[2]),
                        parse_decimal(ctx, cells[3]));
      e.provenance = provenance_from_string(cells[4]);
      e.digits = std::stoi(cells[5]);
      table.set(key, std::move(e));
    } catch (const parse_error&) {
      throw parse_error("vtable csv line " + std::to_string(lineno) +
                        ": malformed decimal");
    } catch (const std::exception&) {
      throw parse_error("vtable csv line " + std::to_string(lineno) +
                        ": malformed row");
    }
  }
  return table;
}

Complex v_closed_11(const PrecisionContext& ctx, const Real& a) {
  const Real L = log_or_throw(ctx, a);
  ScopedPrecision guard(ctx);
  const Real pi = constant(ctx, Constant::pi);
  const Real g = constant(ctx, Constant::euler_gamma);
  Complex v(-pi * pi / 24 + g * (g / 2 + L) + L * L / 2,
            -pi / 2 * (g + L));
  return v + tail_series(ctx, a, 0);
}

Complex v_closed_1s(const PrecisionContext& ctx, const Real& a, int s) {
  const Real L = log_or_throw(ctx, a);
  ScopedPrecision guard(ctx);
  const Real pi = constant(ctx, Constant::pi);
  const Real g = constant(ctx, Constant::euler_gamma);
  switch (s) {
    case 2: {
      // 1 + ia[ -pi^2/24 + g(g/2+L-1) + L^2/2 - L + 1 - (i pi/2)(g+L-1) ]
      Complex br(-pi * pi / 24 + g * (g / 2 + L - 1) + L * L / 2 - L + 1,
                 -pi / 2 * (g + L - 1));
      return Complex(Real(1)) + mul_i(br) * a + tail_series(ctx, a, 1);
    }
    case 3: {
      const Real a2 = a * a;
      Real re = pi * pi * a2 / 48 - g * a2 / 4 * (g + 2 * L - 3) -
                a2 / 4 * (L * L - 3 * L + Real(7) / 2) + Real(1) / 4;
      Real im = pi * a2 / 4 * (g + L - Real(3) / 2) + a;
      return Complex(re, im) + tail_series(ctx, a, 2);
    }
    case 4: {
      const Real a2 = a * a;
      const Real a3 = a2 * a;
      Real re = -pi * a3 / 12 * (g + L - Real(11) / 6) - a2 / 2 + Real(1) / 9;
      Real im = pi * pi * a3 / 144 - g * a3 / 12 * (g + 2 * L - Real(11) / 3) +
                a3 / 3 * (Real(-85) / 72 + Real(11) / 12 * L - L * L / 4) +
                a / 4;
      return Complex(re, im) + tail_series(ctx, a, 3);
    }
    default:
      throw parameter_error("v_closed_1s: explicit closed forms exist for s in "
                            "{2,3,4} only");
  }
}

Real v_zero(const PrecisionContext& ctx, int k, int s) {
  if (k < 0) throw domain_error("v_zero: k must be >= 0");
  if (s < 2) {
    throw domain_error("v_zero: integral diverges for s < 2 at a = 0");
  }
  ScopedPrecision guard(ctx);
  Real fact(1);
  for (int i = 2; i <= k; ++i) fact *= i;
  return fact / pow(Real(s - 1), k + 1);
}

Real im_v22_closed(const PrecisionContext& ctx, const Real& a) {
  const Real L = log_or_throw(ctx, a);
  ScopedPrecision guard(ctx);
  const Real pi = constant(ctx, Constant::pi);
  const Real g = constant(ctx, Constant::euler_gamma);
  const Real z3 = constant(ctx, Constant::zeta3);
  Real br = g * (-g + 2 - L) * L + pi * pi / 12 * (L - 1 + g) -
            Real(2) / 3 * z3 - 2 * L + L * L - L * L * L / 3 - g * g * g / 3 -
            2 * g + g * g + 2;
  // -2a sum_{n>=1} (-a^2)^n / ((2n+1)! (2n)^3)
  const Real cutoff = pow(Real(10), -(ctx.working_digits() + 5));
  const Real ma2 = -a * a;
  Real t = ma2 / 6;  // (-a^2)^1/3!
  Real sum(0);
  for (int n = 1;; ++n) {
    sum += t / Real(8 * n * n * n);
    t *= ma2;
    t /= Real(2 * n + 2) * Real(2 * n + 3);
    if (n > 4 && abs(t) < cutoff) break;
  }
  return a * br - 2 * a * sum;
}

namespace detail {

Real sin_log_integral_01(const PrecisionContext& ctx, const Real& a) {
  ScopedPrecision guard(ctx);
  // -a sum_{n>=0} (-1)^n a^{2n} / ((2n+1)! (2n+1)^2)
  const Real cutoff = pow(Real(10), -(ctx.working_digits() + 5));
  const Real ma2 = -a * a;
  Real t(1);  // a^{2n}/(2n+1)! at n=0
  Real sum(0);
  for (int n = 0;; ++n) {
    sum += t / Real((2 * n + 1) * (2 * n + 1));
    t *= ma2;
    t /= Real(2 * n + 2) * Real(2 * n + 3);
    if (n > 4 && abs(t) < cutoff) break;
  }
  return -a * sum;
}

std::vector<Complex> v_row1_chain(const PrecisionContext& ctx, const Real& a,
                                  int s_max) {
  if (s_max < 1) throw parameter_error("v_row1_chain: s_max must be >= 1");
  const Real L = log_or_throw(ctx, a);
  ScopedPrecision guard(ctx);
  const Real pi = constant(ctx, Constant::pi);
  const Real g = constant(ctx, Constant::euler_gamma);

  // Polynomial part as (p,q) -> coefficient of a^p L^q.
  using Poly = std::map<std::pair<int, int>, Complex>;
  Poly poly{{{0, 0}, Complex(-pi * pi / 24 + g * g / 2, -pi * g / 2)},
            {{0, 1}, Complex(g, -pi / 2)},
            {{0, 2}, Complex(Real(1) / 2)}};

  auto eval = [&](const Poly& p, int s) {
    Complex tot;
    for (const auto& [pq, c] : p) {
      tot += c * (pow(a, pq.first) * pow(L, pq.second));
    }
    return tot + tail_series(ctx, a, s - 1);
  };

  std::vector<Complex> row(static_cast<std::size_t>(s_max) + 1);
  row[1] = eval(poly, 1);
  for (int s = 1; s < s_max; ++s) {
    // int_0^a a'^p L'^q da' =
    //   sum_{j<=q} (-1)^{q-j} q!/j! a^{p+1} L^j / (p+1)^{q+1-j}
    Poly next;
    for (const auto& [pq, c] : poly) {
      const auto [p, q] = pq;
      Real qfac(1);
      for (int i = 2; i <= q; ++i) qfac *= i;
      Real jfac(1);
      for (int j = 0; j <= q; ++j) {
        if (j >= 2) jfac *= j;
        Real coef = qfac / jfac / pow(Real(p + 1), q + 1 - j);
        if ((q - j) & 1) coef = -coef;
        // multiply by i for V(a,1,s+1) = i * integral + 1/s^2
        next[{p + 1, j}] += mul_i(c) * coef;
      }
    }
    next[{0, 0}] += Complex(Real(1) / Real(s * s));
    poly = std::move(next);
    row[static_cast<std::size_t>(s) + 1] = eval(poly, s + 1);
  }
  return row;
}

}  // namespace detail

namespace {

bool is_pi(const PrecisionContext& ctx, const Real& a) {
  const Real pi = constant(ctx, Constant::pi);
  return abs(a - pi) < pow(Real(10), -std::min(25, ctx.digits - 2)) * pi;
}

struct BasePlan {
  std::int64_t n1 = 0;  // [1, 2]
  std::int64_t n2 = 0;  // [2, m]
  std::int64_t panels = 0;
  std::int64_t l_terms = 0;
};

std::int64_t even_at_least(double v, std::int64_t floor_n) {
  auto n = static_cast<std::int64_t>(std::ceil(v));
  n = std::max(n, floor_n);
  return n + (n & 1);
}

// Node counts from the h^4 error model of each piece against `tol`.
BasePlan plan_for(int k, int s, int m, double tol) {
  const double xs = std::min(std::exp(double(k) / s), 2.0);
  const double fpeak =
      (k == 0) ? 1.0 : std::pow(double(k) / s, k) * std::exp(double(-k));
  const double width = std::min(1.0, xs * std::sqrt(std::max(1.0, double(k))) / s);
  const double pi4 = 97.41;
  const double c1 = fpeak * (1.0 / std::pow(width, 4) + pi4) / 180.0;
  const double h1 = std::pow(tol / c1, 0.25);

  const double f2 = std::pow(std::log(2.0), k) / std::pow(2.0, s);
  const double c2 =
      f2 * std::pow(s / 2.0 + 3.15, 4) * std::max(1.0, m - 2.0) / 180.0;
  const double h2 = std::pow(tol / c2, 0.25);

  const double gm = std::pow(std::log(double(m)), k) / std::pow(double(m), s);
  const double g4 = std::max(gm * std::pow(double(s) / m + 1.0, 4), 1e-300);
  const double ht = std::pow(tol * 180.0 / g4, 0.25);

  BasePlan plan;
  plan.n1 = even_at_least(1.0 / h1, 64);
  plan.n2 = even_at_least((m - 2.0) / h2, 64);
  plan.panels = even_at_least(0.5 / ht, 32);
  plan.l_terms =
      std::max<std::int64_t>(48, static_cast<std::int64_t>(
                                     (std::log10(std::max(gm, 1e-30) / tol)) /
                                         0.7156 +
                                     16));
  return plan;
}

Complex v_eval_once(const PrecisionContext& ctx, int k, int s, int m,
                    const BasePlan& plan) {
  const Real pi = constant(ctx, Constant::pi);
  auto rt_g = [k, s](const Real& x) {
    return pow(log(x), k) / pow(x, s);
  };
  auto osc = [&pi, &rt_g](const Real& x) {
    return unit_phase(pi * x) * rt_g(x);
  };
  Complex base =
      simpson_composite(ctx, osc, Real(1), Real(2), plan.n1).value +
      simpson_composite(ctx, osc, Real(2), Real(m), plan.n2).value;
  auto bare = [&rt_g](const Real& x) { return Complex(rt_g(x)); };
  auto tail = detail::longman_tail(ctx, bare, m, plan.panels, plan.l_terms,
                                   QuadratureRule::filon_simpson);
  return base + tail.value;
}

}  // namespace

VNumericResult v_numeric(const PrecisionContext& ctx, const Real& a, int k,
                         int s, int target_digits) {
  if (k < 0) throw domain_error("v_numeric: k must be >= 0");
  if (s < 1 || (s == 1 && k == 0)) {
    throw domain_error("v_numeric: integral outside the supported range "
                       "(need s >= 2, or s = 1 with k >= 1)");
  }
  ScopedPrecision guard(ctx);
  if (!is_pi(ctx, a)) {
    throw parameter_error(
        "v_numeric: only a = pi is supported (half-period splitting"
        " assumes period 2)");
  }
  int target = target_digits > 0 ? target_digits : ctx.digits;
  target = std::min(target, ctx.working_digits() - 5);

  // Smallest odd integer above max(3, e^{k/s} + 1).
  const double thr = std::max(3.0, std::exp(double(k) / s) + 1.0);
  int m = static_cast<int>(std::floor(thr)) + 1;
  if ((m & 1) == 0) ++m;

  const double tol = std::pow(10.0, -(target + 2));
  BasePlan plan = plan_for(k, s, m, tol);
  if (plan.n1 + plan.n2 > (std::int64_t(1) << 28)) {
    throw precision_error(
        "v_numeric: requested digits exceed the composite-Simpson budget");
  }

  const Complex full = v_eval_once(ctx, k, s, m, plan);
  BasePlan half{std::max<std::int64_t>(plan.n1 / 2, 32),
                std::max<std::int64_t>(plan.n2 / 2, 32),
                std::max<std::int64_t>(plan.panels / 2, 16), plan.l_terms};
  const Complex coarse = v_eval_once(ctx, k, s, m, half);

  // Richardson: |full - coarse|/15 estimates the coarse error; report the
  // fine run with a x4 safety margin.
  const Real diff = abs(full - coarse);
  Real err = diff / 15 * 4 + pow(Real(10), -(ctx.working_digits() - 5));
  int digits = static_cast<int>(-mpfr_get_exp(err.backend().data()) * 0.30103);
  digits = std::min(digits, target + 3);
  return {full, digits};
}

VTable telescope_fill(const PrecisionContext& ctx, const Real& a, int k_max,
                      int s_max, int s_hat, int target_digits) {
  if (k_max < 0 || s_max < 1) {
    throw parameter_error("telescope_fill: k_max must be >= 0, s_max >= 1");
  }
  if (s_hat <= s_max + k_max) {
    throw parameter_error("telescope_fill: requires s_hat > s_max + k_max");
  }
  ScopedPrecision guard(ctx);
  const int target = target_digits > 0 ? target_digits : ctx.digits;

  VTable table(a);
  auto row1 = detail::v_row1_chain(ctx, a, s_hat);
  const int row1_digits = ctx.working_digits() - 4;
  for (int s = 1; s <= s_hat; ++s) {
    table.set({1, s}, {row1[static_cast<std::size_t>(s)], Provenance::closed,
                       row1_digits});
  }
  if (k_max < 2) return table;

  // Anchor budget: the backward telescoping multiplies anchor error by up to
  // prod_{j=3}^{s_hat} (j-1)/a over the full descent.
  double amp_log10 = 0.0;
  for (int j = 3; j <= s_hat; ++j) {
    amp_log10 += std::max(0.0, std::log10((j - 1) / 3.141592653589793));
  }
  const int anchor_target = target + static_cast<int>(std::ceil(amp_log10)) + 2;
  if (anchor_target > ctx.working_digits() - 5) {
    throw precision_error(
        "telescope_fill: anchor budget " + std::to_string(anchor_target) +
        " digits exceeds working precision; raise context digits");
  }

  const Complex i_over_a = Complex(Real(0), 1) / Complex(a);
  std::map<VKey, double> digit_est;
  for (int s = 1; s <= s_hat; ++s) digit_est[{1, s}] = row1_digits;

  for (int k = 2; k <= k_max; ++k) {
    auto anchor = v_numeric(ctx, a, k, s_hat, anchor_target);
    if (anchor.digits + 1 < anchor_target) {
      throw precision_error(
          "telescope_fill: anchor V(" + std::to_string(k) + "," +
          std::to_string(s_hat) + ") delivered " +
          std::to_string(anchor.digits) + " digits, need " +
          std::to_string(anchor_target));
    }
    table.set({k, s_hat}, {anchor.value, Provenance::numeric, anchor.digits});
    digit_est[{k, s_hat}] = anchor.digits;

    for (int s = s_hat; s >= 2; --s) {
      // V(a,k,s-1) = (i/a) [ k V(a,k-1,s) - (s-1) V(a,k,s) ]
      Complex v = i_over_a * (table.at({k - 1, s}).value * Real(k) -
                              table.at({k, s}).value * Real(s - 1));
      const double charge = std::max(
          0.0, std::log10(k * std::max(1, s - 1) / 3.141592653589793));
      const double d =
          std::min(digit_est[{k - 1, s}], digit_est[{k, s}]) - charge;
      digit_est[{k, s - 1}] = d;
      table.set({k, s - 1},
                {std::move(v), Provenance::telescoped,
                 static_cast<int>(std::floor(d))});
    }
  }
  return table;
}

Real contiguous_residual(const PrecisionContext& ctx, const VTable& table,
                         int k, int s) {
  ScopedPrecision guard(ctx);
  const Complex& v00 = table.at({k, s}).value;
  const Complex& v10 = table.at({k + 1, s - 1}).value;
  const Complex& v11 = table.at({k + 1, s}).value;
  const Real kk(k + 1);
  Complex resid = v00 + mul_i(v10) * (table.frequency() / kk) -
                  v11 * (Real(s - 1) / kk);
  return abs(resid);
}

Complex v_scaled(const PrecisionContext& ctx, const Real& a, const Real& b,
                 int k, int s, const VTable& table) {
  if (!(b > 0)) throw domain_error("v_scaled: b must be positive");
  if (k < 0) throw domain_error("v_scaled: k must be >= 0");
  ScopedPrecision guard(ctx);
  (void)a;
  const Real logb = log(b);
  Complex sum;
  Real binom(1);
  for (int l = 0; l <= k; ++l) {
    sum += table.at({l, s}).value * (binom * pow(logb, k - l));
    binom *= Real(k - l);
    binom /= Real(l + 1);
  }
  return sum;
}

Complex trig_power(const PrecisionContext& ctx, const Real& a, int m, int k,
                   int s, TrigKind kind, const VTable& table) {
  if (m < 1) throw parameter_error("trig_power: m must be >= 1");
  ScopedPrecision guard(ctx);
  const Real tol = pow(Real(10), -std::min(25, ctx.digits - 2));

  auto v_at_freq = [&](const Real& freq) -> Complex {
    if (abs(freq) < tol) return Complex(v_zero(ctx, k, s));
    if (abs(freq - table.frequency()) < tol) return table.at({k, s}).value;
    if (abs(freq + table.frequency()) < tol) return conj(table.at({k, s}).value);
    throw dependency_error("trig_power: table lacks frequency " +
                           to_decimal(freq, 8));
  };

  Complex sum;
  Real binom(1);
  for (int l = 0; l <= m; ++l) {
    Complex term = v_at_freq(a * Real(m - 2 * l)) * binom;
    if (kind == TrigKind::sin && (l & 1)) term = -term;
    sum += term;
    binom *= Real(m - l);
    binom /= Real(l + 1);
  }
  if (kind == TrigKind::sin) {
    return sum / pow_int(Complex(Real(0), Real(2)), m);
  }
  return sum / pow(Real(2), m);
}

}  // namespace oscint
