#include "oscint/tables.hpp"

#include <mpfr.h>

#include "oscint/coefficients.hpp"
#include "oscint/inverse_em.hpp"
#include "oscint/mi.hpp"
#include "oscint/paper_values.hpp"
#include "oscint/series.hpp"

namespace oscint {

int printed_decimals(std::string_view value) {
  auto dot = value.find('.');
  if (dot == std::string_view::npos) return 0;
  return static_cast<int>(value.size() - dot - 1);
}

int agreement_decimals(const PrecisionContext& ctx, const Real& ours,
                       std::string_view published) {
  ScopedPrecision guard(ctx);
  const int places = printed_decimals(published);
  const Real ref = parse_decimal(ctx, published);
  const Real diff = abs(ours - ref);
  if (diff.is_zero()) return places;
  // -floor(log10 diff) correct decimals
  long e2 = mpfr_get_exp(diff.backend().data());
  int dec = static_cast<int>(-e2 * 0.301029995663981);
  return std::max(0, std::min(places, dec));
}

namespace {

struct RowSink {
  const PrecisionContext& ctx;
  const TableOptions& opts;
  Report& report;

  void add(std::vector<std::string> cells, const Real& re, const Real& im,
           const char* paper_re, const char* paper_im) {
    cells.push_back(to_fixed(re, printed_decimals(paper_re)));
    cells.push_back(to_fixed(im, printed_decimals(paper_im)));
    if (opts.compare) {
      cells.push_back(std::to_string(agreement_decimals(ctx, re, paper_re)));
      cells.push_back(std::to_string(agreement_decimals(ctx, im, paper_im)));
    }
    report.rows.push_back(std::move(cells));
  }
};

std::vector<std::string> value_header(const TableOptions& opts,
                                      std::vector<std::string> keys) {
  keys.push_back("re");
  keys.push_back("im");
  if (opts.compare) {
    keys.push_back("re_match");
    keys.push_back("im_match");
  }
  return keys;
}

Report mrb_table(const PrecisionContext& ctx, const TableOptions& opts,
                 AccelMethod method,
                 const std::vector<paper::LabeledValue>& rows,
                 const char* footer) {
  Report report;
  report.header = {"k", "value"};
  if (opts.compare) report.header.push_back("match");
  for (const auto& row : rows) {
    auto r = mrb_constant(ctx, method, row.label);
    std::vector<std::string> cells{
        std::to_string(row.label),
        to_fixed(r.value.re, printed_decimals(row.value))};
    if (opts.compare) {
      cells.push_back(
          std::to_string(agreement_decimals(ctx, r.value.re, row.value)));
    }
    report.rows.push_back(std::move(cells));
  }
  report.footer = {footer, "digits=" + std::to_string(ctx.digits)};
  return report;
}

VTable ensure_vtable(const PrecisionContext& ctx, const TableOptions& opts,
                     int k_max, int s_max, int s_hat, int target_digits) {
  if (opts.v_table) {
    bool complete = true;
    for (int k = 1; k <= k_max && complete; ++k) {
      for (int s = std::min(k, s_max); s <= s_max; ++s) {
        if (!opts.v_table->contains({k, s})) {
          complete = false;
          break;
        }
      }
    }
    if (complete) return *opts.v_table;
  }
  return telescope_fill(ctx, constant(ctx, Constant::pi), k_max, s_max, s_hat,
                        target_digits);
}

}  // namespace

Report regenerate_table(const PrecisionContext& ctx, std::string_view id,
                        const TableOptions& opts) {
  ScopedPrecision guard(ctx);
  Report report;
  RowSink sink{ctx, opts, report};

  if (id == "tab1") {
    return mrb_table(ctx, opts, AccelMethod::direct, paper::tab1(),
                     "direct partial sums of the MRB series");
  }
  if (id == "tab2") {
    return mrb_table(ctx, opts, AccelMethod::euler, paper::tab2(),
                     "Euler transform of the MRB series");
  }
  if (id == "tab3") {
    return mrb_table(ctx, opts, AccelMethod::cvz, paper::tab3(),
                     "CVZ acceleration of the MRB series");
  }

  if (id == "tab4") {
    report.header = value_header(opts, {"n", "s"});
    for (const auto& row : paper::tab4()) {
      auto est = mi_partial_int(ctx, row.n, row.s);
      sink.add({std::to_string(row.n), std::to_string(row.s)}, est.value.re,
               est.value.im, row.re, row.im);
    }
    report.footer = {"partial integration ladder on y in [0,1/2]"};
    return report;
  }

  if (id == "tab5") {
    report.header = value_header(opts, {"n", "s"});
    for (const auto& row : paper::tab5()) {
      if (row.s >= 256000 && !opts.full) continue;  // gated long rows
      auto est = mi_exp_scaling(ctx, row.n, row.s);
      sink.add({std::to_string(row.n), std::to_string(row.s)}, est.value.re,
               est.value.im, row.re, row.im);
    }
    report.footer = {"exponential scaling, u in [0,1]"};
    return report;
  }

  if (id == "tab6") {
    report.header = value_header(opts, {"n", "l"});
    for (const auto& row : paper::tab6()) {
      auto est = mi_longman(ctx, 3, row.points, row.l, QuadratureRule::simpson);
      sink.add({std::to_string(row.points), std::to_string(row.l)},
               est.value.re, est.value.im, row.re, row.im);
    }
    report.footer = {"Longman splitting with CVZ acceleration, m=3"};
    return report;
  }

  if (id == "tab8") {
    report.header = value_header(opts, {"max_n"});
    VTable table = ensure_vtable(ctx, opts, 9, 9, 19, 22);
    auto conv = mi_log_expansion(ctx, 9, table);
    for (std::size_t i = 0; i < conv.rows.size(); ++i) {
      const auto& row = paper::tab8()[i];
      sink.add({std::to_string(row.n)}, conv.rows[i].value.re,
               conv.rows[i].value.im, row.re, row.im);
    }
    report.footer = {"logarithmic expansion via V(pi,n,n)"};
    return report;
  }

  if (id == "tabvks") {
    report.header = value_header(opts, {"k", "s"});
    VTable table = ensure_vtable(ctx, opts, 6, 8, 15, 26);
    for (const auto& row : paper::tab_vks()) {
      const auto& e = table.at({row.k, row.s});
      sink.add({std::to_string(row.k), std::to_string(row.s)}, e.value.re,
               e.value.im, row.re, row.im);
    }
    report.footer = {"telescoped V(pi,k,s) table, s_hat=15"};
    return report;
  }

  if (id == "tabcont") {
    report.header = value_header(opts, {"s", "N", "tau"});
    for (const auto& row : paper::tab_contour()) {
      if (row.s >= 512000 && !opts.full) continue;  // gated long rows
      auto est = mi_contour(ctx, row.s, row.big_n, parse_decimal(ctx, row.tau));
      sink.add({std::to_string(row.s), std::to_string(row.big_n), row.tau},
               est.value.re, est.value.im, row.re, row.im);
    }
    report.footer = {"contour deformation along 1 + t(1 + tau i)"};
    return report;
  }

  throw config_error("unknown table id: " + std::string(id));
}

Report figure_data(const PrecisionContext& ctx, std::string_view which,
                   const Real& from, const Real& to, const Real& step) {
  ScopedPrecision guard(ctx);
  if (!(step > 0)) throw parameter_error("figure_data: step must be positive");
  if (!(from > 0)) throw parameter_error("figure_data: from must be positive");
  int order;
  if (which == "raw") {
    order = 0;
  } else if (which == "pi1") {
    order = 1;
  } else {
    throw config_error("figure_data: which must be raw or pi1");
  }
  auto sampler = detail::oscillating_f_sampler(ctx, order);

  Report report;
  report.header = {"x", "re", "im"};
  for (Real x = from; x <= to + step / 2; x += step) {
    Complex v = sampler(x);
    report.rows.push_back(
        {to_fixed(x, 6), to_fixed(v.re, 12), to_fixed(v.im, 12)});
  }
  report.footer = {std::string("integrand samples: ") + std::string(which)};
  return report;
}

}  // namespace oscint
