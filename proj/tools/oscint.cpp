#include <CLI11.hpp>
#include <json.hpp>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "oscint/coefficients.hpp"
#include "oscint/inverse_em.hpp"
#include "oscint/mi.hpp"
#include "oscint/paper_values.hpp"
#include "oscint/series.hpp"
#include "oscint/tables.hpp"

namespace {

using namespace oscint;

std::string signed_decimal(const Real& x, int digits) {
  std::string s = to_decimal(x, digits);
  if (!s.empty() && s[0] != '-') s.insert(s.begin(), '+');
  return s;
}

/// Advisory-exclusive access to the cache file; fails fast when another
/// process holds it.
class CacheLock {
 public:
  explicit CacheLock(const std::string& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw parse_error("cache: cannot open " + path);
    if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
      ::close(fd_);
      throw parse_error("cache: " + path + " is locked by another process");
    }
  }
  ~CacheLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }

 private:
  int fd_ = -1;
};

struct RunConfig {
  int digits = 50;
  std::string cache_path;
  OutputFormat format = OutputFormat::text;
  bool compare = false;
  bool full = false;
};

void apply_config_file(const std::string& path, const CLI::App& app,
                       RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw parse_error("config: invalid JSON in " + path + ": " + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "digits") {
      if (app.count("--digits") == 0) cfg.digits = value.get<int>();
    } else if (key == "cache_path") {
      if (app.count("--cache") == 0) cfg.cache_path = value.get<std::string>();
    } else if (key == "format") {
      if (app.count("--format") == 0) {
        cfg.format = output_format_from_string(value.get<std::string>());
      }
    } else {
      throw config_error("config: unknown key '" + key + "'");
    }
  }
}

/// Loads the cached table when it covers (k_max, s_max); otherwise fills and
/// stores it.
VTable obtain_vtable(const PrecisionContext& ctx, const RunConfig& cfg,
                     int k_max, int s_max, int s_hat, int target) {
  if (!cfg.cache_path.empty()) {
    CacheLock lock(cfg.cache_path);
    {
      std::ifstream in(cfg.cache_path);
      if (in && in.peek() != std::ifstream::traits_type::eof()) {
        VTable cached = load_vtable(ctx, in);
        bool ok = true;
        for (int k = 1; k <= k_max && ok; ++k) {
          for (int s = std::max(1, std::min(k, s_max)); s <= s_max; ++s) {
            if (!cached.contains({k, s}) ||
                cached.at({k, s}).digits < target - 1) {
              ok = false;
              break;
            }
          }
        }
        if (ok) return cached;
      }
    }
    VTable fresh = telescope_fill(ctx, constant(ctx, Constant::pi), k_max,
                                  s_max, s_hat, target);
    std::ofstream out(cfg.cache_path, std::ios::trunc);
    save_vtable(fresh, ctx, out);
    return fresh;
  }
  return telescope_fill(ctx, constant(ctx, Constant::pi), k_max, s_max, s_hat,
                        target);
}

void emit(const Report& report, const RunConfig& cfg) {
  std::cout << render(report, cfg.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oscint: the MRB constant and the oscillatory integral limit "
               "M_I = lim int_1^2N e^{i pi x} x^{1/x} dx"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  std::string format_name;
  app.add_option("--digits", cfg.digits, "significant decimal digits (>= 30)");
  app.add_option("--format", format_name, "text|csv|markdown|json");
  app.add_option("--cache", cfg.cache_path, "V-table cache CSV path");
  app.add_option("--config", config_path, "JSON config file");
  app.add_flag("--compare", cfg.compare,
               "add digit-agreement columns against the published values");
  app.add_flag("--full", cfg.full, "include the gated long rows");

  // mrb
  auto* mrb = app.add_subcommand("mrb", "MRB constant");
  std::string mrb_method = "cvz";
  long mrb_terms = 100;
  mrb->add_option("--method", mrb_method, "direct|euler|cvz")
      ->check(CLI::IsMember({"direct", "euler", "cvz"}));
  mrb->add_option("--terms", mrb_terms)->check(CLI::Range(2L, 1000000L));

  // mi
  auto* mi = app.add_subcommand("mi", "one M_I estimate");
  std::string mi_alg;
  int mi_n = 6, mi_m = 3, mi_bigN = 20;
  long mi_points = 64000, mi_l = 60;
  std::string mi_tau = "0.3", mi_rule = "simpson";
  mi->add_option("--alg", mi_alg, "pi|invmap|esc|longman|logexp|contour")
      ->required()
      ->check(CLI::IsMember({"pi", "invmap", "esc", "longman", "logexp",
                             "contour"}));
  mi->add_option("--n", mi_n);
  mi->add_option("--points", mi_points)->check(CLI::PositiveNumber);
  mi->add_option("--m", mi_m);
  mi->add_option("--l", mi_l)->check(CLI::PositiveNumber);
  mi->add_option("--N", mi_bigN)->check(CLI::PositiveNumber);
  mi->add_option("--tau", mi_tau);
  mi->add_option("--rule", mi_rule, "longman quadrature rule")
      ->check(CLI::IsMember({"simpson", "filon"}));

  // v
  auto* v = app.add_subcommand("v", "one V(pi,k,s) value with provenance");
  int v_k = 1, v_s = 1;
  v->add_option("--k", v_k)->required()->check(CLI::NonNegativeNumber);
  v->add_option("--s", v_s)->required()->check(CLI::PositiveNumber);

  // vtable
  auto* vt = app.add_subcommand("vtable", "fill and store a V table");
  int vt_kmax = 6, vt_smax = 8, vt_shat = 0, vt_target = 0;
  std::string vt_out;
  vt->add_option("--kmax", vt_kmax)->check(CLI::PositiveNumber);
  vt->add_option("--smax", vt_smax)->check(CLI::PositiveNumber);
  vt->add_option("--shat", vt_shat, "anchor column (default kmax+smax+1)");
  vt->add_option("--target", vt_target, "target absolute digits");
  vt->add_option("--out", vt_out, "output CSV path")->required();

  // coeffs
  auto* co = app.add_subcommand("coeffs", "dump a coefficient table as CSV");
  std::string co_kind = "alpha";
  int co_n = 6;
  co->add_option("--kind", co_kind)->check(CLI::IsMember({"alpha", "beta"}));
  co->add_option("--n", co_n)->check(CLI::Range(0, max_table_order));

  // em
  auto* em = app.add_subcommand("em", "inverse Euler-Maclaurin error profile");
  int em_dmax = 12;
  em->add_option("--dmax", em_dmax)->check(CLI::Range(8, 20));

  // table
  auto* tb = app.add_subcommand("table", "regenerate a published table");
  std::string tb_id;
  tb->add_option("--id", tb_id)->required();

  // figure
  auto* fg = app.add_subcommand("figure", "integrand samples as CSV");
  std::string fg_which = "raw", fg_from = "1", fg_to = "36", fg_step = "0.01";
  fg->add_option("--which", fg_which)->check(CLI::IsMember({"raw", "pi1"}));
  fg->add_option("--from", fg_from);
  fg->add_option("--to", fg_to);
  fg->add_option("--step", fg_step);

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) apply_config_file(config_path, app, cfg);
    if (app.count("--format")) {
      cfg.format = output_format_from_string(format_name);
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    const PrecisionContext ctx = make_context(cfg.digits);

    if (*mrb) {
      AccelMethod method = mrb_method == "direct" ? AccelMethod::direct
                           : mrb_method == "euler" ? AccelMethod::euler
                                                   : AccelMethod::cvz;
      auto r = mrb_constant(ctx, method, mrb_terms);
      Report report;
      report.header = {"method", "terms", "value"};
      report.rows = {{mrb_method, std::to_string(mrb_terms),
                      to_decimal(r.value.re, ctx.digits)}};
      report.footer = {"terms_used=" + std::to_string(r.terms_used),
                       "digits=" + std::to_string(ctx.digits)};
      emit(report, cfg);
      return 0;
    }

    if (*mi) {
      MiEstimate est;
      if (mi_alg == "pi") {
        est = mi_partial_int(ctx, mi_n, mi_points);
      } else if (mi_alg == "invmap") {
        est = mi_inverse_map(ctx, mi_n, mi_points);
      } else if (mi_alg == "esc") {
        est = mi_exp_scaling(ctx, mi_n, mi_points);
      } else if (mi_alg == "longman") {
        est = mi_longman(ctx, mi_m, mi_points, mi_l,
                         mi_rule == "filon" ? QuadratureRule::filon_simpson
                                            : QuadratureRule::simpson);
      } else if (mi_alg == "contour") {
        est = mi_contour(ctx, mi_points, mi_bigN, parse_decimal(ctx, mi_tau));
      } else {  // logexp
        const int shat = 2 * mi_n + 1;
        VTable table = obtain_vtable(ctx, cfg, mi_n, mi_n, std::max(shat, 19),
                                     std::min(ctx.digits, 22));
        auto conv = mi_log_expansion(ctx, mi_n, table);
        est = conv.rows.back();
      }
      Report report;
      report.header = {"re", "im"};
      report.rows = {{to_decimal(est.value.re, ctx.digits),
                      signed_decimal(est.value.im, ctx.digits)}};
      report.footer = {"algorithm=" + est.algorithm};
      for (const auto& [k, p] : est.params) report.footer.push_back(k + "=" + p);
      if (est.series_flag) {
        report.footer.push_back("flag=l-series head not positive-decreasing");
      }
      emit(report, cfg);
      return 0;
    }

    if (*v) {
      Complex value;
      std::string provenance;
      int digits_est = 0;
      if (v_k == 1 && v_s >= 1) {
        auto row = detail::v_row1_chain(ctx, constant(ctx, Constant::pi), v_s);
        value = row[static_cast<std::size_t>(v_s)];
        provenance = "closed";
        digits_est = ctx.digits;
      } else {
        auto r = v_numeric(ctx, constant(ctx, Constant::pi), v_k, v_s,
                           std::min(ctx.digits, 30));
        value = r.value;
        provenance = "numeric";
        digits_est = r.digits;
      }
      Report report;
      report.header = {"k", "s", "re", "im", "provenance", "digits"};
      report.rows = {{std::to_string(v_k), std::to_string(v_s),
                      to_decimal(value.re, ctx.digits),
                      signed_decimal(value.im, ctx.digits), provenance,
                      std::to_string(digits_est)}};
      emit(report, cfg);
      return 0;
    }

    if (*vt) {
      int shat = vt_shat > 0 ? vt_shat : vt_kmax + vt_smax + 1;
      VTable table =
          telescope_fill(ctx, constant(ctx, Constant::pi), vt_kmax, vt_smax,
                         shat, vt_target);
      std::ofstream out(vt_out, std::ios::trunc);
      if (!out) throw parse_error("vtable: cannot write " + vt_out);
      save_vtable(table, ctx, out);
      Report report;
      report.header = {"entries", "out"};
      report.rows = {{std::to_string(table.size()), vt_out}};
      emit(report, cfg);
      return 0;
    }

    if (*co) {
      const auto& table =
          co_kind == "alpha" ? alpha_table(co_n) : beta_table(co_n);
      Report report;
      report.header = {"r", "s", "coefficient"};
      for (const auto& [rs, c] : table.entries) {
        report.rows.push_back({std::to_string(rs.first),
                               std::to_string(rs.second), c.str()});
      }
      report.footer = {co_kind + " table, n=" + std::to_string(co_n)};
      emit(report, cfg);
      return 0;
    }

    if (*em) {
      const Complex reference = mi_exp_scaling(ctx, 6, 64000).value;
      auto profile = em_profile(ctx, em_dmax, reference);
      Report report;
      report.header = {"d", "re", "im", "abs_error"};
      for (const auto& row : profile.rows) {
        report.rows.push_back({std::to_string(row.d_max),
                               to_decimal(row.estimate.re, 20),
                               signed_decimal(row.estimate.im, 20),
                               to_decimal(row.abs_error, 4)});
      }
      report.footer = {"reference: exponential scaling n=6, s=64000"};
      emit(report, cfg);
      return 0;
    }

    if (*tb) {
      TableOptions opts;
      opts.full = cfg.full;
      opts.compare = cfg.compare;
      VTable cached;
      if ((tb_id == "tab8" || tb_id == "tabvks") && !cfg.cache_path.empty()) {
        cached = obtain_vtable(ctx, cfg, tb_id == "tab8" ? 9 : 6,
                               tb_id == "tab8" ? 9 : 8,
                               tb_id == "tab8" ? 19 : 15,
                               tb_id == "tab8" ? 22 : 26);
        opts.v_table = &cached;
      }
      emit(regenerate_table(ctx, tb_id, opts), cfg);
      return 0;
    }

    if (*fg) {
      emit(figure_data(ctx, fg_which, parse_decimal(ctx, fg_from),
                       parse_decimal(ctx, fg_to), parse_decimal(ctx, fg_step)),
           cfg);
      return 0;
    }

    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
