#pragma once

#include <string>
#include <string_view>

#include "oscint/fichtenholz.hpp"
#include "oscint/report.hpp"

namespace oscint {

struct TableOptions {
  bool full = false;     // include the gated long rows
  bool compare = false;  // add per-row digit agreement vs the published value
  /// Prebuilt V table for tab8/tabvks (otherwise computed on the fly).
  const VTable* v_table = nullptr;
};

/// Regenerates a published table: tab1 tab2 tab3 tab4 tab5 tab6 tab8 tabvks
/// tabcont.
Report regenerate_table(const PrecisionContext& ctx, std::string_view id,
                        const TableOptions& opts = {});

/// Integrand samples for the figures: which = "raw" (e^{i pi x} x^{1/x}) or
/// "pi1" (the once-integrated-by-parts integrand).
Report figure_data(const PrecisionContext& ctx, std::string_view which,
                   const Real& from, const Real& to, const Real& step);

/// Decimal places printed by a published value (digits after '.').
int printed_decimals(std::string_view value);

/// Number of correct printed decimals of `ours` against the published
/// string, capped at the published length.
int agreement_decimals(const PrecisionContext& ctx, const Real& ours,
                       std::string_view published);

}  // namespace oscint
