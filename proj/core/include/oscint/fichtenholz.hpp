#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "oscint/complex_arith.hpp"
#include "oscint/precision.hpp"

namespace oscint {

/// Index pair of V(a,k,s) = int_1^inf e^{iax} log^k(x) x^{-s} dx.
struct VKey {
  int k = 0;
  int s = 0;
  auto operator<=>(const VKey&) const = default;
};

enum class Provenance { closed, numeric, telescoped };

std::string to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

struct VEntry {
  Complex value;
  Provenance provenance = Provenance::closed;
  /// Estimated correct absolute decimal digits of the stored value.
  int digits = 0;
};

/// Single-frequency table of V(a,k,s) values.
class VTable {
 public:
  VTable() = default;
  explicit VTable(Real frequency) : a_(std::move(frequency)) {}

  const Real& frequency() const { return a_; }
  bool contains(VKey key) const { return entries_.count(key) != 0; }
  const VEntry& at(VKey key) const;
  void set(VKey key, VEntry entry) { entries_[key] = std::move(entry); }
  const std::map<VKey, VEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  Real a_{0};
  std::map<VKey, VEntry> entries_;
};

/// CSV persistence (columns k,s,re,im,provenance,digits); also the on-disk
/// cache format of the CLI.
void save_vtable(const VTable& table, const PrecisionContext& ctx,
                 std::ostream& out);
VTable load_vtable(const PrecisionContext& ctx, std::istream& in);

/// Root closed form V(a,1,1) (gamma/pi polynomial plus the entire series
/// sum (ia)^n/(n! n^2)).
Complex v_closed_11(const PrecisionContext& ctx, const Real& a);

/// Explicit closed forms for V(a,1,s), s in {2,3,4}.
Complex v_closed_1s(const PrecisionContext& ctx, const Real& a, int s);

/// Non-oscillatory value V(0,k,s) = k!/(s-1)^{k+1}; s >= 2.
Real v_zero(const PrecisionContext& ctx, int k, int s);

/// Closed form of Im V(a,2,2) = int_1^inf sin(ax) log^2 x / x^2 dx.
Real im_v22_closed(const PrecisionContext& ctx, const Real& a);

struct VNumericResult {
  Complex value;
  /// Absolute decimal digits from self-convergence doubling.
  int digits = 0;
};

/// Brute-force route at a = pi: base [1,m] by graded composite Simpson and
/// the tail by Filon-Simpson over the CVZ-accelerated half-period series,
/// m the smallest odd integer above max(3, e^{k/s}+1).  target_digits caps
/// the absolute accuracy aimed for (default: ctx.digits).
VNumericResult v_numeric(const PrecisionContext& ctx, const Real& a, int k,
                         int s, int target_digits = 0);

/// Builds the table: row k=1 from the closed-form integration chain up to
/// s_hat, anchors V(k, s_hat) from v_numeric, then the contiguous relation
///   V(a,k+1,s-1) = (i/a) [ (1+k) V(a,k,s) - (s-1) V(a,k+1,s) ]
/// telescoped backwards from s_hat.  Requires s_hat > s_max + k_max.
/// target_digits: requested absolute digits of the filled entries
/// (default ctx.digits); anchors failing the implied budget raise
/// precision_error.
VTable telescope_fill(const PrecisionContext& ctx, const Real& a, int k_max,
                      int s_max, int s_hat, int target_digits = 0);

/// |V(a,k,s) + (ia/(1+k)) V(a,k+1,s-1) - ((s-1)/(1+k)) V(a,k+1,s)|.
Real contiguous_residual(const PrecisionContext& ctx, const VTable& table,
                         int k, int s);

/// int_1^inf e^{iax} log^k(bx) x^{-s} dx by binomial expansion over the
/// table's V(a,l,s), l <= k.
Complex v_scaled(const PrecisionContext& ctx, const Real& a, const Real& b,
                 int k, int s, const VTable& table);

enum class TrigKind { sin, cos };

/// int_1^inf trig^m(ax) log^k x x^{-s} dx via Euler's formula; scaled
/// frequencies are served by the table, conjugation symmetry, and v_zero.
Complex trig_power(const PrecisionContext& ctx, const Real& a, int m, int k,
                   int s, TrigKind kind, const VTable& table);

namespace detail {
/// V(a,1,s) for s = 1..s_max from the exact integration chain
/// (index 0 unused).
std::vector<Complex> v_row1_chain(const PrecisionContext& ctx, const Real& a,
                                  int s_max);
/// Series piece of the s=1 imaginary part: int_0^1 sin(ax) log x / x dx.
Real sin_log_integral_01(const PrecisionContext& ctx, const Real& a);
}  // namespace detail

}  // namespace oscint
