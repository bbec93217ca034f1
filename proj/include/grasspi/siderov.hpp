#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grasspi/freealg.hpp"

namespace grasspi {

/// x_var^exponent in the beginning of an SS term.
struct BegFactor {
  Var var;
  unsigned exponent;
  auto operator<=>(const BegFactor&) const = default;
};

/// [x_first, x_second] * x_first^first_power * x_second^second_power.
struct EndBlock {
  Var first;
  Var second;
  unsigned first_power;
  unsigned second_power;
  auto operator<=>(const EndBlock&) const = default;
};

/// A structured Siderov term: an ascending power product (the beginning)
/// followed by commutator blocks whose indices ascend strictly across the
/// whole end. The variable sets of beginning and end are disjoint. The term
/// with empty beginning and end stands for the unit 1; it is not an SS term
/// proper but is admitted as the trivial tail of a canonical form.
class SSTerm {
 public:
  SSTerm() = default;
  /// Throws PreconditionError when the invariants fail.
  SSTerm(std::vector<BegFactor> beg, std::vector<EndBlock> end);

  static SSTerm unit() { return {}; }

  bool is_unit() const noexcept { return beg_.empty() && end_.empty(); }
  const std::vector<BegFactor>& beg() const noexcept { return beg_; }
  const std::vector<EndBlock>& end() const noexcept { return end_; }
  std::size_t lbeg() const noexcept { return beg_.size(); }
  std::size_t lend() const noexcept { return end_.size(); }
  unsigned degree() const noexcept;
  /// Exponent for a beginning variable; 1 + power for an end variable.
  unsigned degree_in(Var x) const noexcept;
  std::map<Var, unsigned> multidegree() const;
  bool in_beg(Var x) const noexcept;
  bool in_end(Var x) const noexcept;
  std::set<Var> variables() const;
  std::set<Var> end_variables() const;

  /// Structural order, used only for container keys.
  auto operator<=>(const SSTerm&) const = default;
  bool operator==(const SSTerm&) const = default;

 private:
  std::vector<BegFactor> beg_;
  std::vector<EndBlock> end_;
};

/// Literal expansion of the product form.
FreePoly to_poly(const SSTerm& u, const FieldPtr& field);

/// Siderov's total order: degree, then shorter end, then per-variable
/// degrees by ascending index, then beginning membership. The unit is below
/// every SS term.
std::strong_ordering siderov_compare(const SSTerm& u, const SSTerm& v);

/// Descending Siderov order as a strict weak ordering for sorting.
struct SiderovGreater {
  bool operator()(const SSTerm& a, const SSTerm& b) const { return siderov_compare(a, b) > 0; }
};

/// Beginning degrees < p, end degrees <= p.
bool is_bss(const SSTerm& u, unsigned p);

/// All SS terms over `vars` of total degree 1..max_total_degree (BSS-only on
/// request), sorted descending by siderov_compare. Throws BoundError past
/// `limit` terms.
std::vector<SSTerm> enumerate_ss(const std::vector<Var>& vars, unsigned max_total_degree, unsigned p,
                                 bool bss_only, std::size_t limit = 1'000'000);

/// e.g. "x1^2*x4*[x2,x3]*x2^2"; the unit prints as "1".
std::string format(const SSTerm& u);

}  // namespace grasspi
