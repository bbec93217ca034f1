#include "grasspi/siderov.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "grasspi/error.hpp"

namespace grasspi {

SSTerm::SSTerm(std::vector<BegFactor> beg, std::vector<EndBlock> end)
    : beg_(std::move(beg)), end_(std::move(end)) {
  for (std::size_t r = 0; r < beg_.size(); ++r) {
    if (beg_[r].var < 1) throw PreconditionError("SS term: variable index must be >= 1");
    if (beg_[r].exponent < 1) throw PreconditionError("SS term: beginning exponent must be >= 1");
    if (r > 0 && beg_[r - 1].var >= beg_[r].var) {
      throw PreconditionError("SS term: beginning variables must ascend strictly");
    }
  }
  Var last = 0;
  for (const auto& b : end_) {
    if (b.first < 1) throw PreconditionError("SS term: variable index must be >= 1");
    if (!(last < b.first && b.first < b.second)) {
      throw PreconditionError("SS term: end indices must ascend strictly across all blocks");
    }
    last = b.second;
    if (in_beg(b.first) || in_beg(b.second)) {
      throw PreconditionError("SS term: beginning and end variables must be disjoint");
    }
  }
}

unsigned SSTerm::degree() const noexcept {
  unsigned d = 0;
  for (const auto& f : beg_) d += f.exponent;
  for (const auto& b : end_) d += 2 + b.first_power + b.second_power;
  return d;
}

unsigned SSTerm::degree_in(Var x) const noexcept {
  for (const auto& f : beg_) {
    if (f.var == x) return f.exponent;
  }
  for (const auto& b : end_) {
    if (b.first == x) return 1 + b.first_power;
    if (b.second == x) return 1 + b.second_power;
  }
  return 0;
}

std::map<Var, unsigned> SSTerm::multidegree() const {
  std::map<Var, unsigned> md;
  for (const auto& f : beg_) md[f.var] = f.exponent;
  for (const auto& b : end_) {
    md[b.first] = 1 + b.first_power;
    md[b.second] = 1 + b.second_power;
  }
  return md;
}

bool SSTerm::in_beg(Var x) const noexcept {
  return std::any_of(beg_.begin(), beg_.end(), [x](const BegFactor& f) { return f.var == x; });
}

bool SSTerm::in_end(Var x) const noexcept {
  return std::any_of(end_.begin(), end_.end(),
                     [x](const EndBlock& b) { return b.first == x || b.second == x; });
}

std::set<Var> SSTerm::variables() const {
  std::set<Var> out = end_variables();
  for (const auto& f : beg_) out.insert(f.var);
  return out;
}

std::set<Var> SSTerm::end_variables() const {
  std::set<Var> out;
  for (const auto& b : end_) {
    out.insert(b.first);
    out.insert(b.second);
  }
  return out;
}

FreePoly to_poly(const SSTerm& u, const FieldPtr& field) {
  Word beg;
  for (const auto& f : u.beg()) beg.insert(beg.end(), f.exponent, f.var);
  FreePoly result = FreePoly::monomial(field, beg);
  for (const auto& b : u.end()) {
    FreePoly block = commutator(FreePoly::variable(field, b.first), FreePoly::variable(field, b.second));
    Word tail(b.first_power, b.first);
    tail.insert(tail.end(), b.second_power, b.second);
    result = result * block * FreePoly::monomial(field, tail);
  }
  return result;
}

std::strong_ordering siderov_compare(const SSTerm& u, const SSTerm& v) {
  if (u == v) return std::strong_ordering::equal;
  // (i)
  if (auto c = u.degree() <=> v.degree(); c != 0) return c;
  // (ii): the shorter end is greater.
  if (auto c = v.lend() <=> u.lend(); c != 0) return c;
  // (iii)
  const auto du = u.multidegree();
  const auto dv = v.multidegree();
  std::set<Var> vars;
  for (const auto& [x, d] : du) vars.insert(x);
  for (const auto& [x, d] : dv) vars.insert(x);
  for (Var x : vars) {
    auto iu = du.find(x);
    auto iv = dv.find(x);
    const unsigned a = iu == du.end() ? 0 : iu->second;
    const unsigned b = iv == dv.end() ? 0 : iv->second;
    if (a != b) return a <=> b;
  }
  // (iv)
  auto clause_iv = [&vars](const SSTerm& a, const SSTerm& b) {
    for (Var j : vars) {
      if (!(a.in_beg(j) && b.in_end(j))) continue;
      bool agree = true;
      for (Var k : vars) {
        if (k > j && a.in_beg(k) != b.in_beg(k)) {
          agree = false;
          break;
        }
      }
      if (agree) return true;
    }
    return false;
  };
  if (clause_iv(u, v)) return std::strong_ordering::greater;
  if (clause_iv(v, u)) return std::strong_ordering::less;
  throw InternalError("Siderov order: distinct terms " + format(u) + " and " + format(v) +
                      " are incomparable");
}

bool is_bss(const SSTerm& u, unsigned p) {
  for (const auto& f : u.beg()) {
    if (f.exponent >= p) return false;
  }
  for (const auto& b : u.end()) {
    if (1 + b.first_power > p || 1 + b.second_power > p) return false;
  }
  return true;
}

std::vector<SSTerm> enumerate_ss(const std::vector<Var>& vars_in, unsigned max_total_degree, unsigned p,
                                 bool bss_only, std::size_t limit) {
  std::vector<Var> vars(vars_in);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() > 30) throw BoundError("enumerate_ss: too many variables");
  std::vector<SSTerm> out;
  std::vector<unsigned> deg(vars.size(), 0);

  auto emit = [&]() {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (deg[i] > 0) support.push_back(i);
    }
    const std::size_t n = support.size();
    for (std::uint32_t sel = 0; sel < (1u << n); ++sel) {
      if (__builtin_popcount(sel) % 2 != 0) continue;
      std::vector<BegFactor> beg;
      std::vector<std::size_t> ends;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = support[k];
        if (sel & (1u << k)) {
          ends.push_back(i);
        } else {
          beg.push_back({vars[i], deg[i]});
        }
      }
      std::vector<EndBlock> end;
      for (std::size_t r = 0; r + 1 < ends.size(); r += 2) {
        end.push_back({vars[ends[r]], vars[ends[r + 1]], deg[ends[r]] - 1, deg[ends[r + 1]] - 1});
      }
      SSTerm u(std::move(beg), std::move(end));
      if (bss_only && !is_bss(u, p)) continue;
      if (out.size() >= limit) throw BoundError("enumerate_ss: more than " + std::to_string(limit) + " terms");
      out.push_back(std::move(u));
    }
  };

  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned remaining) {
    if (i == vars.size()) {
      if (remaining < max_total_degree) emit();
      return;
    }
    for (unsigned d = 0; d <= remaining; ++d) {
      deg[i] = d;
      rec(i + 1, remaining - d);
    }
    deg[i] = 0;
  };
  if (!vars.empty() && max_total_degree > 0) rec(0, max_total_degree);
  std::sort(out.begin(), out.end(), SiderovGreater{});
  return out;
}

namespace {

void append_power(std::ostringstream& out, bool& first, Var x, unsigned e) {
  if (e == 0) return;
  if (!first) out << '*';
  first = false;
  out << 'x' << x;
  if (e > 1) out << '^' << e;
}

}  // namespace

std::string format(const SSTerm& u) {
  if (u.is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& f : u.beg()) append_power(out, first, f.var, f.exponent);
  for (const auto& b : u.end()) {
    if (!first) out << '*';
    first = false;
    out << "[x" << b.first << ",x" << b.second << ']';
    append_power(out, first, b.first, b.first_power);
    append_power(out, first, b.second, b.second_power);
  }
  return out.str();
}

}  // namespace grasspi
