#include "grasspi/canonical.hpp"

#include <algorithm>
#include <sstream>

#include "grasspi/error.hpp"

namespace grasspi {

Scalar SSCombination::coefficient(const SSTerm& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? 0 : it->second;
}

void SSCombination::add_term(const SSTerm& u, Scalar c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(u, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

FreePoly SSCombination::to_poly() const {
  FreePoly out(field_);
  for (const auto& [u, c] : terms_) out += grasspi::to_poly(u, field_).scaled(c);
  return out;
}

bool PPoly::is_scalar() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void PPoly::add_term(const PowerProduct& m, Scalar c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::set<Var> PPoly::variables() const {
  std::set<Var> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m) out.insert(v);
  }
  return out;
}

Scalar PPoly::evaluate(const std::map<Var, Scalar>& point) const {
  Scalar total = 0;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      t = field_->mul(t, field_->pow(it == point.end() ? 0 : it->second, e));
    }
    total = field_->add(total, t);
  }
  return total;
}

namespace {

Word power_word(const PowerProduct& m) {
  Word w;
  for (const auto& [v, e] : m) w.insert(w.end(), e, v);
  return w;
}

std::string power_string(const PowerProduct& m) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : m) {
    if (!first) out << '*';
    first = false;
    out << 'x' << v;
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

unsigned power_degree(const PowerProduct& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

}  // namespace

FreePoly PPoly::to_poly() const {
  FreePoly out(field_);
  for (const auto& [m, c] : terms_) out.add_term(power_word(m), c);
  return out;
}

std::string PPoly::format() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const PowerProduct, Scalar>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return power_degree(a->first) > power_degree(b->first);
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    if (!first) out << " + ";
    first = false;
    if (t->first.empty()) {
      out << field_->format(t->second);
    } else {
      if (t->second != 1) out << field_->format_factor(t->second) << '*';
      out << power_string(t->first);
    }
  }
  return out.str();
}

FreePoly CanonicalForm::to_poly(const FieldPtr& field) const {
  FreePoly out(field);
  for (const auto& comp : components) out += comp.coefficient.to_poly() * grasspi::to_poly(comp.tail, field);
  return out;
}

std::string CanonicalForm::format() const {
  if (components.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& comp : components) {
    if (!first) out << " + ";
    first = false;
    const auto& coeff = comp.coefficient;
    const auto& field = coeff.field();
    if (comp.tail.is_unit()) {
      out << (coeff.terms().size() > 1 ? "(" + coeff.format() + ")" : coeff.format());
      continue;
    }
    if (coeff.terms().size() > 1) {
      out << '(' << coeff.format() << ")*";
    } else {
      const auto& [m, c] = *coeff.terms().begin();
      if (c != 1) out << field->format_factor(c) << '*';
      if (!m.empty()) out << power_string(m) << '*';
    }
    out << grasspi::format(comp.tail);
  }
  return out.str();
}

namespace {

// x^M * C_S over local variable indices: M is the exponent of every
// variable, S the (even) set of variables carrying a commutator. C_S is the
// product of [x_a, x_b] over consecutive pairs of S in ascending order.
// Modulo T^(3) commutators are central and their products alternate in all
// indices, so every reduced element is a combination of such keys.
struct NFKey {
  std::vector<unsigned> exps;
  Mask set;
  auto operator<=>(const NFKey&) const = default;
};

using NFMap = std::map<NFKey, Scalar>;

void nf_add(const Field& field, NFMap& map, NFKey key, Scalar c) {
  if (c == 0) return;
  auto [it, inserted] = map.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second = field.add(it->second, c);
    if (it->second == 0) map.erase(it);
  }
}

// Right multiplication by x_i. Moving x_i leftwards past x_j^{m_j} (j > i)
// leaves x_j^{m_j} x_i = x_i x_j^{m_j} - m_j x_j^{m_j - 1} [x_i, x_j].
NFMap nf_times(const Field& field, const NFMap& in, std::size_t i) {
  NFMap out;
  const std::size_t n = in.empty() ? 0 : in.begin()->first.exps.size();
  for (const auto& [key, c] : in) {
    NFKey moved = key;
    ++moved.exps[i];
    nf_add(field, out, std::move(moved), c);
    const Mask bit_i = Mask{1} << i;
    if (key.set & bit_i) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mask bit_j = Mask{1} << j;
      if (key.exps[j] == 0 || (key.set & bit_j)) continue;
      // [x_i, x_j] C_S = (-1)^(|S below i| + |S below j|) C_{S+{i,j}}
      const unsigned below = popcount(key.set & (bit_i - 1)) + popcount(key.set & (bit_j - 1));
      Scalar coeff = field.mul(c, field.from_int(key.exps[j]));
      if (below % 2 == 0) coeff = field.neg(coeff);
      NFKey comm = key;
      --comm.exps[j];
      comm.set |= bit_i | bit_j;
      nf_add(field, out, std::move(comm), coeff);
    }
  }
  return out;
}

SSTerm nf_to_ss(const NFKey& key, const std::vector<Var>& vars) {
  std::vector<BegFactor> beg;
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (key.set & (Mask{1} << i)) {
      ends.push_back(i);
    } else if (key.exps[i] > 0) {
      beg.push_back({vars[i], key.exps[i]});
    }
  }
  std::vector<EndBlock> end;
  for (std::size_t r = 0; r + 1 < ends.size(); r += 2) {
    end.push_back({vars[ends[r]], vars[ends[r + 1]], key.exps[ends[r]], key.exps[ends[r + 1]]});
  }
  return SSTerm(std::move(beg), std::move(end));
}

}  // namespace

SSCombination straighten(const FreePoly& f) {
  const FieldPtr& field = f.field();
  SSCombination out(field);
  const auto var_set = f.variables();
  const std::vector<Var> vars(var_set.begin(), var_set.end());
  if (vars.size() > kMaxGenerators) throw BoundError("straighten: more than 64 variables");
  std::map<Var, std::size_t> local;
  for (std::size_t i = 0; i < vars.size(); ++i) local[vars[i]] = i;

  if (field->characteristic() == 2) {
    for (const auto& [w, c] : f.terms()) {
      std::vector<BegFactor> beg;
      for (const auto& [v, e] : word_multidegree(w)) beg.push_back({v, e});
      out.add_term(SSTerm(std::move(beg), {}), c);
    }
    return out;
  }

  NFMap total;
  for (const auto& [w, c] : f.terms()) {
    NFMap acc;
    acc.emplace(NFKey{std::vector<unsigned>(vars.size(), 0), 0}, c);
    for (Var v : w) {
      acc = nf_times(*field, acc, local[v]);
      if (acc.empty()) break;
    }
    for (auto& [key, a] : acc) nf_add(*field, total, key, a);
  }
  for (const auto& [key, c] : total) out.add_term(nf_to_ss(key, vars), c);
  return out;
}

namespace {

unsigned reduce_exponent(unsigned g, unsigned p, unsigned q) {
  const unsigned qp = q * p;
  const unsigned step = (q - 1) * p;
  if (g < qp) return g;
  return g - ((g - qp) / step + 1) * step;
}

}  // namespace

SSCombination reduce_high_exponents(const SSCombination& c) {
  const unsigned p = c.field()->characteristic();
  const unsigned q = c.field()->order();
  SSCombination out(c.field());
  for (const auto& [u, a] : c.terms()) {
    std::vector<BegFactor> beg = u.beg();
    for (auto& b : beg) b.exponent = reduce_exponent(b.exponent, p, q);
    std::vector<EndBlock> end = u.end();
    for (auto& b : end) {
      b.first_power = reduce_exponent(b.first_power, p, q);
      b.second_power = reduce_exponent(b.second_power, p, q);
    }
    out.add_term(SSTerm(std::move(beg), std::move(end)), a);
  }
  return out;
}

CanonicalForm factor_canonical(const SSCombination& c) {
  const unsigned p = c.field()->characteristic();
  const unsigned q = c.field()->order();
  const unsigned qp = p * q;
  CanonicalForm form;
  form.p = p;
  form.q = q;
  std::map<SSTerm, PPoly> groups;
  for (const auto& [u, a] : c.terms()) {
    PowerProduct coeff;
    std::vector<BegFactor> beg;
    for (const auto& b : u.beg()) {
      if (b.exponent >= qp) throw PreconditionError("factor_canonical: beginning exponent >= qp");
      const unsigned high = b.exponent - b.exponent % p;
      if (high > 0) coeff[b.var] = high;
      if (b.exponent % p > 0) beg.push_back({b.var, b.exponent % p});
    }
    std::vector<EndBlock> end;
    auto split_end = [&](Var x, unsigned power) {
      if (power >= qp) throw PreconditionError("factor_canonical: end power >= qp");
      const unsigned d = power + 1;
      const unsigned keep = d % p == 0 ? p : d % p;
      if (d > keep) coeff[x] = d - keep;
      return keep - 1;
    };
    for (const auto& b : u.end()) {
      end.push_back({b.first, b.second, split_end(b.first, b.first_power), split_end(b.second, b.second_power)});
    }
    SSTerm tail(std::move(beg), std::move(end));
    if (!tail.is_unit() && !is_bss(tail, p)) throw InternalError("factor_canonical produced a non-BSS tail");
    groups.try_emplace(tail, c.field()).first->second.add_term(coeff, a);
  }
  for (auto& [tail, coeff] : groups) {
    if (!coeff.is_zero()) form.components.push_back({std::move(coeff), tail});
  }
  std::sort(form.components.begin(), form.components.end(), [](const auto& a, const auto& b) {
    if (a.tail.is_unit() || b.tail.is_unit()) return b.tail.is_unit() && !a.tail.is_unit();
    return siderov_compare(a.tail, b.tail) > 0;
  });
  return form;
}

CanonicalForm canonicalize(const FreePoly& f) { return factor_canonical(reduce_high_exponents(straighten(f))); }

bool is_p_polynomial(const FreePoly& f) {
  const unsigned p = f.field()->characteristic();
  const unsigned qp = p * f.field()->order();
  for (const auto& [w, c] : f.terms()) {
    if (!std::is_sorted(w.begin(), w.end())) return false;
    for (const auto& [v, e] : word_multidegree(w)) {
      if (e % p != 0 || e >= qp) return false;
    }
  }
  return true;
}

std::vector<RewriteRule> rewrite_rules(const FieldPtr& field) {
  auto x = [&](Var i) { return FreePoly::variable(field, i); };
  auto com = [](const FreePoly& a, const FreePoly& b) { return commutator(a, b); };
  std::vector<RewriteRule> rules;
  rules.push_back({"R1", "x2*x1 -> x1*x2 - [x1,x2]", x(2) * x(1) - x(1) * x(2) + com(x(1), x(2)), true});
  rules.push_back({"R2", "[x1,x2*x3] -> [x1,x2]*x3 + x2*[x1,x3]",
                   com(x(1), x(2) * x(3)) - com(x(1), x(2)) * x(3) - x(2) * com(x(1), x(3)), true});
  for (unsigned n = 2; n <= 3; ++n) {
    rules.push_back({"R2", "[x1^" + std::to_string(n) + ",x2] -> " + std::to_string(n) + "*x1" +
                               (n > 2 ? "^" + std::to_string(n - 1) : std::string()) + "*[x1,x2]",
                     com(x(1).pow(n), x(2)) - (x(1).pow(n - 1) * com(x(1), x(2))).scaled(field->from_int(n)),
                     false});
  }
  rules.push_back({"R3", "[x1,x2]*x3 -> x3*[x1,x2]", com(x(1), x(2)) * x(3) - x(3) * com(x(1), x(2)), false});
  rules.push_back({"R3", "x1*[x1,x2] -> [x1,x2]*x1", x(1) * com(x(1), x(2)) - com(x(1), x(2)) * x(1), false});
  rules.push_back({"R4", "[x1,x3]*[x2,x4] -> -[x1,x2]*[x3,x4]",
                   com(x(1), x(2)) * com(x(3), x(4)) + com(x(1), x(3)) * com(x(2), x(4)), false});
  rules.push_back({"R4", "[x3,x4]*[x1,x2] -> [x1,x2]*[x3,x4]",
                   com(x(1), x(2)) * com(x(3), x(4)) - com(x(3), x(4)) * com(x(1), x(2)), false});
  rules.push_back({"R4", "[x1,x4]*[x2,x3] -> [x1,x2]*[x3,x4]",
                   com(x(1), x(4)) * com(x(2), x(3)) - com(x(1), x(2)) * com(x(3), x(4)), false});
  rules.push_back({"R4", "[x1,x2]*[x1,x3] -> 0", com(x(1), x(2)) * com(x(1), x(3)), false});
  rules.push_back({"R4", "[x1,x2]*[x3,x2] -> 0", com(x(1), x(2)) * com(x(3), x(2)), false});
  rules.push_back({"R4", "[x1,x2]*[x2,x3] -> 0", com(x(1), x(2)) * com(x(2), x(3)), false});
  rules.push_back({"R4", "[x1,x2]^2 -> 0", com(x(1), x(2)).pow(2), false});
  rules.push_back({"R5", "[x2,x1] -> -[x1,x2]", com(x(2), x(1)) + com(x(1), x(2)), true});
  rules.push_back({"R5", "[x1,x1] -> 0", com(x(1), x(1)), true});
  return rules;
}

}  // namespace grasspi
