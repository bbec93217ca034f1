#include "grasspi/freealg.hpp"

#include <algorithm>

#include "grasspi/error.hpp"

namespace grasspi {

FreePoly FreePoly::variable(FieldPtr field, Var i) {
  if (i < 1) throw PreconditionError("variable indices start at 1");
  return monomial(std::move(field), Word{i}, 1);
}

FreePoly FreePoly::scalar(FieldPtr field, Scalar c) { return monomial(std::move(field), Word{}, c); }

FreePoly FreePoly::monomial(FieldPtr field, Word w, Scalar c) {
  for (Var v : w) {
    if (v < 1) throw PreconditionError("variable indices start at 1");
  }
  FreePoly f(std::move(field));
  if (c != 0) f.terms_.emplace(std::move(w), c);
  return f;
}

Scalar FreePoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void FreePoly::add_term(const Word& w, Scalar c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void FreePoly::check_compatible(const FreePoly& o) const {
  if (!same_field(*field_, *o.field_)) throw ConfigError("polynomials over different fields");
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, field_->neg(c));
  return *this;
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
  FreePoly r = *this;
  r += o;
  return r;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
  FreePoly r = *this;
  r -= o;
  return r;
}

FreePoly FreePoly::operator-() const { return scaled(field_->neg(1)); }

FreePoly FreePoly::scaled(Scalar c) const {
  FreePoly r(field_);
  if (c == 0) return r;
  for (const auto& [w, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, field_->mul(a, c));
  return r;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
  check_compatible(o);
  FreePoly r(field_);
  Word w;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      w.assign(a.begin(), a.end());
      w.insert(w.end(), b.begin(), b.end());
      r.add_term(w, field_->mul(ca, cb));
    }
  }
  return r;
}

FreePoly FreePoly::pow(unsigned n) const {
  FreePoly r = scalar(field_, 1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::set<Var> FreePoly::variables() const {
  std::set<Var> out;
  for (const auto& [w, c] : terms_) out.insert(w.begin(), w.end());
  return out;
}

Var FreePoly::max_variable() const {
  Var m = 0;
  for (const auto& [w, c] : terms_) {
    for (Var v : w) m = std::max(m, v);
  }
  return m;
}

FreePoly commutator(const FreePoly& f, const FreePoly& g) { return f * g - g * f; }

FreePoly left_normed(std::span<const FreePoly> fs) {
  if (fs.empty()) throw PreconditionError("left_normed needs at least one argument");
  FreePoly r = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) r = commutator(r, fs[i]);
  return r;
}

GrassmannAssignment::GrassmannAssignment(FieldPtr field, unsigned bound)
    : field_(field), bound_(bound), default_(GrassmannElem(field, bound)) {}

void GrassmannAssignment::set(Var i, GrassmannElem image) {
  if (!same_field(*image.field(), *field_)) throw ConfigError("image over a different field");
  if (image.bound() > bound_) {
    throw ConfigError("image bound " + std::to_string(image.bound()) + " exceeds assignment bound " +
                      std::to_string(bound_));
  }
  images_.insert_or_assign(i, image.with_bound(bound_));
}

void GrassmannAssignment::set_default(GrassmannElem image) {
  if (!same_field(*image.field(), *field_)) throw ConfigError("image over a different field");
  if (image.bound() > bound_) throw ConfigError("default image exceeds assignment bound");
  default_ = image.with_bound(bound_);
}

const GrassmannElem& GrassmannAssignment::image(Var i) const {
  auto it = images_.find(i);
  return it == images_.end() ? default_ : it->second;
}

GrassmannElem evaluate(const FreePoly& f, const GrassmannAssignment& sigma) {
  if (!same_field(*f.field(), *sigma.field())) throw ConfigError("evaluation over a different field");
  const FieldPtr& field = f.field();
  const unsigned m = sigma.bound();
  GrassmannElem result(field, m);
  if (f.is_zero()) return result;

  // Walk words in lexicographic order so shared prefixes are multiplied once.
  std::vector<const std::pair<const Word, Scalar>*> order;
  order.reserve(f.size());
  for (const auto& t : f.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->first < b->first; });

  std::vector<GrassmannElem> prefix;
  prefix.push_back(GrassmannElem::scalar(field, m, 1));
  const Word* prev = nullptr;
  std::vector<GrassmannElem::Term> acc;
  for (const auto* t : order) {
    const Word& w = t->first;
    std::size_t common = 0;
    if (prev) {
      while (common < w.size() && common < prev->size() && w[common] == (*prev)[common]) ++common;
    }
    prefix.erase(prefix.begin() + static_cast<std::ptrdiff_t>(common + 1), prefix.end());
    for (std::size_t i = common; i < w.size(); ++i) {
      if (prefix.back().is_zero()) {
        prefix.push_back(prefix.back());
      } else {
        prefix.push_back(prefix.back() * sigma.image(w[i]));
      }
    }
    for (const auto& term : prefix.back().terms()) {
      acc.push_back({term.first, field->mul(term.second, t->second)});
    }
    prev = &w;
  }
  return GrassmannElem::from_terms(field, m, std::move(acc));
}

FreePoly substitute(const FreePoly& f, const std::map<Var, FreePoly>& tau) {
  for (const auto& [v, g] : tau) {
    if (!same_field(*g.field(), *f.field())) throw ConfigError("substitution over a different field");
  }
  FreePoly result(f.field());
  for (const auto& [w, c] : f.terms()) {
    FreePoly term = FreePoly::scalar(f.field(), c);
    for (Var v : w) {
      auto it = tau.find(v);
      term = term * (it == tau.end() ? FreePoly::variable(f.field(), v) : it->second);
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

std::map<Var, unsigned> word_multidegree(const Word& w) {
  std::map<Var, unsigned> out;
  for (Var v : w) ++out[v];
  return out;
}

DegreeSummary degrees(const FreePoly& f) {
  if (f.is_zero()) throw DomainError("degree of the zero polynomial");
  DegreeSummary s{0, {}, true, true};
  std::optional<std::set<Var>> vars;
  for (const auto& [w, c] : f.terms()) {
    s.total_degree = std::max<unsigned>(s.total_degree, static_cast<unsigned>(w.size()));
    auto md = word_multidegree(w);
    if (!s.word_degrees.empty() && md != s.word_degrees.front()) s.multihomogeneous = false;
    std::set<Var> these(w.begin(), w.end());
    if (vars && *vars != these) s.essential = false;
    if (!vars) vars = std::move(these);
    s.word_degrees.push_back(std::move(md));
  }
  return s;
}

unsigned total_degree(const FreePoly& f) { return degrees(f).total_degree; }

unsigned degree_in(const FreePoly& f, Var x) {
  if (f.is_zero()) throw DomainError("degree of the zero polynomial");
  unsigned d = 0;
  for (const auto& [w, c] : f.terms()) {
    d = std::max<unsigned>(d, static_cast<unsigned>(std::count(w.begin(), w.end(), x)));
  }
  return d;
}

bool is_essential(const FreePoly& f) { return degrees(f).essential; }

}  // namespace grasspi
