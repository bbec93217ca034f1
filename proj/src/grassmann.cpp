#include "grasspi/grassmann.hpp"

#include <algorithm>
#include <sstream>

#include "grasspi/error.hpp"

namespace grasspi {

namespace {

// Dense accumulation is used when 2^bound is at most this many slots.
constexpr unsigned kDenseBound = 12;

void merge_sorted(const FieldPtr& field, std::vector<GrassmannElem::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Mask m = terms[i].first;
    Scalar c = 0;
    for (; i < terms.size() && terms[i].first == m; ++i) c = field->add(c, terms[i].second);
    if (c != 0) terms[out++] = {m, c};
  }
  terms.resize(out);
}

}  // namespace

GrassmannElem::GrassmannElem(FieldPtr field, unsigned bound) : field_(std::move(field)), bound_(bound) {
  if (bound_ > kMaxGenerators) {
    throw ConfigError("generator bound " + std::to_string(bound_) + " exceeds " +
                      std::to_string(kMaxGenerators));
  }
}

GrassmannElem GrassmannElem::scalar(FieldPtr field, unsigned bound, Scalar c) {
  return basis(std::move(field), bound, 0, c);
}

GrassmannElem GrassmannElem::generator(FieldPtr field, unsigned bound, unsigned i) {
  if (i < 1 || i > bound) throw PreconditionError("generator index outside 1..m");
  return basis(std::move(field), bound, Mask{1} << (i - 1), 1);
}

GrassmannElem GrassmannElem::basis(FieldPtr field, unsigned bound, Mask mask, Scalar c) {
  GrassmannElem g(std::move(field), bound);
  if ((mask & ~first_generators(bound)) != 0) throw PreconditionError("basis mask exceeds bound");
  if (c != 0) g.terms_.push_back({mask, c});
  return g;
}

GrassmannElem GrassmannElem::from_terms(FieldPtr field, unsigned bound, std::vector<Term> terms) {
  GrassmannElem g(std::move(field), bound);
  const Mask allowed = first_generators(bound);
  for (const auto& t : terms) {
    if ((t.first & ~allowed) != 0) throw PreconditionError("basis mask exceeds bound");
  }
  merge_sorted(g.field_, terms);
  g.terms_ = std::move(terms);
  return g;
}

Scalar GrassmannElem::coefficient(Mask mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, Mask m) { return t.first < m; });
  return (it != terms_.end() && it->first == mask) ? it->second : 0;
}

GrassmannElem GrassmannElem::with_bound(unsigned bound) const {
  for (const auto& t : terms_) {
    if ((t.first & ~first_generators(bound)) != 0) throw PreconditionError("element does not fit bound");
  }
  GrassmannElem g(field_, bound);
  g.terms_ = terms_;
  return g;
}

void GrassmannElem::check_compatible(const GrassmannElem& o) const {
  if (!same_field(*field_, *o.field_)) throw ConfigError("Grassmann elements over different fields");
}

GrassmannElem GrassmannElem::operator+(const GrassmannElem& o) const {
  check_compatible(o);
  GrassmannElem r(field_, std::max(bound_, o.bound_));
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar c = field_->add(terms_[i].second, o.terms_[j].second);
      if (c != 0) r.terms_.push_back({terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  return r;
}

GrassmannElem GrassmannElem::operator-() const {
  GrassmannElem r(field_, bound_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second = field_->neg(t.second);
  return r;
}

GrassmannElem GrassmannElem::operator-(const GrassmannElem& o) const { return *this + (-o); }

GrassmannElem GrassmannElem::scaled(Scalar c) const {
  GrassmannElem r(field_, bound_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second = field_->mul(t.second, c);
  return r;
}

GrassmannElem GrassmannElem::operator*(const GrassmannElem& o) const {
  check_compatible(o);
  const unsigned bound = std::max(bound_, o.bound_);
  GrassmannElem r(field_, bound);
  if (terms_.empty() || o.terms_.empty()) return r;
  const Field& f = *field_;

  if (bound <= kDenseBound) {
    thread_local std::vector<Scalar> acc;
    thread_local std::vector<Mask> touched;
    acc.assign(std::size_t{1} << bound, 0);
    touched.clear();
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        if (ma & mb) continue;
        Scalar c = f.mul(ca, cb);
        if (mask_product_sign(ma, mb) < 0) c = f.neg(c);
        const Mask m = ma | mb;
        if (acc[m] == 0) touched.push_back(m);
        acc[m] = f.add(acc[m], c);
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    r.terms_.reserve(touched.size());
    for (Mask m : touched) {
      if (acc[m] != 0) r.terms_.push_back({m, acc[m]});
    }
    return r;
  }

  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      if (ma & mb) continue;
      Scalar c = f.mul(ca, cb);
      if (mask_product_sign(ma, mb) < 0) c = f.neg(c);
      out.push_back({ma | mb, c});
    }
  }
  merge_sorted(field_, out);
  r.terms_ = std::move(out);
  return r;
}

GrassmannElem GrassmannElem::pow(std::uint64_t n) const {
  GrassmannElem result = scalar(field_, bound_, 1);
  GrassmannElem base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool GrassmannElem::operator==(const GrassmannElem& o) const {
  return same_field(*field_, *o.field_) && terms_ == o.terms_;
}

std::vector<unsigned> mask_indices(Mask m) {
  std::vector<unsigned> out;
  while (m) {
    out.push_back(static_cast<unsigned>(__builtin_ctzll(m)) + 1);
    m &= m - 1;
  }
  return out;
}

std::string GrassmannElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const std::string coeff = field_->format(c);
    const bool compound = coeff.find('+') != std::string::npos;
    if (m == 0) {
      out << (compound ? "(" + coeff + ")" : coeff);
      continue;
    }
    if (c != 1) out << (compound ? "(" + coeff + ")" : coeff) << '*';
    bool first_gen = true;
    for (unsigned i : mask_indices(m)) {
      if (!first_gen) out << '*';
      first_gen = false;
      out << 'e' << i;
    }
  }
  return out.str();
}

GrassmannElem commutator(const GrassmannElem& a, const GrassmannElem& b) { return a * b - b * a; }

EvenOddSplit split_even_odd(const GrassmannElem& g) {
  std::vector<GrassmannElem::Term> even, odd;
  Scalar lambda = 0;
  for (const auto& t : g.terms()) {
    if (t.first == 0) {
      lambda = t.second;
    } else if (popcount(t.first) % 2 == 0) {
      even.push_back(t);
    } else {
      odd.push_back(t);
    }
  }
  return {FieldElem(g.field(), lambda), GrassmannElem::from_terms(g.field(), g.bound(), std::move(even)),
          GrassmannElem::from_terms(g.field(), g.bound(), std::move(odd))};
}

SupportWeightDom support_weight_dom(const GrassmannElem& g) {
  Mask support = 0;
  unsigned weight = 0;
  for (const auto& t : g.terms()) {
    support |= t.first;
    weight = std::max(weight, popcount(t.first));
  }
  std::vector<GrassmannElem::Term> dom;
  for (const auto& t : g.terms()) {
    if (popcount(t.first) == weight) dom.push_back(t);
  }
  return {support, weight, GrassmannElem::from_terms(g.field(), g.bound(), std::move(dom))};
}

FieldElem proj_k(const GrassmannElem& g) { return {g.field(), g.coefficient(0)}; }

bool is_central(const GrassmannElem& g, unsigned m) {
  if (m > kMaxGenerators) throw ConfigError("generator bound exceeds maximum");
  for (const auto& t : g.terms()) {
    if ((t.first & ~first_generators(m)) != 0) throw PreconditionError("element exceeds bound m");
  }
  for (unsigned i = 1; i <= m; ++i) {
    const auto e = GrassmannElem::generator(g.field(), m, i);
    if (!(g * e == e * g)) return false;
  }
  return true;
}

namespace {

// gamma! / (gamma - j)! as an element of the prime field.
Scalar falling_factorial(const Field& f, unsigned gamma, unsigned j) {
  Scalar r = 1;
  for (unsigned i = 0; i < j; ++i) r = f.mul(r, f.from_int(gamma - i));
  return r;
}

// sum over |J| = j, J in {1..n}, of prod_{i in J} e_{2i-1} e_{2i}.
std::vector<GrassmannElem::Term> pair_subsets(unsigned n, unsigned j, Scalar c) {
  std::vector<GrassmannElem::Term> out;
  for (Mask sel = 0; sel < (Mask{1} << n); ++sel) {
    if (popcount(sel) != j) continue;
    Mask m = 0;
    for (unsigned i : mask_indices(sel)) m |= Mask{3} << (2 * (i - 1));
    out.push_back({m, c});
  }
  return out;
}

}  // namespace

DomPower dom_power_closed(const FieldElem& lambda, unsigned n, unsigned gamma, bool with_odd,
                          DomPowerFormula formula) {
  if (n + (with_odd ? 1 : 0) < 1) throw PreconditionError("dom_power_closed needs n + with_odd >= 1");
  if (gamma < 1) throw PreconditionError("dom_power_closed needs gamma >= 1");
  const FieldPtr& field = lambda.field();
  const Field& f = *field;
  const unsigned bound = 2 * n + (with_odd ? 1 : 0);
  if (bound > kMaxGenerators) throw ConfigError("dom_power_closed: too many generators");

  Scalar coeff = 0;
  std::vector<GrassmannElem::Term> terms;
  unsigned weight = 0;
  if (!with_odd || gamma <= n) {
    // All factors are commuting square-zero pairs; use as many as possible.
    const unsigned j = std::min(gamma, n);
    weight = 2 * j;
    coeff = f.mul(falling_factorial(f, gamma, j), f.pow(lambda.code(), gamma - j));
    terms = pair_subsets(n, j, coeff);
  } else {
    weight = 2 * n + 1;
    if (formula == DomPowerFormula::kExpansion) {
      coeff = f.mul(falling_factorial(f, gamma, n + 1), f.pow(lambda.code(), gamma - n - 1));
    } else {
      coeff = f.mul(falling_factorial(f, gamma, n), f.pow(lambda.code(), gamma - n));
    }
    terms.push_back({first_generators(2 * n + 1), coeff});
  }
  if (coeff == 0) return {GrassmannElem(field, bound), weight, true};
  return {GrassmannElem::from_terms(field, bound, std::move(terms)), weight, false};
}

}  // namespace grasspi
