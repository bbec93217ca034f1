#include "grasspi/decide.hpp"

#include <random>

#include "grasspi/error.hpp"

namespace grasspi {

std::map<Var, Scalar> WitnessMap::lambdas() const {
  std::map<Var, Scalar> out;
  for (const auto& [v, g] : images) out[v] = proj_k(g).code();
  return out;
}

GrassmannAssignment WitnessMap::assignment() const {
  GrassmannAssignment sigma(field, m);
  for (const auto& [v, g] : images) sigma.set(v, g);
  return sigma;
}

std::vector<FreePoly> t_generators(const FieldPtr& field) {
  const unsigned p = field->characteristic();
  const unsigned q = field->order();
  auto x = [&](Var i) { return FreePoly::variable(field, i); };
  if (p == 2) return {x(1).pow(2) - x(1).pow(2 * q), commutator(x(1), x(2))};
  std::vector<FreePoly> triple{x(1), x(2), x(3)};
  return {x(1).pow(q * p) - x(1).pow(p), left_normed(triple)};
}

std::vector<FreePoly> s1_generators(const FieldPtr& field, unsigned t_max) {
  const unsigned p = field->characteristic();
  if (p == 2) throw PreconditionError("s1_generators needs odd characteristic");
  auto x = [&](Var i) { return FreePoly::variable(field, i); };
  std::vector<FreePoly> out{commutator(x(1), x(2)), x(1).pow(p)};
  FreePoly g = x(1).pow(p);
  for (unsigned t = 1; t <= t_max; ++t) {
    const Var a = 2 * t;
    const Var b = 2 * t + 1;
    g = g * commutator(x(a), x(b)) * x(a).pow(p - 1) * x(b).pow(p - 1);
    out.push_back(g);
  }
  return out;
}

std::map<Var, Scalar> find_nonvanishing(const PPoly& g, const std::vector<Var>& vars, std::uint64_t seed) {
  const FieldPtr& field = g.field();
  const Scalar q = field->order();
  std::map<Var, Scalar> point;
  for (Var v : vars) point[v] = 1;
  if (g.evaluate(point) != 0) return point;

  constexpr std::size_t kExhaustive = 100'000;
  constexpr std::size_t kRandom = 1'000'000;
  std::vector<Scalar> digits(vars.size(), 0);
  for (std::size_t tried = 0; tried < kExhaustive; ++tried) {
    for (std::size_t i = 0; i < vars.size(); ++i) point[vars[i]] = digits[i];
    if (g.evaluate(point) != 0) return point;
    // Lexicographic successor, last variable fastest.
    std::size_t i = vars.size();
    while (i > 0 && ++digits[i - 1] == q) digits[--i] = 0;
    if (i == 0) throw InternalError("no nonvanishing point for " + g.format());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Scalar> any(0, q - 1);
  for (std::size_t tried = 0; tried < kRandom; ++tried) {
    for (Var v : vars) point[v] = any(rng);
    if (g.evaluate(point) != 0) return point;
  }
  throw InternalError("random search found no nonvanishing point for " + g.format());
}

Scalar witness_coefficient(const SSTerm& u, const FieldPtr& field) {
  auto factorial = [&](unsigned n) {
    Scalar r = 1;
    for (unsigned k = 2; k <= n; ++k) r = field->mul(r, field->from_int(k));
    return r;
  };
  Scalar c = field->pow(field->from_int(2), u.lend());
  for (const auto& b : u.beg()) c = field->mul(c, factorial(b.exponent));
  for (const auto& b : u.end()) {
    c = field->mul(c, factorial(b.first_power));
    c = field->mul(c, factorial(b.second_power));
  }
  return c;
}

namespace {

Scalar lambda_of(const std::map<Var, Scalar>& lambda, Var v) {
  auto it = lambda.find(v);
  return it == lambda.end() ? 0 : it->second;
}

// lambda + [e_{N+2a-1}] + sum_{e<=pairs} e_{N+2e-1} e_{N+2e}
GrassmannElem block_image(const FieldPtr& field, unsigned m, Scalar lambda, unsigned offset, unsigned pairs,
                          bool odd_after) {
  std::vector<GrassmannElem::Term> terms{{0, lambda}};
  for (unsigned e = 1; e <= pairs; ++e) terms.push_back({Mask{3} << (offset + 2 * e - 2), 1});
  if (odd_after) terms.push_back({Mask{1} << (offset + 2 * pairs), 1});
  return GrassmannElem::from_terms(field, m, std::move(terms));
}

void add_outside(WitnessMap& w, const SSTerm& u, const std::map<Var, Scalar>& lambda) {
  for (const auto& [v, l] : lambda) {
    if (u.degree_in(v) == 0) w.images.insert_or_assign(v, GrassmannElem::scalar(w.field, w.m, l));
  }
}

}  // namespace

WitnessMap witness_identity(const SSTerm& u, const std::map<Var, Scalar>& lambda, const FieldPtr& field) {
  const unsigned p = field->characteristic();
  if (u.is_unit() || !is_bss(u, p)) throw PreconditionError("witness_identity needs a BSS term");
  WitnessMap w;
  w.field = field;
  w.m = 2 * u.degree() - 2 * static_cast<unsigned>(u.lend());
  if (w.m > kMaxGenerators) throw BoundError("witness_identity: more than 64 generators needed");
  unsigned offset = 0;
  for (const auto& b : u.beg()) {
    w.images.insert_or_assign(b.var, block_image(field, w.m, lambda_of(lambda, b.var), offset, b.exponent, false));
    offset += 2 * b.exponent;
  }
  for (Var v : u.end_variables()) {
    const unsigned d = u.degree_in(v);
    w.images.insert_or_assign(v, block_image(field, w.m, lambda_of(lambda, v), offset, d - 1, true));
    offset += 2 * d - 1;
  }
  add_outside(w, u, lambda);
  return w;
}

WitnessMap witness_central(const SSTerm& u, Var t, const std::map<Var, Scalar>& lambda, const FieldPtr& field) {
  const unsigned p = field->characteristic();
  if (u.is_unit() || !is_bss(u, p)) throw PreconditionError("witness_central needs a BSS term");
  if (!u.in_beg(t)) throw PreconditionError("witness_central: x" + std::to_string(t) + " is not in the beginning");
  WitnessMap w;
  w.field = field;
  w.m = 2 * u.degree() - 2 * static_cast<unsigned>(u.lend()) - 1;
  if (w.m > kMaxGenerators) throw BoundError("witness_central: more than 64 generators needed");
  unsigned offset = 0;
  for (const auto& b : u.beg()) {
    const Scalar l = lambda_of(lambda, b.var);
    if (b.var == t) {
      w.images.insert_or_assign(b.var, block_image(field, w.m, l, offset, b.exponent - 1, true));
      offset += 2 * b.exponent - 1;
    } else {
      w.images.insert_or_assign(b.var, block_image(field, w.m, l, offset, b.exponent, false));
      offset += 2 * b.exponent;
    }
  }
  for (Var v : u.end_variables()) {
    const unsigned d = u.degree_in(v);
    w.images.insert_or_assign(v, block_image(field, w.m, lambda_of(lambda, v), offset, d - 1, true));
    offset += 2 * d - 1;
  }
  add_outside(w, u, lambda);
  return w;
}

Verdict t_membership(const FreePoly& f, std::uint64_t seed) {
  const FieldPtr& field = f.field();
  Verdict v;
  v.canonical = canonicalize(f);
  const CanonicalForm& form = *v.canonical;
  v.route = "canonical-form";
  if (form.empty()) return v;
  v.membership = Membership::kNonMember;

  const CanonicalComponent& top = form.components.front();
  WitnessMap w;
  if (top.tail.is_unit()) {
    // Only f_0 survives: a nonzero p-polynomial is not an identity of k.
    v.route = "scalar-search";
    const auto vars = top.coefficient.variables();
    const auto point = find_nonvanishing(top.coefficient, {vars.begin(), vars.end()}, seed);
    w.field = field;
    w.m = 1;
    for (const auto& [x, l] : point) w.images.insert_or_assign(x, GrassmannElem::scalar(field, 1, l));
  } else {
    v.route = "identity-witness";
    const auto vars = top.coefficient.variables();
    const auto point = find_nonvanishing(top.coefficient, {vars.begin(), vars.end()}, seed);
    w = witness_identity(top.tail, point, field);
  }
  GrassmannElem value = evaluate(f, w.assignment());
  if (value.is_zero()) throw InternalError("t_membership: witness evaluates to zero on " + form.format());
  if (!top.tail.is_unit() && support_weight_dom(value).weight != w.m) {
    throw InternalError("t_membership: witness value has weight below m on " + form.format());
  }
  v.witness = std::move(w);
  v.value = std::move(value);
  return v;
}

namespace {

// Refutes centrality from the greatest tail with a nonempty beginning: the
// odd-weight substitution for that tail, plus fresh -> e_{m+1}.
std::optional<std::pair<WitnessMap, GrassmannElem>> central_witness(const FreePoly& f, const CanonicalForm& form,
                                                                     Var fresh, std::uint64_t seed) {
  const FieldPtr& field = f.field();
  for (const auto& comp : form.components) {
    if (comp.tail.lbeg() == 0) continue;
    const auto coeff_vars = comp.coefficient.variables();
    auto point = find_nonvanishing(comp.coefficient, {coeff_vars.begin(), coeff_vars.end()}, seed);
    for (Var x : comp.tail.variables()) point.try_emplace(x, 0);
    for (const auto& b : comp.tail.beg()) {
      WitnessMap w = witness_central(comp.tail, b.var, point, field);
      const unsigned m = w.m + 1;
      for (auto& [x, g] : w.images) g = g.with_bound(m);
      w.m = m;
      w.images.insert_or_assign(fresh, GrassmannElem::generator(field, m, m));
      const auto sigma = w.assignment();
      GrassmannElem value = commutator(evaluate(f, sigma), sigma.image(fresh));
      if (!value.is_zero()) return std::make_pair(std::move(w), std::move(value));
    }
    break;
  }
  return std::nullopt;
}

}  // namespace

Verdict cp_membership(const FreePoly& f, std::uint64_t seed) {
  const FieldPtr& field = f.field();
  Verdict v;
  if (field->characteristic() == 2) {
    v.route = "characteristic-2";
    return v;
  }
  const Var fresh = f.max_variable() + 1;
  v.fresh = fresh;
  const FreePoly g = commutator(f, FreePoly::variable(field, fresh));
  Verdict inner = t_membership(g, seed);
  v.canonical = canonicalize(f);
  if (inner.member()) {
    v.route = "fresh-commutator";
    return v;
  }
  v.membership = Membership::kNonMember;
  if (auto found = central_witness(f, *v.canonical, fresh, seed)) {
    v.route = "central-witness";
    v.witness = std::move(found->first);
    v.value = std::move(found->second);
    return v;
  }
  v.route = "fresh-commutator-witness";
  v.witness = std::move(inner.witness);
  v.value = std::move(inner.value);
  return v;
}

Verdict one_var_check(const FreePoly& f) {
  const FieldPtr& field = f.field();
  const auto vars = f.variables();
  if (vars.size() > 1) throw PreconditionError("one_var_check needs a polynomial in one variable");
  const Var x = vars.empty() ? 1 : *vars.begin();
  const unsigned p = field->characteristic();
  const unsigned qp = p * field->order();

  unsigned top = 0;
  for (const auto& [w, c] : f.terms()) top = std::max<unsigned>(top, static_cast<unsigned>(w.size()));
  std::vector<Scalar> coeff(top + 1, 0);
  for (const auto& [w, c] : f.terms()) coeff[w.size()] = c;
  std::vector<Scalar> quotient(top + 1, 0);
  for (unsigned k = top + 1; k-- > qp;) {
    const Scalar c = coeff[k];
    if (c == 0) continue;
    quotient[k - qp] = field->add(quotient[k - qp], c);
    coeff[k - qp + p] = field->add(coeff[k - qp + p], c);
    coeff[k] = 0;
  }

  Verdict v;
  v.route = "division";
  FreePoly remainder(field);
  FreePoly quot(field);
  for (unsigned k = 0; k <= top; ++k) {
    remainder.add_term(Word(k, x), coeff[k]);
    quot.add_term(Word(k, x), quotient[k]);
  }
  if (remainder.is_zero()) {
    v.quotient = std::move(quot);
    return v;
  }
  v.membership = Membership::kNonMember;
  std::vector<Scalar> lambdas{1, 0};
  for (Scalar l = 2; l < field->order(); ++l) lambdas.push_back(l);
  for (unsigned r = 0; r < p; ++r) {
    const unsigned m = std::max(1u, 2 * r);
    for (Scalar l : lambdas) {
      WitnessMap w;
      w.field = field;
      w.m = m;
      w.images.insert_or_assign(x, block_image(field, m, l, 0, r, false));
      GrassmannElem value = evaluate(f, w.assignment());
      if (!value.is_zero()) {
        v.witness = std::move(w);
        v.value = std::move(value);
        return v;
      }
    }
  }
  throw InternalError("one_var_check: no witness for a non-multiple of x^{qp} - x^p");
}

}  // namespace grasspi
