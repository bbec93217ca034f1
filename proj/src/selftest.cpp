#include "grasspi/selftest.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "grasspi/canonical.hpp"
#include "grasspi/decide.hpp"
#include "grasspi/error.hpp"
#include "grasspi/oracle.hpp"
#include "grasspi/text.hpp"

namespace grasspi {

namespace {

class Ctx {
 public:
  Ctx(CriterionResult& r, bool full) : r_(r), full_(full) {}

  bool full() const { return full_; }
  std::size_t n(std::size_t full_count, std::size_t quick_count) const { return full_ ? full_count : quick_count; }

  bool check(bool ok, const std::function<std::string()>& what) {
    ++r_.checks;
    if (!ok && r_.failure.empty()) r_.failure = what();
    return ok;
  }
  void log(std::string line) { r_.log.push_back(std::move(line)); }
  bool failed() const { return !r_.failure.empty(); }

 private:
  CriterionResult& r_;
  bool full_;
};

FreePoly var(const FieldPtr& field, Var i) { return FreePoly::variable(field, i); }

Scalar random_nonzero(const FieldPtr& field, Rng& rng) {
  return std::uniform_int_distribution<Scalar>(1, field->order() - 1)(rng);
}

Word random_word(Rng& rng, Var max_var, unsigned len) {
  std::uniform_int_distribution<Var> pick(1, max_var);
  Word w(len);
  for (auto& v : w) v = pick(rng);
  return w;
}

FreePoly random_poly(const FieldPtr& field, Rng& rng, Var max_var, unsigned max_deg, unsigned max_terms,
                     unsigned min_deg = 0) {
  FreePoly f(field);
  const unsigned terms = std::uniform_int_distribution<unsigned>(1, max_terms)(rng);
  std::uniform_int_distribution<unsigned> len(min_deg, max_deg);
  for (unsigned t = 0; t < terms; ++t) f.add_term(random_word(rng, max_var, len(rng)), random_nonzero(field, rng));
  return f;
}

// Pure-parity element without scalar part, using only generators in `allowed`.
GrassmannElem random_parity(const FieldPtr& field, unsigned m, Rng& rng, bool odd, Mask allowed) {
  std::vector<unsigned> bits = mask_indices(allowed);
  std::vector<GrassmannElem::Term> terms;
  const unsigned min_w = odd ? 1 : 2;
  if (bits.size() >= min_w) {
    const unsigned count = std::uniform_int_distribution<unsigned>(1, 4)(rng);
    for (unsigned t = 0; t < count; ++t) {
      unsigned w = std::uniform_int_distribution<unsigned>(min_w, std::min<unsigned>(static_cast<unsigned>(bits.size()), min_w + 2))(rng);
      if ((w % 2 == 1) != odd) --w;
      std::shuffle(bits.begin(), bits.end(), rng);
      Mask mask = 0;
      for (unsigned i = 0; i < w; ++i) mask |= Mask{1} << (bits[i] - 1);
      terms.push_back({mask, random_nonzero(field, rng)});
    }
  }
  return GrassmannElem::from_terms(field, m, std::move(terms));
}

GrassmannElem without_scalar(const GrassmannElem& g) {
  std::vector<GrassmannElem::Term> terms;
  for (const auto& t : g.terms()) {
    if (t.first != 0) terms.push_back(t);
  }
  return GrassmannElem::from_terms(g.field(), g.bound(), std::move(terms));
}

GrassmannElem unit(const FieldPtr& field, unsigned m) { return GrassmannElem::scalar(field, m, 1); }

std::string str(const GrassmannElem& g) { return g.to_string(); }

// 1. Grassmann kernel.
void grassmann_kernel(Ctx& cx, Rng& rng) {
  {
    auto f3 = Field::prime(3);
    const unsigned m = 6;
    std::vector<GrassmannElem> basis;
    for (Mask a = 0; a < 64; ++a) basis.push_back(GrassmannElem::basis(f3, m, a));
    for (Mask a = 0; a < 64; ++a) {
      for (Mask b = 0; b < 64; ++b) {
        const GrassmannElem ab = basis[a] * basis[b];
        for (Mask c = 0; c < 64; ++c) {
          cx.check(ab * basis[c] == basis[a] * (basis[b] * basis[c]),
                   [&] { return "associativity fails on basis masks " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c); });
        }
        if (popcount(a) % 2 == 1 && popcount(b) % 2 == 1) {
          cx.check(ab == -(basis[b] * basis[a]), [&] { return "odd basis elements fail to anticommute"; });
        }
      }
      if (popcount(a) % 2 == 1) cx.check((basis[a] * basis[a]).is_zero(), [&] { return "odd basis square is nonzero"; });
    }
    for (unsigned i = 1; i <= m; ++i) {
      for (unsigned j = 1; j <= m; ++j) {
        const auto ei = GrassmannElem::generator(f3, m, i);
        const auto ej = GrassmannElem::generator(f3, m, j);
        if (i == j) {
          cx.check((ei * ej).is_zero(), [&] { return "e_i^2 != 0"; });
        } else {
          cx.check(ei * ej == -(ej * ei), [&] { return "e_i e_j != -e_j e_i"; });
        }
      }
    }
  }

  const std::size_t reps = cx.n(100, 10);
  std::size_t random_checks = 0;
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    auto field = Field::of_order(q);
    const unsigned p = field->characteristic();
    for (unsigned m : {4u, 6u, 8u, 10u}) {
      const Mask all = first_generators(m);
      const Mask low = first_generators(m / 2);
      const Mask high = all & ~low;
      for (std::size_t rep = 0; rep < reps; ++rep) {
        // Associativity and distributivity on full random elements.
        const auto a = random_element(field, m, rng);
        const auto b = random_element(field, m, rng);
        const auto c = random_element(field, m, rng);
        cx.check((a * b) * c == a * (b * c), [&] { return "associativity fails for random elements"; });
        cx.check(a * (b + c) == a * b + a * c, [&] { return "distributivity fails for random elements"; });

        // Odd elements anticommute and square to zero.
        const auto h = random_parity(field, m, rng, true, all);
        const auto u = random_parity(field, m, rng, true, all);
        cx.check(h * u == -(u * h), [&] { return "odd elements fail to anticommute: " + str(h) + " / " + str(u); });
        if (p > 2) cx.check((h * h).is_zero(), [&] { return "odd square nonzero: " + str(h); });

        // Powers of c + h.
        const auto ce = random_parity(field, m, rng, false, all);
        const auto g = ce + h;
        GrassmannElem cpow = unit(field, m);  // c^{n-1}
        GrassmannElem gpow = unit(field, m);
        for (unsigned k = 1; k <= 6; ++k) {
          gpow = gpow * g;
          const GrassmannElem expected = cpow * ce + (cpow * h).scaled(field->from_int(k));
          cx.check(gpow == expected, [&] { return "(c+h)^" + std::to_string(k) + " mismatch for " + str(g); });
          cpow = cpow * ce;
        }

        // p-th powers.
        const auto g0 = without_scalar(random_element(field, m, rng));
        cx.check(g0.pow(p).is_zero(), [&] { return "g^p != 0 for " + str(g0); });
        const Scalar alpha = std::uniform_int_distribution<Scalar>(0, q - 1)(rng);
        const auto shifted = GrassmannElem::scalar(field, m, alpha) + g0;
        cx.check(shifted.pow(p) == GrassmannElem::scalar(field, m, field->pow(alpha, p)),
                 [&] { return "(alpha+g)^p != alpha^p for " + str(shifted); });

        // Commutator times powers, with disjoint and with shared supports.
        const bool disjoint = rep % 2 == 0;
        const auto c1 = random_parity(field, m, rng, false, disjoint ? low : all);
        const auto h1 = random_parity(field, m, rng, true, disjoint ? low : all);
        const auto c2 = random_parity(field, m, rng, false, disjoint ? high : all);
        const auto h2 = random_parity(field, m, rng, true, disjoint ? high : all);
        const auto g1 = c1 + h1;
        const auto g2 = c2 + h2;
        const unsigned m1 = static_cast<unsigned>(rep % 4);
        const unsigned m2 = static_cast<unsigned>((rep / 4) % 4);
        const auto lhs = commutator(g1, g2) * g1.pow(m1) * g2.pow(m2);
        const auto rhs = (c1.pow(m1) * c2.pow(m2) * h1 * h2).scaled(field->from_int(2));
        cx.check(lhs == rhs, [&] { return "commutator power identity fails for " + str(g1) + " / " + str(g2); });

        // Nilpotency index bound.
        const auto w = without_scalar(random_element(field, m, rng));
        cx.check(w.pow(w.terms().size() + 1).is_zero(), [&] { return "u^{n+1} != 0 for " + str(w); });

        // Dominant parts multiply across disjoint supports.
        const auto d1 = random_element(field, m, rng);
        const auto d2 = random_element(field, m, rng);
        std::vector<GrassmannElem::Term> t1, t2;
        for (const auto& t : d1.terms()) {
          if ((t.first & high) == 0) t1.push_back(t);
        }
        for (const auto& t : d2.terms()) {
          if ((t.first & low) == 0) t2.push_back(t);
        }
        const auto s1 = GrassmannElem::from_terms(field, m, t1);
        const auto s2 = GrassmannElem::from_terms(field, m, t2);
        if (!s1.is_zero() && !s2.is_zero()) {
          const auto a1 = support_weight_dom(s1);
          const auto a2 = support_weight_dom(s2);
          const auto a12 = support_weight_dom(s1 * s2);
          cx.check(a12.weight == a1.weight + a2.weight && a12.dom == a1.dom * a2.dom,
                   [&] { return "dominant part not multiplicative on disjoint supports"; });
        }
        random_checks += 16;
      }
    }
  }
  cx.log("random property checks: " + std::to_string(random_checks));
  if (cx.full()) cx.check(random_checks >= 10'000, [&] { return "fewer than 10^4 random checks"; });
}

// 2. Closed forms for the dominant part of powers.
void dominant_powers(Ctx& cx) {
  std::size_t flagged = 0;
  std::size_t total = 0;
  std::string first_flag;
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    auto field = Field::of_order(q);
    for (Scalar l = 0; l < q; ++l) {
      const FieldElem lambda(field, l);
      for (unsigned n = 0; n <= 3; ++n) {
        for (bool odd : {false, true}) {
          if (n == 0 && !odd) continue;
          for (unsigned gamma = 1; gamma <= 6; ++gamma) {
            ++total;
            const auto closed = dom_power_closed(lambda, n, gamma, odd);
            const auto brute = brute_dom_power(lambda, n, gamma, odd);
            auto where = [&] {
              std::ostringstream o;
              o << "q=" << q << " lambda=" << field->format(l) << " n=" << n << " gamma=" << gamma
                << " odd=" << odd;
              return o.str();
            };
            cx.check(closed.nominal_weight == brute.nominal_weight, [&] { return "nominal weight differs at " + where(); });
            cx.check(closed.part == brute.nominal, [&] {
              return "closed form " + str(closed.part) + " != expansion " + str(brute.nominal) + " at " + where();
            });
            cx.check(closed.vanishes == brute.nominal.is_zero(), [&] { return "vanishing flag wrong at " + where(); });
            if (!closed.vanishes) {
              cx.check(brute.dom_weight == closed.nominal_weight && brute.dom == closed.part,
                       [&] { return "dominant part is not at the nominal weight at " + where(); });
            }
            const auto printed = dom_power_closed(lambda, n, gamma, odd, DomPowerFormula::kAsPrinted);
            if (!(printed.part == brute.nominal)) {
              ++flagged;
              if (first_flag.empty()) first_flag = where();
              cx.check(odd && gamma > n, [&] { return "printed formula disagrees outside the odd gamma>n branch at " + where(); });
            }
          }
        }
      }
    }
  }
  cx.log("parameter points compared: " + std::to_string(total));
  cx.log("FLAG: printed coefficient gamma!/(gamma-n)! lambda^(gamma-n) for the odd branch with gamma > n "
         "disagrees with direct expansion at " + std::to_string(flagged) + " points (first: " + first_flag +
         "); expansion gives gamma!/(gamma-n-1)! lambda^(gamma-n-1)");
  cx.check(flagged > 0, [&] { return "the printed odd-branch formula was expected to be flagged"; });
}

// 3. The one-variable identity x^{qp} - x^p.
void one_variable(Ctx& cx, Rng& rng, std::uint64_t seed) {
  const std::pair<unsigned, unsigned> params[] = {{3, 3}, {3, 9}, {2, 2}, {2, 4}, {5, 5}};
  for (const auto& [p, q] : params) {
    auto field = Field::of_order(q);
    const FreePoly x = var(field, 1);
    const FreePoly rel = x.pow(q * p) - x.pow(p);
    const auto battery = eval_battery(rel, 8, cx.n(1000, 100), seed);
    cx.check(battery.all_zero, [&] { return "x^{qp}-x^p nonzero in G(8) for q=" + std::to_string(q); });

    auto random_univariate = [&](unsigned max_deg, unsigned terms) {
      FreePoly g(field);
      for (unsigned t = 0; t < terms; ++t) {
        g.add_term(Word(std::uniform_int_distribution<unsigned>(0, max_deg)(rng), 1), random_nonzero(field, rng));
      }
      return g;
    };
    const std::size_t reps = cx.n(100, 10);
    for (std::size_t i = 0; i < reps; ++i) {
      FreePoly g = random_univariate(4, 3);
      if (g.is_zero()) g = FreePoly::scalar(field, 1);
      const FreePoly multiple = g * rel;
      const Verdict v = one_var_check(multiple);
      cx.check(v.member() && v.quotient && *v.quotient == g,
               [&] { return "multiple of x^{qp}-x^p not certified: " + format_poly(multiple); });

      FreePoly r(field);
      while (r.is_zero()) r = random_univariate(q * p - 1, 4);
      const FreePoly non = r + random_univariate(3, 2) * rel;
      const Verdict w = one_var_check(non);
      const bool ok = !w.member() && w.witness && w.value && !w.value->is_zero() &&
                      evaluate(non, w.witness->assignment()) == *w.value;
      cx.check(ok, [&] { return "non-multiple not refuted: " + format_poly(non); });
    }
  }
}

// 4. Straightening is sound and the rewrite rules are certified.
void straightening(Ctx& cx, Rng& rng, std::uint64_t seed) {
  auto f3 = Field::prime(3);
  const std::size_t polys = cx.n(500, 40);
  const std::size_t trials = cx.n(200, 40);
  for (std::size_t i = 0; i < polys; ++i) {
    const FreePoly f = random_poly(f3, rng, 3, 5, 6);
    const SSCombination s = straighten(f);
    const SSCombination r = reduce_high_exponents(s);
    const CanonicalForm c = factor_canonical(r);
    const FreePoly sp = s.to_poly();
    const FreePoly rp = r.to_poly();
    const FreePoly stages[] = {sp - f, rp - sp, c.to_poly(f3) - rp};
    for (int k = 0; k < 3; ++k) {
      if (stages[k].is_zero()) continue;
      const auto b = eval_battery(stages[k], 8, trials, seed + i);
      cx.check(b.all_zero, [&] { return "stage " + std::to_string(k + 1) + " changes the value of " + format_poly(f); });
    }
    cx.check(canonicalize(c.to_poly(f3)) == c, [&] { return "pipeline not idempotent on " + format_poly(f); });
  }

  std::size_t certified = 0;
  std::vector<FreePoly> triple{var(f3, 1), var(f3, 2), var(f3, 3)};
  const FreePoly t3 = left_normed(triple);
  for (const auto& rule : rewrite_rules(f3)) {
    if (rule.literal) {
      cx.check(rule.relation.is_zero(), [&] { return "literal rule is not an identity: " + rule.name; });
      continue;
    }
    SpanProblem prob{rule.relation, {{t3, Closure::kTIdeal}}};
    const auto res = bounded_span_member(prob);
    cx.check(res.member, [&] { return "rule not certified in T^(3): " + rule.name; });
    if (res.member) ++certified;
    cx.log(rule.family + " " + rule.name + ": " + (res.member ? "certified" : "NOT certified") +
           " (pool " + std::to_string(res.pool_size) + ", instances " + std::to_string(res.instances) +
           ", rank " + std::to_string(res.rank) + "/" + std::to_string(res.columns) + ")");
  }
  cx.log("non-literal rules certified: " + std::to_string(certified));
}

struct Tally {
  std::size_t member = 0;
  std::size_t nonmember = 0;
  std::size_t constructed = 0;
  std::size_t within_degree_6 = 0;
};

void check_verdict(Ctx& cx, const FreePoly& f, bool constructed, Tally& tally, std::uint64_t seed) {
  const Verdict v = t_membership(f, seed);
  if (f.is_zero() || total_degree(f) <= 6) ++tally.within_degree_6;
  if (constructed) {
    ++tally.constructed;
    cx.check(v.member(), [&] { return "constructed identity judged NonMember: " + format_poly(f); });
  }
  if (v.member()) {
    ++tally.member;
    const auto b = eval_battery(f, 8, 200, seed);
    cx.check(b.all_zero, [&] { return "Member verdict but nonzero evaluation: " + format_poly(f); });
  } else {
    ++tally.nonmember;
    const bool ok = v.witness && v.value && !v.value->is_zero() && evaluate(f, v.witness->assignment()) == *v.value;
    cx.check(ok, [&] { return "NonMember witness does not reproduce a nonzero value: " + format_poly(f); });
  }
}

// 5. Identity decisions against independent evidence.
void identity_crosscheck(Ctx& cx, Rng& rng, std::uint64_t seed) {
  {
    auto f3 = Field::prime(3);
    Tally tally;
    const std::size_t reps = cx.n(70, 10);
    const FreePoly x = var(f3, 1);
    const FreePoly power = x.pow(9) - x.pow(3);
    for (std::size_t i = 0; i < reps; ++i) {
      // a [s1,s2,s3] b with every s_i of degree <= 2, total degree <= 6.
      std::vector<FreePoly> s;
      for (int k = 0; k < 3; ++k) s.push_back(random_poly(f3, rng, 3, 2, 2));
      FreePoly inst = left_normed(s);
      if (inst.is_zero()) inst = left_normed(std::vector<FreePoly>{var(f3, 1), var(f3, 2), var(f3, 3)});
      const unsigned used = total_degree(inst);
      const unsigned room = used < 6 ? 6 - used : 0;
      const unsigned la = std::uniform_int_distribution<unsigned>(0, room)(rng);
      const unsigned lb = std::uniform_int_distribution<unsigned>(0, room - la)(rng);
      const FreePoly a = FreePoly::monomial(f3, random_word(rng, 3, la), random_nonzero(f3, rng));
      const FreePoly b = FreePoly::monomial(f3, random_word(rng, 3, lb));
      const FreePoly member = a * inst * b;
      check_verdict(cx, member, true, tally, seed + i);
      // Perturbation by a random term of degree <= 6.
      check_verdict(cx, member + random_poly(f3, rng, 3, 6, 2), false, tally, seed + i);
      if (i % 3 == 0) {
        std::map<Var, FreePoly> tau{{1, random_poly(f3, rng, 3, 1, 2)}};
        const FreePoly pinst = substitute(power, tau) * FreePoly::monomial(f3, random_word(rng, 3, 1));
        check_verdict(cx, pinst, true, tally, seed + i);
        check_verdict(cx, member + pinst, true, tally, seed + i);
      }
      check_verdict(cx, random_poly(f3, rng, 3, 6, 4), false, tally, seed + i);
    }
    cx.log("p=3 q=3: " + std::to_string(tally.member + tally.nonmember) + " polynomials, " +
           std::to_string(tally.constructed) + " constructed identities, " + std::to_string(tally.member) +
           " Member, " + std::to_string(tally.nonmember) + " NonMember, " + std::to_string(tally.within_degree_6) +
           " of degree <= 6");
    if (cx.full()) {
      cx.check(tally.within_degree_6 >= 200, [&] { return "fewer than 200 polynomials of degree <= 6 at p=3"; });
    }
  }
  for (unsigned q : {2u, 4u}) {
    auto field = Field::of_order(q);
    Tally tally;
    const std::size_t reps = cx.n(60, 8);
    const FreePoly x = var(field, 1);
    const FreePoly power = x.pow(2) - x.pow(2 * q);
    for (std::size_t i = 0; i < reps; ++i) {
      const FreePoly inst = commutator(random_poly(field, rng, 3, 2, 2), random_poly(field, rng, 3, 2, 2));
      const FreePoly a = FreePoly::monomial(field, random_word(rng, 3, 1), random_nonzero(field, rng));
      const FreePoly member = a * inst * FreePoly::monomial(field, random_word(rng, 3, 1));
      check_verdict(cx, member, true, tally, seed + i);
      check_verdict(cx, member + random_poly(field, rng, 3, 6, 2), false, tally, seed + i);
      std::map<Var, FreePoly> tau{{1, random_poly(field, rng, 3, 1, 2)}};
      check_verdict(cx, substitute(power, tau) * FreePoly::monomial(field, random_word(rng, 3, 1)), true, tally,
                    seed + i);
      check_verdict(cx, random_poly(field, rng, 3, 6, 3), false, tally, seed + i);
    }
    cx.log("p=2 q=" + std::to_string(q) + ": " + std::to_string(tally.member + tally.nonmember) + " polynomials, " +
           std::to_string(tally.member) + " Member, " + std::to_string(tally.nonmember) + " NonMember");
  }
}

std::map<Var, Scalar> constant_lambda(const SSTerm& u, Scalar l) {
  std::map<Var, Scalar> out;
  for (Var v : u.variables()) out[v] = l;
  return out;
}

// 6. Weights of the identity witness.
void identity_witness(Ctx& cx, Rng& rng) {
  auto f3 = Field::prime(3);
  const auto terms = enumerate_ss({1, 2, 3}, cx.full() ? 4 : 3, 3, true);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const SSTerm& u = terms[i];
    const FreePoly up = to_poly(u, f3);
    std::vector<std::map<Var, Scalar>> lambdas{constant_lambda(u, 0), constant_lambda(u, 1)};
    std::map<Var, Scalar> rnd;
    for (Var v : u.variables()) rnd[v] = std::uniform_int_distribution<Scalar>(0, 2)(rng);
    lambdas.push_back(rnd);
    for (const auto& lambda : lambdas) {
      const WitnessMap w = witness_identity(u, lambda, f3);
      const auto sigma = w.assignment();
      const auto swd = support_weight_dom(evaluate(up, sigma));
      const auto expected = GrassmannElem::basis(f3, w.m, first_generators(w.m), witness_coefficient(u, f3));
      cx.check(w.m == 2 * u.degree() - 2 * u.lend() && swd.weight == w.m && swd.dom == expected,
               [&] { return "dominant part of the witness value is wrong for " + format(u); });
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        const auto wv = support_weight_dom(evaluate(to_poly(terms[j], f3), sigma)).weight;
        ++pairs;
        cx.check(wv < w.m, [&] { return "weight separation fails: " + format(u) + " > " + format(terms[j]); });
      }
    }
  }
  cx.log("BSS terms: " + std::to_string(terms.size()) + ", separation pairs checked: " + std::to_string(pairs));
}

// 7. Central polynomials.
void central(Ctx& cx, Rng& rng, std::uint64_t seed) {
  auto f3 = Field::prime(3);
  const auto gens = s1_generators(f3, 3);
  const std::size_t instances = cx.n(50, 5);
  const std::size_t trials = cx.n(200, 20);
  for (const auto& s : gens) {
    cx.check(cp_membership(s, seed).member(), [&] { return "S1 generator not central: " + format_poly(s); });
    const auto vars = s.variables();
    for (std::size_t i = 0; i < instances; ++i) {
      std::map<Var, FreePoly> tau;
      for (Var v : vars) {
        if (vars.size() <= 3) {
          tau.emplace(v, random_poly(f3, rng, 4, 2, 2));
        } else {
          const unsigned len = std::uniform_int_distribution<unsigned>(1, 2)(rng);
          tau.emplace(v, FreePoly::monomial(f3, random_word(rng, 4, len), random_nonzero(f3, rng)));
        }
      }
      const FreePoly inst = substitute(s, tau);
      cx.check(cp_membership(inst, seed).member(), [&] { return "S1 instance not central: " + format_poly(inst); });
      for (std::size_t t = 0; t < trials; ++t) {
        const auto sigma = random_assignment(f3, inst.variables(), 8, rng);
        const auto r = random_element(f3, 8, rng);
        if (!commutator(evaluate(inst, sigma), r).is_zero()) {
          cx.check(false, [&] { return "S1 instance has a non-central value: " + format_poly(inst); });
          break;
        }
      }
    }
  }

  const auto terms = enumerate_ss({1, 2, 3}, cx.full() ? 5 : 3, 3, true);
  std::size_t refuted = 0;
  std::map<std::string, std::size_t> routes;
  std::size_t lambda_checks = 0;
  std::size_t no_factor = 0;
  std::size_t with_factor = 0;
  std::set<unsigned> alphas;
  for (const SSTerm& u : terms) {
    if (u.lbeg() == 0) continue;
    const FreePoly up = to_poly(u, f3);
    const Verdict v = cp_membership(up, seed);
    ++refuted;
    ++routes[v.route];
    bool ok = !v.member() && v.witness && v.value && v.fresh;
    if (ok) {
      const auto sigma = v.witness->assignment();
      const auto val = evaluate(up, sigma);
      const auto comm = commutator(val, sigma.image(*v.fresh));
      ok = !comm.is_zero() && comm == *v.value && support_weight_dom(val).weight % 2 == 1;
    }
    cx.check(ok, [&] { return "BSS term with a beginning was not refuted with an odd witness: " + format(u); });

    // Does the dominant coefficient carry a factor lambda_t?
    const auto& head = u.beg().front();
    alphas.insert(head.exponent);
    for (Scalar lt = 0; lt < 3; ++lt) {
      auto lambda = constant_lambda(u, 1);
      lambda[head.var] = lt;
      const WitnessMap w = witness_central(u, head.var, lambda, f3);
      const auto val = evaluate(up, w.assignment());
      const Scalar c = val.coefficient(first_generators(w.m));
      const Scalar k = witness_coefficient(u, f3);
      ++lambda_checks;
      if (c == k) ++no_factor;
      if (c == f3->mul(lt, k)) ++with_factor;
      cx.check(w.m % 2 == 1 && support_weight_dom(val).weight == w.m && c == k,
               [&] { return "odd witness dominant part unexpected for " + format(u); });
    }
  }
  std::ostringstream r;
  for (const auto& [name, count] : routes) r << ' ' << name << '=' << count;
  cx.log("BSS terms with a beginning refuted: " + std::to_string(refuted) + " (routes:" + r.str() + ")");
  std::ostringstream a;
  for (unsigned x : alphas) a << ' ' << x;
  cx.log("lambda_t question: dominant coefficient equals 2^lend*prod(alpha!)*prod(beta!) with no lambda_t factor in " +
         std::to_string(no_factor) + "/" + std::to_string(lambda_checks) +
         " evaluations (lambda_t in {0,1,2}, alpha in {" + a.str() + " }); the lambda_t-scaled form holds in " +
         std::to_string(with_factor) + " of them, exactly those with lambda_t = 1");
}

// 8. SS terms whose beginning degrees are multiples of p lie in S1 + T^(3).
void p_power_beginnings(Ctx& cx) {
  auto f3 = Field::prime(3);
  const auto s1 = s1_generators(f3, 1);
  std::vector<FreePoly> triple{var(f3, 1), var(f3, 2), var(f3, 3)};
  std::vector<SpanGenerator> gens;
  for (const auto& g : s1) gens.push_back({g, Closure::kTSpace});
  gens.push_back({left_normed(triple), Closure::kTIdeal});

  const auto terms = enumerate_ss({1, 2, 3}, cx.full() ? 6 : 4, 3, false);
  std::size_t tested = 0;
  std::size_t pool_min = SIZE_MAX, pool_max = 0, inst_max = 0;
  for (const SSTerm& u : terms) {
    if (u.lbeg() == 0) continue;
    if (!std::all_of(u.beg().begin(), u.beg().end(), [](const BegFactor& b) { return b.exponent % 3 == 0; })) continue;
    SpanProblem prob{to_poly(u, f3), gens};
    prob.pool_max_degree = 0;
    const auto res = bounded_span_member(prob);
    ++tested;
    pool_min = std::min(pool_min, res.pool_size);
    pool_max = std::max(pool_max, res.pool_size);
    inst_max = std::max(inst_max, res.instances);
    cx.check(res.member, [&] { return "not found in S1 + T^(3) within bounds: " + format(u); });
    if (cx.full()) {
      cx.log(format(u) + ": " + (res.member ? "Yes" : "NoWithinBounds") + " pool " + std::to_string(res.pool_size) +
             " instances " + std::to_string(res.instances) + " rank " + std::to_string(res.rank) + "/" +
             std::to_string(res.columns));
    }
  }
  cx.log("terms tested: " + std::to_string(tested) + ", pool sizes " + std::to_string(pool_min) + ".." +
         std::to_string(pool_max) + ", max instances " + std::to_string(inst_max));
}

// 9. Field identities and p-polynomials.
void field_identities(Ctx& cx, Rng& rng, std::uint64_t seed) {
  for (unsigned q : {3u, 4u}) {
    auto field = Field::of_order(q);
    std::vector<Word> monos;
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) {
        Word w(a, 1);
        w.insert(w.end(), b, 2);
        monos.push_back(w);
      }
    }
    auto test = [&](const std::vector<Scalar>& coeffs) {
      FreePoly f(field);
      for (std::size_t i = 0; i < monos.size(); ++i) f.add_term(monos[i], coeffs[i]);
      if (f.is_zero()) return;
      const auto r = field_identity_bruteforce(f);
      cx.check(!r.zero && r.value != 0, [&] { return "nonzero reduced polynomial vanishes on k^2: " + format_poly(f); });
    };
    std::vector<Scalar> coeffs(monos.size(), 0);
    if (q == 3 && cx.full()) {
      std::size_t count = 0;
      while (true) {
        std::size_t i = 0;
        while (i < coeffs.size() && ++coeffs[i] == q) coeffs[i++] = 0;
        if (i == coeffs.size()) break;
        test(coeffs);
        ++count;
      }
      cx.log("q=3: all " + std::to_string(count) + " nonzero reduced polynomials in 2 variables checked");
    } else {
      const std::size_t samples = cx.n(2000, 200);
      for (std::size_t s = 0; s < samples; ++s) {
        for (auto& c : coeffs) c = std::uniform_int_distribution<Scalar>(0, q - 1)(rng);
        test(coeffs);
      }
      cx.log("q=" + std::to_string(q) + ": " + std::to_string(samples) + " sampled reduced polynomials checked");
    }
  }

  auto f3 = Field::prime(3);
  std::vector<Word> pmonos;
  for (unsigned a = 0; a < 9; a += 3) {
    for (unsigned b = 0; b < 9; b += 3) {
      for (unsigned c = 0; c < 9; c += 3) {
        Word w(a, 1);
        w.insert(w.end(), b, 2);
        w.insert(w.end(), c, 3);
        pmonos.push_back(w);
      }
    }
  }
  auto refute = [&](const FreePoly& f) {
    cx.check(is_p_polynomial(f), [&] { return "not a p-polynomial: " + format_poly(f); });
    const Verdict v = t_membership(f, seed);
    const bool ok = !v.member() && v.route == "scalar-search" && v.witness && v.value && !v.value->is_zero() &&
                    evaluate(f, v.witness->assignment()) == *v.value;
    cx.check(ok, [&] { return "nonzero p-polynomial not refuted by scalars: " + format_poly(f); });
  };
  for (const auto& w : pmonos) refute(FreePoly::monomial(f3, w, 2));
  const std::size_t samples = cx.n(2000, 200);
  for (std::size_t s = 0; s < samples; ++s) {
    FreePoly f(f3);
    const unsigned terms = std::uniform_int_distribution<unsigned>(1, 6)(rng);
    for (unsigned t = 0; t < terms; ++t) {
      f.add_term(pmonos[std::uniform_int_distribution<std::size_t>(0, pmonos.size() - 1)(rng)], random_nonzero(f3, rng));
    }
    if (!f.is_zero()) refute(f);
  }
  cx.log("p-polynomials refuted: " + std::to_string(pmonos.size() + samples) + " (monomials plus samples)");
}

struct CriterionInfo {
  const char* title;
  double limit;
};

const CriterionInfo kCriteria[] = {
    {"Grassmann kernel and element identities", 30},
    {"closed forms for dominant parts of powers", 60},
    {"one-variable identity x^{qp}-x^p and division check", 60},
    {"straightening soundness and rule certification", 300},
    {"identity decisions against independent evidence", 600},
    {"identity witness weights and separation", 300},
    {"central polynomial decisions and odd witnesses", 600},
    {"p-power beginnings lie in S1 + T^(3)", 600},
    {"field identities and p-polynomials", 120},
};

}  // namespace

CriterionResult run_criterion(int id, SelftestLevel level, std::uint64_t seed) {
  if (id < 1 || id > 9) throw PreconditionError("criterion ids are 1..9");
  CriterionResult r;
  r.id = id;
  r.title = kCriteria[id - 1].title;
  r.limit_seconds = kCriteria[id - 1].limit;
  Ctx cx(r, level == SelftestLevel::kFull);
  Rng rng(seed * 1000003u + static_cast<unsigned>(id));
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: grassmann_kernel(cx, rng); break;
      case 2: dominant_powers(cx); break;
      case 3: one_variable(cx, rng, seed); break;
      case 4: straightening(cx, rng, seed); break;
      case 5: identity_crosscheck(cx, rng, seed); break;
      case 6: identity_witness(cx, rng); break;
      case 7: central(cx, rng, seed); break;
      case 8: p_power_beginnings(cx); break;
      case 9: field_identities(cx, rng, seed); break;
    }
  } catch (const std::exception& e) {
    if (r.failure.empty()) r.failure = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.failure.empty() && r.seconds > r.limit_seconds) r.failure = "time limit exceeded";
  r.passed = r.failure.empty();
  return r;
}

std::vector<CriterionResult> run_selftest(SelftestLevel level, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id, level, seed));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "criterion " << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << "  " << r.title << " (" << r.seconds
      << " s / " << r.limit_seconds << " s, " << r.checks << " checks)";
  if (!r.passed) out << ": " << r.failure;
  return out.str();
}

}  // namespace grasspi
