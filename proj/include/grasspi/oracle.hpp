#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "grasspi/freealg.hpp"
#include "grasspi/grassmann.hpp"

namespace grasspi {

using Rng = std::mt19937_64;

/// Random scalar plus at most `max_terms` random nonzero basis products.
GrassmannElem random_element(const FieldPtr& field, unsigned m, Rng& rng, unsigned max_terms = 4);
GrassmannAssignment random_assignment(const FieldPtr& field, const std::set<Var>& vars, unsigned m,
                                      Rng& rng);

struct BatteryResult {
  bool all_zero = true;
  std::size_t trials_run = 0;
  std::optional<GrassmannAssignment> counterexample;
  std::optional<GrassmannElem> value;
};

/// Evaluates f at `trials` assignments into G(m). The first trial maps the
/// i-th variable of f to e_i (cyclically); the rest are random_assignment()
/// draws from a generator seeded with `seed`. Stops at the first nonzero value.
BatteryResult eval_battery(const FreePoly& f, unsigned m, std::size_t trials, std::uint64_t seed);

enum class Closure { kTSpace, kTIdeal };

struct SpanGenerator {
  FreePoly poly;
  Closure closure;
};

/// Bounded search for target in the span of substitution instances.
///
/// Variables of each generator are sent to pool monomials (words over the
/// target's variables, plus one fresh variable when requested, of length
/// <= pool_max_degree, together with the unit). T-ideal generators are also
/// multiplied on both sides by pool monomials. Only instances whose words all
/// share a multidegree with some word of the target are kept, so the answer
/// is exact linear algebra inside the target's multihomogeneous components.
struct SpanProblem {
  FreePoly target;
  std::vector<SpanGenerator> generators;
  /// 0 means: up to the target's total degree.
  unsigned pool_max_degree = 2;
  bool pool_fresh_variable = true;
  /// 0 means: the target's total degree.
  unsigned degree_cap = 0;
  std::size_t max_instances = 100'000;
};

struct SpanResult {
  /// Yes is a certificate; false only means "not within these bounds".
  bool member = false;
  std::size_t pool_size = 0;
  std::size_t instances = 0;
  std::size_t rank = 0;
  std::size_t columns = 0;
  /// On Yes: target == sum of coefficient * instance, re-verified exactly.
  std::vector<std::pair<Scalar, FreePoly>> certificate;
};

SpanResult bounded_span_member(const SpanProblem& problem);

struct FieldIdentityResult {
  bool zero = true;
  std::vector<Var> variables;
  /// Nonvanishing point, one scalar per entry of `variables`.
  std::vector<Scalar> point;
  Scalar value = 0;
};

/// Exhaustive evaluation of a commutative polynomial (every word ascending)
/// over k^n, at most 6 variables.
FieldIdentityResult field_identity_bruteforce(const FreePoly& f);

struct BruteDomPower {
  /// Component of weight 2*min(gamma, n) (+1 in the odd case when gamma > n).
  GrassmannElem nominal;
  unsigned nominal_weight;
  /// dom() of the full power, whatever its weight.
  GrassmannElem dom;
  unsigned dom_weight;
};

/// Literal power of lambda + [e_{2n+1}] + sum_{i<=n} e_{2i-1} e_{2i}.
BruteDomPower brute_dom_power(const FieldElem& lambda, unsigned n, unsigned gamma, bool with_odd);

}  // namespace grasspi
