#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grasspi/canonical.hpp"
#include "grasspi/freealg.hpp"
#include "grasspi/grassmann.hpp"
#include "grasspi/siderov.hpp"

namespace grasspi {

/// Explicit substitution into G(m); variables without an image go to 0.
struct WitnessMap {
  FieldPtr field;
  unsigned m = 0;
  std::map<Var, GrassmannElem> images;

  /// proj_k of each image.
  std::map<Var, Scalar> lambdas() const;
  GrassmannAssignment assignment() const;
};

enum class Membership { kMember, kNonMember };

struct Verdict {
  Membership membership = Membership::kMember;
  /// Which argument produced the verdict, e.g. "canonical-form", "scalar-search".
  std::string route;
  std::optional<WitnessMap> witness;
  /// Nonzero value of the refuted polynomial (for centrality: the nonzero
  /// commutator with the fresh variable's image).
  std::optional<GrassmannElem> value;
  std::optional<CanonicalForm> canonical;
  /// one_var_check: f = quotient * (x^{qp} - x^p) on Member.
  std::optional<FreePoly> quotient;
  /// cp_membership: the variable the commutator was taken with.
  std::optional<Var> fresh;

  bool member() const noexcept { return membership == Membership::kMember; }
};

/// Generators of T(G): {x1^{qp} - x1^p, [x1,x2,x3]} for p > 2 and
/// {x1^2 - x1^{2q}, [x1,x2]} for p = 2.
std::vector<FreePoly> t_generators(const FieldPtr& field);

/// Generators of the T-space S_1 (p > 2): [x1,x2], x1^p, and
/// x1^p prod_{i<=t} [x_{2i},x_{2i+1}] x_{2i}^{p-1} x_{2i+1}^{p-1} for 1 <= t <= t_max.
std::vector<FreePoly> s1_generators(const FieldPtr& field, unsigned t_max);

/// Decides f in T(G) and, if not, returns a substitution with nonzero value.
Verdict t_membership(const FreePoly& f, std::uint64_t seed = 0);

/// Decides f in CP(G) via [f, x_fresh] in T(G), fresh = max variable + 1.
Verdict cp_membership(const FreePoly& f, std::uint64_t seed = 0);

/// The substitution whose value on u has dominant part
/// 2^lend prod alpha! prod beta! e_1...e_m, m = 2 deg(u) - 2 lend(u).
/// Variables outside u listed in `lambda` map to that scalar.
WitnessMap witness_identity(const SSTerm& u, const std::map<Var, Scalar>& lambda, const FieldPtr& field);

/// The substitution with m = 2 deg(u) - 2 lend(u) - 1 that sends x_t to
/// lambda_t + e_{N+2a-1} + sum_{e<a} e_{N+2e-1} e_{N+2e}, so that the value on
/// u has odd dominant weight m.
WitnessMap witness_central(const SSTerm& u, Var t, const std::map<Var, Scalar>& lambda,
                           const FieldPtr& field);

/// 2^lend(u) prod_{beg} deg! prod_{end} (deg - 1)!, reduced into the field.
Scalar witness_coefficient(const SSTerm& u, const FieldPtr& field);

/// Division of a one-variable f by x^{qp} - x^p. On NonMember the witness is
/// the first x -> lambda + sum_{i<=r} e_{2i-1} e_{2i} (r < p) with nonzero value.
Verdict one_var_check(const FreePoly& f);

/// First point with g(point) != 0 in the search order: all ones, then
/// lexicographic over k^n, then seeded random draws. Throws InternalError if
/// none is found.
std::map<Var, Scalar> find_nonvanishing(const PPoly& g, const std::vector<Var>& vars, std::uint64_t seed);

}  // namespace grasspi
