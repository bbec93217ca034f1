#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "grasspi/freealg.hpp"
#include "grasspi/siderov.hpp"

namespace grasspi {

/// Linear combination of SS terms; the unit term stands for scalars.
class SSCombination {
 public:
  using TermMap = std::map<SSTerm, Scalar>;

  explicit SSCombination(FieldPtr field) : field_(std::move(field)) {}

  const FieldPtr& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const SSTerm& u) const;
  void add_term(const SSTerm& u, Scalar c);

  FreePoly to_poly() const;
  bool operator==(const SSCombination& o) const { return terms_ == o.terms_; }

 private:
  FieldPtr field_;
  TermMap terms_;
};

/// Commutative power product; exponents are positive.
using PowerProduct = std::map<Var, unsigned>;

/// Commutative polynomial used for the coefficients of a canonical form.
class PPoly {
 public:
  using TermMap = std::map<PowerProduct, Scalar>;

  explicit PPoly(FieldPtr field) : field_(std::move(field)) {}

  const FieldPtr& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_scalar() const noexcept;
  void add_term(const PowerProduct& m, Scalar c);

  std::set<Var> variables() const;
  /// Unlisted variables evaluate to 0.
  Scalar evaluate(const std::map<Var, Scalar>& point) const;
  /// Ascending words.
  FreePoly to_poly() const;
  std::string format() const;

  bool operator==(const PPoly& o) const { return terms_ == o.terms_; }

 private:
  FieldPtr field_;
  TermMap terms_;
};

struct CanonicalComponent {
  PPoly coefficient;
  SSTerm tail;
  bool operator==(const CanonicalComponent& o) const {
    return coefficient == o.coefficient && tail == o.tail;
  }
};

/// f = f_0 + sum f_i u_i with p-polynomial coefficients and BSS tails,
/// sorted Siderov-descending with the unit tail (f_0) last.
struct CanonicalForm {
  unsigned p = 0;
  unsigned q = 0;
  std::vector<CanonicalComponent> components;

  bool empty() const noexcept { return components.empty(); }
  FreePoly to_poly(const FieldPtr& field) const;
  /// "0" when empty; otherwise a parseable sum such as "x1^2*x2 + [x1,x2]*x1".
  std::string format() const;
  bool operator==(const CanonicalForm& o) const {
    return p == o.p && q == o.q && components == o.components;
  }
};

/// Rewrites f into a combination of SS terms congruent to it modulo T^(3)
/// (modulo [x1,x2] in characteristic 2, where the result is commutative).
SSCombination straighten(const FreePoly& f);

/// Replaces every beginning exponent and end power >= qp by subtracting
/// (q-1)p until it drops below qp. An end variable of degree exactly qp is
/// left alone: its power is qp-1 and no relation applies to it.
SSCombination reduce_high_exponents(const SSCombination& c);

/// Moves p-th powers into commutative coefficients and groups by tail.
/// Throws PreconditionError on an exponent that reduce_high_exponents()
/// would still change.
CanonicalForm factor_canonical(const SSCombination& c);

/// straighten + reduce_high_exponents + factor_canonical.
CanonicalForm canonicalize(const FreePoly& f);

/// Ascending power products whose exponents are multiples of p below qp
/// (the empty word allowed).
bool is_p_polynomial(const FreePoly& f);

/// One straightening rule, stated as a polynomial that must lie in T^(3).
struct RewriteRule {
  std::string family;
  std::string name;
  FreePoly relation;
  /// The relation is zero in the free algebra, i.e. follows from the
  /// definition of the commutator alone.
  bool literal;
};

/// The rules whose consequences the straightener folds into its closed form.
/// Non-literal rules must be certified by bounded_span_member before the
/// straightener can be trusted; the test suite does exactly that.
std::vector<RewriteRule> rewrite_rules(const FieldPtr& field);

}  // namespace grasspi
