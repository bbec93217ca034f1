#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "grasspi/field.hpp"
#include "grasspi/grassmann.hpp"

namespace grasspi {

/// Variable index i >= 1 of x_i.
using Var = std::uint32_t;
/// Noncommutative monomial; the empty word is 1.
using Word = std::vector<Var>;

/// Shorter words first, then lexicographic.
struct LengthLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of the free unitary algebra k<X> over F_q.
class FreePoly {
 public:
  using TermMap = std::map<Word, Scalar, LengthLex>;

  explicit FreePoly(FieldPtr field) : field_(std::move(field)) {}

  static FreePoly variable(FieldPtr field, Var i);
  static FreePoly scalar(FieldPtr field, Scalar c);
  static FreePoly monomial(FieldPtr field, Word w, Scalar c = 1);

  const FieldPtr& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coefficient(const Word& w) const;

  /// Adds c * w, pruning a zero result.
  void add_term(const Word& w, Scalar c);

  FreePoly operator+(const FreePoly& o) const;
  FreePoly operator-(const FreePoly& o) const;
  FreePoly operator-() const;
  FreePoly operator*(const FreePoly& o) const;
  FreePoly scaled(Scalar c) const;
  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly pow(unsigned n) const;

  bool operator==(const FreePoly& o) const {
    return same_field(*field_, *o.field_) && terms_ == o.terms_;
  }

  std::set<Var> variables() const;
  /// 0 when the polynomial has no variables.
  Var max_variable() const;

 private:
  void check_compatible(const FreePoly& o) const;

  FieldPtr field_;
  TermMap terms_;
};

/// fg - gf.
FreePoly commutator(const FreePoly& f, const FreePoly& g);
/// [[f1, f2], f3], ... folded left to right; needs at least one argument.
FreePoly left_normed(std::span<const FreePoly> fs);

/// Images of variables in G(m); unassigned variables map to a default image
/// (the scalar 0 unless overridden).
class GrassmannAssignment {
 public:
  GrassmannAssignment(FieldPtr field, unsigned bound);

  void set(Var i, GrassmannElem image);
  void set_default(GrassmannElem image);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned bound() const noexcept { return bound_; }
  const std::map<Var, GrassmannElem>& images() const noexcept { return images_; }
  const GrassmannElem& default_image() const noexcept { return default_; }
  const GrassmannElem& image(Var i) const;

 private:
  FieldPtr field_;
  unsigned bound_;
  std::map<Var, GrassmannElem> images_;
  GrassmannElem default_;
};

/// The unitary homomorphism k<X> -> G(m) extending the assignment.
GrassmannElem evaluate(const FreePoly& f, const GrassmannAssignment& sigma);

/// The unitary endomorphism extending tau; unlisted variables are fixed.
FreePoly substitute(const FreePoly& f, const std::map<Var, FreePoly>& tau);

/// Per-variable degree of one word.
std::map<Var, unsigned> word_multidegree(const Word& w);

struct DegreeSummary {
  unsigned total_degree;
  /// Per word, in the polynomial's storage order.
  std::vector<std::map<Var, unsigned>> word_degrees;
  /// Every word has the same per-variable degrees.
  bool multihomogeneous;
  /// Every variable occurring anywhere occurs in every word.
  bool essential;
};

/// Throws DomainError for the zero polynomial.
DegreeSummary degrees(const FreePoly& f);
unsigned total_degree(const FreePoly& f);
unsigned degree_in(const FreePoly& f, Var x);
bool is_essential(const FreePoly& f);

}  // namespace grasspi
