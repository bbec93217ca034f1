#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grasspi/field.hpp"

namespace grasspi {

/// Bit i-1 set <=> generator e_i present. Caps G(m) at m <= 64.
using Mask = std::uint64_t;
inline constexpr unsigned kMaxGenerators = 64;

/// Sign of e_a * e_b for disjoint ascending products: (-1)^(number of
/// pairs i in a, j in b with i > j).
inline int mask_product_sign(Mask a, Mask b) noexcept {
  unsigned inversions = 0;
  while (b) {
    const unsigned j = static_cast<unsigned>(__builtin_ctzll(b));
    b &= b - 1;
    inversions += static_cast<unsigned>(__builtin_popcountll(j >= 63 ? 0 : a >> (j + 1)));
  }
  return (inversions & 1u) ? -1 : 1;
}

inline unsigned popcount(Mask a) noexcept { return static_cast<unsigned>(__builtin_popcountll(a)); }

/// Element of the unitary Grassmann algebra G(m) over a finite field.
///
/// Stored as a mask-sorted list of nonzero coefficients; the empty list is 0
/// and the empty mask is the unit. Elements of different bounds multiply in
/// the larger algebra, since G(m) embeds in G(m') for m <= m'.
class GrassmannElem {
 public:
  using Term = std::pair<Mask, Scalar>;

  GrassmannElem(FieldPtr field, unsigned bound);

  static GrassmannElem scalar(FieldPtr field, unsigned bound, Scalar c);
  /// e_i, 1 <= i <= bound.
  static GrassmannElem generator(FieldPtr field, unsigned bound, unsigned i);
  static GrassmannElem basis(FieldPtr field, unsigned bound, Mask mask, Scalar c = 1);
  /// Builds from arbitrary (mask, coefficient) pairs; merges and prunes.
  static GrassmannElem from_terms(FieldPtr field, unsigned bound, std::vector<Term> terms);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned bound() const noexcept { return bound_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(Mask mask) const;

  GrassmannElem with_bound(unsigned bound) const;

  GrassmannElem operator+(const GrassmannElem& o) const;
  GrassmannElem operator-(const GrassmannElem& o) const;
  GrassmannElem operator-() const;
  GrassmannElem operator*(const GrassmannElem& o) const;
  GrassmannElem scaled(Scalar c) const;
  GrassmannElem& operator+=(const GrassmannElem& o) { return *this = *this + o; }
  GrassmannElem& operator*=(const GrassmannElem& o) { return *this = *this * o; }
  GrassmannElem pow(std::uint64_t n) const;

  /// Coefficientwise equality; bounds are not compared.
  bool operator==(const GrassmannElem& o) const;

  /// e.g. "2 + e1*e2 + 2*e1*e3".
  std::string to_string() const;

 private:
  void check_compatible(const GrassmannElem& o) const;

  FieldPtr field_;
  unsigned bound_;
  std::vector<Term> terms_;
};

GrassmannElem commutator(const GrassmannElem& a, const GrassmannElem& b);

/// g = lambda + c + h with c in C (even, no scalar part) and h in H (odd).
struct EvenOddSplit {
  FieldElem scalar;
  GrassmannElem even;
  GrassmannElem odd;
};
EvenOddSplit split_even_odd(const GrassmannElem& g);

struct SupportWeightDom {
  Mask support;
  unsigned weight;
  GrassmannElem dom;
};
SupportWeightDom support_weight_dom(const GrassmannElem& g);

/// Empty-mask coefficient (the homomorphism 1 -> 1, e_i -> 0).
FieldElem proj_k(const GrassmannElem& g);

/// Commutes with every e_i, i <= m, computed directly.
bool is_central(const GrassmannElem& g, unsigned m);

/// Mask {1..n}.
inline Mask first_generators(unsigned n) noexcept {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}
std::vector<unsigned> mask_indices(Mask m);

/// Which closed form to use for the odd case with more factors than pairs.
enum class DomPowerFormula {
  /// gamma!/(gamma-n-1)! * lambda^(gamma-n-1); agrees with direct expansion.
  kExpansion,
  /// gamma!/(gamma-n)! * lambda^(gamma-n); kept to show the disagreement.
  kAsPrinted,
};

/// Dominant part of (lambda + [e_{2n+1}] + sum_{i<=n} e_{2i-1} e_{2i})^gamma at
/// its nominal weight. When the nominal coefficient is 0 mod p (or a positive
/// power of lambda = 0), `vanishes` is set and `part` is zero; the lower
/// weight part is never substituted.
struct DomPower {
  GrassmannElem part;
  unsigned nominal_weight;
  bool vanishes;
};
DomPower dom_power_closed(const FieldElem& lambda, unsigned n, unsigned gamma, bool with_odd,
                          DomPowerFormula formula = DomPowerFormula::kExpansion);

}  // namespace grasspi
