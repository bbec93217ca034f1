#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace grasspi {

/// Element code of F_q: the base-p digits of the integer are the coordinates
/// of the element in the basis 1, t, t^2, ... of F_p[t]/(modulus).
using Scalar = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^d, with exact table-driven arithmetic.
///
/// Instances are immutable and shared by every element built over them.
/// Two fields are interchangeable iff they have the same p and the same
/// reduction polynomial (see same_field()).
class Field {
 public:
  /// Largest supported order; log/antilog tables are sized by q.
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// F_p for a prime p.
  static FieldPtr prime(std::uint32_t p);
  /// F_q using the built-in reduction polynomial for q in
  /// {4, 8, 9, 16, 25, 27, 49}, or F_p when q is prime.
  static FieldPtr of_order(std::uint32_t q);
  /// F_{p^d} with a caller-supplied monic modulus, coefficients low to high
  /// (modulus.size() == d + 1, modulus.back() == 1).
  static FieldPtr with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return d_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return d_ == 1; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Scalar add(Scalar a, Scalar b) const {
    if (d_ == 1) {
      Scalar s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_slow(a, b);
  }
  Scalar neg(Scalar a) const {
    if (d_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
  }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const {
    if (a == 0 || b == 0) return 0;
    if (d_ == 1) return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  /// Throws DomainError on zero.
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t n) const;
  Scalar frobenius(Scalar a) const { return pow(a, p_); }

  /// Image of an integer under Z -> F_p -> F_q.
  Scalar from_int(long long n) const;
  /// The adjoined root t; only meaningful when degree() > 1.
  Scalar root() const;
  std::vector<std::uint32_t> coordinates(Scalar a) const;
  Scalar from_coordinates(const std::vector<std::uint32_t>& coords) const;

  /// Prime case: the representative in [0, p). Extension case: the t-basis
  /// expansion, e.g. "1+2*t".
  std::string format(Scalar a) const;
  /// format() parenthesized when it is a sum, for use as a product factor.
  std::string format_factor(Scalar a) const;

 private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);
  Scalar add_slow(Scalar a, Scalar b) const;
  Scalar mul_poly(Scalar a, Scalar b) const;
  void build_tables();

  std::uint32_t p_;
  unsigned d_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Scalar> add_table_;
  std::vector<Scalar> neg_table_;
  std::vector<std::uint32_t> log_;
  std::vector<Scalar> exp_;
};

bool same_field(const Field& a, const Field& b) noexcept;
bool is_prime(std::uint32_t n) noexcept;
/// Monic irreducible polynomial over F_p of degree d, low to high, from the
/// built-in table; empty when (p, d) is not tabulated.
std::vector<std::uint32_t> builtin_modulus(std::uint32_t p, unsigned d);
/// Irreducibility over F_p of a monic polynomial given low to high.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Value-semantic field element; holds its field alive.
class FieldElem {
 public:
  FieldElem(FieldPtr field, Scalar code) : field_(std::move(field)), code_(code) {}
  static FieldElem from_int(FieldPtr field, long long n) {
    Scalar c = field->from_int(n);
    return {std::move(field), c};
  }

  const FieldPtr& field() const noexcept { return field_; }
  Scalar code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const { return {field_, field_->neg(code_)}; }
  FieldElem inv() const { return {field_, field_->inv(code_)}; }
  FieldElem pow(std::uint64_t n) const { return {field_, field_->pow(code_, n)}; }
  FieldElem frobenius() const { return {field_, field_->frobenius(code_)}; }

  bool operator==(const FieldElem& o) const {
    return code_ == o.code_ && same_field(*field_, *o.field_);
  }

  std::string to_string() const { return field_->format(code_); }

 private:
  void check(const FieldElem& o) const;

  FieldPtr field_;
  Scalar code_;
};

}  // namespace grasspi
