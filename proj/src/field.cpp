#include "grasspi/field.hpp"

#include <algorithm>
#include <sstream>

#include "grasspi/error.hpp"

namespace grasspi {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// x^(p^k) mod f.
Poly frobenius_power_of_x(unsigned k, const Poly& f, std::uint32_t p) {
  Poly x{0, 1};
  for (unsigned i = 0; i < k; ++i) x = poly_powmod(x, p, f, p);
  return x;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i] % p) % p;
  trim(a);
  return a;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      out.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t r = 2; std::uint64_t{r} * r <= n; ++r) {
    if (n % r == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  if (d == 1) return true;
  if (d <= 3) {
    // No roots <=> irreducible in degree 2 and 3.
    for (std::uint32_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  // Rabin's test.
  const Poly x{0, 1};
  if (poly_sub(frobenius_power_of_x(d, f, p), x, p) != Poly{}) return false;
  for (unsigned r : prime_divisors(d)) {
    Poly h = poly_sub(frobenius_power_of_x(d / r, f, p), x, p);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> builtin_modulus(std::uint32_t p, unsigned d) {
  // Conway polynomials, low to high.
  struct Entry {
    std::uint32_t p;
    unsigned d;
    std::vector<std::uint32_t> modulus;
  };
  static const std::vector<Entry> table = {
      {2, 2, {1, 1, 1}},    {2, 3, {1, 1, 0, 1}}, {3, 2, {2, 2, 1}},
      {2, 4, {1, 1, 0, 0, 1}}, {5, 2, {2, 4, 1}},  {3, 3, {1, 2, 0, 1}},
      {7, 2, {3, 6, 1}},
  };
  for (const auto& e : table) {
    if (e.p == p && e.d == d) return e.modulus;
  }
  return {};
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), d_(static_cast<unsigned>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < d_; ++i) q_ *= p_;
  build_tables();
}

FieldPtr Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw ConfigError("field characteristic " + std::to_string(p) + " is not prime");
  if (p > kMaxOrder) throw ConfigError("field order exceeds supported maximum");
  return FieldPtr(new Field(p, {0, 1}));
}

FieldPtr Field::of_order(std::uint32_t q) {
  if (q < 2) throw ConfigError("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  unsigned d = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++d;
  }
  if (rest != 1) throw ConfigError("q = " + std::to_string(q) + " is not a prime power");
  if (d == 1) return prime(p);
  auto modulus = builtin_modulus(p, d);
  if (modulus.empty()) {
    throw ConfigError("no built-in reduction polynomial for q = " + std::to_string(q) +
                      "; supply one explicitly");
  }
  return with_modulus(p, std::move(modulus));
}

FieldPtr Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw ConfigError("field characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 2) throw ConfigError("reduction polynomial must have degree >= 1");
  if (modulus.back() != 1) throw ConfigError("reduction polynomial must be monic");
  for (auto c : modulus) {
    if (c >= p) throw ConfigError("reduction polynomial coefficient out of range [0, p)");
  }
  if (modulus.size() == 2) return prime(p);
  double q = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) q *= p;
  if (q > kMaxOrder) throw ConfigError("field order exceeds supported maximum");
  if (!is_irreducible(p, modulus)) throw ConfigError("reduction polynomial is not irreducible");
  return FieldPtr(new Field(p, std::move(modulus)));
}

void Field::build_tables() {
  if (d_ == 1) return;
  neg_table_.resize(q_);
  for (Scalar a = 0; a < q_; ++a) {
    auto c = coordinates(a);
    for (auto& x : c) x = (p_ - x) % p_;
    neg_table_[a] = from_coordinates(c);
  }
  if (q_ <= 256) {
    add_table_.resize(std::size_t{q_} * q_);
    for (Scalar a = 0; a < q_; ++a) {
      for (Scalar b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_slow(a, b);
    }
  }
  // Find a primitive element and tabulate its powers.
  log_.assign(q_, 0);
  exp_.assign(q_ - 1, 0);
  for (Scalar g = 2; g < q_ + 1; ++g) {
    Scalar cand = g % q_;
    if (cand == 0) continue;
    Scalar x = 1;
    std::uint32_t k = 0;
    bool primitive = true;
    for (; k < q_ - 1; ++k) {
      if (k > 0 && x == 1) {
        primitive = false;
        break;
      }
      exp_[k] = x;
      x = mul_poly(x, cand);
    }
    if (primitive && x == 1) {
      for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
      return;
    }
  }
  throw ConfigError("no primitive element found; modulus is not irreducible");
}

Scalar Field::add_slow(Scalar a, Scalar b) const {
  Scalar r = 0, place = 1;
  for (unsigned i = 0; i < d_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Scalar Field::mul_poly(Scalar a, Scalar b) const {
  Poly pa = coordinates(a), pb = coordinates(b);
  Poly r = poly_mulmod(pa, pb, modulus_, p_);
  r.resize(d_, 0);
  return from_coordinates(r);
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  if (d_ == 1) return inv_mod(a, p_);
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Scalar Field::pow(Scalar a, std::uint64_t n) const {
  Scalar result = 1, base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

Scalar Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

Scalar Field::root() const {
  if (d_ == 1) throw ConfigError("prime field has no adjoined root");
  return p_;
}

std::vector<std::uint32_t> Field::coordinates(Scalar a) const {
  std::vector<std::uint32_t> c(d_);
  for (unsigned i = 0; i < d_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Scalar Field::from_coordinates(const std::vector<std::uint32_t>& coords) const {
  Scalar r = 0, place = 1;
  for (unsigned i = 0; i < d_ && i < coords.size(); ++i) {
    r += (coords[i] % p_) * place;
    place *= p_;
  }
  return r;
}

std::string Field::format(Scalar a) const {
  if (d_ == 1) return std::to_string(a);
  auto c = coordinates(a);
  std::ostringstream out;
  bool first = true;
  for (unsigned i = 0; i < d_; ++i) {
    if (c[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c[i];
    } else {
      if (c[i] != 1) out << c[i] << '*';
      out << 't';
      if (i > 1) out << '^' << i;
    }
  }
  if (first) out << '0';
  return out.str();
}

std::string Field::format_factor(Scalar a) const {
  std::string s = format(a);
  return s.find('+') == std::string::npos ? s : "(" + s + ")";
}

bool same_field(const Field& a, const Field& b) noexcept {
  return &a == &b || (a.characteristic() == b.characteristic() && a.modulus() == b.modulus());
}

void FieldElem::check(const FieldElem& o) const {
  if (!same_field(*field_, *o.field_)) throw ConfigError("field elements from different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check(o);
  return {field_, field_->add(code_, o.code_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  check(o);
  return {field_, field_->sub(code_, o.code_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  check(o);
  return {field_, field_->mul(code_, o.code_)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
  check(o);
  return {field_, field_->mul(code_, field_->inv(o.code_))};
}

}  // namespace grasspi
