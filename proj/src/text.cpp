#include "grasspi/text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "grasspi/error.hpp"

namespace grasspi {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, const FieldPtr& field) : text_(text), field_(field) {}

  FreePoly parse() {
    FreePoly f = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return f;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  bool peek_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  // A run of decimal digits, returned verbatim.
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned small_int(unsigned cap, const char* what) {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 9 || std::stoul(d) > cap) throw ParseError(std::string(what) + " is too large", at);
    return static_cast<unsigned>(std::stoul(d));
  }

  Scalar int_scalar() {
    const std::string d = digits();
    const unsigned p = field_->characteristic();
    std::uint64_t r = 0;
    for (char c : d) r = (r * 10 + static_cast<unsigned>(c - '0')) % p;
    return field_->from_int(static_cast<long long>(r));
  }

  FreePoly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    FreePoly f = term();
    if (negate) f = -f;
    while (true) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        break;
      }
    }
    return f;
  }

  FreePoly term() {
    FreePoly f = factor();
    while (accept('*')) f = f * factor();
    return f;
  }

  FreePoly factor() {
    FreePoly b = base();
    if (accept('^')) {
      skip();
      const std::size_t at = pos_;
      const unsigned e = small_int(kMaxExponent, "exponent");
      if (e < 1) throw ParseError("exponent must be at least 1", at);
      b = b.pow(e);
    }
    return b;
  }

  FreePoly base() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      if (!peek_digit()) throw ParseError("expected a variable index after 'x'", pos_);
      const std::size_t at = pos_;
      const unsigned i = small_int(1'000'000, "variable index");
      if (i < 1) throw ParseError("variable indices start at 1", at);
      return FreePoly::variable(field_, i);
    }
    if (c == 't') {
      if (field_->is_prime_field()) throw ParseError("unknown scalar symbol 't' over a prime field", pos_);
      ++pos_;
      return FreePoly::scalar(field_, field_->root());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return FreePoly::scalar(field_, int_scalar());
    if (c == '(') {
      ++pos_;
      FreePoly f = expr();
      expect(')');
      return f;
    }
    if (c == '[') {
      ++pos_;
      std::vector<FreePoly> args{expr()};
      while (accept(',')) args.push_back(expr());
      if (args.size() < 2) throw ParseError("a commutator needs at least two entries", pos_);
      expect(']');
      return left_normed(args);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const FieldPtr& field_;
  std::size_t pos_ = 0;
};

}  // namespace

FreePoly parse_poly(std::string_view text, const FieldPtr& field) { return Parser(text, field).parse(); }

std::string format_poly(const FreePoly& f) {
  if (f.is_zero()) return "0";
  const FieldPtr& field = f.field();
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    if (!first) out << " + ";
    first = false;
    if (w.empty()) {
      out << field->format(c);
      continue;
    }
    if (c != 1) out << field->format_factor(c) << '*';
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (i > 0) out << '*';
      out << 'x' << w[i];
      if (j - i > 1) out << '^' << (j - i);
      i = j;
    }
  }
  return out.str();
}

}  // namespace grasspi
