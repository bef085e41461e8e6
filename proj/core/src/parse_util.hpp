#ifndef BAXTER_SRC_PARSE_UTIL_HPP
#define BAXTER_SRC_PARSE_UTIL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "baxter/error.hpp"

namespace baxter::detail {

// Character cursor shared by the scalar and element text parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  std::string_view rest() const { return text_.substr(pos_); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool peek_digit() const { return !done() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view token) {
    if (rest().substr(0, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  bool looking_at(std::string_view token) const { return rest().substr(0, token.size()) == token; }

  std::string parse_digits() {
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) throw error("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  mpz_class parse_natural() { return mpz_class(parse_digits()); }

  mpq_class parse_rational() {
    mpz_class num = parse_natural();
    if (peek() == '/') {
      ++pos_;
      mpz_class den = parse_natural();
      if (den == 0) throw error("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  std::int64_t parse_signed_int() {
    bool neg = accept('-');
    if (!neg) accept('+');
    const std::string digits = parse_digits();
    if (digits.size() > 17) throw error("exponent too large");
    const std::int64_t v = std::stoll(digits);
    return neg ? -v : v;
  }

  Error error(const std::string& what) const {
    return Error(ErrorCode::ParseError,
                 what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace baxter::detail

#endif
