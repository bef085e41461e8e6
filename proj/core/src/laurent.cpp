#include <cctype>
#include <sstream>

#include "baxter/coeff.hpp"
#include "parse_util.hpp"

namespace baxter {

Laurent::Laurent(const mpq_class& constant) {
  if (constant != 0) add_term(0, constant);
}

Laurent Laurent::monomial(const mpq_class& coeff, std::int64_t exponent) {
  Laurent f;
  f.add_term(exponent, coeff);
  return f;
}

void Laurent::add_term(std::int64_t exponent, const mpq_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<mpq_class> Laurent::constant_value() const {
  if (terms_.empty()) return mpq_class(0);
  if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
  return std::nullopt;
}

std::int64_t Laurent::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroElement, "min_exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

std::int64_t Laurent::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroElement, "max_exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent f;
  for (const auto& [e, c] : terms_) f.terms_.emplace_hint(f.terms_.end(), e, -c);
  return f;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent f;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) f.add_term(ea + eb, ca * cb);
  return f;
}

Laurent Laurent::shifted(std::int64_t by) const {
  Laurent f;
  for (const auto& [e, c] : terms_) f.terms_.emplace_hint(f.terms_.end(), e + by, c);
  return f;
}

Laurent Laurent::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Laurent f;
  for (const auto& [e, v] : terms_) f.terms_.emplace_hint(f.terms_.end(), e, v * c);
  return f;
}

std::optional<Laurent> Laurent::exact_quotient(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Laurent{};
  // Polynomial long division after clearing the lowest powers of x.
  Laurent rem = a.shifted(-a.min_exponent());
  const Laurent div = b.shifted(-b.min_exponent());
  const std::int64_t div_deg = div.max_exponent();
  const mpq_class& div_lead = div.terms_.rbegin()->second;
  Laurent quot;
  while (!rem.is_zero() && rem.max_exponent() >= div_deg) {
    const std::int64_t shift = rem.max_exponent() - div_deg;
    const mpq_class c = rem.terms_.rbegin()->second / div_lead;
    quot.add_term(shift, c);
    rem -= div.shifted(shift).scaled(c);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(a.min_exponent() - b.min_exponent());
}

mpq_class Laurent::evaluate(const mpq_class& value) const {
  if (value == 0) {
    if (!is_polynomial())
      throw Error(ErrorCode::ZeroSubstitutionIntoNegativePower, "x -> 0 in " + to_string());
    auto it = terms_.find(0);
    return it == terms_.end() ? mpq_class(0) : it->second;
  }
  // Horner over the exponent range [lo, hi], then scale by value^lo.
  if (terms_.empty()) return 0;
  const std::int64_t lo = min_exponent();
  const std::int64_t hi = max_exponent();
  mpq_class acc = 0;
  auto it = terms_.rbegin();
  for (std::int64_t e = hi; e >= lo; --e) {
    acc *= value;
    if (it != terms_.rend() && it->first == e) {
      acc += it->second;
      ++it;
    }
  }
  mpq_class scale = 1;
  const mpq_class base = lo < 0 ? mpq_class(1 / value) : value;
  for (std::int64_t i = 0; i < (lo < 0 ? -lo : lo); ++i) scale *= base;
  return acc * scale;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << "x^" << e;
    first = false;
  }
  return out.str();
}

Laurent Laurent::parse(std::string_view text) {
  detail::Cursor cur(text);
  Laurent f;
  cur.skip_ws();
  if (cur.done()) throw Error(ErrorCode::ParseError, "empty Laurent polynomial");
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw cur.error("expected '+' or '-'");
    }
    cur.skip_ws();
    mpq_class coeff = 1;
    bool have_coeff = false;
    if (cur.peek_digit()) {
      coeff = cur.parse_rational();
      have_coeff = true;
      cur.skip_ws();
    }
    std::int64_t exponent = 0;
    bool have_var = false;
    if (have_coeff && cur.accept('*')) {
      cur.skip_ws();
      if (!cur.accept('x')) throw cur.error("expected 'x' after '*'");
      have_var = true;
    } else if (!have_coeff && cur.accept('x')) {
      have_var = true;
    }
    if (!have_coeff && !have_var) throw cur.error("expected a term");
    if (have_var) {
      exponent = 1;
      cur.skip_ws();
      if (cur.accept('^')) {
        cur.skip_ws();
        exponent = cur.parse_signed_int();
      }
    }
    f.add_term(exponent, coeff * sign);
    first = false;
    cur.skip_ws();
  }
  return f;
}

}  // namespace baxter
