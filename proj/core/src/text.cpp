#include "baxter/text.hpp"

#include <algorithm>

#include "parse_util.hpp"

namespace baxter {

namespace {

constexpr std::string_view kTensor = "⊗";
constexpr std::string_view kTensorAscii = "(x)";

bool short_names(const AlgebraCtx& ctx) {
  return std::all_of(ctx.variables().begin(), ctx.variables().end(), [](const std::string& v) { return v.size() == 1; });
}

// Coefficient text without sign; `negative` reports whether a leading minus was split off.
std::string coefficient_text(const Scalar& c, bool& negative) {
  negative = false;
  switch (c.ring().kind()) {
    case RingKind::RationalQ: {
      negative = sgn(c.rational()) < 0;
      return mpq_class(abs(c.rational())).get_str();
    }
    case RingKind::IntegerZ: {
      negative = sgn(c.integer()) < 0;
      return mpz_class(abs(c.integer())).get_str();
    }
    case RingKind::PrimeField:
      return std::to_string(c.residue());
    case RingKind::LaurentQ: {
      if (auto k = c.laurent().constant_value()) {
        negative = sgn(*k) < 0;
        return mpq_class(abs(*k)).get_str();
      }
      return "(" + c.laurent().to_string() + ")";
    }
  }
  return c.to_string();
}

std::optional<std::size_t> match_variable(const AlgebraCtx& ctx, const detail::Cursor& cur) {
  std::optional<std::size_t> best;
  std::size_t best_len = 0;
  for (std::size_t i = 0; i < ctx.num_variables(); ++i) {
    const std::string& name = ctx.variables()[i];
    if (name.size() > best_len && cur.looking_at(name)) {
      best = i;
      best_len = name.size();
    }
  }
  return best;
}

class ElementParser {
 public:
  ElementParser(const CtxPtr& ctx, std::string_view text) : ctx_(ctx), cur_(text) {}

  ShuffleElement parse() {
    ShuffleElement out(ctx_);
    cur_.skip_ws();
    if (cur_.done()) throw cur_.error("empty element");
    bool first = true;
    while (true) {
      cur_.skip_ws();
      bool negative = false;
      if (cur_.accept('-')) {
        negative = true;
      } else if (!cur_.accept('+') && !first) {
        throw cur_.error("expected '+' or '-' between terms");
      }
      first = false;
      cur_.skip_ws();
      auto [coeff, word] = parse_term();
      out.add_term(word, negative ? -coeff : coeff);
      cur_.skip_ws();
      if (cur_.done()) break;
    }
    return out;
  }

 private:
  std::pair<Scalar, TensorWord> parse_term() {
    Scalar coeff = Scalar::one(ctx_->ring());
    std::vector<Monomial> factors;
    while (true) {
      factors.push_back(parse_factor(coeff));
      cur_.skip_ws();
      if (cur_.accept(kTensor) || cur_.accept(kTensorAscii)) {
        cur_.skip_ws();
        continue;
      }
      break;
    }
    return {coeff, TensorWord(std::move(factors))};
  }

  bool at_atom() const {
    if (cur_.done()) return false;
    if (cur_.peek_digit()) return true;
    if (cur_.peek() == '(') return !cur_.looking_at(kTensorAscii);
    return match_variable(*ctx_, cur_).has_value();
  }

  Monomial parse_factor(Scalar& coeff) {
    Monomial mono;
    if (!at_atom()) throw cur_.error("expected a factor");
    while (true) {
      parse_atom(coeff, mono);
      cur_.skip_ws();
      if (cur_.accept('*')) {
        cur_.skip_ws();
        if (!at_atom()) throw cur_.error("expected a factor after '*'");
        continue;
      }
      if (!at_atom()) break;
    }
    return mono;
  }

  void parse_atom(Scalar& coeff, Monomial& mono) {
    if (cur_.peek_digit()) {
      coeff *= Scalar::from_rational(ctx_->ring(), cur_.parse_rational());
      return;
    }
    if (cur_.accept('(')) {
      const std::string_view rest = cur_.rest();
      const std::size_t close = rest.find(')');
      if (close == std::string_view::npos) throw cur_.error("unbalanced '('");
      coeff *= Scalar::parse(ctx_->ring(), rest.substr(0, close));
      cur_.seek(cur_.pos() + close + 1);
      return;
    }
    const auto var = match_variable(*ctx_, cur_);
    cur_.accept(ctx_->variables()[*var]);
    std::uint32_t power = 1;
    if (cur_.accept('^')) {
      const mpz_class e = cur_.parse_natural();
      if (!e.fits_uint_p() || e > 1000000) throw cur_.error("exponent out of range");
      power = static_cast<std::uint32_t>(e.get_ui());
    }
    if (power > 0) mono = mono * Monomial::variable(*var, power);
  }

  CtxPtr ctx_;
  detail::Cursor cur_;
};

}  // namespace

ShuffleElement parse_element(const CtxPtr& ctx, std::string_view text) { return ElementParser(ctx, text).parse(); }

std::string format_monomial(const AlgebraCtx& ctx, const Monomial& m) {
  if (m.is_one()) return "1";
  const std::string join = short_names(ctx) ? "" : "*";
  std::string out;
  for (std::size_t i = 0; i < m.support_size(); ++i) {
    const std::uint32_t e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += join;
    out += ctx.variables().at(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string format_word(const AlgebraCtx& ctx, const TensorWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i > 0) out += kTensor;
    out += format_monomial(ctx, w[i]);
  }
  return out;
}

std::string format_element(const ShuffleElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    bool negative = false;
    const std::string c = coefficient_text(it->second, negative);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != "1") out += c + " * ";
    out += format_word(e.ctx(), it->first);
    first = false;
  }
  return out;
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string name(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty()) throw Error(ErrorCode::ParseError, "empty variable name in \"" + std::string(text) + "\"");
    out.push_back(std::move(name));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace baxter
