#ifndef BAXTER_TEXT_HPP
#define BAXTER_TEXT_HPP

#include <string>
#include <string_view>

#include "baxter/shuffle.hpp"

namespace baxter {

/// Parses "3/2 * 1⊗x^2⊗x - y⊗1 + ..." over ctx. Factors are separated by "⊗" or
/// "(x)"; a factor is a product of variables, powers "x^e" and numbers (which
/// fold into the term coefficient), optionally joined by "*". LaurentQ
/// coefficients are written in parentheses. "0" is the zero element.
ShuffleElement parse_element(const CtxPtr& ctx, std::string_view text);

/// Leading term first; inverse of parse_element.
std::string format_element(const ShuffleElement& e);
std::string format_word(const AlgebraCtx& ctx, const TensorWord& w);
std::string format_monomial(const AlgebraCtx& ctx, const Monomial& m);

/// Comma-separated variable list, e.g. "x,y"; empty text gives no variables.
std::vector<std::string> parse_variable_list(std::string_view text);

}  // namespace baxter

#endif
