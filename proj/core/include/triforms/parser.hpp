#ifndef TRIFORMS_PARSER_HPP
#define TRIFORMS_PARSER_HPP

#include <triforms/rational_function.hpp>

#include <string>

namespace triforms {

// Expression grammar (documented in docs/grammar.md):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' ['-'] integer)?
//   atom   := integer | variable | '(' expr ')' | '-' factor
// Integer literals are arbitrary precision; rational literals are written
// with '/'. Unknown names and syntax errors raise ParseError with position.
RationalFunction parse_rational_function(const std::string &text,
                                         const Vars &vars);

// Total on the polynomial fragment (nonnegative '^' exponents, '/' only by
// nonzero constants); rejects genuine denominators.
Polynomial parse_polynomial(const std::string &text, const Vars &vars);

} // namespace triforms

#endif
