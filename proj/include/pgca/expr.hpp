#ifndef PGCA_EXPR_HPP
#define PGCA_EXPR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "pgca/engine.hpp"

namespace pgca {

// Variable alphabet of a module context: display names and the slot each
// name addresses.  Rank-one alphabets have two (or one) names on slots
// 0/1; tensor alphabets list the left factor's names on slots 0/1 and
// the right factor's on slots 2/3, with "1" appended to a right-hand
// name whenever it would collide with a left-hand one (X1, Y1, S1, T1).
struct Alphabet {
  int arity = 2;
  std::vector<std::pair<std::string, int>> vars;  // (name, slot), display order
};

Alphabet alphabet_for(const ModuleSpec& spec);
Alphabet alphabet_for(const TensorSpec& spec);
Alphabet alphabet_for(const ModuleRef& mod);

struct ParseError : std::runtime_error {
  size_t pos;  // byte offset into the source text
  ParseError(size_t pos, const std::string& msg);
};

// Parsed expression: a sum of coefficient-monomial terms in source
// order, not yet collected.  Lowering adds equal monomials together and
// produces the unique Vector the expression denotes.
struct ExprTerm {
  Scalar coeff;
  Monomial mono;
};

struct ExprAST {
  int arity = 0;
  std::vector<ExprTerm> terms;

  Vector lower() const;
};

// Grammar (whitespace insignificant):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := element ('*' element)* ['@' element ('*' element)*]
//   element:= coeff | var ['^' nat]
//   coeff  := rational ['i'] | rational ('+'|'-') rational 'i'
//   rational := nat ['/' nat]
// A '@' is required in every tensor (arity 4) term that mentions a
// variable and rejected in a rank-one context; variables left of '@'
// must belong to the left factor's alphabet, right of '@' to the
// right's.  A bare coefficient term (e.g. the zero vector's canonical
// form "0") denotes a Scalar multiple of 1 (x) 1.  The literal "1" is
// the empty monomial.  A term sign negates the whole coefficient.
// A Gaussian coefficient "a/b+c/di" binds only when written without
// internal whitespace; a spaced '+'/'-' always separates terms, which
// disambiguates "3/2*Y @ 1 - 1i*1 @ T" as two terms.
// Errors carry the byte offset of the offending token.
ExprAST parse_expr(std::string_view src, const Alphabet& alph);

// parse_expr followed by lowering
Vector parse_vector(std::string_view src, const Alphabet& alph);

// Standalone Gaussian-rational literal, whole string.  Here a leading
// '-' negates the real part only ("-1/2-2/3i" reads as -1/2 - (2/3)i).
Scalar parse_scalar(std::string_view src);

// Univariate polynomial in the named variable, e.g. "X^2 - 3*X + 1/2".
Poly parse_poly(std::string_view src, const std::string& var);

// Canonical text form: terms descending in the graded order, joined by
// " + " / " - " with display-positive coefficients, "c*" prefixes
// omitted for coefficient 1, unit monomial words printed as "1", tensor
// factors split by " @ ".  format_vector(v) reparses to v exactly.
std::string format_vector(const Vector& v, const Alphabet& alph);

std::string format_poly(const Poly& p, const std::string& var);

}  // namespace pgca

#endif
