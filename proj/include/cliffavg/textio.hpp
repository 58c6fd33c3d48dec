#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cliffavg/commutation.hpp"
#include "cliffavg/multivector.hpp"
#include "cliffavg/solver.hpp"

namespace cliffavg {

// Thrown by the expression and multi-index parsers; position() is the 0-based
// offset of the offending character.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Expression grammar, whitespace allowed between tokens:
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := coeff | coeff ['*'] blade | blade
//   coeff := integer ['/' positive-integer]
//   blade := 'e' | 'e' digit+ | 'e{' int (',' int)* '}'
// The digit form uses one digit per index and is accepted only for n <= 9.
// Index lists must be strictly increasing. Repeated blades accumulate.
Multivector parse_multivector(const Signature& sig, std::string_view text);

// Canonical form: terms in canonical order, zeros dropped, "0" for zero,
// unit coefficients elided ("e", "-e12"), other scalars written bare.
std::string format_multivector(const Multivector& u);

// Multi-index labels: "-" for the empty index, concatenated digits for n <= 9
// ("13"), braces above ("{1,10}").
std::string index_to_string(MultiIndex a, int n);
MultiIndex parse_multi_index(std::string_view text, int n);

// "e", "e13", "e{1,10}".
std::string blade_to_string(MultiIndex a, int n);

// {"n":..,"order":[..],"rows":[[..],..]}
std::string to_json(const CommutationTable& table);
std::string to_json(const SignMatrix& matrix);
// {"kind":..,"particular":..,"freedom":..,"residuals":{..}}
std::string to_json(const Solution& solution);

std::string kind_name(SolutionKind kind);
std::string freedom_name(const Freedom& freedom, int n);

// Grid of "+" / "-" with blade labels on both axes.
std::string to_text(const CommutationTable& table);
// Rows of 1 / -1 separated by spaces.
std::string to_text(const SignMatrix& matrix);

}  // namespace cliffavg
