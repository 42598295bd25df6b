#pragma once

#include <string_view>

#include "gradec/scalar.hpp"

namespace gradec {

struct ParseOptions {
  // Structure constants live in the base ring, so '/' is refused there.
  bool allow_division = true;
};

/// Parses an expression in the ring's variables.
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor (['*' | '/'] factor)*
///   factor := atom ['^' ['-'] integer]
///   atom   := integer | identifier | '(' expr ')'
///
/// Juxtaposition multiplies ("2v"). Division must be exact unless the ring is a
/// field. Errors: SyntaxError, UndeclaredVariable, InexactDivision.
Scalar parse_scalar(std::string_view text, const Ring& ring, const ParseOptions& options = {});

}  // namespace gradec
