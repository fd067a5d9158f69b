#pragma once

#include <string_view>

#include "nc/algebra.hpp"

namespace nc {

/// Parse the expression grammar
///   expr := ('+'|'-')? term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom := 'q' | 'p' | 'h' | 't' | 'i' | rational | '(' expr ')'
/// into a canonical element. Multiplication is noncommutative and
/// order-preserving as written. Throws Errc::parse_error with line/column,
/// and Errc::truncation_exceeded for a t-power literal beyond the context
/// order.
AlgebraElement parse_expression(std::string_view text, Context ctx);

/// Parse a constant expression (no q, p, h, t) into a scalar.
GaussianRational parse_scalar(std::string_view text);

/// Parse "a/b", an integer, or a decimal literal into an exact rational.
mpq_class parse_rational(std::string_view text);

} // namespace nc
