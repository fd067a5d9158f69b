#pragma once

#include <string>

#include "nc/algebra.hpp"

namespace nc {

/// Canonical rendering per the expression grammar: monomials in
/// degree-lexicographic order with q before p (leading term first), scalar
/// coefficients likewise ordered in hbar before t. Output always re-parses
/// to the same element.
std::string to_string(const AlgebraElement& f);

std::string to_string(const ScalarPoly& s);

std::string to_string(const GaussianRational& c);

} // namespace nc

#include "nc/form.hpp"

namespace nc {

/// "[[...]]" for N > 1, the bare entry expression for N = 1.
std::string to_string(const AlgebraMatrix& m);

/// Component sum like "(f) dq + (g) dp"; "0" when zero.
std::string to_string(const Form& w);

} // namespace nc
