#pragma once

#include <string>
#include <vector>

#include "nc/algebra.hpp"

namespace nc {

struct GridSpec {
    mpq_class q_min, q_max, p_min, p_max;
    unsigned steps = 2; // samples per axis, endpoints included
};

struct GridRow {
    mpq_class q, p;
    GaussianRational value;
};

/// Pointwise value of a Moyal symbol at exact rational coordinates with
/// numeric hbar and t substituted. Heisenberg elements have no pointwise
/// evaluation and are rejected.
GaussianRational eval_symbol(const AlgebraElement& f, const mpq_class& q,
                             const mpq_class& p, const mpq_class& hbar_value,
                             const mpq_class& t_value);

std::vector<GridRow> sample_grid(const AlgebraElement& f, const GridSpec& spec,
                                 const mpq_class& hbar_value, const mpq_class& t_value,
                                 bool parallel = true);

/// Exact decimal rendering, round-half-up at `digits` fractional digits,
/// trailing zeros trimmed. The exact values live in JSON; CSV is for plots.
std::string render_decimal(const mpq_class& value, unsigned digits);

/// "q,p,value_re,value_im" plus one line per row.
std::string grid_csv(const std::vector<GridRow>& rows, unsigned digits);

} // namespace nc
