#include "nc/grid.hpp"

#include "nc/kernels.hpp"

namespace nc {

GaussianRational eval_symbol(const AlgebraElement& f, const mpq_class& q,
                             const mpq_class& p, const mpq_class& hbar_value,
                             const mpq_class& t_value) {
    if (f.backend() != Backend::moyal)
        throw Error(Errc::backend_mismatch,
                    "Heisenberg elements have no pointwise evaluation");
    GaussianRational acc;
    for (const auto& [m, c] : f.terms()) {
        mpq_class w(1);
        for (unsigned k = 0; k < m.q; ++k)
            w *= q;
        for (unsigned k = 0; k < m.p; ++k)
            w *= p;
        acc += c.eval(hbar_value, t_value) * GaussianRational(w);
    }
    return acc;
}

std::vector<GridRow> sample_grid(const AlgebraElement& f, const GridSpec& spec,
                                 const mpq_class& hbar_value, const mpq_class& t_value,
                                 bool parallel) {
    const unsigned steps = std::max(1u, spec.steps);
    auto coord = [steps](const mpq_class& lo, const mpq_class& hi, unsigned i) {
        if (steps == 1)
            return lo;
        return mpq_class(lo + (hi - lo) * mpq_class(i) / mpq_class(steps - 1));
    };
    std::vector<GridRow> rows(std::size_t(steps) * steps);
    kernels::parallel_for(rows.size(), parallel, [&](std::size_t idx) {
        const unsigned i = static_cast<unsigned>(idx / steps);
        const unsigned j = static_cast<unsigned>(idx % steps);
        GridRow& row = rows[idx];
        row.q = coord(spec.q_min, spec.q_max, i);
        row.p = coord(spec.p_min, spec.p_max, j);
        row.value = eval_symbol(f, row.q, row.p, hbar_value, t_value);
    });
    return rows;
}

std::string render_decimal(const mpq_class& value, unsigned digits) {
    mpz_class num = value.get_num();
    const mpz_class& den = value.get_den();
    const bool neg = num < 0;
    if (neg)
        num = -num;
    mpz_class scale(1);
    for (unsigned k = 0; k < digits; ++k)
        scale *= 10;
    // round half up on |value|
    mpz_class scaled = num * scale * 2 + den;
    mpz_class rounded = scaled / (den * 2);
    mpz_class ipart = rounded / scale;
    mpz_class fpart = rounded % scale;
    std::string out = neg && rounded != 0 ? "-" : "";
    out += ipart.get_str();
    if (fpart != 0) {
        std::string frac = fpart.get_str();
        frac.insert(0, digits - frac.size(), '0');
        while (!frac.empty() && frac.back() == '0')
            frac.pop_back();
        out += "." + frac;
    }
    return out;
}

std::string grid_csv(const std::vector<GridRow>& rows, unsigned digits) {
    std::string out = "q,p,value_re,value_im\n";
    for (const auto& row : rows) {
        out += render_decimal(row.q, digits);
        out += ",";
        out += render_decimal(row.p, digits);
        out += ",";
        out += render_decimal(row.value.re(), digits);
        out += ",";
        out += render_decimal(row.value.im(), digits);
        out += "\n";
    }
    return out;
}

} // namespace nc
