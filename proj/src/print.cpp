#include "nc/print.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace nc {

namespace {

// deg-lex, highest first, first variable major
template <typename E, typename V>
std::vector<std::pair<E, V>> sorted_terms(const std::map<E, V>& m,
                                          unsigned E::*first, unsigned E::*second) {
    std::vector<std::pair<E, V>> v(m.begin(), m.end());
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
        unsigned da = a.first.*first + a.first.*second;
        unsigned db = b.first.*first + b.first.*second;
        if (da != db)
            return da > db;
        return a.first.*first > b.first.*first;
    });
    return v;
}

void append_power(std::vector<std::string>& pieces, const char* name, unsigned e) {
    if (e == 0)
        return;
    if (e == 1)
        pieces.push_back(name);
    else
        pieces.push_back(std::string(name) + "^" + std::to_string(e));
}

std::string join_product(const std::vector<std::string>& pieces) {
    if (pieces.empty())
        return "1";
    std::string out = pieces[0];
    for (std::size_t k = 1; k < pieces.size(); ++k) {
        out += "*";
        out += pieces[k];
    }
    return out;
}

std::string abs_str(const mpq_class& r) {
    mpq_class a = r < 0 ? mpq_class(-r) : r;
    return a.get_str();
}

// A coefficient is "plain" when it is a single hbar/t monomial whose
// Gaussian-rational factor is purely real or purely imaginary; those render
// without parentheses.
bool plain_coefficient(const ScalarPoly& s) {
    if (s.terms().size() != 1)
        return false;
    const auto& c = s.terms().begin()->second;
    return c.re() == 0 || c.im() == 0;
}

// magnitude pieces for a purely real or purely imaginary value
void append_gaussian(std::vector<std::string>& pieces, const GaussianRational& c,
                     bool monomial_follows) {
    const bool imag = c.re() == 0 && c.im() != 0;
    const mpq_class& part = imag ? c.im() : c.re();
    mpq_class a = part < 0 ? mpq_class(-part) : part;
    if (a != 1 || (!imag && !monomial_follows))
        pieces.push_back(abs_str(part));
    if (imag)
        pieces.push_back("i");
}

struct PrintedTerm {
    bool negative = false;
    std::string magnitude;
};

PrintedTerm print_param_term(ParamExp e, const GaussianRational& c) {
    PrintedTerm out;
    std::vector<std::string> pieces;
    bool has_vars = e.h > 0 || e.t > 0;
    const bool imag = c.re() == 0 && c.im() != 0;
    out.negative = (imag ? c.im() : c.re()) < 0;
    append_gaussian(pieces, c, has_vars);
    append_power(pieces, "h", e.h);
    append_power(pieces, "t", e.t);
    out.magnitude = join_product(pieces);
    return out;
}

std::string sum_string(const std::vector<PrintedTerm>& terms) {
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k == 0)
            out += terms[k].negative ? "-" : "";
        else
            out += terms[k].negative ? " - " : " + ";
        out += terms[k].magnitude;
    }
    return out.empty() ? "0" : out;
}

PrintedTerm print_element_term(MonoExp m, const ScalarPoly& s) {
    PrintedTerm out;
    std::vector<std::string> pieces;
    const bool has_mono = m.q > 0 || m.p > 0;
    if (plain_coefficient(s)) {
        const auto& [e, c] = *s.terms().begin();
        const bool imag = c.re() == 0 && c.im() != 0;
        out.negative = (imag ? c.im() : c.re()) < 0;
        append_gaussian(pieces, c, has_mono || e.h > 0 || e.t > 0);
        append_power(pieces, "h", e.h);
        append_power(pieces, "t", e.t);
    } else {
        pieces.push_back("(" + to_string(s) + ")");
    }
    append_power(pieces, "q", m.q);
    append_power(pieces, "p", m.p);
    out.magnitude = join_product(pieces);
    return out;
}

} // namespace

std::string to_string(const GaussianRational& c) {
    if (c.is_zero())
        return "0";
    if (c.re() != 0 && c.im() != 0) {
        PrintedTerm re = print_param_term({0, 0}, GaussianRational(c.re()));
        PrintedTerm im = print_param_term({0, 0}, GaussianRational(0, c.im()));
        return sum_string({re, im});
    }
    PrintedTerm t = print_param_term({0, 0}, c);
    return (t.negative ? "-" : "") + t.magnitude;
}

std::string to_string(const ScalarPoly& s) {
    if (s.is_zero())
        return "0";
    std::vector<PrintedTerm> printed;
    for (const auto& [e, c] : sorted_terms(s.terms(), &ParamExp::h, &ParamExp::t)) {
        if (c.re() != 0)
            printed.push_back(print_param_term(e, GaussianRational(c.re())));
        if (c.im() != 0)
            printed.push_back(print_param_term(e, GaussianRational(0, c.im())));
    }
    return sum_string(printed);
}

std::string to_string(const AlgebraElement& f) {
    if (f.is_zero())
        return "0";
    std::vector<PrintedTerm> printed;
    for (const auto& [m, s] : sorted_terms(f.terms(), &MonoExp::q, &MonoExp::p))
        printed.push_back(print_element_term(m, s));
    return sum_string(printed);
}

std::string to_string(const AlgebraMatrix& m) {
    if (m.size() == 1)
        return to_string(m.at(0, 0));
    std::string out = "[";
    for (unsigned i = 0; i < m.size(); ++i) {
        out += i ? ", [" : "[";
        for (unsigned j = 0; j < m.size(); ++j) {
            if (j)
                out += ", ";
            out += to_string(m.at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

std::string to_string(const Form& w) {
    static const char* names[4] = {"", " dq", " dp", " dqdp"};
    std::string out;
    for (unsigned b = 0; b < 4; ++b) {
        const auto& comp = w[static_cast<FormBasis>(b)];
        if (comp.is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += "(" + to_string(comp) + ")" + names[b];
    }
    return out.empty() ? "0" : out;
}

} // namespace nc
