#include "nc/scalar_poly.hpp"

namespace nc {

const char* backend_name(Backend b) {
    return b == Backend::heisenberg ? "heisenberg" : "moyal";
}

void require_same(const Context& a, const Context& b) {
    if (a.backend != b.backend)
        throw Error(Errc::backend_mismatch, "mixed algebra backends");
    if (a.order != b.order)
        throw Error(Errc::truncation_mismatch, "mixed truncation orders");
}

GaussianRational ScalarPoly::coefficient(ParamExp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void ScalarPoly::add_term(ParamExp e, const GaussianRational& c) {
    if (c.is_zero() || e.t > order_)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly r(order_);
    for (const auto& [e, c] : terms_)
        r.terms_[e] = -c;
    return r;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    if (order_ != o.order_)
        throw Error(Errc::truncation_mismatch, "mixed truncation orders");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    if (order_ != o.order_)
        throw Error(Errc::truncation_mismatch, "mixed truncation orders");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.order_ != b.order_)
        throw Error(Errc::truncation_mismatch, "mixed truncation orders");
    ScalarPoly r(a.order_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ParamExp e{ea.h + eb.h, ea.t + eb.t};
            if (e.t > r.order_)
                continue;
            r.add_term(e, ca * cb);
        }
    return r;
}

ScalarPoly& ScalarPoly::scale(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

ScalarPoly ScalarPoly::shifted(unsigned dh, unsigned dt) const {
    ScalarPoly r(order_);
    for (const auto& [e, c] : terms_) {
        ParamExp f{e.h + dh, e.t + dt};
        if (f.t <= order_)
            r.terms_[f] = c;
    }
    return r;
}

ScalarPoly ScalarPoly::conj() const {
    ScalarPoly r(order_);
    for (const auto& [e, c] : terms_)
        r.terms_[e] = c.conj();
    return r;
}

ScalarPoly ScalarPoly::t_slice(unsigned k) const {
    ScalarPoly r(order_);
    for (const auto& [e, c] : terms_)
        if (e.t == k)
            r.terms_[{e.h, 0}] = c;
    return r;
}

ScalarPoly ScalarPoly::hbar_zero() const {
    ScalarPoly r(order_);
    for (const auto& [e, c] : terms_)
        if (e.h == 0)
            r.terms_[e] = c;
    return r;
}

GaussianRational ScalarPoly::eval(const mpq_class& hbar_value, const mpq_class& t_value) const {
    GaussianRational acc;
    for (const auto& [e, c] : terms_) {
        mpq_class w(1);
        for (unsigned k = 0; k < e.h; ++k)
            w *= hbar_value;
        for (unsigned k = 0; k < e.t; ++k)
            w *= t_value;
        acc += c * GaussianRational(w);
    }
    return acc;
}

} // namespace nc
