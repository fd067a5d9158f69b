#include "nc/matrix.hpp"

namespace nc {

AlgebraMatrix AlgebraMatrix::identity(Context ctx, unsigned n) {
    AlgebraMatrix m(ctx, n);
    for (unsigned i = 0; i < n; ++i)
        m.at(i, i) = AlgebraElement::one(ctx);
    return m;
}

AlgebraMatrix AlgebraMatrix::scalar(Context ctx, unsigned n, const AlgebraElement& f) {
    AlgebraMatrix m(ctx, n);
    for (unsigned i = 0; i < n; ++i)
        m.at(i, i) = f;
    return m;
}

bool AlgebraMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

void require_same_shape(const AlgebraMatrix& a, const AlgebraMatrix& b) {
    require_same(a.context(), b.context());
    if (a.size() != b.size())
        throw Error(Errc::shape_mismatch, "matrix size mismatch");
}

AlgebraMatrix AlgebraMatrix::operator-() const {
    AlgebraMatrix r(ctx_, n_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] = -entries_[k];
    return r;
}

AlgebraMatrix& AlgebraMatrix::operator+=(const AlgebraMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] += o.entries_[k];
    return *this;
}

AlgebraMatrix& AlgebraMatrix::operator-=(const AlgebraMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] -= o.entries_[k];
    return *this;
}

AlgebraMatrix operator*(const AlgebraMatrix& a, const AlgebraMatrix& b) {
    require_same_shape(a, b);
    const unsigned n = a.size();
    AlgebraMatrix r(a.context(), n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            AlgebraElement acc(a.context());
            for (unsigned k = 0; k < n; ++k)
                acc += mul(a.at(i, k), b.at(k, j));
            r.at(i, j) = std::move(acc);
        }
    return r;
}

AlgebraMatrix& AlgebraMatrix::scale(const GaussianRational& c) {
    for (auto& e : entries_)
        e.scale(c);
    return *this;
}

AlgebraMatrix dagger(const AlgebraMatrix& m) {
    return m.map([](const AlgebraElement& e) { return dagger(e); });
}

AlgebraMatrix partial(const AlgebraMatrix& m, Var v) {
    return m.map([v](const AlgebraElement& e) { return partial(e, v); });
}

AlgebraMatrix t_slice(const AlgebraMatrix& m, unsigned k) {
    return m.map([k](const AlgebraElement& e) { return t_slice(e, k); });
}

AlgebraMatrix hbar_zero(const AlgebraMatrix& m) {
    return m.map([](const AlgebraElement& e) { return hbar_zero(e); });
}

bool is_antihermitian(const AlgebraMatrix& m) { return dagger(m) == -m; }

} // namespace nc
