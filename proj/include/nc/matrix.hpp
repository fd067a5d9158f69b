#pragma once

#include <vector>

#include "nc/algebra.hpp"

namespace nc {

/// Square matrix over the coordinate algebra (N = 1 allowed; entries
/// noncommutative). Dagger is entrywise with no transpose.
class AlgebraMatrix {
  public:
    AlgebraMatrix(Context ctx, unsigned n)
        : ctx_(ctx), n_(n), entries_(std::size_t(n) * n, AlgebraElement(ctx)) {}

    static AlgebraMatrix identity(Context ctx, unsigned n);
    static AlgebraMatrix scalar(Context ctx, unsigned n, const AlgebraElement& f);

    const Context& context() const { return ctx_; }
    unsigned size() const { return n_; }
    bool is_zero() const;

    AlgebraElement& at(unsigned i, unsigned j) { return entries_[std::size_t(i) * n_ + j]; }
    const AlgebraElement& at(unsigned i, unsigned j) const {
        return entries_[std::size_t(i) * n_ + j];
    }

    bool operator==(const AlgebraMatrix& o) const {
        return ctx_ == o.ctx_ && n_ == o.n_ && entries_ == o.entries_;
    }
    bool operator!=(const AlgebraMatrix& o) const { return !(*this == o); }

    AlgebraMatrix operator-() const;
    AlgebraMatrix& operator+=(const AlgebraMatrix& o);
    AlgebraMatrix& operator-=(const AlgebraMatrix& o);
    friend AlgebraMatrix operator+(AlgebraMatrix a, const AlgebraMatrix& b) { return a += b; }
    friend AlgebraMatrix operator-(AlgebraMatrix a, const AlgebraMatrix& b) { return a -= b; }
    friend AlgebraMatrix operator*(const AlgebraMatrix& a, const AlgebraMatrix& b);

    AlgebraMatrix& scale(const GaussianRational& c);

    template <typename Fn> AlgebraMatrix map(Fn&& fn) const {
        AlgebraMatrix r(ctx_, n_);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            r.entries_[k] = fn(entries_[k]);
        return r;
    }

  private:
    Context ctx_;
    unsigned n_;
    std::vector<AlgebraElement> entries_;
};

void require_same_shape(const AlgebraMatrix& a, const AlgebraMatrix& b);

AlgebraMatrix dagger(const AlgebraMatrix& m);
AlgebraMatrix partial(const AlgebraMatrix& m, Var v);
AlgebraMatrix t_slice(const AlgebraMatrix& m, unsigned k);
AlgebraMatrix hbar_zero(const AlgebraMatrix& m);
bool is_antihermitian(const AlgebraMatrix& m);

} // namespace nc
