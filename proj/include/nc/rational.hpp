#pragma once

#include <gmpxx.h>
#include <string>

#include "nc/error.hpp"

namespace nc {

/// Exact complex rational re + im*i. All arithmetic is exact; this is the
/// coefficient field for everything in the library.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {} // NOLINT: implicit by design
    GaussianRational(mpq_class re, mpq_class im = 0)
        : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {0, 1}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = r;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero())
            throw Error(Errc::division_by_zero, "division by zero");
        mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        im_ = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = r;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    /// Diagnostic rendering, e.g. "3/2", "-i", "1+2*i". The expression
    /// printer has its own canonical rules; this is for messages.
    std::string str() const;

  private:
    mpq_class re_, im_;
};

/// i^k reduced mod 4.
GaussianRational i_pow(unsigned k);

mpq_class make_rational(long num, long den);

} // namespace nc
