#pragma once

#include <compare>
#include <map>

#include "nc/rational.hpp"

namespace nc {

enum class Backend { heisenberg, moyal };

const char* backend_name(Backend b);

/// Evaluation context shared by every value in a computation: which
/// coordinate algebra, and the truncation order K of the formal series
/// parameter t. Mixing contexts in a binary operation is an error.
struct Context {
    Backend backend;
    unsigned order; // K: powers t^k with k > K are dropped

    bool operator==(const Context&) const = default;
};

void require_same(const Context& a, const Context& b);

/// Exponents of the two central formal parameters: hbar (never truncated)
/// and t (truncated at the context order).
struct ParamExp {
    unsigned h = 0;
    unsigned t = 0;
    auto operator<=>(const ParamExp&) const = default;
};

/// Exponents of a canonical coordinate monomial q^a p^b. Under the
/// Heisenberg backend this denotes the normal-ordered word (all q left of
/// all p); under Moyal it is the commutative symbol monomial.
struct MonoExp {
    unsigned q = 0;
    unsigned p = 0;
    auto operator<=>(const MonoExp&) const = default;
};

/// Exact polynomial in hbar and t over the Gaussian rationals, truncated in
/// t at order K. hbar and t are central: they commute with everything, so
/// these coefficients move freely through all products.
class ScalarPoly {
  public:
    explicit ScalarPoly(unsigned order) : order_(order) {}
    ScalarPoly(const GaussianRational& c, unsigned order) : order_(order) {
        if (!c.is_zero())
            terms_[{0, 0}] = c;
    }

    static ScalarPoly monomial(const GaussianRational& c, ParamExp e, unsigned order) {
        ScalarPoly r(order);
        if (!c.is_zero() && e.t <= order)
            terms_insert(r, e, c);
        return r;
    }

    unsigned order() const { return order_; }
    const std::map<ParamExp, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// The coefficient of h^e.h * t^e.t (zero if absent).
    GaussianRational coefficient(ParamExp e) const;

    bool operator==(const ScalarPoly& o) const {
        return order_ == o.order_ && terms_ == o.terms_;
    }
    bool operator!=(const ScalarPoly& o) const { return !(*this == o); }

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);

    ScalarPoly& scale(const GaussianRational& c);

    /// Multiply by h^dh * t^dt; terms pushed past the t-truncation vanish.
    ScalarPoly shifted(unsigned dh, unsigned dt) const;

    /// Complex conjugation of all coefficients (hbar and t are real).
    ScalarPoly conj() const;

    /// Keep only terms with t-exponent k, with t stripped from them.
    ScalarPoly t_slice(unsigned k) const;

    /// Keep only the hbar-free part.
    ScalarPoly hbar_zero() const;

    /// Substitute numeric values for hbar and t.
    GaussianRational eval(const mpq_class& hbar_value, const mpq_class& t_value) const;

    void add_term(ParamExp e, const GaussianRational& c);

  private:
    static void terms_insert(ScalarPoly& p, ParamExp e, const GaussianRational& c) {
        p.terms_[e] = c;
    }

    std::map<ParamExp, GaussianRational> terms_;
    unsigned order_;
};

} // namespace nc
