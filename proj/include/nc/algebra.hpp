#pragma once

#include <map>
#include <utility>

#include "nc/kernels.hpp"
#include "nc/scalar_poly.hpp"

namespace nc {

enum class Var { q, p };

/// An element of the coordinate algebra: a map from canonical monomials
/// q^a p^b to ScalarPoly coefficients, tagged with the backend that fixes
/// what the product means. Immutable in spirit: operations return values.
class AlgebraElement {
  public:
    explicit AlgebraElement(Context ctx) : ctx_(ctx) {}

    static AlgebraElement zero(Context ctx) { return AlgebraElement(ctx); }
    static AlgebraElement scalar(Context ctx, const GaussianRational& c);
    static AlgebraElement one(Context ctx) { return scalar(ctx, 1); }
    static AlgebraElement generator(Context ctx, Var v);
    static AlgebraElement hbar(Context ctx);
    static AlgebraElement t_param(Context ctx);
    static AlgebraElement monomial(Context ctx, MonoExp m, ScalarPoly c);

    const Context& context() const { return ctx_; }
    unsigned order() const { return ctx_.order; }
    Backend backend() const { return ctx_.backend; }
    const std::map<MonoExp, ScalarPoly>& terms() const { return mono_; }
    bool is_zero() const { return mono_.empty(); }

    /// Coefficient of q^m.q p^m.p (zero poly if absent).
    ScalarPoly coefficient(MonoExp m) const;

    void add_term(MonoExp m, const ScalarPoly& c);

    bool operator==(const AlgebraElement& o) const {
        return ctx_ == o.ctx_ && mono_ == o.mono_;
    }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

    AlgebraElement& scale(const GaussianRational& c);
    AlgebraElement& scale(const mpq_class& c) { return scale(GaussianRational(c)); }

    /// Multiply by hbar^dh t^dt.
    AlgebraElement shifted_params(unsigned dh, unsigned dt) const;

    unsigned total_degree() const; // max over monomials of q+p exponents

  private:
    Context ctx_;
    std::map<MonoExp, ScalarPoly> mono_;
};

AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g);

/// Hermitean conjugation: coefficients conjugated; Heisenberg words are
/// reversed and re-normal-ordered (q, p are hermitean in both backends).
AlgebraElement dagger(const AlgebraElement& f);

/// Generalized partial derivative. Acts as the formal partial on canonical
/// monomials in both backends; in the Heisenberg algebra this equals the
/// commutator form -(1/i hbar)[p, .] resp. (1/i hbar)[q, .].
AlgebraElement partial(const AlgebraElement& f, Var v);

/// Right inverse of partial with zero constant-in-direction part.
AlgebraElement antiderivative(const AlgebraElement& f, Var v);

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

/// Coefficient of t^k as an element (t stripped).
AlgebraElement t_slice(const AlgebraElement& f, unsigned k);

/// The hbar-independent part.
AlgebraElement hbar_zero(const AlgebraElement& f);

bool is_antihermitian(const AlgebraElement& f);

/// Anti-hermitean generator of a truncated unitary U = exp(t X).
class GeneratorSeries {
  public:
    explicit GeneratorSeries(AlgebraElement x);
    const AlgebraElement& element() const { return x_; }
    unsigned order() const { return x_.order(); }

  private:
    AlgebraElement x_;
};

/// (U, U^-1) with U = sum_{k<=K} t^k X^k / k!. As truncated series,
/// U U^-1 = 1 exactly and dagger(U) = U^-1 exactly.
std::pair<AlgebraElement, AlgebraElement> exp_series(const GeneratorSeries& x);

} // namespace nc
