#pragma once

#include <array>

#include "nc/matrix.hpp"

namespace nc {

/// Basis of the graded algebra with central differentials:
/// {1, dq, dp, dq^dp}. Squares of dq, dp vanish and dq dp = -dp dq.
enum class FormBasis : unsigned { one = 0, dq = 1, dp = 2, dqdp = 3 };

constexpr unsigned basis_degree(FormBasis b) {
    return b == FormBasis::one ? 0 : b == FormBasis::dqdp ? 2 : 1;
}

const char* basis_name(FormBasis b);

/// The Hodge star as data: star(coeff * basis) = factor * dagger(coeff) * target.
/// Kept as a table, not constants, so axiom suites can reject corrupted ones.
struct HodgeTable {
    std::array<FormBasis, 4> target;
    std::array<GaussianRational, 4> factor;
    std::array<GaussianRational, 3> eps; // star star = eps_r on degree r

    /// star 1 = dq dp, star dq = dp, star dp = dq, star(dq dp) = -1;
    /// (eps_0, eps_1, eps_2) = (-1, +1, -1).
    static HodgeTable standard();

    bool invertible() const;
    HodgeTable inverse() const; // throws star_table_singular
};

/// General element of degree 0 + 1 + 2 with matrix coefficients stored left
/// of the central basis: w = c0 + cq dq + cp dp + c2 dq dp. Inhomogeneous
/// values are legal containers; graded operations act per component.
class Form {
  public:
    Form(Context ctx, unsigned n)
        : comps_{AlgebraMatrix(ctx, n), AlgebraMatrix(ctx, n), AlgebraMatrix(ctx, n),
                 AlgebraMatrix(ctx, n)} {}

    static Form from_deg0(const AlgebraMatrix& c);
    static Form one_form(const AlgebraMatrix& cq, const AlgebraMatrix& cp);
    static Form from_deg2(const AlgebraMatrix& c);
    static Form basis_element(Context ctx, unsigned n, FormBasis b);

    const Context& context() const { return comps_[0].context(); }
    unsigned size() const { return comps_[0].size(); }

    AlgebraMatrix& operator[](FormBasis b) { return comps_[static_cast<unsigned>(b)]; }
    const AlgebraMatrix& operator[](FormBasis b) const {
        return comps_[static_cast<unsigned>(b)];
    }

    bool is_zero() const;
    bool homogeneous(unsigned degree) const; // zero outside that degree

    bool operator==(const Form& o) const { return comps_ == o.comps_; }
    bool operator!=(const Form& o) const { return !(*this == o); }

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }

    Form& scale(const GaussianRational& c);

  private:
    std::array<AlgebraMatrix, 4> comps_;
};

/// d(c0) = partial_q c0 dq + partial_p c0 dp;
/// d(cq dq + cp dp) = (partial_q cp - partial_p cq) dq dp; d of degree 2 is 0.
Form exterior_d(const Form& w);
Form exterior_d(const AlgebraMatrix& m);

/// Graded product. Coefficients pass through the central differentials
/// unchanged; dq dq = dp dp = 0 and dp dq = -dq dp.
Form wedge(const Form& a, const Form& b);
Form wedge(const AlgebraMatrix& a, const Form& b);
Form wedge(const Form& a, const AlgebraMatrix& b);

/// star(basis * f) = dagger(f) * star(basis), extended componentwise.
Form star(const Form& w, const HodgeTable& table);
Form star_inverse(const Form& w, const HodgeTable& table);

/// Involution on forms: (dq)~ = -dq, (dp)~ = -dp, (dq dp)~ = -dq dp with
/// coefficients conjugated; chosen so (d w)~ = (-1)^{r+1} d(w~) and
/// (star w)~ = star^{-1}(w~) hold identically.
Form dagger_form(const Form& w);

/// (alpha, beta) = star^{-1}(alpha ^ star beta) on degree-1 forms.
AlgebraMatrix inner_product(const Form& alpha, const Form& beta, const HodgeTable& table);

} // namespace nc
