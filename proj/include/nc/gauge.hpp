#pragma once

#include <optional>

#include "nc/form.hpp"

namespace nc {

/// (a, S(a)) with S(a) a = 1 = a S(a) as truncated series. Construction
/// verifies both products; raw pairs that fail are rejected.
class GeneralizedInversePair {
  public:
    GeneralizedInversePair(AlgebraMatrix a, AlgebraMatrix s);

    const AlgebraMatrix& a() const { return a_; }
    const AlgebraMatrix& s() const { return s_; }

  private:
    AlgebraMatrix a_, s_;
};

/// Truncated unitary built from an entrywise anti-hermitean generator:
/// a = exp(t X), S(a) = exp(-t X). For N = 1 this S(a) equals dagger(a).
GeneralizedInversePair unitary_pair(const AlgebraMatrix& x);

enum class Provenance { pure_gauge, from_phi, raw };

/// Matrix-valued connection 1-form with the provenance downstream
/// consumers rely on: pure-gauge fields are flat by construction, from-phi
/// fields are harmonic identically, raw fields promise nothing.
class GaugeField {
  public:
    const Form& a() const { return a_; }
    Provenance provenance() const { return prov_; }
    const Context& context() const { return a_.context(); }
    unsigned size() const { return a_.size(); }

    friend GaugeField pure_gauge(const GeneralizedInversePair& pair);
    friend GaugeField from_phi(const AlgebraMatrix& phi, const HodgeTable& table);
    friend GaugeField raw_field(Form a);

  private:
    GaugeField(Form a, Provenance prov) : a_(std::move(a)), prov_(prov) {}

    Form a_;
    Provenance prov_;
};

/// A = S(a) d a.
GaugeField pure_gauge(const GeneralizedInversePair& pair);

/// A = star d(dagger(phi)); solves d star A = 0 identically.
GaugeField from_phi(const AlgebraMatrix& phi, const HodgeTable& table);

/// Accepts any degree-1 form; consumers re-verify what they need.
GaugeField raw_field(Form a);

/// D chi = d chi + A chi.
Form covariant_d(const AlgebraMatrix& chi, const GaugeField& field);

/// D w = d w + A ^ w on forms of any degree.
Form covariant_d(const Form& w, const GaugeField& field);

/// F = d A + A A.
Form curvature(const GaugeField& field);

/// d star A; zero iff the field is a generalized harmonic map.
Form harmonic_residual(const GaugeField& field, const HodgeTable& table);

struct ConservationCheck {
    bool conserved;
    Form residual; // d star J
};

ConservationCheck is_conserved(const Form& j, const HodgeTable& table);

} // namespace nc
