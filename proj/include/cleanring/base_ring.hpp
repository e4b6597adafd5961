#pragma once

#include <string>

#include "cleanring/ntheory.hpp"

namespace cleanring {

/// Field discriminant of Q(sqrt(d)): d when d = 1 (mod 4), else 4d.
/// Rejects d in {0, 1} and non-squarefree d.
Int quadratic_discriminant(Int d);

bool is_squarefree(Int d);

/// n1 = largest divisor of n coprime to m, nprime = lcm(m,n) / (m * n1).
struct CoprimeSplit {
    Int n1;
    Int nprime;
};
CoprimeSplit coprime_split(Int n, Int m);

enum class BaseKind { Rational, Cyclotomic, Quadratic };

/// Descriptor of the base localization: the valuation ring above the
/// rational prime p inside Q, Q(zeta_m) or Q(sqrt(d)).
class BaseRing {
public:
    /// p prime; p = 2 is accepted here and restricted by the classifiers.
    static BaseRing rational(Int p);
    /// Requires m >= 1, p an odd prime not dividing m.
    static BaseRing cyclotomic(Int m, Int p);
    /// Requires squarefree d not in {0, 1} and an odd prime p.
    static BaseRing quadratic(Int d, Int p);

    BaseKind kind() const { return kind_; }
    Int p() const { return p_; }
    /// Cyclotomic: m. Quadratic: d. Rational: 0.
    Int parameter() const { return param_; }
    /// Quadratic only.
    Int discriminant() const { return disc_; }
    /// Quadratic only: value of (discriminant / p).
    int legendre_delta() const { return chi_; }

    /// f with N(p-ideal) = p^f: 1 for Q; ord_m(p) for Q(zeta_m);
    /// 1 or 2 for Q(sqrt(d)) according to (Delta/p).
    Int residue_exponent() const;

    /// N(p-ideal) itself; throws std::overflow_error when p^f does not fit.
    Int residue_size() const;

    /// deg phi_d = [K(zeta_d) : K].
    Int local_cyclotomic_degree(Int d) const;

    /// ord_d(N(p-ideal)), computed from ord_d(p) and the residue exponent.
    Int residue_order(Int d) const;

    /// True iff the d-th cyclotomic polynomial stays irreducible over the
    /// localization, i.e. local_cyclotomic_degree(d) = phi(d).
    bool cyclotomic_poly_irreducible(Int d) const;

    std::string kind_name() const;
    std::string to_string() const;

private:
    BaseKind kind_ = BaseKind::Rational;
    Int p_ = 0;
    Int param_ = 0;
    Int disc_ = 0;
    int chi_ = 0;
};

}  // namespace cleanring
