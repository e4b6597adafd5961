#pragma once

#include <vector>

#include "cleanring/ntheory.hpp"

namespace cleanring {

/// Integer polynomial, coefficients in ascending degree, no stored leading
/// zero (the zero polynomial has an empty coefficient list).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly one() { return IntPoly({1}); }
    /// x^e - 1.
    static IntPoly x_pow_minus_one(Int e);

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Int degree() const { return c_.empty() ? -1 : Int(c_.size()) - 1; }
    Int leading() const { return c_.back(); }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    IntPoly operator*(const IntPoly& rhs) const;
    /// Exact division; throws std::logic_error on a nonzero remainder.
    IntPoly divide_exact(const IntPoly& divisor) const;

    bool operator==(const IntPoly&) const = default;

private:
    void trim();
    std::vector<Int> c_;
};

/// Phi_d via the Moebius product over (x^e - 1) factors; monic of degree
/// phi(d), exact integer arithmetic throughout.
IntPoly cyclotomic_polynomial(Int d);

/// Polynomial over F_p (p an odd prime), canonical coefficients in [0, p).
class ModPoly {
public:
    ModPoly(Int p, std::vector<Int> coeffs);

    static ModPoly zero(Int p) { return ModPoly(p, {}); }
    static ModPoly one(Int p) { return ModPoly(p, {1}); }
    static ModPoly x(Int p) { return ModPoly(p, {0, 1}); }
    /// Reduction of an integer polynomial mod p.
    static ModPoly reduce(const IntPoly& f, Int p);

    Int modulus() const { return p_; }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Int degree() const { return c_.empty() ? -1 : Int(c_.size()) - 1; }

    ModPoly operator+(const ModPoly& rhs) const;
    ModPoly operator-(const ModPoly& rhs) const;
    ModPoly operator*(const ModPoly& rhs) const;
    ModPoly operator%(const ModPoly& rhs) const;
    ModPoly monic() const;
    ModPoly derivative() const;
    /// this^e mod f by repeated squaring.
    ModPoly pow_mod(Int e, const ModPoly& f) const;

    bool operator==(const ModPoly&) const = default;

private:
    void trim();
    Int p_;
    std::vector<Int> c_;
};

ModPoly poly_gcd(ModPoly a, ModPoly b);

/// Distinct-degree factorization of a squarefree f: the list of
/// (degree, number of irreducible factors of that degree), degree ascending.
/// Rejects non-squarefree input (gcd(f, f') != 1).
std::vector<std::pair<Int, Int>> ddf_degrees(const ModPoly& f);

/// Certifies that Phi_d mod p splits into phi(d)/ord_d(p) irreducible
/// factors, all of degree ord_d(p).
struct OracleRecord {
    Int d;
    Int p;
    Int expected_degree;
    Int expected_count;
    std::vector<std::pair<Int, Int>> observed;
    bool pass;
};

OracleRecord verify_cyclotomic_factorization(Int d, Int p);

}  // namespace cleanring
