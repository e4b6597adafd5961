#include "cleanring/ffpoly.hpp"

#include <stdexcept>

namespace cleanring {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x_pow_minus_one(Int e) {
    std::vector<Int> c(e + 1, 0);
    c[0] = -1;
    c[e] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<Int> out(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
    std::vector<Int> rem = c_;
    Int dd = divisor.degree();
    Int lead = divisor.leading();
    if (degree() < dd) {
        if (!is_zero()) throw std::logic_error("divide_exact: nonzero remainder");
        return IntPoly();
    }
    std::vector<Int> quot(degree() - dd + 1, 0);
    for (Int i = degree(); i >= dd; --i) {
        Int r = rem[i];
        if (r == 0) continue;
        if (r % lead != 0) throw std::logic_error("divide_exact: nonzero remainder");
        Int q = r / lead;
        quot[i - dd] = q;
        for (Int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.c_[j];
    }
    for (Int v : rem)
        if (v != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly cyclotomic_polynomial(Int d) {
    if (d <= 0) throw std::invalid_argument("cyclotomic_polynomial: d must be positive");
    IntPoly num = IntPoly::one();
    IntPoly den = IntPoly::one();
    for (Int e : divisors(d)) {
        int mo = moebius(d / e);
        if (mo == 1)
            num = num * IntPoly::x_pow_minus_one(e);
        else if (mo == -1)
            den = den * IntPoly::x_pow_minus_one(e);
    }
    return num.divide_exact(den);
}

ModPoly::ModPoly(Int p, std::vector<Int> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
    for (Int& v : c_) {
        v %= p_;
        if (v < 0) v += p_;
    }
    trim();
}

void ModPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::reduce(const IntPoly& f, Int p) { return ModPoly(p, f.coeffs()); }

ModPoly ModPoly::operator+(const ModPoly& rhs) const {
    std::vector<Int> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Int v = (i < c_.size() ? c_[i] : 0) + (i < rhs.c_.size() ? rhs.c_[i] : 0);
        out[i] = v % p_;
    }
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::operator-(const ModPoly& rhs) const {
    std::vector<Int> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Int v = (i < c_.size() ? c_[i] : 0) - (i < rhs.c_.size() ? rhs.c_[i] : 0);
        out[i] = v;
    }
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::operator*(const ModPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero(p_);
    std::vector<Int> out(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            out[i + j] = Int((__int128(c_[i]) * rhs.c_[j] + out[i + j]) % p_);
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::operator%(const ModPoly& rhs) const {
    if (rhs.is_zero()) throw std::invalid_argument("ModPoly: division by zero");
    std::vector<Int> rem = c_;
    Int dd = rhs.degree();
    Int inv = cleanring::pow_mod(rhs.c_.back(), p_ - 2, p_);
    for (Int i = Int(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Int q = Int(__int128(rem[i]) * inv % p_);
        for (Int j = 0; j <= dd; ++j) {
            Int v = rem[i - dd + j] - Int(__int128(q) * rhs.c_[j] % p_);
            rem[i - dd + j] = v < 0 ? v + p_ : v;
        }
    }
    rem.resize(dd > 0 ? dd : 0);
    return ModPoly(p_, std::move(rem));
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    Int inv = cleanring::pow_mod(c_.back(), p_ - 2, p_);
    std::vector<Int> out = c_;
    for (Int& v : out) v = Int(__int128(v) * inv % p_);
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return zero(p_);
    std::vector<Int> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = Int(__int128(c_[i]) * Int(i) % p_);
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::pow_mod(Int e, const ModPoly& f) const {
    ModPoly base = *this % f;
    ModPoly out = one(p_) % f;
    while (e > 0) {
        if (e & 1) out = (out * base) % f;
        base = (base * base) % f;
        e >>= 1;
    }
    return out;
}

ModPoly poly_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<Int, Int>> ddf_degrees(const ModPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("ddf_degrees: degree must be >= 1");
    Int p = f.modulus();
    ModPoly fs = f.monic();
    if (poly_gcd(fs, fs.derivative()).degree() != 0)
        throw std::invalid_argument("ddf_degrees: polynomial is not squarefree");

    std::vector<std::pair<Int, Int>> out;
    ModPoly h = ModPoly::x(p) % fs;  // x^(p^k) mod remaining factor
    Int k = 0;
    while (fs.degree() > 0) {
        ++k;
        h = h.pow_mod(p, fs);
        ModPoly g = poly_gcd(fs, h - (ModPoly::x(p) % fs));
        if (g.degree() > 0) {
            if (g.degree() % k != 0)
                throw std::logic_error("ddf_degrees: degree-k product not divisible by k");
            out.emplace_back(k, g.degree() / k);
            // peel off the degree-k part and keep going on the quotient
            ModPoly next = fs;
            std::vector<Int> quot(fs.degree() - g.degree() + 1, 0);
            {
                std::vector<Int> rem = fs.coeffs();
                Int dd = g.degree();
                for (Int i = Int(rem.size()) - 1; i >= dd; --i) {
                    if (rem[i] == 0) continue;
                    Int q = rem[i];  // g is monic
                    quot[i - dd] = q;
                    for (Int j = 0; j <= dd; ++j) {
                        Int v = rem[i - dd + j] - Int(__int128(q) * g.coeffs()[j] % p);
                        v %= p;
                        rem[i - dd + j] = v < 0 ? v + p : v;
                    }
                }
                for (Int j = 0; j < dd; ++j)
                    if (rem[j] != 0) throw std::logic_error("ddf_degrees: inexact factor removal");
            }
            fs = ModPoly(p, std::move(quot));
            h = h % fs;
        }
    }
    return out;
}

OracleRecord verify_cyclotomic_factorization(Int d, Int p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("verify_cyclotomic_factorization: p must be an odd prime");
    if (d <= 0 || d % p == 0)
        throw std::invalid_argument("verify_cyclotomic_factorization: requires d >= 1, p not dividing d");
    OracleRecord rec;
    rec.d = d;
    rec.p = p;
    rec.expected_degree = mult_order(p, d);
    rec.expected_count = euler_phi(d) / rec.expected_degree;
    rec.observed = ddf_degrees(ModPoly::reduce(cyclotomic_polynomial(d), p));
    rec.pass = rec.observed.size() == 1 && rec.observed[0].first == rec.expected_degree &&
               rec.observed[0].second == rec.expected_count;
    return rec;
}

}  // namespace cleanring
