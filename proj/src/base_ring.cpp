#include "cleanring/base_ring.hpp"

#include <numeric>
#include <stdexcept>

namespace cleanring {

bool is_squarefree(Int d) {
    if (d == 0) return false;
    for (auto [q, e] : factorize(d < 0 ? -d : d).factors)
        if (e > 1) return false;
    return true;
}

Int quadratic_discriminant(Int d) {
    if (d == 0 || d == 1) throw std::invalid_argument("discriminant: d must not be 0 or 1");
    if (!is_squarefree(d)) throw std::invalid_argument("discriminant: d must be squarefree");
    Int r = d % 4;
    if (r < 0) r += 4;
    return r == 1 ? d : 4 * d;
}

CoprimeSplit coprime_split(Int n, Int m) {
    if (n <= 0 || m <= 0) throw std::invalid_argument("coprime_split: arguments must be positive");
    Int n1 = n;
    for (Int g = std::gcd(n1, m); g > 1; g = std::gcd(n1, m)) n1 /= g;
    Int l = std::lcm(m, n);
    return {n1, l / (m * n1)};
}

BaseRing BaseRing::rational(Int p) {
    if (!is_prime(p)) throw std::invalid_argument("base: p must be prime");
    BaseRing r;
    r.kind_ = BaseKind::Rational;
    r.p_ = p;
    return r;
}

BaseRing BaseRing::cyclotomic(Int m, Int p) {
    if (m <= 0) throw std::invalid_argument("base: m must be positive");
    if (!is_prime(p)) throw std::invalid_argument("base: p must be prime");
    if (p == 2)
        throw std::invalid_argument(
            "base: p = 2 over a cyclotomic base is outside this library's scope "
            "(supported only over Q)");
    if (m % p == 0) throw std::invalid_argument("base: p must not divide m");
    BaseRing r;
    r.kind_ = BaseKind::Cyclotomic;
    r.p_ = p;
    r.param_ = m;
    return r;
}

BaseRing BaseRing::quadratic(Int d, Int p) {
    if (!is_prime(p)) throw std::invalid_argument("base: p must be prime");
    if (p == 2)
        throw std::invalid_argument(
            "base: p = 2 over a quadratic base is outside this library's scope "
            "(supported only over Q)");
    BaseRing r;
    r.kind_ = BaseKind::Quadratic;
    r.p_ = p;
    r.param_ = d;
    r.disc_ = quadratic_discriminant(d);
    r.chi_ = legendre(r.disc_, p);
    return r;
}

Int BaseRing::residue_exponent() const {
    switch (kind_) {
        case BaseKind::Rational:
            return 1;
        case BaseKind::Cyclotomic:
            return mult_order(p_, param_);
        case BaseKind::Quadratic:
            return chi_ >= 0 ? 1 : 2;
    }
    throw std::logic_error("unreachable");
}

Int BaseRing::residue_size() const {
    Int f = residue_exponent();
    return pow_checked(p_, static_cast<int>(f));
}

Int BaseRing::local_cyclotomic_degree(Int d) const {
    if (d <= 0) throw std::invalid_argument("local_cyclotomic_degree: d must be positive");
    switch (kind_) {
        case BaseKind::Rational:
            return euler_phi(d);
        case BaseKind::Cyclotomic: {
            auto [d1, dpr] = coprime_split(d, param_);
            return dpr * euler_phi(d1);
        }
        case BaseKind::Quadratic: {
            Int phi = euler_phi(d);
            Int absD = disc_ < 0 ? -disc_ : disc_;
            if (d % absD == 0) {
                if (phi % 2 != 0)
                    throw std::logic_error("local_cyclotomic_degree: phi(d) odd with Delta | d");
                return phi / 2;
            }
            return phi;
        }
    }
    throw std::logic_error("unreachable");
}

Int BaseRing::residue_order(Int d) const {
    Int op = mult_order(p_, d);
    Int f = residue_exponent();
    return op / std::gcd(f, op);
}

bool BaseRing::cyclotomic_poly_irreducible(Int d) const {
    return local_cyclotomic_degree(d) == euler_phi(d);
}

std::string BaseRing::kind_name() const {
    switch (kind_) {
        case BaseKind::Rational:
            return "rational";
        case BaseKind::Cyclotomic:
            return "cyclotomic";
        case BaseKind::Quadratic:
            return "quadratic";
    }
    return "?";
}

std::string BaseRing::to_string() const {
    switch (kind_) {
        case BaseKind::Rational:
            return "Q, p=" + std::to_string(p_);
        case BaseKind::Cyclotomic:
            return "Q(zeta_" + std::to_string(param_) + "), p=" + std::to_string(p_);
        case BaseKind::Quadratic:
            return "Q(sqrt(" + std::to_string(param_) + ")), p=" + std::to_string(p_);
    }
    return "?";
}

}  // namespace cleanring
