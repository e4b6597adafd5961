#include <numeric>
#include <stdexcept>
#include "cleanring/ffpoly.hpp"
#include "doctest.h"

using namespace cleanring;

TEST_CASE("cyclotomic polynomial examples") {
    CHECK(cyclotomic_polynomial(1) == IntPoly({-1, 1}));
    CHECK(cyclotomic_polynomial(12) == IntPoly({1, 0, -1, 0, 1}));
    for (Int q : {2, 3, 5, 7, 13}) {
        std::vector<Int> ones(q, 1);
        CHECK(cyclotomic_polynomial(q) == IntPoly(ones));
    }
}

TEST_CASE("deg Phi_d = phi(d) and Phi_d is monic") {
    for (Int d = 1; d <= 300; ++d) {
        IntPoly f = cyclotomic_polynomial(d);
        REQUIRE(f.degree() == euler_phi(d));
        REQUIRE(f.leading() == 1);
    }
}

TEST_CASE("product of Phi_d over d | n equals x^n - 1") {
    for (Int n = 1; n <= 120; ++n) {
        IntPoly prod = IntPoly::one();
        for (Int d : divisors(n)) prod = prod * cyclotomic_polynomial(d);
        REQUIRE(prod == IntPoly::x_pow_minus_one(n));
    }
}

TEST_CASE("ddf examples") {
    using Pairs = std::vector<std::pair<Int, Int>>;
    CHECK(ddf_degrees(ModPoly::reduce(cyclotomic_polynomial(12), 5)) == Pairs{{2, 2}});
    CHECK(ddf_degrees(ModPoly::reduce(cyclotomic_polynomial(5), 3)) == Pairs{{4, 1}});
    CHECK(ddf_degrees(ModPoly(7, {-1, 0, 1})) == Pairs{{1, 2}});
    // x^2 mod 7 is not squarefree
    CHECK_THROWS_AS(ddf_degrees(ModPoly(7, {0, 0, 1})), std::invalid_argument);
}

namespace {

// all monic polynomials of the given degree over F_p
std::vector<ModPoly> monic_polys(Int p, Int deg) {
    std::vector<ModPoly> out;
    std::vector<Int> c(deg + 1, 0);
    c[deg] = 1;
    Int total = 1;
    for (Int i = 0; i < deg; ++i) total *= p;
    for (Int code = 0; code < total; ++code) {
        Int v = code;
        for (Int i = 0; i < deg; ++i) {
            c[i] = v % p;
            v /= p;
        }
        out.emplace_back(p, c);
    }
    return out;
}

bool is_irreducible(const ModPoly& f, const std::vector<std::vector<ModPoly>>& lower) {
    for (const auto& bucket : lower)
        for (const auto& g : bucket)
            if ((f % g).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("ddf matches exhaustive trial division for small inputs") {
    for (Int p : {3, 5, 7, 11, 13}) {
        // irreducibles of degree 1..3
        std::vector<std::vector<ModPoly>> irr(4);
        for (Int deg = 1; deg <= 3; ++deg) {
            std::vector<std::vector<ModPoly>> lower(irr.begin() + 1, irr.begin() + deg);
            for (const auto& f : monic_polys(p, deg))
                if (is_irreducible(f, lower)) irr[deg].push_back(f);
        }
        // factor a sample of squarefree degree <= 4 polynomials both ways
        int tested = 0;
        std::vector<ModPoly> pool;
        for (Int deg = 2; deg <= 4; ++deg)
            for (const auto& f : monic_polys(p, deg)) pool.push_back(f);
        for (const auto& f : pool) {
            if (poly_gcd(f, f.derivative()).degree() != 0) continue;
            if (++tested > 150) break;
            std::vector<std::pair<Int, Int>> expected;
            ModPoly rem = f;
            for (Int deg = 1; deg <= 3 && rem.degree() > 0; ++deg) {
                Int count = 0;
                for (const auto& g : irr[deg]) {
                    if (rem.degree() >= deg && (rem % g).is_zero()) {
                        ++count;
                        // divide out (g is monic)
                        std::vector<Int> rc = rem.coeffs();
                        std::vector<Int> qc(rem.degree() - deg + 1, 0);
                        for (Int i = rem.degree(); i >= deg; --i) {
                            Int lead = rc[i];
                            if (lead == 0) continue;
                            qc[i - deg] = lead;
                            for (Int j = 0; j <= deg; ++j) {
                                Int v = rc[i - deg + j] - lead * g.coeffs()[j] % p;
                                v %= p;
                                rc[i - deg + j] = v < 0 ? v + p : v;
                            }
                        }
                        rem = ModPoly(p, qc);
                    }
                }
                if (count) expected.emplace_back(deg, count);
            }
            if (rem.degree() == 4) expected.emplace_back(4, 1);
            REQUIRE(ddf_degrees(f) == expected);
        }
    }
}

TEST_CASE("oracle record examples") {
    OracleRecord a = verify_cyclotomic_factorization(12, 5);
    CHECK(a.pass);
    CHECK(a.expected_degree == 2);
    CHECK(a.expected_count == 2);
    OracleRecord b = verify_cyclotomic_factorization(11, 3);
    CHECK(b.pass);
    CHECK(b.expected_degree == 5);
    CHECK(b.expected_count == 2);
    OracleRecord c = verify_cyclotomic_factorization(1, 13);
    CHECK(c.pass);
    CHECK(c.expected_degree == 1);
    CHECK(c.expected_count == 1);
    CHECK_THROWS_AS(verify_cyclotomic_factorization(10, 5), std::invalid_argument);
}

TEST_CASE("order under residue extension: ord_d(p^f) identity") {
    for (Int d = 1; d <= 100; d += 3) {
        for (Int p : {3, 5, 7, 11}) {
            if (d % p == 0) continue;
            Int op = mult_order(p, d);
            for (Int f = 1; f <= 6; ++f) {
                Int pf = pow_mod(p, f, d);
                if (std::gcd(pf, d) != 1) continue;
                REQUIRE(mult_order(pf, d) == op / std::gcd(f, op));
            }
        }
    }
}
