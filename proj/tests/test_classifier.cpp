#include <stdexcept>
#include "cleanring/classifier.hpp"
#include "doctest.h"

using namespace cleanring;

namespace {

AbelianGroup cyc(Int n) { return AbelianGroup::normalize({n}); }

CleannessClass fp(const BaseRing& R, const AbelianGroup& G) {
    return classify_first_principles(R, G).verdict;
}

}  // namespace

TEST_CASE("first principles examples") {
    CHECK(fp(BaseRing::rational(3), cyc(4)) == CleannessClass::Clean);
    CHECK(fp(BaseRing::cyclotomic(5, 3), cyc(4)) == CleannessClass::WeaklyCleanNotClean);
    CHECK(fp(BaseRing::quadratic(5, 11), cyc(5)) == CleannessClass::FeeblyCleanNotWeaklyClean);
}

TEST_CASE("first principles witness rows for the cyclotomic example") {
    ClassificationReport rep = classify_first_principles(BaseRing::cyclotomic(5, 3), cyc(4));
    REQUIRE(rep.witnesses.size() == 3);  // divisors 1, 2, 4
    CHECK(rep.witnesses[2].d == 4);
    CHECK(rep.witnesses[2].deg_phi == 2);
    CHECK(rep.witnesses[2].ord_norm == 1);  // 81 = 1 (mod 4)
    CHECK(rep.witnesses[2].max_ideals == 2);
    CHECK(rep.witnesses[2].lambda == 1);
}

TEST_CASE("witness rows cover exactly the divisors of exp(G), ascending") {
    for (const BaseRing& R : {BaseRing::rational(7), BaseRing::cyclotomic(4, 7),
                              BaseRing::quadratic(-6, 7)}) {
        for (Int n : {1, 2, 12, 36, 40}) {
            auto ws = divisor_witnesses(R, AbelianGroup::normalize({n}));
            auto ds = divisors(n);
            REQUIRE(ws.size() == ds.size());
            for (std::size_t i = 0; i < ds.size(); ++i) CHECK(ws[i].d == ds[i]);
        }
    }
}

TEST_CASE("classifier rejects p dividing exp(G)") {
    CHECK_THROWS_AS(classify_first_principles(BaseRing::rational(3), cyc(6)),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_theorem(BaseRing::rational(3), cyc(6)), std::invalid_argument);
}

TEST_CASE("theorem examples") {
    ClassificationReport a = classify_theorem(BaseRing::rational(5), cyc(4));
    CHECK(a.verdict == CleannessClass::WeaklyCleanNotClean);
    CHECK(a.matched_case == "thm1.3a");

    ClassificationReport b = classify_theorem(BaseRing::rational(3), cyc(11));
    CHECK(b.verdict == CleannessClass::WeaklyCleanNotClean);
    CHECK(b.matched_case == "thm1.3b");

    ClassificationReport c = classify_theorem(BaseRing::quadratic(5, 19), cyc(5));
    CHECK(c.verdict == CleannessClass::Clean);
    CHECK(c.matched_case == "main2.2.a.iii");
}

TEST_CASE("p = 2 over Q collapses onto clean") {
    // 2 is a primitive root mod 11 but not mod 7
    ClassificationReport a = classify_first_principles(BaseRing::rational(2), cyc(11));
    CHECK(a.verdict == CleannessClass::Clean);
    ClassificationReport b = classify_first_principles(BaseRing::rational(2), cyc(7));
    CHECK(b.verdict == CleannessClass::NotFeeblyClean);
    CHECK(classify_theorem(BaseRing::rational(2), cyc(11)).verdict == CleannessClass::Clean);
    CHECK_THROWS_AS(classify_first_principles(BaseRing::rational(2), cyc(4)),
                    std::invalid_argument);
}

TEST_CASE("trivial group is clean everywhere") {
    AbelianGroup t = AbelianGroup::normalize({1});
    for (const BaseRing& R : {BaseRing::rational(5), BaseRing::cyclotomic(8, 5),
                              BaseRing::quadratic(-7, 5)}) {
        CHECK(fp(R, t) == CleannessClass::Clean);
        CHECK(classify_theorem(R, t).verdict == CleannessClass::Clean);
    }
}

TEST_CASE("monotonicity: verdict class is consistent with the witness t-values") {
    std::vector<BaseRing> bases = {BaseRing::rational(3),     BaseRing::rational(7),
                                   BaseRing::cyclotomic(5, 3), BaseRing::cyclotomic(12, 7),
                                   BaseRing::quadratic(-1, 5), BaseRing::quadratic(-6, 7),
                                   BaseRing::quadratic(15, 13)};
    for (const auto& R : bases) {
        for (Int n = 1; n <= 60; ++n) {
            if (n % R.p() == 0) continue;
            ClassificationReport rep = classify_first_principles(R, cyc(n));
            Int max_t = 1;
            Int lambda_at_two = 0;
            for (const auto& w : rep.witnesses) {
                max_t = std::max(max_t, w.max_ideals);
                if (w.max_ideals == 2) lambda_at_two += w.lambda;
            }
            if (rep.verdict == CleannessClass::Clean) CHECK(max_t == 1);
            if (rep.verdict == CleannessClass::NotFeeblyClean) CHECK(max_t >= 3);
            if (rep.verdict == CleannessClass::WeaklyCleanNotClean) {
                CHECK(max_t == 2);
                CHECK(lambda_at_two == 1);
            }
            if (rep.verdict == CleannessClass::FeeblyCleanNotWeaklyClean) {
                CHECK(max_t == 2);
                CHECK(lambda_at_two != 1);
            }
        }
    }
}

TEST_CASE("same exponent, same clean verdict and feebly membership") {
    std::vector<BaseRing> bases = {BaseRing::rational(7), BaseRing::cyclotomic(9, 7),
                                   BaseRing::quadratic(-1, 7), BaseRing::quadratic(15, 11)};
    for (const auto& R : bases) {
        for (Int n = 1; n <= 40; ++n) {
            if (n % R.p() == 0) continue;
            CleannessClass a = fp(R, cyc(n));
            for (Int d : divisors(n)) {
                CleannessClass b = fp(R, AbelianGroup::normalize({d, n}));
                CHECK((a == CleannessClass::Clean) == (b == CleannessClass::Clean));
                bool fa = a != CleannessClass::NotFeeblyClean;
                bool fb = b != CleannessClass::NotFeeblyClean;
                CHECK(fa == fb);
            }
        }
    }
}

TEST_CASE("non-cyclic groups are never weakly-clean-not-clean when lambda doubles") {
    // two cyclic subgroups of top order force lambda(exp) >= 2
    BaseRing R = BaseRing::rational(59);
    AbelianGroup g = AbelianGroup::normalize({5, 5});
    CHECK(fp(R, g) == CleannessClass::FeeblyCleanNotWeaklyClean);
}

TEST_CASE("cross validation examples") {
    DiscrepancyLedger ledger = DiscrepancyLedger::bundled();

    AgreementRecord a = cross_validate(BaseRing::rational(3), cyc(4), ledger);
    CHECK(a.agree);
    CHECK(a.theorem_verdict == CleannessClass::Clean);

    AgreementRecord b = cross_validate(BaseRing::quadratic(-1, 5), cyc(4), ledger);
    CHECK_FALSE(b.agree);
    CHECK(b.first_principles_verdict == CleannessClass::Clean);
    CHECK(b.expected);  // d = -1 ledger entry

    for (Int n : {5, 8, 12, 33}) {
        AgreementRecord c = cross_validate(BaseRing::cyclotomic(1, 7), cyc(n), ledger);
        CHECK(c.agree);
        AgreementRecord d = cross_validate(BaseRing::cyclotomic(2, 7), cyc(n), ledger);
        CHECK(d.agree);
    }
}

TEST_CASE("unexpected disagreements are flagged when the ledger is empty") {
    DiscrepancyLedger none = DiscrepancyLedger::empty();
    AgreementRecord rec = cross_validate(BaseRing::quadratic(-1, 5), cyc(4), none);
    CHECK_FALSE(rec.agree);
    CHECK_FALSE(rec.expected);
}

TEST_CASE("cross validation holds over mixed group shapes") {
    DiscrepancyLedger ledger = DiscrepancyLedger::bundled();
    for (Int d = -10; d <= 10; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(d)) continue;
        for (Int p : {3, 5, 7, 11, 13, 17, 19, 23}) {
            BaseRing R = BaseRing::quadratic(d, p);
            for (Int n = 1; n <= 36; ++n) {
                if (n % p == 0) continue;
                for (Int dd : divisors(n)) {
                    AgreementRecord rec =
                        cross_validate(R, AbelianGroup::normalize({dd, n}), ledger);
                    REQUIRE((rec.agree || rec.expected));
                }
            }
        }
    }
}

TEST_CASE("corollary: Z_(p)[C_q] for primes p, q") {
    for (Int q = 2; q <= 50; ++q) {
        if (!is_prime(q)) continue;
        for (Int p = 3; p <= 100; p += 2) {
            if (!is_prime(p) || p == q) continue;
            CleannessClass v = fp(BaseRing::rational(p), cyc(q));
            Int o = mult_order(p, q);
            CHECK((v == CleannessClass::Clean) == (o == q - 1));
            bool weakly = v == CleannessClass::WeaklyCleanNotClean;
            bool feebly_not_clean = weakly || v == CleannessClass::FeeblyCleanNotWeaklyClean;
            CHECK(weakly == (q % 2 == 1 && 2 * o == q - 1));
            CHECK(feebly_not_clean == weakly);  // cyclic of prime order: the two coincide
        }
    }
}

TEST_CASE("worked family: p = 59, q = 5") {
    BaseRing R = BaseRing::rational(59);
    CHECK(mult_order(59, 25) == 10);
    CHECK(fp(R, cyc(25)) == CleannessClass::FeeblyCleanNotWeaklyClean);
    CHECK(fp(R, cyc(5)) == CleannessClass::WeaklyCleanNotClean);
    CHECK(fp(R, AbelianGroup::normalize({5, 5})) == CleannessClass::FeeblyCleanNotWeaklyClean);
    CHECK(classify_theorem(R, cyc(25)).verdict == CleannessClass::FeeblyCleanNotWeaklyClean);
    CHECK(classify_theorem(R, cyc(5)).verdict == CleannessClass::WeaklyCleanNotClean);
}
