#include "cleanring/verify.hpp"

#include <sstream>

#include "cleanring/ffpoly.hpp"
#include "cleanring/serialize.hpp"

namespace cleanring {

std::vector<Int> odd_primes_upto(Int p_max) {
    std::vector<Int> ps;
    for (Int p = 3; p <= p_max; p += 2)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

std::vector<Int> squarefree_range(Int d_abs_max) {
    std::vector<Int> ds;
    for (Int d = -d_abs_max; d <= d_abs_max; ++d)
        if (d != 0 && d != 1 && is_squarefree(d)) ds.push_back(d);
    return ds;
}

SweepSummary verify_oracle(Int d_max, Int p_max) {
    SweepSummary s;
    for (Int d = 1; d <= d_max; ++d) {
        for (Int p : odd_primes_upto(p_max)) {
            if (d % p == 0) continue;
            ++s.checked;
            OracleRecord rec = verify_cyclotomic_factorization(d, p);
            if (!rec.pass) {
                ++s.failures;
                s.failure_lines.push_back(oracle_to_json(rec));
            }
        }
    }
    return s;
}

SweepSummary verify_prop26(Int n_max, Int p_max) {
    SweepSummary s;
    for (Int n = 1; n <= n_max; ++n) {
        for (Int p : odd_primes_upto(p_max)) {
            if (n % p == 0) continue;
            int k = prop26_direct(n, p);
            for (int kk : {1, 2, 4}) {
                ++s.checked;
                CaseMatch cm = prop26_cases(n, p, kk);
                if (cm.holds != (k == kk)) {
                    ++s.failures;
                    std::ostringstream os;
                    os << "prop26 n=" << n << " p=" << p << " k=" << kk << " cases="
                       << (cm.holds ? cm.label : "none") << " direct=" << k;
                    s.failure_lines.push_back(os.str());
                }
            }
        }
    }
    return s;
}

SweepSummary verify_prop32(Int n_max, Int p_max) {
    SweepSummary s;
    for (Int n = 1; n <= n_max; ++n) {
        for (Int p : odd_primes_upto(p_max)) {
            if (n % p == 0) continue;
            for (int item = 1; item <= 5; ++item) {
                ++s.checked;
                bool direct = prop32_direct(n, p, item);
                CaseMatch cm = prop32_item(n, p, item);
                if (cm.holds != direct) {
                    ++s.failures;
                    std::ostringstream os;
                    os << "prop32 n=" << n << " p=" << p << " item=" << item << " cases="
                       << (cm.holds ? cm.label : "none") << " direct=" << (direct ? "yes" : "no");
                    s.failure_lines.push_back(os.str());
                }
            }
        }
    }
    return s;
}

namespace {

void cross_check(const BaseRing& R, const AbelianGroup& G, const DiscrepancyLedger& ledger,
                 SweepSummary& s) {
    ++s.checked;
    AgreementRecord rec = cross_validate(R, G, ledger);
    if (rec.agree) return;
    std::ostringstream os;
    os << R.to_string() << " G=C_" << G.to_string() << " theorem=" << to_string(rec.theorem_verdict)
       << " [" << rec.matched_case << "] first-principles="
       << to_string(rec.first_principles_verdict);
    if (rec.expected) {
        ++s.expected_disagreements;
        s.expected_lines.push_back(os.str());
    } else {
        ++s.failures;
        s.failure_lines.push_back(os.str());
    }
}

}  // namespace

SweepSummary verify_thm1(Int n_max, Int p_max, const DiscrepancyLedger& ledger) {
    SweepSummary s;
    for (Int n = 1; n <= n_max; ++n) {
        for (Int p : odd_primes_upto(p_max)) {
            if (n % p == 0) continue;
            BaseRing R = BaseRing::rational(p);
            cross_check(R, AbelianGroup::normalize({n}), ledger, s);
            for (Int d : divisors(n))
                if (d > 1) cross_check(R, AbelianGroup::normalize({d, n}), ledger, s);
        }
    }
    return s;
}

SweepSummary verify_main1(Int m_max, Int n_max, Int p_max, const DiscrepancyLedger& ledger) {
    SweepSummary s;
    for (Int m = 1; m <= m_max; ++m) {
        for (Int p : odd_primes_upto(p_max)) {
            if (m % p == 0) continue;
            BaseRing R = BaseRing::cyclotomic(m, p);
            for (Int n = 1; n <= n_max; ++n) {
                if (n % p == 0) continue;
                cross_check(R, AbelianGroup::normalize({n}), ledger, s);
                cross_check(R, AbelianGroup::normalize({n, n}), ledger, s);
            }
        }
    }
    return s;
}

SweepSummary verify_main2(Int d_abs_max, Int exp_max, Int p_max, const DiscrepancyLedger& ledger) {
    SweepSummary s;
    for (Int d : squarefree_range(d_abs_max)) {
        for (Int p : odd_primes_upto(p_max)) {
            BaseRing R = BaseRing::quadratic(d, p);
            for (Int n = 1; n <= exp_max; ++n) {
                if (n % p == 0) continue;
                cross_check(R, AbelianGroup::normalize({n}), ledger, s);
                cross_check(R, AbelianGroup::normalize({n, n}), ledger, s);
            }
        }
    }
    return s;
}

}  // namespace cleanring
