#pragma once

#include <string>
#include <vector>

#include "cleanring/classifier.hpp"

namespace cleanring {

struct SweepSummary {
    long long checked = 0;
    long long failures = 0;
    long long expected_disagreements = 0;
    std::vector<std::string> failure_lines;   // every unexpected failure
    std::vector<std::string> expected_lines;  // ledgered disagreements seen

    bool ok() const { return failures == 0; }
};

/// Distinct-degree factorization of Phi_d mod p against the order/count
/// prediction, for all d <= d_max and odd primes p <= p_max with p not
/// dividing d.
SweepSummary verify_oracle(Int d_max, Int p_max);

/// Case lists versus the direct predicate phi(n) = k ord_n(p), k in {1,2,4}.
SweepSummary verify_prop26(Int n_max, Int p_max);

/// Items 1..5 versus their direct divisor-quantified predicates.
SweepSummary verify_prop32(Int n_max, Int p_max);

/// Rational table versus first principles over C_n and C_d + C_n (d | n).
SweepSummary verify_thm1(Int n_max, Int p_max, const DiscrepancyLedger& ledger);

/// Cyclotomic table versus first principles over C_n and C_n + C_n.
SweepSummary verify_main1(Int m_max, Int n_max, Int p_max, const DiscrepancyLedger& ledger);

/// Quadratic table versus first principles over C_n and C_n + C_n,
/// squarefree |d| <= d_abs_max.
SweepSummary verify_main2(Int d_abs_max, Int exp_max, Int p_max, const DiscrepancyLedger& ledger);

std::vector<Int> odd_primes_upto(Int p_max);
std::vector<Int> squarefree_range(Int d_abs_max);

}  // namespace cleanring
