#pragma once

#include <string>
#include <vector>

#include "cleanring/abelian.hpp"
#include "cleanring/ntheory.hpp"

namespace cleanring {

enum class CleannessClass {
    Clean,
    WeaklyCleanNotClean,
    FeeblyCleanNotWeaklyClean,
    NotFeeblyClean,
};

std::string to_string(CleannessClass c);

/// Result of matching one case list: whether some case applies and its label.
struct CaseMatch {
    bool holds = false;
    std::string label;
};

/// k with phi(n) = k * ord_n(p) when k is 1, 2 or 4; otherwise 0.
/// Requires an odd prime p with p not dividing n.
int prop26_direct(Int n, Int p);

/// Literal case list for phi(n) = k * ord_n(p), k in {1, 2, 4}. The
/// n = 2 (mod 4) reduction (replace n by n/2) is applied first.
CaseMatch prop26_cases(Int n, Int p, int k);

/// Direct divisor-quantified predicate of item 1..5:
///   1: ord_n(p) = phi(n)/2 odd
///   2: ord_n(p) = phi(n)/2 and ord_m(p) = phi(m) for all proper divisors m
///   3: ord_n(p) = phi(n)/4 odd
///   4: phi(n) = 4 ord_n(p) and phi(m) != 4 ord_m(p) for all proper divisors m
///   5: phi(n) = 4 ord_n(p) and phi(m) = ord_m(p) for all proper divisors m
bool prop32_direct(Int n, Int p, int item);

/// Case list of the requested item.
CaseMatch prop32_item(Int n, Int p, int item);

/// Verdict of one characterization table, with the matched case label and
/// the table region it was decided in.
struct TheoremVerdict {
    CleannessClass verdict = CleannessClass::NotFeeblyClean;
    std::string label;   // e.g. "thm1.3b", "main2.2.a.iii"; empty if no case matched
    std::string region;  // e.g. "thm1", "main1", "main2.2"
};

/// Rational base (odd p, p not dividing exp(G)).
TheoremVerdict thm1_verdict(Int p, const AbelianGroup& G);

/// Cyclotomic base Q(zeta_m), evaluated literally for any m >= 1.
TheoremVerdict main1_verdict(Int m, Int p, const AbelianGroup& G);

/// Quadratic base Q(sqrt(d)).
TheoremVerdict main2_verdict(Int d, Int p, const AbelianGroup& G);

}  // namespace cleanring
