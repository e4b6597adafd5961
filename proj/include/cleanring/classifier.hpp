#pragma once

#include <string>
#include <vector>

#include "cleanring/abelian.hpp"
#include "cleanring/base_ring.hpp"
#include "cleanring/cases.hpp"
#include "cleanring/ledger.hpp"

namespace cleanring {

enum class Method { FirstPrinciples, Theorem };

std::string to_string(Method m);

/// Per-divisor data backing a verdict: for each divisor d of exp(G),
/// the local cyclotomic degree, the order of the residue size mod d, the
/// maximal-ideal count t_d = deg/ord, and the multiplicities mu, nu,
/// lambda = mu * nu.
struct DivisorWitness {
    Int d;
    Int deg_phi;
    Int ord_norm;
    Int max_ideals;
    Int mu;
    Int nu;
    Int lambda;
};

struct ClassificationReport {
    BaseRing base;
    AbelianGroup group;
    Method method = Method::FirstPrinciples;
    CleannessClass verdict = CleannessClass::NotFeeblyClean;
    std::string matched_case;  // theorem method only; empty when no case fired
    std::string region;        // theorem table region ("thm1", "main1", "main2.2", ...)
    std::vector<DivisorWitness> witnesses;  // one per divisor of exp(G), ascending
    std::vector<std::string> notes;
};

/// Witness rows shared by both classifiers.
std::vector<DivisorWitness> divisor_witnesses(const BaseRing& R, const AbelianGroup& G);

/// Decide cleanness from the maximal-ideal counts t_d and the d-numbers.
/// Rejects p | exp(G); p = 2 only over the rational base.
ClassificationReport classify_first_principles(const BaseRing& R, const AbelianGroup& G);

/// Evaluate the literal characterization table for the base kind. The
/// cyclotomic bases m = 1, 2 describe Q itself and are dispatched to the
/// rational table.
ClassificationReport classify_theorem(const BaseRing& R, const AbelianGroup& G);

struct AgreementRecord {
    bool agree = false;
    CleannessClass theorem_verdict;
    CleannessClass first_principles_verdict;
    std::string matched_case;  // theorem label (or region) used for ledger lookup
    bool expected = false;     // disagreement matched a ledger entry
    std::string ledger_note;
};

/// Run both classifiers and grade the disagreement against the ledger.
AgreementRecord cross_validate(const BaseRing& R, const AbelianGroup& G,
                               const DiscrepancyLedger& ledger);

}  // namespace cleanring
