#include "cleanring/classifier.hpp"

#include <numeric>
#include <stdexcept>

namespace cleanring {

std::string to_string(Method m) {
    return m == Method::FirstPrinciples ? "first-principles" : "theorem";
}

namespace {

void check_preconditions(const BaseRing& R, const AbelianGroup& G) {
    if (G.exponent() % R.p() == 0)
        throw std::invalid_argument("classify: p divides exp(G)");
    // p = 2 outside the rational base is already rejected by the BaseRing
    // factories; over Q it forces odd exp(G) via the divisibility check.
}

}  // namespace

std::vector<DivisorWitness> divisor_witnesses(const BaseRing& R, const AbelianGroup& G) {
    std::vector<DivisorWitness> out;
    Int f = R.residue_exponent();
    for (Int d : divisors(G.exponent())) {
        DivisorWitness w;
        w.d = d;
        w.deg_phi = R.local_cyclotomic_degree(d);
        Int op = mult_order(R.p(), d);
        w.ord_norm = op / std::gcd(f, op);
        if (w.deg_phi % w.ord_norm != 0)
            throw std::logic_error("witness: deg phi_d not divisible by ord_d(N)");
        w.max_ideals = w.deg_phi / w.ord_norm;
        if (euler_phi(d) % w.deg_phi != 0)
            throw std::logic_error("witness: phi(d) not divisible by deg phi_d");
        w.nu = euler_phi(d) / w.deg_phi;
        w.mu = G.cyclic_subgroup_count(d);
        w.lambda = w.mu * w.nu;
        out.push_back(w);
    }
    return out;
}

ClassificationReport classify_first_principles(const BaseRing& R, const AbelianGroup& G) {
    check_preconditions(R, G);
    ClassificationReport rep;
    rep.base = R;
    rep.group = G;
    rep.method = Method::FirstPrinciples;
    rep.witnesses = divisor_witnesses(R, G);

    if (R.p() == 2) {
        // 2 is not a unit, so the weakly and feebly classes collapse onto
        // clean; clean holds exactly when 2 generates (Z/exp(G))^x.
        bool clean = is_primitive_root(2, G.exponent());
        rep.verdict = clean ? CleannessClass::Clean : CleannessClass::NotFeeblyClean;
        rep.notes.push_back("p=2: weakly clean and feebly clean coincide with clean");
        return rep;
    }

    bool all_one = true;
    bool all_le_two = true;
    Int lambda_at_two = 0;
    for (const auto& w : rep.witnesses) {
        if (w.max_ideals != 1) all_one = false;
        if (w.max_ideals > 2) all_le_two = false;
        if (w.max_ideals == 2) lambda_at_two += w.lambda;
    }
    if (all_one)
        rep.verdict = CleannessClass::Clean;
    else if (!all_le_two)
        rep.verdict = CleannessClass::NotFeeblyClean;
    else if (lambda_at_two == 1)
        rep.verdict = CleannessClass::WeaklyCleanNotClean;
    else
        rep.verdict = CleannessClass::FeeblyCleanNotWeaklyClean;
    return rep;
}

ClassificationReport classify_theorem(const BaseRing& R, const AbelianGroup& G) {
    check_preconditions(R, G);
    ClassificationReport rep;
    rep.base = R;
    rep.group = G;
    rep.method = Method::Theorem;
    rep.witnesses = divisor_witnesses(R, G);

    if (R.p() == 2) {
        bool clean = is_primitive_root(2, G.exponent());
        rep.verdict = clean ? CleannessClass::Clean : CleannessClass::NotFeeblyClean;
        rep.region = "p2";
        if (clean) rep.matched_case = "p2.primitive-root";
        rep.notes.push_back("p=2: weakly clean and feebly clean coincide with clean");
        return rep;
    }

    TheoremVerdict tv;
    switch (R.kind()) {
        case BaseKind::Rational:
            tv = thm1_verdict(R.p(), G);
            break;
        case BaseKind::Cyclotomic:
            if (R.parameter() <= 2) {
                // Q(zeta_1) = Q(zeta_2) = Q: the rational table applies
                tv = thm1_verdict(R.p(), G);
                rep.notes.push_back("cyclotomic base with m <= 2 reduces to Q; rational table used");
            } else {
                tv = main1_verdict(R.parameter(), R.p(), G);
            }
            break;
        case BaseKind::Quadratic:
            tv = main2_verdict(R.parameter(), R.p(), G);
            if (G.is_trivial())
                rep.notes.push_back("trivial group lies outside the quadratic table's hypothesis; "
                                    "classified clean directly");
            break;
    }
    rep.verdict = tv.verdict;
    rep.matched_case = tv.label;
    rep.region = tv.region;
    return rep;
}

AgreementRecord cross_validate(const BaseRing& R, const AbelianGroup& G,
                               const DiscrepancyLedger& ledger) {
    ClassificationReport fp = classify_first_principles(R, G);
    ClassificationReport th = classify_theorem(R, G);
    AgreementRecord rec;
    rec.theorem_verdict = th.verdict;
    rec.first_principles_verdict = fp.verdict;
    rec.matched_case = th.matched_case.empty() ? th.region : th.matched_case;
    rec.agree = fp.verdict == th.verdict;
    if (!rec.agree) {
        auto note = ledger.match(R.kind_name(), R.parameter(), rec.matched_case);
        rec.expected = note.has_value();
        if (note) rec.ledger_note = *note;
    }
    return rec;
}

}  // namespace cleanring
