#include "cleanring/ledger.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cleanring {

namespace {

// Same content as data/discrepancy_ledger.json; the bundled copy keeps the
// CLI usable when the repo file is not reachable from the install location.
// A unit test asserts the two stay in sync.
constexpr const char* kBundledLedger = R"JSON(
{
  "version": 1,
  "entries": [
    {
      "base": "quadratic",
      "d": -1,
      "label_prefix": "main2",
      "note": "d=-1 (discriminant -4) is missing from the quadratic table's discriminant case analysis; e.g. exp(G)=4 with p=1 (mod 4) is clean but unlisted, and the 2-power families over Z[i] are misreported throughout regions 2 and 3."
    },
    {
      "base": "quadratic",
      "label_prefix": "main2.1.c.iii",
      "note": "Case 1.c.iii (exp=4q, p a primitive root of q) omits the hypothesis p=3 (mod 4); for p=1 (mod 4) the divisor 4 is not clean and the ring is feebly clean only. The rational table carries the same condition in case 3c."
    },
    {
      "base": "quadratic",
      "label_prefix": "main2.1.b.ii",
      "note": "Weakly-clean instances with (Delta/p)=-1 and exp(G) an odd prime q with ord_q(p)=(q-1)/2 odd are absent from case 1.c, which admits only exp=4 under an inert prime; the table reports feebly."
    },
    {
      "base": "quadratic",
      "label_prefix": "main2.1.b.iii",
      "note": "Weakly-clean instances with (Delta/p)=-1 and exp(G) an odd prime q with p a primitive root of q (so ord_q(p^2)=(q-1)/2) are absent from case 1.c; the table reports feebly."
    },
    {
      "base": "quadratic",
      "abs_d": [2],
      "label_prefix": "main2.2",
      "note": "Case 2.b.ii admits only p=9 (mod 16); p=+-7 (mod 16) also gives a feebly clean ring for exp=2^r, r>=4 with |Delta|=8, because the local degree of the 2-power cyclotomic polynomials halves."
    },
    {
      "base": "quadratic",
      "abs_d": [6, 10, 14, 22, 26, 34, 38, 46, 58, 62],
      "label_prefix": "main2.2",
      "note": "Cases 2.b.viii and 2.b.ix omit |Delta|=8q (d=+-2q) from their allowed discriminant sets for exp=8q^r and exp=2^t q^r; the table reports not-feebly where the divisor computation gives feebly."
    },
    {
      "base": "quadratic",
      "label_prefix": "main2.3.c",
      "note": "Case 3.c demands an irreducible q-th cyclotomic polynomial together with |Delta|=q dividing q, which forces the halved degree phi(q)/2 and is unsatisfiable; the case is vacuous as stated (lambda(q)=2 mu(q)>=2, so no weakly instances exist there)."
    },
    {
      "base": "cyclotomic",
      "m_mod4": 2,
      "label_prefix": "main1.2c",
      "note": "Non-canonical conductor m=2 (mod 4) (Q(zeta_m)=Q(zeta_{m/2})): weakly-clean rings whose top divisor splits with n'=4 are missed by case 3 and reported feebly via 2c."
    },
    {
      "base": "cyclotomic",
      "m_mod4": 2,
      "label_prefix": "main1.3c",
      "note": "Non-canonical conductor m=2 (mod 4): case 3c asserts every proper divisor is clean, which fails when some proper divisor d<n also has d'=2; the table reports weakly where the divisor computation gives feebly."
    },
    {
      "base": "cyclotomic",
      "label_prefix": "main1.3a",
      "note": "The divisor quantifier in case 3a is evaluated over proper divisors d != n (the d = n instance contradicts the case's own gcd=2 requirement); no disagreement is observed under this reading."
    }
  ]
}
)JSON";

}  // namespace

DiscrepancyLedger DiscrepancyLedger::parse(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("ledger: invalid JSON: ") + e.what());
    }
    DiscrepancyLedger ledger;
    ledger.version_ = j.value("version", 1);
    for (const auto& e : j.value("entries", nlohmann::json::array())) {
        LedgerEntry entry;
        entry.base = e.at("base").get<std::string>();
        entry.label_prefix = e.at("label_prefix").get<std::string>();
        entry.note = e.value("note", "");
        if (e.contains("d")) entry.d = e["d"].get<Int>();
        if (e.contains("abs_d")) entry.abs_d = e["abs_d"].get<std::vector<Int>>();
        if (e.contains("m_mod4")) entry.m_mod4 = e["m_mod4"].get<Int>();
        ledger.entries_.push_back(std::move(entry));
    }
    return ledger;
}

DiscrepancyLedger DiscrepancyLedger::bundled() { return parse(kBundledLedger); }

DiscrepancyLedger DiscrepancyLedger::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("ledger: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

DiscrepancyLedger DiscrepancyLedger::empty() { return DiscrepancyLedger(); }

std::optional<std::string> DiscrepancyLedger::match(const std::string& base_kind, Int param,
                                                    const std::string& label) const {
    for (const auto& e : entries_) {
        if (e.base != base_kind) continue;
        if (label.rfind(e.label_prefix, 0) != 0) continue;
        if (e.d && *e.d != param) continue;
        if (!e.abs_d.empty()) {
            Int a = param < 0 ? -param : param;
            if (std::find(e.abs_d.begin(), e.abs_d.end(), a) == e.abs_d.end()) continue;
        }
        if (e.m_mod4) {
            Int r = param % 4;
            if (r < 0) r += 4;
            if (r != *e.m_mod4) continue;
        }
        return e.note;
    }
    return std::nullopt;
}

}  // namespace cleanring
