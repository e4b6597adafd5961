#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cleanring/ntheory.hpp"

namespace cleanring {

/// One expected theorem-vs-first-principles disagreement pattern. A
/// disagreement (base kind, base parameter, theorem case label) matches when
/// the kinds agree, the label starts with label_prefix, and every present
/// constraint holds.
struct LedgerEntry {
    std::string base;          // "rational" | "cyclotomic" | "quadratic"
    std::string label_prefix;  // matched against the theorem case label / region
    std::optional<Int> d;      // exact quadratic parameter
    std::vector<Int> abs_d;    // |d| must be one of these, when nonempty
    std::optional<Int> m_mod4; // cyclotomic m mod 4 constraint
    std::string note;
};

class DiscrepancyLedger {
public:
    /// Entries shipped with the library.
    static DiscrepancyLedger bundled();
    /// Parse a ledger JSON file ({"version": 1, "entries": [...]}).
    static DiscrepancyLedger load_file(const std::string& path);
    static DiscrepancyLedger parse(const std::string& json_text);
    /// Empty ledger: every disagreement is unexpected.
    static DiscrepancyLedger empty();

    /// Note of the first matching entry, or nullopt if the disagreement is
    /// not covered.
    std::optional<std::string> match(const std::string& base_kind, Int param,
                                     const std::string& label) const;

    int version() const { return version_; }
    const std::vector<LedgerEntry>& entries() const { return entries_; }

private:
    int version_ = 1;
    std::vector<LedgerEntry> entries_;
};

}  // namespace cleanring
