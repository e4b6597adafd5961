#include <stdexcept>
#include <fstream>
#include <sstream>

#include "cleanring/serialize.hpp"
#include "doctest.h"

using namespace cleanring;

namespace {

std::vector<SurveyRow> sample_rows() {
    std::vector<SurveyRow> rows;
    rows.push_back({"rational", 0, 3, "11", "weakly-clean-not-clean", "thm1.3b", "yes"});
    rows.push_back({"quadratic", -1, 5, "4", "not-feebly-clean", "main2.2", "expected-disagreement"});
    rows.push_back({"cyclotomic", 5, 3, "2,4", "weakly-clean-not-clean", "main1.3a", "yes"});
    return rows;
}

}  // namespace

TEST_CASE("csv round trip, including quoted group fields") {
    auto rows = sample_rows();
    std::ostringstream doc;
    doc << csv_header() << "\n";
    for (const auto& r : rows) doc << row_to_csv(r) << "\n";
    auto parsed = parse_csv(doc.str());
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].base_kind == rows[i].base_kind);
        CHECK(parsed[i].base_param == rows[i].base_param);
        CHECK(parsed[i].p == rows[i].p);
        CHECK(parsed[i].group == rows[i].group);
        CHECK(parsed[i].verdict == rows[i].verdict);
        CHECK(parsed[i].matched_case == rows[i].matched_case);
        CHECK(parsed[i].agree == rows[i].agree);
    }
}

TEST_CASE("json rows round trip and emissions are byte stable") {
    auto rows = sample_rows();
    std::string a = rows_to_json(rows);
    std::string b = rows_to_json(parse_rows_json(a));
    CHECK(a == b);
}

TEST_CASE("report json is byte stable") {
    ClassificationReport rep =
        classify_theorem(BaseRing::cyclotomic(5, 3), AbelianGroup::parse("4"));
    CHECK(report_to_json(rep) == report_to_json(rep));
    CHECK(report_to_json(rep).find("\"matched_case\"") != std::string::npos);
}

TEST_CASE("bundled ledger parses and has the shipped shape") {
    DiscrepancyLedger ledger = DiscrepancyLedger::bundled();
    CHECK(ledger.version() == 1);
    CHECK(ledger.entries().size() >= 8);
    CHECK(ledger.match("quadratic", -1, "main2.2.b.0").has_value());
    CHECK(ledger.match("quadratic", -1, "main2.3.b.01").has_value());
    CHECK(ledger.match("quadratic", 5, "main2.1.c.iii").has_value());
    CHECK_FALSE(ledger.match("quadratic", 5, "main2.2.a.iii").has_value());
    CHECK(ledger.match("cyclotomic", 6, "main1.3c").has_value());
    CHECK_FALSE(ledger.match("cyclotomic", 5, "main1.3c").has_value());
    CHECK_FALSE(ledger.match("rational", 0, "thm1.1").has_value());
}

TEST_CASE("bundled ledger matches the shipped data file") {
#ifdef CLEANRING_BUNDLED_LEDGER
    DiscrepancyLedger file = DiscrepancyLedger::load_file(CLEANRING_BUNDLED_LEDGER);
    DiscrepancyLedger built = DiscrepancyLedger::bundled();
    REQUIRE(file.entries().size() == built.entries().size());
    for (std::size_t i = 0; i < file.entries().size(); ++i) {
        CHECK(file.entries()[i].base == built.entries()[i].base);
        CHECK(file.entries()[i].label_prefix == built.entries()[i].label_prefix);
        CHECK(file.entries()[i].d == built.entries()[i].d);
        CHECK(file.entries()[i].abs_d == built.entries()[i].abs_d);
        CHECK(file.entries()[i].m_mod4 == built.entries()[i].m_mod4);
        CHECK(file.entries()[i].note == built.entries()[i].note);
    }
#endif
}

TEST_CASE("oracle record serialization") {
    OracleRecord rec = verify_cyclotomic_factorization(12, 5);
    std::string j = oracle_to_json(rec);
    CHECK(j == R"({"d":12,"p":5,"expected_degree":2,"expected_count":2,)"
               R"("observed":[{"degree":2,"count":2}],"pass":true})");
}

TEST_CASE("ledger rejects malformed json") {
    CHECK_THROWS_AS(DiscrepancyLedger::parse("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(DiscrepancyLedger::load_file("/nonexistent/ledger.json"),
                    std::invalid_argument);
}
