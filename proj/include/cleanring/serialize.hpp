#pragma once

#include <string>
#include <vector>

#include "cleanring/classifier.hpp"
#include "cleanring/ffpoly.hpp"

namespace cleanring {

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(const std::string& name);

/// One survey line; `agree` is empty unless both classifiers ran.
struct SurveyRow {
    std::string base_kind;
    Int base_param = 0;
    Int p = 0;
    std::string group;  // normalized invariant factors, e.g. "2,12"
    std::string verdict;
    std::string matched_case;
    std::string agree;  // "", "yes", "expected-disagreement", "unexpected-disagreement"
};

/// Key-ordered JSON text of a report (byte-stable across runs).
std::string report_to_json(const ClassificationReport& rep);
std::string report_to_table(const ClassificationReport& rep);

std::string agreement_to_json(const ClassificationReport& fp, const ClassificationReport& th,
                              const AgreementRecord& rec);
std::string agreement_to_table(const ClassificationReport& fp, const ClassificationReport& th,
                               const AgreementRecord& rec);

std::string csv_header();
std::string row_to_csv(const SurveyRow& row);
/// Inverse of row_to_csv over a full document (header line included).
std::vector<SurveyRow> parse_csv(const std::string& text);

std::string rows_to_json(const std::vector<SurveyRow>& rows);
std::vector<SurveyRow> parse_rows_json(const std::string& text);
std::string rows_to_table(const std::vector<SurveyRow>& rows);

SurveyRow report_to_row(const ClassificationReport& th);

/// Factorization-oracle record in the same key-ordered JSON stream style.
std::string oracle_to_json(const OracleRecord& rec);

}  // namespace cleanring
