#include "cleanring/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cleanring {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("format must be table, json or csv");
}

namespace {

ordered_json base_to_json(const BaseRing& base) {
    ordered_json j;
    j["kind"] = base.kind_name();
    if (base.kind() == BaseKind::Cyclotomic) j["m"] = base.parameter();
    if (base.kind() == BaseKind::Quadratic) {
        j["d"] = base.parameter();
        j["discriminant"] = base.discriminant();
        j["legendre_delta"] = base.legendre_delta();
    }
    return j;
}

ordered_json report_json(const ClassificationReport& rep) {
    ordered_json j;
    j["base"] = base_to_json(rep.base);
    j["p"] = rep.base.p();
    j["group"] = rep.group.to_string();
    j["method"] = to_string(rep.method);
    j["verdict"] = to_string(rep.verdict);
    j["matched_case"] = rep.matched_case;
    ordered_json ws = ordered_json::array();
    for (const auto& w : rep.witnesses) {
        ordered_json wj;
        wj["d"] = w.d;
        wj["deg_phi"] = w.deg_phi;
        wj["ord_norm"] = w.ord_norm;
        wj["max_ideals"] = w.max_ideals;
        wj["mu"] = w.mu;
        wj["nu"] = w.nu;
        wj["lambda"] = w.lambda;
        ws.push_back(wj);
    }
    j["witnesses"] = ws;
    j["notes"] = rep.notes;
    return j;
}

}  // namespace

std::string report_to_json(const ClassificationReport& rep) {
    return report_json(rep).dump(2) + "\n";
}

std::string report_to_table(const ClassificationReport& rep) {
    std::ostringstream out;
    out << "base:    " << rep.base.to_string() << "\n";
    out << "group:   C_" << rep.group.to_string();
    out << "  (order " << rep.group.order() << ", exponent " << rep.group.exponent() << ")\n";
    out << "method:  " << to_string(rep.method) << "\n";
    out << "verdict: " << to_string(rep.verdict);
    if (!rep.matched_case.empty()) out << "  [" << rep.matched_case << "]";
    out << "\n";
    out << "  d     deg_phi  ord_N  t_d  mu  nu  lambda\n";
    for (const auto& w : rep.witnesses) {
        out << "  " << w.d << "\t" << w.deg_phi << "\t" << w.ord_norm << "\t" << w.max_ideals
            << "\t" << w.mu << "\t" << w.nu << "\t" << w.lambda << "\n";
    }
    for (const auto& n : rep.notes) out << "note: " << n << "\n";
    return out.str();
}

std::string agreement_to_json(const ClassificationReport& fp, const ClassificationReport& th,
                              const AgreementRecord& rec) {
    ordered_json j;
    j["agree"] = rec.agree;
    j["theorem_verdict"] = to_string(rec.theorem_verdict);
    j["first_principles_verdict"] = to_string(rec.first_principles_verdict);
    j["matched_case"] = rec.matched_case;
    if (!rec.agree) {
        j["expected"] = rec.expected;
        j["ledger_note"] = rec.ledger_note;
    }
    j["theorem"] = ordered_json::parse(report_to_json(th));
    j["first_principles"] = ordered_json::parse(report_to_json(fp));
    return j.dump(2) + "\n";
}

std::string agreement_to_table(const ClassificationReport& fp, const ClassificationReport& th,
                               const AgreementRecord& rec) {
    std::ostringstream out;
    out << report_to_table(th);
    out << "first-principles verdict: " << to_string(fp.verdict) << "\n";
    if (rec.agree) {
        out << "agreement: yes\n";
    } else {
        out << "agreement: no (" << (rec.expected ? "expected" : "UNEXPECTED") << " disagreement)\n";
        if (!rec.ledger_note.empty()) out << "ledger: " << rec.ledger_note << "\n";
    }
    return out.str();
}

std::string csv_header() { return "base_kind,base_param,p,group,verdict,matched_case,agree"; }

namespace {

std::string csv_quote(const std::string& v) {
    if (v.find(',') == std::string::npos && v.find('"') == std::string::npos) return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string row_to_csv(const SurveyRow& row) {
    std::ostringstream out;
    out << row.base_kind << ',' << row.base_param << ',' << row.p << ',' << csv_quote(row.group)
        << ',' << row.verdict << ',' << row.matched_case << ',' << row.agree;
    return out.str();
}

std::vector<SurveyRow> parse_csv(const std::string& text) {
    std::vector<SurveyRow> rows;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == csv_header()) continue;  // header optional
        }
        auto f = csv_split(line);
        if (f.size() != 7) throw std::invalid_argument("csv: expected 7 fields");
        SurveyRow r;
        r.base_kind = f[0];
        r.base_param = std::stoll(f[1]);
        r.p = std::stoll(f[2]);
        r.group = f[3];
        r.verdict = f[4];
        r.matched_case = f[5];
        r.agree = f[6];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string rows_to_json(const std::vector<SurveyRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["base_kind"] = r.base_kind;
        j["base_param"] = r.base_param;
        j["p"] = r.p;
        j["group"] = r.group;
        j["verdict"] = r.verdict;
        j["matched_case"] = r.matched_case;
        j["agree"] = r.agree;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::vector<SurveyRow> parse_rows_json(const std::string& text) {
    auto arr = nlohmann::json::parse(text);
    std::vector<SurveyRow> rows;
    for (const auto& j : arr) {
        SurveyRow r;
        r.base_kind = j.at("base_kind").get<std::string>();
        r.base_param = j.at("base_param").get<Int>();
        r.p = j.at("p").get<Int>();
        r.group = j.at("group").get<std::string>();
        r.verdict = j.at("verdict").get<std::string>();
        r.matched_case = j.at("matched_case").get<std::string>();
        r.agree = j.at("agree").get<std::string>();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string rows_to_table(const std::vector<SurveyRow>& rows) {
    std::ostringstream out;
    out << "base       param  p      group        verdict                        case             agree\n";
    for (const auto& r : rows) {
        out << r.base_kind << "\t" << r.base_param << "\t" << r.p << "\t" << r.group << "\t"
            << r.verdict << "\t" << r.matched_case << "\t" << r.agree << "\n";
    }
    return out.str();
}

std::string oracle_to_json(const OracleRecord& rec) {
    ordered_json j;
    j["d"] = rec.d;
    j["p"] = rec.p;
    j["expected_degree"] = rec.expected_degree;
    j["expected_count"] = rec.expected_count;
    ordered_json obs = ordered_json::array();
    for (auto [deg, cnt] : rec.observed) obs.push_back({{"degree", deg}, {"count", cnt}});
    j["observed"] = obs;
    j["pass"] = rec.pass;
    return j.dump();
}

SurveyRow report_to_row(const ClassificationReport& th) {
    SurveyRow r;
    r.base_kind = th.base.kind_name();
    r.base_param = th.base.parameter();
    r.p = th.base.p();
    r.group = th.group.to_string();
    r.verdict = to_string(th.verdict);
    r.matched_case = th.matched_case;
    return r;
}

}  // namespace cleanring
