#include <cstdlib>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "cleanring/serialize.hpp"
#include "cleanring/verify.hpp"

using namespace cleanring;

namespace {

DiscrepancyLedger load_ledger(const std::string& flag_path) {
    if (!flag_path.empty()) return DiscrepancyLedger::load_file(flag_path);
    if (const char* env = std::getenv("CLEANRING_LEDGER"); env && *env)
        return DiscrepancyLedger::load_file(env);
#ifdef CLEANRING_BUNDLED_LEDGER
    try {
        return DiscrepancyLedger::load_file(CLEANRING_BUNDLED_LEDGER);
    } catch (const std::exception&) {
        // fall through to the copy compiled into the library
    }
#endif
    return DiscrepancyLedger::bundled();
}

BaseRing make_base(const std::string& kind, Int m, Int d, Int p) {
    if (kind == "rational") return BaseRing::rational(p);
    if (kind == "cyclotomic") return BaseRing::cyclotomic(m, p);
    if (kind == "quadratic") return BaseRing::quadratic(d, p);
    throw std::invalid_argument("--base must be rational, cyclotomic or quadratic");
}

struct SurveyInput {
    BaseRing base;
    AbelianGroup group;
};

// Workers fill preassigned slots, so the output order never depends on the
// thread count.
std::vector<SurveyRow> run_survey(const std::vector<SurveyInput>& inputs,
                                  const DiscrepancyLedger& ledger, int jobs) {
    std::vector<SurveyRow> rows(inputs.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            ClassificationReport th = classify_theorem(inputs[i].base, inputs[i].group);
            AgreementRecord rec = cross_validate(inputs[i].base, inputs[i].group, ledger);
            SurveyRow row = report_to_row(th);
            row.agree = rec.agree ? "yes"
                        : rec.expected ? "expected-disagreement"
                                       : "unexpected-disagreement";
            rows[i] = std::move(row);
        }
    };
    if (jobs <= 1 || inputs.size() < 2) {
        work(0, inputs.size());
        return rows;
    }
    std::size_t nthreads = std::min<std::size_t>(jobs, inputs.size());
    std::vector<std::thread> threads;
    std::size_t chunk = (inputs.size() + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        std::size_t b = t * chunk;
        std::size_t e = std::min(inputs.size(), b + chunk);
        if (b < e) threads.emplace_back(work, b, e);
    }
    for (auto& th : threads) th.join();
    return rows;
}

void print_summary(const std::string& name, const SweepSummary& s) {
    std::cout << name << ": checked " << s.checked << ", failures " << s.failures;
    if (s.expected_disagreements)
        std::cout << ", ledgered disagreements " << s.expected_disagreements;
    std::cout << (s.ok() ? "  [pass]" : "  [FAIL]") << "\n";
    for (const auto& line : s.expected_lines) std::cout << "  expected: " << line << "\n";
    for (const auto& line : s.failure_lines) std::cout << "  FAIL: " << line << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clean / weakly clean / feebly clean classification of commutative "
                 "group rings over localizations of rings of integers"};
    app.require_subcommand(1);

    std::string base_kind = "rational", method = "theorem", format = "table", ledger_path;
    Int m = 1, d = 0, p = 3;
    std::string group_spec;
    bool strict = false;
    int jobs = 1;

    auto add_base_flags = [&](CLI::App* cmd) {
        cmd->add_option("--base", base_kind, "rational | cyclotomic | quadratic");
        cmd->add_option("--m", m, "cyclotomic parameter m");
        cmd->add_option("--d", d, "quadratic parameter d (squarefree, not 0 or 1)");
        cmd->add_option("--ledger", ledger_path,
                        "discrepancy ledger path (default: CLEANRING_LEDGER or bundled)");
    };

    // ------------------------------------------------------------- classify
    auto* cls = app.add_subcommand("classify", "classify one group ring");
    add_base_flags(cls);
    cls->add_option("--p", p, "rational prime under the maximal ideal")->required();
    cls->add_option("--group", group_spec, "comma-separated cyclic orders, e.g. 4,6")->required();
    cls->add_option("--method", method, "theorem | first-principles | both");
    cls->add_option("--format", format, "table | json | csv");
    cls->add_flag("--strict", strict, "exit 3 on an unexpected disagreement (method both)");

    // --------------------------------------------------------------- survey
    auto* sur = app.add_subcommand("survey", "classify a range of group rings");
    add_base_flags(sur);
    Int p_min = 3, p_max = 3, n_min = 1, n_max = 1, m_min = 1, m_max = 1, d_min = 0, d_max = 0;
    std::vector<std::string> group_list;
    sur->add_option("--p-min", p_min, "smallest prime");
    sur->add_option("--p-max", p_max, "largest prime")->required();
    sur->add_option("--n-min", n_min, "smallest cyclic exponent");
    sur->add_option("--n-max", n_max, "largest cyclic exponent (groups C_n)");
    sur->add_option("--groups", group_list, "explicit group list (overrides --n-min/--n-max)");
    sur->add_option("--m-min", m_min, "cyclotomic m range");
    sur->add_option("--m-max", m_max, "cyclotomic m range");
    sur->add_option("--d-min", d_min, "quadratic d range (squarefree values kept)");
    sur->add_option("--d-max", d_max, "quadratic d range");
    sur->add_option("--format", format, "table | json | csv");
    sur->add_option("--jobs", jobs, "worker threads (deterministic merge)");

    // --------------------------------------------------------------- verify
    auto* ver = app.add_subcommand("verify", "run a verification sweep");
    std::string which;
    Int v_d_max = 0, v_p_max = 0, v_n_max = 0, v_m_max = 16, v_exp_max = 60;
    std::string v_base = "all";
    ver->add_option("which", which, "oracle | prop26 | prop32 | theorems")->required();
    ver->add_option("--d-max", v_d_max,
                    "oracle: largest cyclotomic index (default 60); theorems: largest |d| (default 30)");
    ver->add_option("--p-max", v_p_max, "largest prime (defaults: oracle 50, otherwise 100/60)");
    ver->add_option("--n-max", v_n_max, "prop sweeps: largest n (default 300); thm1 (default 200)");
    ver->add_option("--m-max", v_m_max, "theorems: largest cyclotomic m");
    ver->add_option("--exp-max", v_exp_max, "theorems: largest exponent");
    ver->add_option("--base", v_base, "theorems: rational | cyclotomic | quadratic | all");
    ver->add_option("--ledger", ledger_path, "discrepancy ledger path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cls->parsed()) {
            BaseRing base = make_base(base_kind, m, d, p);
            AbelianGroup group = AbelianGroup::parse(group_spec);
            OutputFormat fmt = parse_format(format);
            if (method == "theorem" || method == "first-principles") {
                ClassificationReport rep = method == "theorem"
                                               ? classify_theorem(base, group)
                                               : classify_first_principles(base, group);
                if (fmt == OutputFormat::Json)
                    std::cout << report_to_json(rep);
                else if (fmt == OutputFormat::Csv)
                    std::cout << csv_header() << "\n" << row_to_csv(report_to_row(rep)) << "\n";
                else
                    std::cout << report_to_table(rep);
                return 0;
            }
            if (method != "both")
                throw std::invalid_argument("--method must be theorem, first-principles or both");
            DiscrepancyLedger ledger = load_ledger(ledger_path);
            ClassificationReport fp = classify_first_principles(base, group);
            ClassificationReport th = classify_theorem(base, group);
            AgreementRecord rec = cross_validate(base, group, ledger);
            if (fmt == OutputFormat::Json)
                std::cout << agreement_to_json(fp, th, rec);
            else if (fmt == OutputFormat::Csv) {
                SurveyRow row = report_to_row(th);
                row.agree = rec.agree ? "yes"
                            : rec.expected ? "expected-disagreement"
                                           : "unexpected-disagreement";
                std::cout << csv_header() << "\n" << row_to_csv(row) << "\n";
            } else
                std::cout << agreement_to_table(fp, th, rec);
            if (strict && !rec.agree && !rec.expected) return 3;
            return 0;
        }

        if (sur->parsed()) {
            DiscrepancyLedger ledger = load_ledger(ledger_path);
            std::vector<Int> primes;
            for (Int q = std::max<Int>(2, p_min); q <= p_max; ++q)
                if (is_prime(q) && (q != 2 || base_kind == "rational")) primes.push_back(q);

            std::vector<AbelianGroup> groups;
            if (!group_list.empty()) {
                for (const auto& g : group_list) groups.push_back(AbelianGroup::parse(g));
            } else {
                for (Int n = n_min; n <= n_max; ++n) groups.push_back(AbelianGroup::normalize({n}));
            }

            std::vector<SurveyInput> inputs;
            if (base_kind == "rational") {
                for (Int q : primes)
                    for (const auto& g : groups)
                        if (g.exponent() % q != 0) inputs.push_back({BaseRing::rational(q), g});
            } else if (base_kind == "cyclotomic") {
                for (Int mm = m_min; mm <= m_max; ++mm)
                    for (Int q : primes) {
                        if (mm % q == 0) continue;
                        for (const auto& g : groups)
                            if (g.exponent() % q != 0)
                                inputs.push_back({BaseRing::cyclotomic(mm, q), g});
                    }
            } else if (base_kind == "quadratic") {
                for (Int dd = d_min; dd <= d_max; ++dd) {
                    if (dd == 0 || dd == 1 || !is_squarefree(dd)) continue;
                    for (Int q : primes)
                        for (const auto& g : groups)
                            if (g.exponent() % q != 0)
                                inputs.push_back({BaseRing::quadratic(dd, q), g});
                }
            } else {
                throw std::invalid_argument("--base must be rational, cyclotomic or quadratic");
            }
            if (inputs.empty()) {
                std::cerr << "survey: empty range\n";
                return 2;
            }
            std::vector<SurveyRow> rows = run_survey(inputs, ledger, jobs);
            OutputFormat fmt = parse_format(format);
            if (fmt == OutputFormat::Json)
                std::cout << rows_to_json(rows);
            else if (fmt == OutputFormat::Csv) {
                std::cout << csv_header() << "\n";
                for (const auto& r : rows) std::cout << row_to_csv(r) << "\n";
            } else
                std::cout << rows_to_table(rows);
            return 0;
        }

        if (ver->parsed()) {
            DiscrepancyLedger ledger = load_ledger(ledger_path);
            bool ok = true;
            if (which == "oracle") {
                SweepSummary s = verify_oracle(v_d_max ? v_d_max : 60, v_p_max ? v_p_max : 50);
                print_summary("oracle", s);
                ok = s.ok();
            } else if (which == "prop26") {
                SweepSummary s = verify_prop26(v_n_max ? v_n_max : 300, v_p_max ? v_p_max : 100);
                print_summary("prop26", s);
                ok = s.ok();
            } else if (which == "prop32") {
                SweepSummary s = verify_prop32(v_n_max ? v_n_max : 300, v_p_max ? v_p_max : 100);
                print_summary("prop32", s);
                ok = s.ok();
            } else if (which == "theorems") {
                if (v_base == "rational" || v_base == "all") {
                    SweepSummary s =
                        verify_thm1(v_n_max ? v_n_max : 200, v_p_max ? v_p_max : 100, ledger);
                    print_summary("theorems/rational", s);
                    ok = ok && s.ok();
                }
                if (v_base == "cyclotomic" || v_base == "all") {
                    SweepSummary s =
                        verify_main1(v_m_max, v_exp_max, v_p_max ? v_p_max : 60, ledger);
                    print_summary("theorems/cyclotomic", s);
                    ok = ok && s.ok();
                }
                if (v_base == "quadratic" || v_base == "all") {
                    SweepSummary s = verify_main2(v_d_max ? v_d_max : 30, v_exp_max,
                                                  v_p_max ? v_p_max : 60, ledger);
                    print_summary("theorems/quadratic", s);
                    ok = ok && s.ok();
                }
            } else {
                throw std::invalid_argument("verify: which must be oracle, prop26, prop32 or theorems");
            }
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
