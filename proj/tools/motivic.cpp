#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "motivic/formulas.hpp"
#include "motivic/oracle.hpp"
#include "motivic/serialize.hpp"

namespace {

using namespace motivic;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("MOTIVIC_WORK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000'000ULL;
}

struct RunConfig {
    std::size_t order = 0; // 0 = per-command default
    std::vector<unsigned> qs;
    unsigned n_bound = 3; // dimension cap for closed-form endomorphism counts
    unsigned threads = 0; // 0 = hardware
    std::uint64_t work_budget = default_budget();
    std::string format = "table";
    std::string out_path;
};

OracleConfig oracle_cfg(const RunConfig& rc) {
    OracleConfig cfg;
    cfg.work_budget = rc.work_budget;
    cfg.threads = rc.threads;
    cfg.coh_a1_n_bound = rc.n_bound;
    return cfg;
}

void validate_qs(const std::vector<unsigned>& qs) {
    for (unsigned q : qs)
        if (!is_prime(q)) throw contract_violation("q = " + std::to_string(q) + " is not prime");
}

void write_out(const RunConfig& rc, const std::string& text) {
    if (rc.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(rc.out_path);
        if (!f) throw error("cannot open output file " + rc.out_path);
        f << text;
    }
}

std::string pad_to(const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
}

std::string columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << "  ";
            os << (i + 1 == row.size() ? row[i] : pad_to(row[i], width[i]));
        }
        os << '\n';
    }
    return os.str();
}

// -------------------------------------------------------------------------
// series
// -------------------------------------------------------------------------

struct SeriesOptions {
    std::string name;
    unsigned r = 1;
    unsigned d = 1;
    std::string curve = "a1";
    std::string curve_file;
    std::string surface = "a2";
    std::string surface_class;
    std::string class_expr;
    std::string smooth_class_expr = "L";
    std::string sing_file;
    bool polynomiality = false;
};

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

MSeries builtin_zeta(const std::string& curve, std::size_t order) {
    std::string c = lower(curve);
    if (c == "a1") return zeta_affine_line(order);
    if (c == "point") return zeta_point(order);
    if (c == "p1") return zeta_p1(order);
    throw contract_violation("unknown curve '" + curve + "'");
}

MSeries build_series(const SeriesOptions& so, std::size_t order) {
    if (so.name == "coh-a1") return coh_a1_series(order);
    if (so.name == "euler-rhs") return euler_rhs_series(order);
    if (so.name == "feit-fine") return feit_fine_series(order);
    if (so.name == "zeta") return zeta_of_class(parse_mclass(so.class_expr), order);
    if (so.name == "zeta-effective") return zeta_effective(parse_mclass(so.class_expr), order);
    if (so.name == "quot-curve") {
        MSeries zc = MSeries::one(order);
        if (!so.curve_file.empty()) {
            std::ifstream f(so.curve_file);
            if (!f) throw error("cannot open curve file " + so.curve_file);
            zc = mseries_from_json(json::parse(f));
            if (zc.order() != order)
                throw order_mismatch("curve zeta file has order " + std::to_string(zc.order()) +
                                     ", expected " + std::to_string(order));
        } else {
            zc = builtin_zeta(so.curve, order);
        }
        return quot_curve_series(so.r, zc, order);
    }
    if (so.name == "quot-surface") {
        MClass s;
        if (!so.surface_class.empty()) {
            s = parse_mclass(so.surface_class);
        } else if (lower(so.surface) == "a2") {
            s = MClass::lefschetz_power(2);
        } else {
            throw contract_violation("unknown surface '" + so.surface + "'");
        }
        return quot_surface_series(so.r, s, order);
    }
    if (so.name == "punctual-smooth") return punctual_series_smooth(so.d, order);
    if (so.name == "quot-punctual") return quot_punctual_smooth(so.r, so.d, order);
    if (so.name == "compose") {
        MSeries punctual = punctual_series_smooth(so.d, order);
        std::vector<SingularityDatum> sing;
        if (!so.sing_file.empty()) {
            std::ifstream f(so.sing_file);
            if (!f) throw error("cannot open singularity file " + so.sing_file);
            for (const auto& item : json::parse(f)) {
                SingularityDatum datum{mseries_from_json(item.at("series")),
                                       item.at("multiplicity").get<unsigned>()};
                if (datum.punctual_series.order() != order)
                    throw order_mismatch("singular series order mismatch");
                sing.push_back(std::move(datum));
            }
        }
        return compose_with_singularities(punctual, parse_mclass(so.smooth_class_expr), sing);
    }
    throw contract_violation("unknown series '" + so.name + "'");
}

int cmd_series(const RunConfig& rc, const SeriesOptions& so) {
    std::size_t order = rc.order ? rc.order : 6;
    validate_qs(rc.qs);
    MSeries s = build_series(so, order);
    std::optional<PolynomialityReport> poly;
    if (so.polynomiality) poly = polynomiality_report(s);

    if (rc.format == "json") {
        json j{{"name", so.name}, {"order", order}, {"series", to_json(s)}};
        if (!rc.qs.empty()) {
            json evals = json::array();
            for (unsigned q : rc.qs) {
                json vals = json::array();
                for (std::size_t n = 0; n <= order; ++n)
                    vals.push_back(rational_str(eval_at(s[n], Rational(q))));
                evals.push_back({{"q", q}, {"values", vals}});
            }
            j["evals"] = evals;
        }
        if (poly) j["polynomiality"] = to_json(*poly);
        write_out(rc, j.dump(2) + "\n");
        return kExitOk;
    }

    std::vector<std::vector<std::string>> rows;
    {
        std::vector<std::string> head{"n", "class"};
        for (unsigned q : rc.qs) head.push_back("q=" + std::to_string(q));
        if (poly) {
            head.push_back("laurent");
            head.push_back("in-loc");
        }
        rows.push_back(std::move(head));
    }
    for (std::size_t n = 0; n <= order; ++n) {
        std::vector<std::string> row{std::to_string(n), to_string(s[n])};
        for (unsigned q : rc.qs) row.push_back(rational_str(eval_at(s[n], Rational(q))));
        if (poly) {
            row.push_back(poly->rows[n].laurent ? "yes" : "no");
            row.push_back(poly->rows[n].in_loc ? "yes" : "no");
        }
        rows.push_back(std::move(row));
    }
    if (rc.format == "csv") {
        std::ostringstream os;
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                bool quote = row[i].find(',') != std::string::npos;
                os << (quote ? "\"" + row[i] + "\"" : row[i]);
            }
            os << '\n';
        }
        write_out(rc, os.str());
    } else {
        write_out(rc, so.name + " (order " + std::to_string(order) + ")\n" + columns(rows));
    }
    return kExitOk;
}

// -------------------------------------------------------------------------
// verify
// -------------------------------------------------------------------------

struct VerifyOptions {
    std::string suite;
    std::uint64_t seed = 42;
    unsigned instances = 50;
};

int cmd_verify(const RunConfig& rc, const VerifyOptions& vo) {
    std::vector<IdentityReport> reports;
    std::optional<AxiomSuiteResult> axioms;
    std::optional<FibrationFailureReport> fibration;
    bool ok = true;

    auto run_suite = [&](const std::string& suite) {
        if (suite == "euler") {
            reports.push_back(verify_euler_identity(rc.order ? rc.order : 8));
        } else if (suite == "strata") {
            for (auto& rep : verify_strata_decomposition(rc.order ? rc.order : 6))
                reports.push_back(std::move(rep));
        } else if (suite == "punctual-roundtrip") {
            for (auto& rep : verify_punctual_roundtrip(rc.order ? rc.order : 6))
                reports.push_back(std::move(rep));
        } else if (suite == "power-axioms") {
            axioms = power_axiom_suite(rc.order ? rc.order : 5, vo.seed, vo.instances);
        } else if (suite == "fibration-failure") {
            fibration = fibration_failure_report();
        } else {
            throw contract_violation("unknown suite '" + suite + "'");
        }
    };
    if (vo.suite == "all") {
        for (const char* s :
             {"euler", "strata", "punctual-roundtrip", "power-axioms", "fibration-failure"})
            run_suite(s);
    } else {
        run_suite(vo.suite);
    }

    for (const auto& rep : reports) ok &= rep.holds;
    if (axioms) ok &= axioms->all_passed;
    if (fibration) ok &= fibration->non_multiplicative;

    if (rc.format == "json") {
        json j;
        j["suite"] = vo.suite;
        j["ok"] = ok;
        json reps = json::array();
        for (const auto& rep : reports) reps.push_back(to_json(rep));
        j["identities"] = reps;
        if (axioms) j["power_axioms"] = to_json(*axioms);
        if (fibration) j["fibration_failure"] = to_json(*fibration);
        write_out(rc, j.dump(2) + "\n");
    } else if (rc.format == "csv") {
        std::ostringstream os;
        for (const auto& rep : reports) os << to_csv(rep);
        write_out(rc, os.str());
    } else {
        std::ostringstream os;
        for (const auto& rep : reports) os << render_table(rep) << '\n';
        if (axioms) os << render_table(*axioms) << '\n';
        if (fibration) os << render_table(*fibration) << '\n';
        os << (ok ? "verified" : "VERIFICATION FAILED") << '\n';
        write_out(rc, os.str());
    }
    return ok ? kExitOk : kExitVerifyFail;
}

// -------------------------------------------------------------------------
// count
// -------------------------------------------------------------------------

struct CountOptions {
    std::string space;
    unsigned n = 1;
    unsigned q = 2;
    std::optional<unsigned> r;
};

int cmd_count(const RunConfig& rc, const CountOptions& co) {
    CountRecord rec = run_count(co.space, co.n, co.q, co.r, oracle_cfg(rc));
    if (rc.format == "json") {
        write_out(rc, to_json(rec).dump(2) + "\n");
    } else if (rc.format == "csv") {
        write_out(rc, csv_header_count() + "\n" + to_csv_row(rec) + "\n");
    } else {
        std::ostringstream os;
        os << rec.space << " n=" << rec.n << " q=" << rec.q;
        if (rec.r) os << " r=" << *rec.r;
        os << ": " << rec.count.raw_count.get_str() << "/" << rec.count.group_order.get_str()
           << " = " << rational_str(rec.count.value) << "  (" << rec.elapsed_ms << " ms)\n";
        write_out(rc, os.str());
    }
    return kExitOk;
}

// -------------------------------------------------------------------------
// check: formula coefficients against oracle counts
// -------------------------------------------------------------------------

struct CheckOptions {
    std::string formula;
    unsigned n_max = 2;
    unsigned r = 1;
    unsigned d = 1;
};

int cmd_check(const RunConfig& rc, const CheckOptions& co) {
    std::vector<unsigned> qs = rc.qs.empty() ? std::vector<unsigned>{2, 3} : rc.qs;
    validate_qs(qs);
    const std::size_t order = co.n_max;
    const OracleConfig cfg = oracle_cfg(rc);

    MSeries series = MSeries::one(order);
    std::string space;
    bool framed = false; // free GL_n action, counts must be integers
    if (co.formula == "coh-a1") {
        series = coh_a1_series(order);
        space = "coh-a1";
    } else if (co.formula == "feit-fine") {
        series = feit_fine_series(order);
        space = "coh-a2";
    } else if (co.formula == "quot-curve") {
        series = quot_curve_series(co.r, zeta_affine_line(order), order);
        space = "quot-a1";
        framed = true;
    } else if (co.formula == "quot-surface") {
        series = quot_surface_series(co.r, MClass::lefschetz_power(2), order);
        space = "quot-a2";
        framed = true;
    } else if (co.formula == "punctual-smooth") {
        series = punctual_series_smooth(co.d, order);
        space = co.d == 1 ? "coh-a1-punctual" : "coh-a2-punctual";
    } else if (co.formula == "quot-punctual") {
        series = quot_punctual_smooth(co.r, co.d, order);
        space = co.d == 1 ? "quot-a1-punctual" : "quot-a2-punctual";
        framed = true;
    } else {
        throw contract_violation("unknown formula '" + co.formula + "'");
    }
    std::optional<unsigned> r_opt;
    if (space.starts_with("quot")) r_opt = co.r;

    bool all_match = true;
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "q", "formula", "oracle", "match"});
    json jrows = json::array();
    for (unsigned n = 0; n <= co.n_max; ++n) {
        for (unsigned q : qs) {
            CountRecord rec = run_count(space, n, q, r_opt, cfg);
            Rational fv = eval_at(series[n], Rational(q));
            bool match = fv == rec.count.value;
            if (framed && !rec.count.is_integral()) match = false;
            all_match &= match;
            rows.push_back({std::to_string(n), std::to_string(q), rational_str(fv),
                            rational_str(rec.count.value), match ? "yes" : "NO"});
            jrows.push_back({{"n", n},
                             {"q", q},
                             {"formula_value", rational_str(fv)},
                             {"oracle", to_json(rec)},
                             {"match", match}});
        }
    }

    if (rc.format == "json") {
        json j{{"formula", co.formula}, {"space", space}, {"rows", jrows}, {"ok", all_match}};
        write_out(rc, j.dump(2) + "\n");
    } else if (rc.format == "csv") {
        std::ostringstream os;
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
            os << '\n';
        }
        write_out(rc, os.str());
    } else {
        write_out(rc, "check " + co.formula + " against " + space + "\n" + columns(rows) +
                          (all_match ? "all match\n" : "MISMATCH\n"));
    }
    return all_match ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact motivic generating functions for stacks of points over A^1 and A^2,\n"
                 "cross-checked against exhaustive groupoid counts over prime fields"};
    app.require_subcommand(1);

    RunConfig rc;
    app.add_option("--format", rc.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", rc.out_path, "write output to a file instead of stdout");
    app.add_option("--threads", rc.threads, "enumeration worker threads (0 = hardware)");
    app.add_option("--budget", rc.work_budget,
                   "work budget in tuple evaluations (default from MOTIVIC_WORK_BUDGET)");
    app.add_option("--n-bound", rc.n_bound, "length bound for coh-a1 counts")
        ->capture_default_str();

    SeriesOptions so;
    auto* series_cmd = app.add_subcommand("series", "print a generating series");
    series_cmd->fallthrough();
    series_cmd->add_option("name", so.name, "series name")
        ->required()
        ->check(CLI::IsMember({"coh-a1", "euler-rhs", "feit-fine", "zeta", "zeta-effective",
                               "quot-curve", "quot-surface", "punctual-smooth", "quot-punctual",
                               "compose"}));
    series_cmd->add_option("--order", rc.order, "truncation order (default 6)");
    series_cmd->add_option("--q", rc.qs, "primes to evaluate at")->delimiter(',');
    series_cmd->add_option("--r", so.r, "sheaf rank");
    series_cmd->add_option("--d", so.d, "dimension (1 or 2)");
    series_cmd->add_option("--curve", so.curve, "built-in curve: a1, point, p1");
    series_cmd->add_option("--curve-file", so.curve_file, "zeta series JSON file");
    series_cmd->add_option("--surface", so.surface, "built-in surface: a2");
    series_cmd->add_option("--surface-class", so.surface_class, "surface class, polynomial in L");
    series_cmd->add_option("--class", so.class_expr, "class expression for zeta");
    series_cmd->add_option("--smooth-class", so.smooth_class_expr,
                           "smooth locus class for compose");
    series_cmd->add_option("--sing", so.sing_file, "singularity data JSON file for compose");
    series_cmd->add_flag("--polynomiality", so.polynomiality,
                         "report Laurent/localization status per coefficient");

    VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "run an identity-verification suite");
    verify_cmd->fallthrough();
    verify_cmd->add_option("suite", vo.suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"euler", "strata", "punctual-roundtrip", "power-axioms",
                               "fibration-failure", "all"}));
    verify_cmd->add_option("--order", rc.order, "truncation order (suite default if omitted)");
    verify_cmd->add_option("--seed", vo.seed, "seed for randomized suites")->capture_default_str();
    verify_cmd->add_option("--instances", vo.instances, "randomized instances")
        ->capture_default_str();

    CountOptions co;
    auto* count_cmd = app.add_subcommand("count", "exhaustive groupoid count over F_q");
    count_cmd->fallthrough();
    count_cmd->add_option("--space", co.space, "space to count")
        ->required()
        ->check(CLI::IsMember({"coh-a1", "coh-a2", "coh-a1-punctual", "coh-a2-punctual", "quot-a1",
                               "quot-a2", "quot-a1-punctual", "quot-a2-punctual"}));
    count_cmd->add_option("--n", co.n, "length")->required();
    count_cmd->add_option("--q", co.q, "prime field size")->required();
    unsigned count_r = 0;
    count_cmd->add_option("--r", count_r, "sheaf rank (quot spaces)");

    CheckOptions ko;
    auto* check_cmd = app.add_subcommand("check", "compare formula coefficients with counts");
    check_cmd->fallthrough();
    check_cmd->add_option("formula", ko.formula, "formula to check")
        ->required()
        ->check(CLI::IsMember({"coh-a1", "feit-fine", "quot-curve", "quot-surface",
                               "punctual-smooth", "quot-punctual"}));
    check_cmd->add_option("--n-max", ko.n_max, "check coefficients 0..n-max")
        ->capture_default_str();
    check_cmd->add_option("--q", rc.qs, "primes (default 2,3)")->delimiter(',');
    check_cmd->add_option("--r", ko.r, "sheaf rank");
    check_cmd->add_option("--d", ko.d, "dimension (1 or 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*series_cmd) return cmd_series(rc, so);
        if (*verify_cmd) return cmd_verify(rc, vo);
        if (*count_cmd) {
            if (count_r > 0) co.r = count_r;
            return cmd_count(rc, co);
        }
        if (*check_cmd) return cmd_check(rc, ko);
    } catch (const budget_exceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const motivic::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
