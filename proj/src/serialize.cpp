#include "motivic/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace motivic {

namespace {

json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({e, c.get_str()});
    return arr;
}

IntPoly poly_from_json(const json& arr) {
    std::vector<Integer> coeffs;
    for (const auto& term : arr) {
        unsigned e = term.at(0).get<unsigned>();
        Integer c(term.at(1).get<std::string>());
        if (coeffs.size() <= e) coeffs.resize(e + 1, Integer(0));
        coeffs[e] = std::move(c);
    }
    return IntPoly::from_coeffs(std::move(coeffs));
}

} // namespace

json to_json(const MClass& a) {
    return json{{"num", poly_to_json(a.num())}, {"den", poly_to_json(a.den())}};
}

MClass mclass_from_json(const json& j) {
    return MClass::fraction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const MSeries& s) {
    json coeffs = json::array();
    for (std::size_t n = 0; n <= s.order(); ++n) coeffs.push_back(to_json(s[n]));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

MSeries mseries_from_json(const json& j) {
    std::size_t order = j.at("order").get<std::size_t>();
    std::vector<MClass> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(mclass_from_json(c));
    return MSeries(order, std::move(coeffs));
}

json to_json(const IdentityReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"n", row.n},
                        {"lhs", to_json(row.lhs)},
                        {"rhs", to_json(row.rhs)},
                        {"equal", row.equal}});
    return json{{"name", rep.name}, {"order", rep.order}, {"holds", rep.holds},
                {"per_coefficient", rows}};
}

json to_json(const PolynomialityReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"n", row.n}, {"laurent", row.laurent}, {"in_localization", row.in_loc}});
    return json{{"rows", rows},
                {"all_laurent", rep.all_laurent},
                {"all_in_localization", rep.all_in_localization}};
}

std::string rational_str(const Rational& v) { return v.get_str(); }

json to_json(const FibrationFailureReport& rep) {
    json evals = json::array();
    for (const auto& ev : rep.evals)
        evals.push_back({{"q", ev.q},
                         {"stratum", rational_str(ev.stratum)},
                         {"stratum_gl1_aut", rational_str(ev.stratum_gl1_aut)},
                         {"product", rational_str(ev.product)},
                         {"groupoid_count", rational_str(ev.groupoid)}});
    return json{{"coh2", to_json(rep.coh2)},
                {"punctual2", to_json(rep.punctual2)},
                {"punctual1", to_json(rep.punctual1)},
                {"stratum", to_json(rep.stratum)},
                {"stratum_gl1_aut", to_json(rep.stratum_gl1_aut)},
                {"sym_stratum", to_json(rep.sym_stratum)},
                {"product", to_json(rep.product)},
                {"non_multiplicative", rep.non_multiplicative},
                {"evals", evals}};
}

json to_json(const CountRecord& rec) {
    json j{{"space", rec.space},
           {"n", rec.n},
           {"q", rec.q},
           {"raw", rec.count.raw_count.get_str()},
           {"group_order", rec.count.group_order.get_str()},
           {"value", rational_str(rec.count.value)},
           {"elapsed_ms", rec.elapsed_ms}};
    if (rec.r) j["r"] = *rec.r;
    return j;
}

std::string csv_header_count() { return "space,n,q,r,raw,group_order,value,elapsed_ms"; }

std::string to_csv_row(const CountRecord& rec) {
    std::ostringstream os;
    os << rec.space << ',' << rec.n << ',' << rec.q << ',';
    if (rec.r) os << *rec.r;
    os << ',' << rec.count.raw_count.get_str() << ',' << rec.count.group_order.get_str() << ','
       << rational_str(rec.count.value) << ',' << rec.elapsed_ms;
    return os.str();
}

namespace {

std::string pad(const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << "  ";
            os << (i + 1 == row.size() ? row[i] : pad(row[i], width[i]));
        }
        os << '\n';
    }
    return os.str();
}

} // namespace

std::string render_table(const IdentityReport& rep) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "lhs", "rhs", "equal"});
    for (const auto& row : rep.rows)
        rows.push_back({std::to_string(row.n), to_string(row.lhs), to_string(row.rhs),
                        row.equal ? "yes" : "NO"});
    std::ostringstream os;
    os << rep.name << " (order " << rep.order << "): " << (rep.holds ? "holds" : "FAILS") << '\n'
       << render_columns(rows);
    return os.str();
}

json to_json(const AxiomSuiteResult& res) {
    json checks = json::array();
    for (const auto& c : res.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
    return json{{"order", res.order},     {"seed", res.seed},       {"instances", res.instances},
                {"checks", checks},       {"failures", res.failures},
                {"all_passed", res.all_passed}};
}

std::string to_csv(const IdentityReport& rep) {
    std::ostringstream os;
    os << "name,order,n,lhs,rhs,equal\n";
    for (const auto& row : rep.rows)
        os << rep.name << ',' << rep.order << ',' << row.n << ",\"" << to_string(row.lhs)
           << "\",\"" << to_string(row.rhs) << "\"," << (row.equal ? "true" : "false") << '\n';
    return os.str();
}

std::string render_table(const AxiomSuiteResult& res) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"check", "passed", "failed"});
    for (const auto& c : res.checks)
        rows.push_back({c.name, std::to_string(c.passed), std::to_string(c.failed)});
    std::ostringstream os;
    os << "power-structure suite: order " << res.order << ", seed " << res.seed << ", "
       << res.instances << " instances: " << (res.all_passed ? "all passed" : "FAILURES") << '\n'
       << render_columns(rows);
    for (const auto& f : res.failures) os << "  " << f << '\n';
    return os.str();
}

std::string render_table(const FibrationFailureReport& rep) {
    std::ostringstream os;
    os << "two-point stratum of length-2 sheaves on A^1: class vs naive base*fibre product\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"quantity", "class"});
    rows.push_back({"[Coh^2(A^1)]", to_string(rep.coh2)});
    rows.push_back({"[Coh^2(A^1)_0]", to_string(rep.punctual2)});
    rows.push_back({"[Coh^1(A^1)_0]", to_string(rep.punctual1)});
    rows.push_back({"stratum (tool)", to_string(rep.stratum)});
    rows.push_back({"stratum (GL_1 aut)", to_string(rep.stratum_gl1_aut)});
    rows.push_back({"[Sym^2_(1,1)(A^1)]", to_string(rep.sym_stratum)});
    rows.push_back({"base * fibre^2", to_string(rep.product)});
    os << render_columns(rows);
    os << "non-multiplicative (stratum != product): " << (rep.non_multiplicative ? "yes" : "NO")
       << '\n';
    std::vector<std::vector<std::string>> evals;
    evals.push_back({"q", "stratum", "stratum(GL_1)", "product", "groupoid count"});
    for (const auto& ev : rep.evals)
        evals.push_back({std::to_string(ev.q), rational_str(ev.stratum),
                         rational_str(ev.stratum_gl1_aut), rational_str(ev.product),
                         rational_str(ev.groupoid)});
    os << render_columns(evals);
    return os.str();
}

// ---------------------------------------------------------------------------
// Expression parser for classes given on the command line
// ---------------------------------------------------------------------------

namespace {

struct ClassParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit ClassParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw contract_violation("parse error in class expression at position " +
                                 std::to_string(pos) + ": " + what);
    }

    long parse_int() {
        skip_ws();
        bool negative = eat('-');
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return negative ? -v : v;
    }

    MClass parse_atom() {
        skip_ws();
        if (eat('(')) {
            MClass v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos < s.size() && (s[pos] == 'L' || s[pos] == 'l')) {
            ++pos;
            return MClass::lefschetz();
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            return MClass(parse_int());
        fail("expected 'L', integer or '('");
    }

    MClass parse_factor() {
        bool negative = false;
        skip_ws();
        while (eat('-')) negative = !negative;
        MClass v = parse_atom();
        if (eat('^')) {
            long e = parse_int();
            MClass base = v;
            v = MClass(1);
            for (long i = 0; i < std::abs(e); ++i) v = v * base;
            if (e < 0) v = inv(v);
        }
        return negative ? -v : v;
    }

    MClass parse_term() {
        MClass v = parse_factor();
        for (;;) {
            if (eat('*')) {
                v = v * parse_factor();
            } else if (eat('/')) {
                v = v / parse_factor();
            } else {
                return v;
            }
        }
    }

    MClass parse_expr() {
        MClass v = parse_term();
        for (;;) {
            skip_ws();
            if (eat('+')) {
                v = v + parse_term();
            } else if (pos < s.size() && s[pos] == '-') {
                ++pos;
                v = v - parse_term();
            } else {
                return v;
            }
        }
    }
};

} // namespace

MClass parse_mclass(const std::string& text) {
    ClassParser p(text);
    MClass v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

} // namespace motivic
