#include "elltor/cli_run.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "elltor/bounds.hpp"
#include "elltor/density.hpp"
#include "elltor/expr.hpp"
#include "elltor/families.hpp"
#include "elltor/linalg_fl.hpp"
#include "elltor/torsion_degree.hpp"

namespace elltor::cli {

using json = nlohmann::ordered_json;
using namespace elltor::algebra;
using namespace elltor::curves;

namespace {

std::array<CoeffSpec, 5> parse_coeffs_or_die(const std::string& text) {
    return parse_coeff_list(text);
}

struct FqDesc {
    int64_t q = 0;
    int64_t p = 0;
    int k = 1;
};

FqDesc factor_prime_power(int64_t q) {
    if (q < 2) fail(ErrorCode::BadInput, "q must be a prime power >= 2");
    auto factors = factorize(q);
    if (factors.size() != 1)
        fail(ErrorCode::BadInput, "q = " + std::to_string(q) + " is not a prime power");
    return {q, factors[0].first, factors[0].second};
}

// Dispatches a callable over the exact curve built from (q, coeffs);
// fn must accept WeierstrassCurve<PrimeField> or WeierstrassCurve<ExtField>.
template <class Fn>
auto with_curve(int64_t q, const std::array<CoeffSpec, 5>& coeffs, Fn&& fn) {
    FqDesc d = factor_prime_power(q);
    if (d.k == 1) {
        PrimeField f(d.p);
        auto at = [&](const CoeffSpec& c) {
            if (!c.is_vector) return f.from_int(c.value);
            if (c.vec.size() > 1)
                fail(ErrorCode::BadInput, "vector coefficient over a prime field");
            return f.from_int(c.vec.empty() ? 0 : c.vec[0]);
        };
        WeierstrassCurve<PrimeField> e(f, at(coeffs[0]), at(coeffs[1]),
                                       at(coeffs[2]), at(coeffs[3]), at(coeffs[4]));
        return fn(e);
    }
    ExtField f(d.p, d.k);
    auto at = [&](const CoeffSpec& c) {
        if (!c.is_vector) return f.from_int(c.value);
        return f.from_coeffs(c.vec);
    };
    WeierstrassCurve<ExtField> e(f, at(coeffs[0]), at(coeffs[1]), at(coeffs[2]),
                                 at(coeffs[3]), at(coeffs[4]));
    return fn(e);
}

json membership_json(const proell::MembershipReport& r) {
    return json{{"ell", r.ell},
                {"f", r.f},
                {"m", r.m},
                {"ratio", r.ratio},
                {"verdict", r.verdict},
                {"method", proell::degree_method_name(r.method)}};
}

proell::Mat2 mat_from_json(const json& j, int64_t ell) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        fail(ErrorCode::BadInput, "matrix JSON must be [[a,b],[c,d]]");
    proell::Mat2 m;
    m.ell = ell;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m.m[static_cast<size_t>(2 * r + c)] =
                mod_reduce(j[static_cast<size_t>(r)][static_cast<size_t>(c)]
                               .get<int64_t>(),
                           ell);
    return m;
}

std::vector<proell::Mat2> mats_from_json(const std::string& text, int64_t ell) {
    json j = json::parse(text, nullptr, true);
    if (!j.is_array()) fail(ErrorCode::BadInput, "generator JSON must be a list");
    std::vector<proell::Mat2> out;
    for (const auto& item : j) out.push_back(mat_from_json(item, ell));
    return out;
}

// One scan input line "q,a1,a2,a3,a4,a6"; returns a JSON line.
json scan_one_line(int64_t lineno, const std::string& line, int64_t ell_max) {
    std::vector<std::string> parts;
    std::string cur;
    int bracket = 0;
    for (char c : line) {
        if (c == '[') ++bracket;
        if (c == ']') --bracket;
        if (c == ',' && bracket == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 6)
        fail(ErrorCode::BadInput, "expected q,a1,a2,a3,a4,a6");
    int64_t q = std::stoll(parts[0]);
    std::string coeff_text;
    for (size_t i = 1; i < parts.size(); ++i) {
        if (i > 1) coeff_text += ",";
        coeff_text += parts[i];
    }
    auto coeffs = parse_coeffs_or_die(coeff_text);

    json results = json::array();
    for (int64_t ell : primes_up_to(ell_max)) {
        if (mod_reduce(q, ell) == 0) continue;
        auto rep = with_curve(q, coeffs, [&](const auto& e) {
            return proell::is_proell_member(e, ell);
        });
        results.push_back(membership_json(rep));
    }
    return json{{"line", lineno}, {"q", q}, {"coeffs", coeff_text}, {"results", results}};
}

int cmd_bound(int64_t g, std::string& out) {
    auto r = bounds::rt_bound(g);
    json j{{"genus", r.g},
           {"rt_bound", r.rt_bound},
           {"max_prime", r.max_prime},
           {"general_bound", r.general_bound},
           {"semistable_threshold_d1", bounds::semistable_threshold(1)}};
    out = j.dump() + "\n";
    return 0;
}

int cmd_verify_seven(int64_t p, const std::string& fexpr, std::string& out) {
    if (p == 7) fail(ErrorCode::CharSeven, "the order-7 family needs characteristic != 7");
    RationalFunctionField<PrimeField> k{PrimeField(p)};
    auto ast = parse_expr(fexpr);
    auto f = eval_expr(*ast, k);
    auto rep = families::verify_seven(p, f);
    json j{{"p", p},
           {"f", fexpr},
           {"order", rep.order.has_value() ? json(*rep.order) : json(nullptr)},
           {"delta_matches", rep.delta_matches},
           {"c4_matches", rep.c4_matches},
           {"j_nonconstant", rep.j_nonconstant},
           {"delta", rep.delta},
           {"c4", rep.c4}};
    out = j.dump() + "\n";
    return 0;
}

int cmd_verify_eleven(int64_t p, int64_t n, std::string& out) {
    auto rep = families::verify_eleven(p, n);
    json j{{"p", p},
           {"n", n},
           {"order", rep.order.has_value() ? json(*rep.order) : json(nullptr)},
           {"order_is_11", rep.order_is_11},
           {"j_nonconstant", rep.j_nonconstant}};
    out = j.dump() + "\n";
    return 0;
}

int cmd_proell_check(int64_t q, const std::string& coeff_text, int64_t ell,
                     std::string& out) {
    auto coeffs = parse_coeffs_or_die(coeff_text);
    auto rep = with_curve(q, coeffs, [&](const auto& e) {
        return proell::is_proell_member(e, ell);
    });
    json j = membership_json(rep);
    j.erase("ell");
    json full{{"q", q}, {"coeffs", coeff_text}, {"ell", ell}};
    full.update(j);
    out = full.dump() + "\n";
    return 0;
}

int cmd_torsion_degree(int64_t q, const std::string& coeff_text, int64_t ell,
                       std::string& out) {
    auto coeffs = parse_coeffs_or_die(coeff_text);
    auto td = with_curve(q, coeffs, [&](const auto& e) {
        return proell::torsion_field_degree(e, ell);
    });
    json j{{"q", q},
           {"coeffs", coeff_text},
           {"ell", ell},
           {"m", td.m},
           {"method", proell::degree_method_name(td.method)}};
    out = j.dump() + "\n";
    return 0;
}

int cmd_proell_scan(const std::string& input, int64_t ell_max,
                    const std::string& output, std::string& out) {
    if (ell_max > proell::detail::kMaxTorsionEll)
        fail(ErrorCode::OutOfDeskScale, "scan supports ell <= 13");
    std::ifstream in(input);
    if (!in) fail(ErrorCode::BadInput, "cannot open input file " + input);
    std::vector<std::pair<int64_t, std::string>> lines;
    std::string line;
    int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') trimmed += c;
        if (trimmed.empty() || trimmed[0] == '#') continue;
        lines.emplace_back(lineno, trimmed);
    }

    std::vector<std::string> results(lines.size());
    int64_t n = static_cast<int64_t>(lines.size());
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < n; ++i) {
        json j;
        try {
            j = scan_one_line(lines[static_cast<size_t>(i)].first,
                              lines[static_cast<size_t>(i)].second, ell_max);
        } catch (const Error& err) {
            j = json{{"line", lines[static_cast<size_t>(i)].first},
                     {"error", error_code_name(err.code())},
                     {"detail", err.what()}};
        }
        results[static_cast<size_t>(i)] = j.dump();
    }

    std::string body;
    for (const auto& r : results) body += r + "\n";
    if (!output.empty()) {
        std::ofstream of(output, std::ios::binary);
        if (!of) fail(ErrorCode::BadInput, "cannot open output file " + output);
        of << body;
        out = "";
    } else {
        out = body;
    }
    return 0;
}

int cmd_supersingular(int64_t p, int64_t ell, int64_t e, std::string& out) {
    auto r = proell::supersingular_residue(p, ell, e);
    json j{{"p", r.p},
           {"ell", r.ell},
           {"e", r.e},
           {"f", r.f},
           {"branch", proell::f_class_name(r.branch)},
           {"residue", r.residue}};
    out = j.dump() + "\n";
    return 0;
}

int cmd_density(int64_t p, int64_t limit, const std::string& csv, std::string& out) {
    std::vector<density::DensityRow> rows;
    auto scan = density::density_scan(p, limit, csv.empty() ? nullptr : &rows);
    if (!csv.empty()) {
        std::ofstream of(csv, std::ios::binary);
        if (!of) fail(ErrorCode::BadInput, "cannot open csv file " + csv);
        of << "ell,f,class\n";
        for (const auto& r : rows)
            of << r.ell << "," << r.f << "," << proell::f_class_name(r.cls) << "\n";
    }
    auto dens = [&](int64_t c) {
        return static_cast<double>(c) / static_cast<double>(scan.primes_counted);
    };
    json j{{"p", scan.p},
           {"limit", scan.limit},
           {"primes_counted", scan.primes_counted},
           {"tallies",
            {{"odd", scan.odd}, {"two_mod4", scan.two_mod4}, {"zero_mod4", scan.zero_mod4}}},
           {"fmod4",
            {{"f0", scan.f0}, {"f1", scan.f1}, {"f2", scan.f2}, {"f3", scan.f3}}},
           {"densities",
            {{"odd", dens(scan.odd)},
             {"two_mod4", dens(scan.two_mod4)},
             {"zero_mod4", dens(scan.zero_mod4)}}}};
    out = j.dump() + "\n";
    return 0;
}

int cmd_sp_order(int64_t d, int64_t ell, std::string& out) {
    auto r = bounds::sp_order(d, ell);
    json j{{"d", r.d}, {"ell", r.ell}, {"order", r.order}, {"is_ell_power", r.is_ell_power}};
    out = j.dump() + "\n";
    return 0;
}

int cmd_fixed_vector(int64_t ell, const std::string& gens_text, std::string& out) {
    auto gens = mats_from_json(gens_text, ell);
    auto closure = proell::group_closure(gens, ell, ell * ell * ell);
    auto v = proell::fixed_vector(gens, ell);
    json j{{"ell", ell},
           {"closure_size", closure.size()},
           {"vector", {v[0], v[1]}}};
    out = j.dump() + "\n";
    return 0;
}

int cmd_stable_line(int64_t ell, const std::string& gens_text,
                    const std::string& delta_text, std::string& out) {
    auto gens = mats_from_json(gens_text, ell);
    auto delta = mat_from_json(json::parse(delta_text), ell);
    auto closure = proell::group_closure(gens, ell, ell * ell * ell);
    auto v = proell::stable_line(gens, delta, ell);
    json j{{"ell", ell},
           {"closure_size", closure.size()},
           {"line", {v[0], v[1]}}};
    out = j.dump() + "\n";
    return 0;
}

} // namespace

std::array<CoeffSpec, 5> parse_coeff_list(const std::string& text) {
    std::array<CoeffSpec, 5> out;
    std::vector<std::string> parts;
    std::string cur;
    int bracket = 0;
    for (char c : text) {
        if (c == '[') ++bracket;
        if (c == ']') --bracket;
        if (c == ',' && bracket == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (bracket != 0) fail(ErrorCode::BadInput, "unbalanced brackets in coefficients");
    if (parts.size() != 5)
        fail(ErrorCode::BadInput, "expected five coefficients a1,a2,a3,a4,a6");
    auto parse_int = [](const std::string& s) {
        size_t pos = 0;
        int64_t v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            fail(ErrorCode::BadInput, "bad integer '" + s + "'");
        }
        if (pos != s.size()) fail(ErrorCode::BadInput, "bad integer '" + s + "'");
        return v;
    };
    for (size_t i = 0; i < 5; ++i) {
        const std::string& s = parts[i];
        if (s.empty()) fail(ErrorCode::BadInput, "empty coefficient");
        if (s.front() == '[') {
            if (s.back() != ']') fail(ErrorCode::BadInput, "bad vector coefficient");
            out[i].is_vector = true;
            std::string inner = s.substr(1, s.size() - 2);
            std::string piece;
            std::istringstream ss(inner);
            while (std::getline(ss, piece, ':'))
                out[i].vec.push_back(parse_int(piece));
        } else {
            out[i].value = parse_int(s);
        }
    }
    return out;
}

RunResult run(const std::vector<std::string>& args) {
    RunResult result;
    CLI::App app{"exact verifier for torsion families, pro-ell membership and bounds"};
    app.require_subcommand(1);

    // bound --genus G
    int64_t genus = 0;
    auto* bound_cmd = app.add_subcommand("bound", "torsion bound for genus g");
    bound_cmd->add_option("--genus", genus, "genus of the function field")->required();

    // verify seven|eleven
    auto* verify_cmd = app.add_subcommand("verify", "verify an explicit family member");
    verify_cmd->require_subcommand(1);
    int64_t seven_p = 0;
    std::string seven_f;
    auto* seven_cmd = verify_cmd->add_subcommand("seven", "order-7 family over F_p(t)");
    seven_cmd->add_option("--p", seven_p, "characteristic")->required();
    seven_cmd->add_option("--f", seven_f, "rational function in t")->required();
    int64_t eleven_p = 0, eleven_n = 0;
    auto* eleven_cmd =
        verify_cmd->add_subcommand("eleven", "order-11 family over F_p(X_1(11))");
    eleven_cmd->add_option("--p", eleven_p, "characteristic")->required();
    eleven_cmd->add_option("--n", eleven_n, "Frobenius-twist exponent")->required();

    // proell check|scan
    auto* proell_cmd = app.add_subcommand("proell", "pro-ell membership criterion");
    proell_cmd->require_subcommand(1);
    int64_t check_q = 0, check_ell = 0;
    std::string check_coeffs;
    auto* check_cmd = proell_cmd->add_subcommand("check", "single curve check");
    check_cmd->add_option("--q", check_q, "field order (prime power)")->required();
    check_cmd->add_option("--coeffs", check_coeffs, "a1,a2,a3,a4,a6")->required();
    check_cmd->add_option("--ell", check_ell, "prime ell")->required();
    std::string scan_input, scan_output;
    int64_t scan_ell_max = 7;
    auto* scan_cmd = proell_cmd->add_subcommand("scan", "batch scan from a curve file");
    scan_cmd->add_option("--input", scan_input, "file of q,a1,a2,a3,a4,a6 lines")
        ->required();
    scan_cmd->add_option("--ell-max", scan_ell_max, "scan primes up to this bound")
        ->required();
    scan_cmd->add_option("--output", scan_output, "output file (default stdout)");

    // torsion-degree
    int64_t td_q = 0, td_ell = 0;
    std::string td_coeffs;
    auto* td_cmd = app.add_subcommand("torsion-degree", "[F_q(E[ell]) : F_q]");
    td_cmd->add_option("--q", td_q, "field order (prime power)")->required();
    td_cmd->add_option("--coeffs", td_coeffs, "a1,a2,a3,a4,a6")->required();
    td_cmd->add_option("--ell", td_ell, "prime ell")->required();

    // supersingular
    int64_t ss_p = 0, ss_ell = 0, ss_e = 0;
    auto* ss_cmd = app.add_subcommand("supersingular", "supersingular residue trichotomy");
    ss_cmd->add_option("--p", ss_p, "prime p >= 5")->required();
    ss_cmd->add_option("--ell", ss_ell, "prime ell > p")->required();
    ss_cmd->add_option("--e", ss_e, "ell-power exponent");

    // density
    int64_t den_p = 0, den_limit = 0;
    std::string den_csv;
    auto* den_cmd = app.add_subcommand("density", "f mod 4 class tallies over primes");
    den_cmd->add_option("--p", den_p, "base prime")->required();
    den_cmd->add_option("--limit", den_limit, "scan primes up to this bound")->required();
    den_cmd->add_option("--csv", den_csv, "write per-prime rows to this file");

    // sp-order
    int64_t sp_d = 0, sp_ell = 0;
    auto* sp_cmd = app.add_subcommand("sp-order", "order of Sp(2d, F_ell)");
    sp_cmd->add_option("--d", sp_d, "dimension d")->required();
    sp_cmd->add_option("--ell", sp_ell, "prime ell")->required();

    // lemma fixed-vector | stable-line
    auto* lemma_cmd = app.add_subcommand("lemma", "F_ell linear-algebra lemmas");
    lemma_cmd->require_subcommand(1);
    int64_t fv_ell = 0;
    std::string fv_gens;
    auto* fv_cmd = lemma_cmd->add_subcommand("fixed-vector", "fixed vector of an ell-group");
    fv_cmd->add_option("--ell", fv_ell, "prime ell")->required();
    fv_cmd->add_option("--gens", fv_gens, "JSON list of 2x2 matrices")->required();
    int64_t sl_ell = 0;
    std::string sl_gens, sl_delta;
    auto* sl_cmd = lemma_cmd->add_subcommand("stable-line", "stable line of <N, delta>");
    sl_cmd->add_option("--ell", sl_ell, "prime ell")->required();
    sl_cmd->add_option("--gens", sl_gens, "JSON list of 2x2 matrices generating N")
        ->required();
    sl_cmd->add_option("--delta", sl_delta, "JSON 2x2 matrix")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        result.out = app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
        return result;
    }

    try {
        if (bound_cmd->parsed()) {
            result.exit_code = cmd_bound(genus, result.out);
        } else if (seven_cmd->parsed()) {
            result.exit_code = cmd_verify_seven(seven_p, seven_f, result.out);
        } else if (eleven_cmd->parsed()) {
            result.exit_code = cmd_verify_eleven(eleven_p, eleven_n, result.out);
        } else if (check_cmd->parsed()) {
            result.exit_code = cmd_proell_check(check_q, check_coeffs, check_ell, result.out);
        } else if (scan_cmd->parsed()) {
            result.exit_code = cmd_proell_scan(scan_input, scan_ell_max, scan_output, result.out);
        } else if (td_cmd->parsed()) {
            result.exit_code = cmd_torsion_degree(td_q, td_coeffs, td_ell, result.out);
        } else if (ss_cmd->parsed()) {
            result.exit_code = cmd_supersingular(ss_p, ss_ell, ss_e, result.out);
        } else if (den_cmd->parsed()) {
            result.exit_code = cmd_density(den_p, den_limit, den_csv, result.out);
        } else if (sp_cmd->parsed()) {
            result.exit_code = cmd_sp_order(sp_d, sp_ell, result.out);
        } else if (fv_cmd->parsed()) {
            result.exit_code = cmd_fixed_vector(fv_ell, fv_gens, result.out);
        } else if (sl_cmd->parsed()) {
            result.exit_code = cmd_stable_line(sl_ell, sl_gens, sl_delta, result.out);
        }
    } catch (const Error& err) {
        json j{{"error", error_code_name(err.code())}, {"detail", err.what()}};
        result.out = j.dump() + "\n";
        result.exit_code = 1;
    } catch (const nlohmann::json::exception& err) {
        json j{{"error", "BadInput"}, {"detail", err.what()}};
        result.out = j.dump() + "\n";
        result.exit_code = 1;
    }
    return result;
}

} // namespace elltor::cli
