#pragma once

// Command-line frontend: phi, rho, table, moebius, expand, mindist.
//
// Exit codes: 0 success / "yes", 1 "no", 2 bad input or usage,
// 3 rank-deficient generator matrix, 4 size cap exceeded.

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bsphere/bsphere.hpp"

namespace bsphere::cli {

enum ExitCode : int { kOk = 0, kNo = 1, kBadInput = 2, kRankDeficient = 3, kTooLarge = 4 };

using nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// "sigma[a] + sigma[b]", runs of three or more as "sigma[a] + ... + sigma[b]".
inline std::string sigma_terms(const SymmetricPoly& p) {
    std::vector<std::string> parts;
    if (p.constant()) parts.emplace_back("1");
    const auto s = p.support();
    for (std::size_t i = 0; i < s.size();) {
        std::size_t j = i;
        while (j + 1 < s.size() && s[j + 1] == s[j] + 1) ++j;
        if (j - i >= 2) {
            parts.push_back("sigma[" + std::to_string(s[i]) + "]");
            parts.emplace_back("...");
            parts.push_back("sigma[" + std::to_string(s[j]) + "]");
        } else {
            for (std::size_t k = i; k <= j; ++k) parts.push_back("sigma[" + std::to_string(s[k]) + "]");
        }
        i = j + 1;
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

inline json poly_json(const std::string& family, Degree t, const SymmetricPoly& p, int vars) {
    json j;
    j["family"] = family;
    j["t"] = t;
    if (vars >= 0) j["vars"] = vars;
    else j["tau"] = p.period();
    j["indices"] = std::vector<Degree>(p.support().begin(), p.support().end());
    if (p.constant()) j["constant"] = 1;
    return j;
}

inline json row_json(const TableRow& r) {
    return json{{"t", r.t},
                {"phi", {{"tau", r.phi_period}, {"indices", r.phi_indices}}},
                {"rho", {{"tau", r.rho_period}, {"indices", r.rho_indices}}}};
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sphere-vanishing Boolean polynomials and minimum-distance checks", "bsphere"};
    app.require_subcommand(1, 1);

    // phi / rho
    Degree poly_t = 0;
    int poly_vars = -1;
    std::string poly_format = "sigma";
    auto add_poly_cmd = [&](const std::string& name, const std::string& help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("t", poly_t, "threshold weight")->required();
        c->add_option("--vars", poly_vars, "restrict to this many variables")->check(CLI::Range(0, 64));
        c->add_option("--format", poly_format, "sigma | anf | json")
            ->check(CLI::IsMember({"sigma", "anf", "json"}));
        return c;
    };
    auto* phi_cmd = add_poly_cmd("phi", "phi_t: zero exactly below weight t");
    auto* rho_cmd = add_poly_cmd("rho", "rho_t: indicator of weight exactly t");

    Degree table_max = 63;
    std::string table_format = "text";
    auto* table_cmd = app.add_subcommand("table", "coefficient table of phi_t and rho_t for t = 1..max");
    table_cmd->add_option("--max", table_max, "last row")->check(CLI::Range(Degree{1}, Degree{1} << 20));
    table_cmd->add_option("--format", table_format, "text | json")->check(CLI::IsMember({"text", "json"}));

    std::string moebius_in, moebius_out;
    auto* moebius_cmd = app.add_subcommand("moebius", "binary Moebius transform of a bit-vector file");
    moebius_cmd->add_option("--in", moebius_in, "input file")->required();
    moebius_cmd->add_option("--out", moebius_out, "output file (default stdout)");

    Degree expand_t = 0;
    std::string expand_family = "phi", expand_format = "anf";
    int expand_vars = 0;
    auto* expand_cmd = app.add_subcommand("expand", "explicit ANF of phi_t, rho_t or sigma_t in n variables");
    expand_cmd->add_option("t", expand_t, "threshold or degree")->required();
    expand_cmd->add_option("--family", expand_family, "phi | rho | sigma")
        ->check(CLI::IsMember({"phi", "rho", "sigma"}));
    expand_cmd->add_option("--vars", expand_vars, "variable count")->required()->check(CLI::Range(0, 24));
    expand_cmd->add_option("--format", expand_format, "anf | truth | coeffs")
        ->check(CLI::IsMember({"anf", "truth", "coeffs"}));

    std::string gen_file, map_file, method_name = "eval", dist_format = "text";
    Degree check_t = 0;
    bool search = false;
    auto* dist_cmd = app.add_subcommand("mindist", "check or search the minimum distance of a code");
    auto* gen_opt = dist_cmd->add_option("--gen", gen_file, "generator matrix file");
    auto* map_opt = dist_cmd->add_option("--map", map_file, "code map file (arbitrary F with F(0) = 0)");
    gen_opt->excludes(map_opt);
    dist_cmd->add_option("--method", method_name, "eval | symbolic")->check(CLI::IsMember({"eval", "symbolic"}));
    auto* check_opt = dist_cmd->add_option("--check", check_t, "decide d >= t")->check(CLI::Range(Degree{1}, kMaxThreshold));
    auto* search_opt = dist_cmd->add_flag("--search", search, "binary search for d");
    check_opt->excludes(search_opt);
    dist_cmd->add_option("--format", dist_format, "text | json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (phi_cmd->parsed() || rho_cmd->parsed()) {
            const bool is_phi = phi_cmd->parsed();
            const std::string family = is_phi ? "phi" : "rho";
            SymmetricPoly p = is_phi ? build_phi(poly_t) : build_rho(poly_t);
            if (poly_format == "anf") {
                if (poly_vars < 0) {
                    err << "anf format needs --vars\n";
                    return kBadInput;
                }
                out << format_anf(expand(restrict_to(p, static_cast<Degree>(poly_vars)), static_cast<unsigned>(poly_vars)))
                    << "\n";
                return kOk;
            }
            if (poly_vars >= 0) p = restrict_to(p, static_cast<Degree>(poly_vars));
            if (poly_format == "json") {
                out << poly_json(family, poly_t, p, poly_vars).dump() << "\n";
                return kOk;
            }
            out << family << "[" << poly_t << "]";
            if (poly_vars >= 0) out << " (n=" << poly_vars << ")";
            out << ": " << sigma_terms(p);
            if (p.is_periodic() && !p.support().empty()) out << " (period " << p.period() << ")";
            out << "\n";
            return kOk;
        }

        if (table_cmd->parsed()) {
            const auto rows = emit_table(table_max);
            if (table_format == "json") {
                for (const auto& r : rows) out << row_json(r).dump() << "\n";
            } else {
                out << format_table(rows);
            }
            return kOk;
        }

        if (moebius_cmd->parsed()) {
            const auto in = parse_bit_table<CoefficientTag>(read_file(moebius_in));
            const std::string text = format_bit_table(moebius(in));
            if (moebius_out.empty()) {
                out << text;
            } else {
                std::ofstream f(moebius_out, std::ios::binary);
                if (!(f << text)) throw ParseError("cannot write " + moebius_out);
            }
            return kOk;
        }

        if (expand_cmd->parsed()) {
            const auto n = static_cast<unsigned>(expand_vars);
            SymmetricPoly p = expand_family == "phi"   ? restrict_to(build_phi(expand_t), n)
                              : expand_family == "rho" ? restrict_to(build_rho(expand_t), n)
                                                       : restrict_to(SymmetricPoly::sigma(expand_t), n);
            const SparseAnf f = expand(p, n);
            if (expand_format == "anf") out << format_anf(f) << "\n";
            else if (expand_format == "truth") out << format_bit_table(truth_table_of(f));
            else out << format_bit_table(to_dense(f));
            return kOk;
        }

        if (dist_cmd->parsed()) {
            if (gen_file.empty() == map_file.empty()) {
                err << "give exactly one of --gen or --map\n";
                return kBadInput;
            }
            if ((check_t == 0) == !search) {
                err << "give exactly one of --check t or --search\n";
                return kBadInput;
            }
            const Method method = method_name == "eval" ? Method::eval : Method::symbolic;
            const bool linear = !gen_file.empty();
            const char* sym = linear ? "d" : "w";

            if (search) {
                const DistanceResult r = linear ? min_distance(parse_generator_matrix(read_file(gen_file)), method)
                                                : min_weight(parse_code_map(read_file(map_file)), method);
                if (dist_format == "json") out << json{{"d", r.d}, {"checks_performed", r.checks_performed}}.dump() << "\n";
                else out << sym << " = " << r.d << "\n";
                return kOk;
            }

            bool holds = false;
            if (linear) {
                holds = weight_at_least(parse_generator_matrix(read_file(gen_file)), check_t, method);
            } else {
                holds = weight_at_least(parse_code_map(read_file(map_file)), check_t, method);
            }
            if (dist_format == "json") {
                out << json{{"t", check_t}, {"holds", holds}, {"checks_performed", 1}}.dump() << "\n";
            } else {
                out << sym << " >= " << check_t << ": " << (holds ? "yes" : "no");
                if (!linear && !holds) out << " (so d < " << check_t << ")";
                out << "\n";
            }
            return holds ? kOk : kNo;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kBadInput;
    } catch (const RankDeficientError& e) {
        err << "rank deficient: " << e.what() << "\n";
        return kRankDeficient;
    } catch (const BudgetExceeded& e) {
        err << "too large: " << e.what() << "\n";
        return kTooLarge;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace bsphere::cli
