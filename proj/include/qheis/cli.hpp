#pragma once

// Command-line front end.  run_cli is the whole program; tools/main.cpp only
// forwards argv and the standard streams.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "verify.hpp"

namespace qheis {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse = 2;
inline constexpr int engine = 3;
inline constexpr int verification = 4;
} // namespace exit_code

inline int exit_code_for(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::usage: return exit_code::usage;
        case ErrorCategory::parse: return exit_code::parse;
        case ErrorCategory::engine: return exit_code::engine;
        case ErrorCategory::verification: return exit_code::verification;
    }
    return exit_code::engine;
}

namespace detail {

inline FamilyParams parse_param_flags(const std::vector<std::string>& flags) {
    FamilyParams out;
    for (const auto& f : flags) {
        auto eq = f.find('=');
        if (eq == std::string::npos || eq == 0) throw ParamError("--param expects key=value, got '" + f + "'");
        std::string k = trim(f.substr(0, eq)), v = trim(f.substr(eq + 1));
        if (!out.emplace(k, v).second) throw ParamError("parameter '" + k + "' given twice");
    }
    return out;
}

inline bool looks_like_file(const std::string& spec) {
    return spec.find('/') != std::string::npos || spec.ends_with(".pres") || std::filesystem::is_regular_file(spec);
}

inline Style style_from(const std::string& f) {
    if (f == "latex") return Style::latex;
    return Style::plain;
}

} // namespace detail

/// A catalog id, "unified", or a presentation file path.
inline Presentation resolve_algebra(const std::string& spec, const FamilyParams& params) {
    if (detail::looks_like_file(spec)) {
        if (!params.empty()) throw ParamError("--param cannot be combined with a presentation file");
        return load_presentation_file(spec);
    }
    if (spec == "unified") return unified(unified_params_from(params));
    return catalog(spec, params);
}

struct Session {
    Presentation pres;
    RewriteSystem sys;

    explicit Session(Presentation p) : pres(std::move(p)), sys(orient(pres)) {}
};

inline void print_poly(std::ostream& out, const NCPoly& a, const std::string& format) {
    if (format == "json") {
        out << nlohmann::json{{"plain", format_expr(a)}, {"poly", poly_json(a)}}.dump() << "\n";
    } else {
        out << format_expr(a, detail::style_from(format)) << "\n";
    }
}

inline int cmd_normalize(const Session& s, const std::string& expr, bool trace, const std::string& format,
                         std::ostream& out) {
    NCPoly a = parse_expr(expr, s.pres);
    if (!trace) {
        print_poly(out, normalize(a, s.sys), format);
        return exit_code::ok;
    }
    auto steps = reduce_trace(a, s.sys);
    NCPoly nf = steps.empty() ? a : steps.back().result;
    const Alphabet& alpha = *s.pres.alphabet;
    if (format == "json") {
        nlohmann::json js = nlohmann::json::array();
        for (const auto& st : steps)
            js.push_back({{"rule", st.origin},
                          {"word", word_to_string(alpha, st.word)},
                          {"position", st.position},
                          {"result", format_expr(st.result)}});
        out << nlohmann::json{{"plain", format_expr(nf)}, {"poly", poly_json(nf)}, {"trace", js}}.dump() << "\n";
        return exit_code::ok;
    }
    Style style = detail::style_from(format);
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const auto& st = steps[k];
        out << "step " << (k + 1) << ": " << st.origin << " at " << word_to_string(alpha, st.word) << " [" << st.position
            << "] -> " << format_expr(st.result, style) << "\n";
    }
    out << format_expr(nf, style) << "\n";
    return exit_code::ok;
}

inline int cmd_commutator(const Session& s, const std::string& a, const std::string& b, const std::string& format,
                          std::ostream& out) {
    print_poly(out, normalize(commutator(parse_expr(a, s.pres), parse_expr(b, s.pres)), s.sys), format);
    return exit_code::ok;
}

inline int cmd_confluence(const Session& s, std::size_t max_overlap, std::ostream& out, std::ostream& err) {
    for (const auto& n : s.sys.notes()) err << "note: " << n << "\n";
    auto rep = check_confluence(s.sys, max_overlap);
    const Alphabet& alpha = *s.pres.alphabet;
    if (rep.confluent) {
        out << "confluent up to overlap length " << max_overlap << "\n";
        out << "critical pairs checked: " << rep.pairs_checked << "\n";
        return exit_code::ok;
    }
    out << "not confluent: " << rep.unresolved.size() << " unresolved critical pair"
        << (rep.unresolved.size() == 1 ? "" : "s") << " up to overlap length " << max_overlap << "\n";
    out << "critical pairs checked: " << rep.pairs_checked << "\n";
    for (const auto& cp : rep.unresolved) {
        out << "overlap " << word_to_string(alpha, cp.overlap_word) << " (" << s.sys.rules()[cp.left_rule].origin
            << ", " << s.sys.rules()[cp.right_rule].origin << ")\n";
        out << "  left:  " << format_expr(cp.left_result) << " -> " << format_expr(cp.left_normal) << "\n";
        out << "  right: " << format_expr(cp.right_result) << " -> " << format_expr(cp.right_normal) << "\n";
    }
    return exit_code::verification;
}

inline int cmd_ore(const Session& s, const std::string& tower_text, const std::string& format, std::ostream& out) {
    auto tower = detail::split_list(tower_text);
    OreData data = extract_ore(s.pres, tower, s.sys);
    if (format == "json") {
        nlohmann::json js = nlohmann::json::array();
        for (const auto& e : data.entries)
            js.push_back({{"adjoined", e.adjoined},
                          {"earlier", e.earlier},
                          {"sigma", format_expr(e.sigma)},
                          {"delta", format_expr(e.delta)}});
        out << nlohmann::json{{"tower", tower}, {"entries", js}}.dump() << "\n";
        return exit_code::ok;
    }
    Style style = detail::style_from(format);
    out << "tower: " << detail::join(tower, " < ") << "\n";
    for (const auto& e : data.entries) {
        out << "sigma_" << e.adjoined << "(" << e.earlier << ") = " << format_expr(e.sigma, style) << "    delta_"
            << e.adjoined << "(" << e.earlier << ") = " << format_expr(e.delta, style) << "\n";
    }
    return exit_code::ok;
}

inline void cmd_families(std::ostream& out) {
    auto sig = [](const std::vector<std::pair<std::string, std::string>>& ps) {
        std::string s;
        for (const auto& [k, v] : ps) s += (s.empty() ? "" : ", ") + k + "=" + v;
        return s;
    };
    std::size_t w = 0;
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& f : family_list()) rows.emplace_back(f.id + "(" + sig(f.params) + ")", f.summary);
    rows.emplace_back("unified(n=1, m=1, l=1, psi=1, pi=0, phi=0, range=1, extras=)",
                      "unified algebra with dynamical functions psi, pi, phi");
    for (const auto& r : rows) w = std::max(w, r.first.size());
    for (const auto& [s, d] : rows) out << s << std::string(w - s.size() + 2, ' ') << d << "\n";
    out << "any family also accepts drop=<label,...> to remove relations\n";
}

inline int cmd_verify(const std::string& suite, const std::string& report_path, int K, const std::string& format,
                      std::ostream& out, std::ostream& err) {
    if (K < 1) throw ParamError("--k must be at least 1");
    SuiteOptions opt;
    opt.K = K;
    auto rs = run_suite(suite, opt);
    auto js = report_json(rs, suite, K);
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw ParamError("cannot write report to '" + report_path + "'");
        f << js.dump(2) << "\n";
    }
    if (format == "json")
        out << js.dump(2) << "\n";
    else
        out << report_table(rs);
    std::size_t bad = unexpected_count(rs);
    if (bad) err << bad << " unexpected result" << (bad == 1 ? "" : "s") << "\n";
    return bad ? exit_code::verification : exit_code::ok;
}

// ---------------------------------------------------------------------------
// REPL

inline const char* repl_help =
    "commands:\n"
    "  algebra <id|file> [key=value ...]   select the algebra\n"
    "  normalize <expr>                    normal form\n"
    "  trace <expr>                        normal form with every rewrite step\n"
    "  commutator <a> ; <b>                normalized [a,b]\n"
    "  confluence [max-overlap]            critical pair check (default 6)\n"
    "  ore <g1,g2,...>                     sigma/delta table for a tower\n"
    "  verify <suite> [k]                  run verification cases\n"
    "  format plain|latex|json             output style\n"
    "  show                                print the current presentation\n"
    "  families                            list the catalog\n"
    "  help, quit\n";

inline int run_repl(std::istream& in, std::ostream& out, std::ostream& err, bool prompt) {
    std::optional<Session> session;
    std::string format = "plain";
    std::string line;
    auto need = [&]() -> const Session& {
        if (!session) throw ParamError("no algebra selected; use 'algebra <id>'");
        return *session;
    };
    for (;;) {
        if (prompt) out << (session ? session->pres.name : std::string("qheis")) << "> " << std::flush;
        if (!std::getline(in, line)) break;
        line = detail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto sp = line.find_first_of(" \t");
        std::string cmd = line.substr(0, sp), rest = sp == std::string::npos ? "" : detail::trim(line.substr(sp));
        try {
            if (cmd == "quit" || cmd == "exit") break;
            if (cmd == "help") {
                out << repl_help;
            } else if (cmd == "algebra") {
                auto words = detail::split_ws(rest);
                if (words.empty()) throw ParamError("algebra needs an id or file");
                std::vector<std::string> flags(words.begin() + 1, words.end());
                session.emplace(resolve_algebra(words[0], detail::parse_param_flags(flags)));
                out << "algebra " << session->pres.name << ": " << session->pres.relations.size() << " relations, "
                    << session->sys.rules().size() << " rules\n";
            } else if (cmd == "normalize" || cmd == "trace") {
                cmd_normalize(need(), rest, cmd == "trace", format, out);
            } else if (cmd == "commutator") {
                auto semi = rest.find(';');
                if (semi == std::string::npos) throw ParamError("commutator expects '<a> ; <b>'");
                cmd_commutator(need(), rest.substr(0, semi), rest.substr(semi + 1), format, out);
            } else if (cmd == "confluence") {
                std::size_t n = rest.empty() ? 6 : static_cast<std::size_t>(detail::parse_int_param("max-overlap", rest));
                cmd_confluence(need(), n, out, err);
            } else if (cmd == "ore") {
                cmd_ore(need(), rest, format, out);
            } else if (cmd == "verify") {
                auto words = detail::split_ws(rest);
                int K = words.size() > 1 ? detail::parse_int_param("k", words[1]) : 10;
                cmd_verify(words.empty() ? "all" : words[0], "", K, format == "json" ? "json" : "plain", out, err);
            } else if (cmd == "format") {
                if (rest != "plain" && rest != "latex" && rest != "json") throw ParamError("format must be plain, latex or json");
                format = rest;
            } else if (cmd == "show") {
                out << save_presentation(need().pres);
            } else if (cmd == "families") {
                cmd_families(out);
            } else {
                throw ParamError("unknown command '" + cmd + "' (try 'help')");
            }
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
        }
    }
    return exit_code::ok;
}

// ---------------------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
    CLI::App app{"Exact normal forms, confluence checks and claim verification for q-deformed Heisenberg algebras",
                 "qheis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qheis 1.0.0");

    std::string algebra, expr, a, b, format = "plain", tower, suite = "all", report;
    std::vector<std::string> params;
    bool trace = false;
    int K = 10;
    std::size_t max_overlap = 6;

    auto algebra_opts = [&](CLI::App* sc) {
        sc->add_option("--algebra", algebra, "catalog id, 'unified', or presentation file")->required();
        sc->add_option("--param", params, "family parameter key=value (repeatable)");
    };
    auto format_opt = [&](CLI::App* sc) {
        sc->add_option("--format", format, "output style")->check(CLI::IsMember({"plain", "latex", "json"}));
    };

    auto* normalize_cmd = app.add_subcommand("normalize", "normal form of an expression");
    algebra_opts(normalize_cmd);
    normalize_cmd->add_option("--expr", expr, "expression")->required();
    normalize_cmd->add_flag("--trace", trace, "print each rewrite step");
    format_opt(normalize_cmd);

    auto* comm_cmd = app.add_subcommand("commutator", "normalized commutator [a,b]");
    algebra_opts(comm_cmd);
    comm_cmd->add_option("--a", a, "first expression")->required();
    comm_cmd->add_option("--b", b, "second expression")->required();
    format_opt(comm_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run the verification corpus");
    verify_cmd->add_option("--suite", suite, "all, a family id, or comma-separated case ids");
    verify_cmd->add_option("--report", report, "write the JSON report to this path");
    verify_cmd->add_option("--k", K, "largest k for the power identities");
    verify_cmd->add_option("--format", format, "plain table or json on stdout")->check(CLI::IsMember({"plain", "json"}));

    auto* conf_cmd = app.add_subcommand("confluence", "critical pair check");
    algebra_opts(conf_cmd);
    conf_cmd->add_option("--max-overlap", max_overlap, "largest overlap word length")->check(CLI::PositiveNumber);

    auto* ore_cmd = app.add_subcommand("ore", "sigma/delta data along a tower of generators");
    algebra_opts(ore_cmd);
    ore_cmd->add_option("--tower", tower, "comma-separated generators, base first")->required();
    format_opt(ore_cmd);

    auto* families_cmd = app.add_subcommand("families", "list catalog families");
    auto* repl_cmd = app.add_subcommand("repl", "interactive session");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForVersion&) {
        out << "qheis 1.0.0\n";
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_code::ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }

    try {
        if (*families_cmd) {
            cmd_families(out);
            return exit_code::ok;
        }
        if (*repl_cmd) return run_repl(in, out, err, &in == &std::cin && isatty(STDIN_FILENO));
        if (*verify_cmd) return cmd_verify(suite, report, K, format, out, err);
        Session s(resolve_algebra(algebra, detail::parse_param_flags(params)));
        if (*normalize_cmd) return cmd_normalize(s, expr, trace, format, out);
        if (*comm_cmd) return cmd_commutator(s, a, b, format, out);
        if (*conf_cmd) return cmd_confluence(s, max_overlap, out, err);
        if (*ore_cmd) return cmd_ore(s, tower, format, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.category());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::engine;
    }
    return exit_code::usage;
}

} // namespace qheis
