#pragma once

// Line-oriented text format for presentations.
//
//   # comment
//   [presentation]
//   name = wess
//   interreduce = false
//   order = deglex                      (or: weighted h | x | y | 3)
//   [generators]
//   Lambda_inv Lambda p x               (lowest precedence first; may span lines)
//   [inverses]
//   Lambda Lambda_inv
//   [parameters]
//   variant = definition
//   [opaque]
//   D
//   [relations]
//   xp : q^(1/2)*x*p - q^(-1/2)*p*x - i*hbar*Lambda
//   [metadata]
//   any text, one note per line

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../presentation.hpp"
#include "format.hpp"
#include "parse.hpp"

namespace qheis {

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
    return out;
}

inline bool valid_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

} // namespace detail

inline std::string save_presentation(const Presentation& pres) {
    std::ostringstream out;
    out << "[presentation]\n";
    out << "name = " << pres.name << "\n";
    out << "interreduce = " << (pres.interreduce ? "true" : "false") << "\n";
    if (pres.order.kind == OrderSpec::Kind::deglex) {
        out << "order = deglex\n";
    } else {
        out << "order = weighted " << detail::join(pres.order.weighted, " ") << " | "
            << detail::join(pres.order.right_of, " ") << " | " << detail::join(pres.order.left_of, " ") << " | "
            << pres.order.base << "\n";
    }
    out << "\n[generators]\n" << detail::join(pres.alphabet->names(), " ") << "\n";
    if (!pres.inverse_pairs.empty()) {
        out << "\n[inverses]\n";
        for (const auto& [g, gi] : pres.inverse_pairs) out << g << " " << gi << "\n";
    }
    if (!pres.parameters.empty()) {
        out << "\n[parameters]\n";
        for (const auto& [k, v] : pres.parameters) out << k << " = " << v << "\n";
    }
    if (!pres.opaque_symbols.empty()) out << "\n[opaque]\n" << detail::join(pres.opaque_symbols, " ") << "\n";
    out << "\n[relations]\n";
    for (const auto& r : pres.relations) out << r.label << " : " << format_expr(r.poly) << "\n";
    if (!pres.metadata.empty()) {
        out << "\n[metadata]\n";
        for (const auto& m : pres.metadata) out << m << "\n";
    }
    return out.str();
}

/// Parses the text format.  Every error is a SchemaError whose message starts
/// with the line number and a field path.
inline Presentation load_presentation(const std::string& text) {
    Presentation pres;
    std::vector<std::string> gens;
    struct PendingRelation {
        std::size_t line;
        std::string label, expr;
    };
    std::vector<PendingRelation> pending;
    std::set<std::string> seen_sections;
    std::string section;
    bool have_name = false;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& path, const std::string& msg) {
        return SchemaError("line " + std::to_string(lineno) + ": " + path + ": " + msg);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::trim(raw);
        if (section != "metadata" && (line.empty() || line[0] == '#')) continue;
        if (line.size() > 2 && line.front() == '[' && line.back() == ']' &&
            detail::valid_identifier(line.substr(1, line.size() - 2))) {
            section = line.substr(1, line.size() - 2);
            static const std::set<std::string> known{"presentation", "generators", "inverses", "parameters",
                                                     "opaque",       "relations",  "metadata"};
            if (!known.count(section)) throw fail(section, "unknown section");
            if (!seen_sections.insert(section).second) throw fail(section, "section appears twice");
            continue;
        }
        if (section.empty()) throw fail("(top)", "content before the first section header");
        if (section == "metadata") {
            if (!line.empty()) pres.metadata.push_back(line);
            continue;
        }
        if (section == "presentation" || section == "parameters") {
            auto eq = line.find('=');
            if (eq == std::string::npos) throw fail(section, "expected 'key = value'");
            std::string key = detail::trim(line.substr(0, eq)), value = detail::trim(line.substr(eq + 1));
            if (key.empty()) throw fail(section, "empty key");
            if (section == "parameters") {
                if (!pres.parameters.emplace(key, value).second) throw fail("parameters." + key, "duplicate key");
                continue;
            }
            if (key == "name") {
                if (value.empty()) throw fail("presentation.name", "empty name");
                pres.name = value;
                have_name = true;
            } else if (key == "interreduce") {
                if (value != "true" && value != "false") throw fail("presentation.interreduce", "expected true or false");
                pres.interreduce = value == "true";
            } else if (key == "order") {
                if (value == "deglex") {
                    pres.order = OrderSpec{};
                } else if (value.rfind("weighted", 0) == 0) {
                    std::vector<std::string> parts;
                    std::string rest = value.substr(8);
                    for (std::size_t bar; (bar = rest.find('|')) != std::string::npos; rest = rest.substr(bar + 1))
                        parts.push_back(rest.substr(0, bar));
                    parts.push_back(rest);
                    if (parts.size() != 4) throw fail("presentation.order", "weighted order needs 4 '|'-separated fields");
                    pres.order.kind = OrderSpec::Kind::weighted;
                    pres.order.weighted = detail::split_ws(parts[0]);
                    pres.order.right_of = detail::split_ws(parts[1]);
                    pres.order.left_of = detail::split_ws(parts[2]);
                    try {
                        pres.order.base = std::stoi(detail::trim(parts[3]));
                    } catch (const std::exception&) {
                        throw fail("presentation.order", "base is not an integer");
                    }
                    if (pres.order.base < 2) throw fail("presentation.order", "base must be at least 2");
                } else {
                    throw fail("presentation.order", "expected 'deglex' or 'weighted ...'");
                }
            } else {
                throw fail("presentation." + key, "unknown key");
            }
            continue;
        }
        if (section == "generators" || section == "opaque") {
            for (const auto& w : detail::split_ws(line)) {
                if (!detail::valid_identifier(w)) throw fail(section, "'" + w + "' is not a valid name");
                (section == "generators" ? gens : pres.opaque_symbols).push_back(w);
            }
            continue;
        }
        if (section == "inverses") {
            auto w = detail::split_ws(line);
            std::string path = "inverses[" + std::to_string(pres.inverse_pairs.size()) + "]";
            if (w.size() != 2) throw fail(path, "expected two generator names");
            pres.inverse_pairs.emplace_back(w[0], w[1]);
            continue;
        }
        if (section == "relations") {
            auto colon = line.find(':');
            std::string path = "relations[" + std::to_string(pending.size()) + "]";
            if (colon == std::string::npos) throw fail(path, "expected 'label : expression'");
            std::string label = detail::trim(line.substr(0, colon));
            if (label.empty()) throw fail(path, "empty label");
            pending.push_back({lineno, label, detail::trim(line.substr(colon + 1))});
            continue;
        }
    }
    lineno = 0;
    if (!have_name) throw fail("presentation.name", "missing");
    if (gens.empty()) throw fail("generators", "no generators declared");
    {
        std::set<std::string> uniq;
        for (const auto& g : gens) {
            if (!uniq.insert(g).second) throw fail("generators", "'" + g + "' declared twice");
            if (g == "i" || g == "hbar" || g == "q") throw fail("generators", "'" + g + "' is reserved");
        }
    }
    pres.alphabet = make_alphabet(gens);
    for (const auto& o : pres.opaque_symbols)
        if (o == "i" || o == "hbar" || o == "q" || o == "p" || is_builtin_central(o))
            throw fail("opaque", "'" + o + "' is reserved");
        else if (pres.alphabet->find(o))
            throw fail("opaque", "'" + o + "' is also a generator");
    for (std::size_t k = 0; k < pres.inverse_pairs.size(); ++k)
        for (const auto& g : {pres.inverse_pairs[k].first, pres.inverse_pairs[k].second})
            if (!pres.alphabet->find(g))
                throw fail("inverses[" + std::to_string(k) + "]", "undeclared generator '" + g + "'");
    SymbolContext ctx = SymbolContext::of(pres);
    for (std::size_t k = 0; k < pending.size(); ++k) {
        lineno = pending[k].line;
        std::string path = "relations[" + std::to_string(k) + "] (" + pending[k].label + ")";
        try {
            pres.relations.push_back({pending[k].label, parse_expr(pending[k].expr, ctx)});
        } catch (const ParseError& e) {
            throw fail(path, e.what());
        }
    }
    lineno = 0;
    try {
        pres.validate();
    } catch (const SchemaError& e) {
        throw SchemaError(std::string("validation: ") + e.what());
    }
    return pres;
}

inline Presentation load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParamError("cannot open presentation file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_presentation(buf.str());
}

/// Structural equality: same generators in the same order, same relations
/// (label and polynomial), inverse pairs, parameters, opaques, metadata and
/// order.
inline bool same_presentation(const Presentation& a, const Presentation& b) {
    if (a.name != b.name || a.interreduce != b.interreduce || !(a.order == b.order)) return false;
    if (!same_alphabet(a.alphabet, b.alphabet) || a.inverse_pairs != b.inverse_pairs) return false;
    if (a.parameters != b.parameters || a.opaque_symbols != b.opaque_symbols || a.metadata != b.metadata) return false;
    if (a.relations.size() != b.relations.size()) return false;
    for (std::size_t k = 0; k < a.relations.size(); ++k) {
        if (a.relations[k].label != b.relations[k].label) return false;
        if (!(rename_generators(a.relations[k].poly, b.alphabet) == b.relations[k].poly)) return false;
    }
    return true;
}

} // namespace qheis
