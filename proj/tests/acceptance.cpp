// Acceptance run: one PASS/FAIL line per criterion.  Exit status is 0 when
// every criterion passes or fails with a documented reason listed in
// kKnownFailures; a listed criterion that starts passing also exits nonzero
// so the list stays honest.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "qheis/qheis.hpp"

using namespace qheis;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

const std::map<std::string, std::string> kKnownFailures{
    {"specialization",
     "Specialization table: the classical row with all exponents 0 has nH3 = x_2*p - q*p*x_2, which no classical target satisfies "
     "for q != 1; three further rows are recovered only by sign flip or by the worked example's values"},
    {"ore", "Gaddis sigma_z(x) = q^-1*x only holds for the printed relation z*x = q^-1*x*z, which is not confluent; "
            "the shipped relation is z*x = p^-1*x*z"},
};

std::map<std::string, VerificationReport> by_id(const std::vector<VerificationReport>& rs) {
    std::map<std::string, VerificationReport> m;
    for (const auto& r : rs) m.emplace(r.id, r);
    return m;
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(s < 1 ? 3 : 2);
    o << std::fixed << s << " s";
    return o.str();
}

template <class F>
std::pair<Outcome, double> timed(F f) {
    auto t0 = Clock::now();
    Outcome o = f();
    return {o, std::chrono::duration<double>(Clock::now() - t0).count()};
}

void require(Outcome& o, bool cond, const std::string& why) {
    if (!cond) {
        o.pass = false;
        o.detail += (o.detail.empty() ? "" : "; ") + why;
    }
}

Outcome gaddis_powers() {
    Outcome o;
    std::ostringstream out, err;
    const char* argv[] = {"qheis", "verify", "--suite", "gaddis", "--k", "10"};
    int code = run_cli(6, argv, out, err);
    require(o, code == 0, "verify exit code " + std::to_string(code));
    auto rs = by_id(run_suite("gaddis"));
    int ok = 0;
    for (int k = 1; k <= 10; ++k) {
        const auto& r = rs.at("gaddis-power-k" + std::to_string(k));
        if (r.status == Status::pass) ++ok;
        else require(o, false, r.id + ": " + r.summary);
    }
    o.detail = std::to_string(ok) + "/10 k with both identities, exact equality" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome schmudgen() {
    Outcome o;
    auto rs = by_id(run_suite("schmudgen-equivalence,schmudgen-printed-equivalence"));
    const auto& eq = rs.at("schmudgen-equivalence");
    const auto& pr = rs.at("schmudgen-printed-equivalence");
    require(o, eq.status == Status::pass, "equivalence: " + eq.summary);
    require(o, pr.status == Status::discrepancy && pr.witness, "printed relations not reported as a discrepancy");
    if (o.pass) o.detail = eq.summary + "; printed form reported as discrepancy";
    return o;
}

Outcome specialization() {
    Outcome o;
    auto rs = run_suite("all");
    const std::vector<std::string> examples{"example-wess", "example-schmudgen-n1", "example-schmudgen-n-1",
                                            "example-wess-schwenk", "example-qhbar", "example-qhbar-quantization"};
    auto m = by_id(rs);
    for (const auto& id : examples) require(o, m.at(id).status == Status::pass, id + " " + to_string(m.at(id).status));
    int rows = 0, plain = 0, annotated = 0, failed = 0;
    std::map<std::string, int> kinds;
    for (const auto& r : rs) {
        if (r.id.rfind("table-", 0) != 0) continue;
        ++rows;
        if (r.status == Status::pass) {
            ++plain;
        } else if (r.status == Status::discrepancy && !r.notes.empty()) {
            ++annotated;
            std::string k = r.notes.front().substr(std::string("diagnostic: ").size());
            k = k.substr(0, k.find(' '));
            ++kinds[k];
            if (k != "column-swap" && k != "index-role") require(o, false, r.id + " needs the " + k + " diagnostic");
        } else {
            ++failed;
            require(o, false, r.id + " unannotated " + to_string(r.status));
        }
    }
    std::string ks;
    for (const auto& [k, n] : kinds) ks += (ks.empty() ? "" : ", ") + k + " x" + std::to_string(n);
    o.detail = std::to_string(examples.size()) + " example cases as printed; specialization table: " + std::to_string(rows) +
               " rows, " + std::to_string(plain) + " pass, " + std::to_string(annotated) + " annotated (" + ks + "), " +
               std::to_string(failed) + " unannotated" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome classical_limit_case() {
    Outcome o;
    auto rs = by_id(run_suite("classical-limit-normal-forms,example-classical-limit"));
    for (const auto& [id, r] : rs) require(o, r.status == Status::pass, id + ": " + r.summary);
    if (o.pass) o.detail = rs.at("classical-limit-normal-forms").summary;
    return o;
}

Outcome ore() {
    Outcome o;
    auto rs = run_suite("all");
    int n = 0;
    for (const auto& r : rs) {
        if (r.claim != "ore_match") continue;
        ++n;
        if (r.id == "wess-ore-x-p") {
            require(o, r.status == Status::discrepancy && !r.notes.empty(), "doubled-hbar discrepancy not reported");
            continue;
        }
        require(o, r.status == Status::pass, r.id + ": " + r.summary);
    }
    o.detail = std::to_string(n) + " Ore claims; wess delta_x(p) doubled hbar reported" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome confluence() {
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& f : family_list()) {
        RewriteSystem sys = orient(catalog(f.id));
        auto rep = check_confluence(sys, 6);
        pairs += rep.pairs_checked;
        require(o, rep.confluent, f.id + ": " + std::to_string(rep.unresolved.size()) + " unresolved");
    }
    auto b = run_suite("schmudgen-basis").front();
    require(o, b.status == Status::pass, "schmudgen basis: " + b.summary);
    o.detail = std::to_string(family_list().size()) + " families, " + std::to_string(pairs) +
               " critical pairs to overlap length 6; " + b.summary + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome oracle() {
    Outcome o;
    std::size_t words = 0, mism = 0;
    for (const auto& f : family_list()) {
        Presentation pres = catalog(f.id);
        RewriteSystem sys = orient(pres).with_step_limit(1000000);
        std::size_t extra = pres.alphabet->size() > 4 ? 500 : 0;
        auto sw = oracle_sweep(sys, 5, extra, seed_from("acceptance-" + f.id));
        words += sw.words_checked;
        mism += sw.mismatches;
        if (sw.mismatches) require(o, false, f.id + ": " + sw.first_mismatch.value_or(""));
    }
    o.detail = std::to_string(words) + " words, " + std::to_string(mism) + " mismatches" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome foundations() {
    Outcome o;
    Rng rng(2024);
    auto rc = [&] {
        Coefficient d;
        do d = random_coefficient(rng) + random_coefficient(rng);
        while (d.is_zero());
        return (random_coefficient(rng) + random_coefficient(rng)) / d;
    };
    int field_bad = 0;
    for (int n = 0; n < 200; ++n) {
        Coefficient a = rc(), b = rc(), c = rc();
        bool ok = (a + b) + c == a + (b + c) && a * b == b * a && (a * b) * c == a * (b * c) &&
                  a * (b + c) == a * b + a * c && (a.is_zero() || (a * a.inverse()).is_one());
        field_bad += !ok;
    }
    require(o, field_bad == 0, std::to_string(field_bad) + " field-axiom triples failed");
    int qbad = 0;
    for (int k = 1; k <= 25; ++k) qbad += !(qnumber(k) == qnumber_closed_form(k));
    require(o, qbad == 0, std::to_string(qbad) + " qnumber mismatches");
    Presentation g = catalog("gaddis");
    int jbad = 0;
    for (int n = 0; n < 200; ++n) {
        NCPoly a = random_poly(g.alphabet, 3, 3, rng), b = random_poly(g.alphabet, 3, 3, rng),
               c = random_poly(g.alphabet, 3, 3, rng);
        jbad += !(commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b)))
                     .is_zero();
    }
    require(o, jbad == 0, std::to_string(jbad) + " Jacobi failures");
    int pbad = 0, fbad = 0;
    for (const auto& f : family_list()) {
        Presentation pres = catalog(f.id);
        for (int n = 0; n < 500; ++n) {
            NCPoly a = random_poly(pres.alphabet, 4, 4, rng);
            try {
                pbad += !(parse_expr(format_expr(a), pres) == a);
            } catch (const Error&) {
                ++pbad;
            }
        }
        fbad += !same_presentation(pres, load_presentation(save_presentation(pres)));
    }
    require(o, pbad == 0, std::to_string(pbad) + " parser round-trip failures");
    require(o, fbad == 0, std::to_string(fbad) + " file round-trip failures");
    auto t0 = Clock::now();
    auto rs = run_suite("all");
    double suite_s = std::chrono::duration<double>(Clock::now() - t0).count();
    require(o, unexpected_count(rs) == 0, std::to_string(unexpected_count(rs)) + " unexpected suite results");
    require(o, suite_s < 120, "full suite took " + fmt_seconds(suite_s));
    o.detail = "200 field triples, qnumber k<=25, 200 Jacobi triples, 500 round-trips per family, " +
               std::to_string(family_list().size()) + " file round-trips; full suite " + std::to_string(rs.size()) +
               " cases in " + fmt_seconds(suite_s) + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        std::string key;
        std::string name;
        double limit_s;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria{
        {"gaddis", "Gaddis power identities", 5, gaddis_powers},
        {"schmudgen", "Schmudgen relation-set equivalence", 10, schmudgen},
        {"specialization", "Specialization corpus", 0, specialization},
        {"classical_limit", "Classical limit", 0, classical_limit_case},
        {"ore", "Ore extraction", 0, ore},
        {"confluence", "Confluence and Schmudgen basis", 30, confluence},
        {"oracle", "Oracle equivalence", 0, oracle},
        {"foundations", "Foundations", 120, foundations},
    };
    int unexpected = 0;
    for (const auto& c : criteria) {
        Outcome o;
        double secs = 0;
        try {
            std::tie(o, secs) = timed(c.run);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (c.limit_s > 0 && secs >= c.limit_s) {
            o.pass = false;
            o.detail += "; over the time limit";
        }
        std::string timing = fmt_seconds(secs) + (c.limit_s > 0 ? " (limit " + fmt_seconds(c.limit_s) + ")" : "");
        auto known = kKnownFailures.find(c.key);
        std::string verdict = o.pass ? "PASS" : "FAIL";
        if (!o.pass && known != kKnownFailures.end()) {
            verdict = "FAIL (known: " + known->second + ")";
        } else if (!o.pass) {
            ++unexpected;
        } else if (known != kKnownFailures.end()) {
            verdict = "PASS (listed as a known failure; update the list)";
            ++unexpected;
        }
        std::cout << verdict << "  " << c.name << "  [" << timing << "]  " << o.detail << "\n";
    }
    std::cout << (unexpected ? "acceptance: unexpected results\n" : "acceptance: no unexpected results\n");
    return unexpected ? 1 : 0;
}
