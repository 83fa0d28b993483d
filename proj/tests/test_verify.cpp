#include <gtest/gtest.h>

#include <fstream>

#include "qheis/verify.hpp"

using namespace qheis;

namespace {

// [k]_{p,q} as the plain sum, written out here rather than taken from qnumber.
Coefficient pq_integer(int k) {
    Coefficient out(0);
    for (int j = 0; j < k; ++j) out += Coefficient::q_power(j) * Coefficient::p_power(-(k - 1 - j));
    return out;
}

// Minimal JSON-schema check: type, enum, required, properties,
// additionalProperties=false, items.  Returns the first violation.
std::optional<std::string> validate(const nlohmann::json& v, const nlohmann::json& s, const std::string& path) {
    auto type_ok = [&](const std::string& t) {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "integer") return v.is_number_integer();
        if (t == "boolean") return v.is_boolean();
        if (t == "null") return v.is_null();
        return false;
    };
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (const auto& t : s["type"]) ok = ok || type_ok(t.get<std::string>());
        } else {
            ok = type_ok(s["type"].get<std::string>());
        }
        if (!ok) return path + ": wrong type";
    }
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
        return path + ": value " + v.dump() + " not in enum";
    if (v.is_object()) {
        for (const auto& r : s.value("required", nlohmann::json::array()))
            if (!v.contains(r.get<std::string>())) return path + ": missing " + r.get<std::string>();
        auto props = s.value("properties", nlohmann::json::object());
        for (const auto& [k, sub] : v.items()) {
            if (props.contains(k)) {
                if (auto e = validate(sub, props[k], path + "." + k)) return e;
            } else if (s.contains("additionalProperties") && s["additionalProperties"] == false) {
                return path + ": unexpected key " + k;
            }
        }
    }
    if (v.is_array() && s.contains("items"))
        for (std::size_t k = 0; k < v.size(); ++k)
            if (auto e = validate(v[k], s["items"], path + "[" + std::to_string(k) + "]")) return e;
    return std::nullopt;
}

nlohmann::json load_schema() {
    std::ifstream f(std::string(QHEIS_SOURCE_DIR) + "/docs/report.schema.json");
    return nlohmann::json::parse(f);
}

const VerificationReport& find(const std::vector<VerificationReport>& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.id == id) return r;
    throw std::runtime_error("missing case " + id);
}

}  // namespace

TEST(Oracle, AgreesOnQuantumPlaneInversions) {
    // p^b x^a reorders to q^(ab) x^a p^b; each word's normal form is
    // q^(#inversions) times the sorted word.
    Presentation pres = catalog("qhbar");
    pres.relations = {{"px", parse_expr("p_1*x_1 - q*x_1*p_1", pres)}};
    RewriteSystem sys = orient(pres);
    Rng rng(3);
    for (int n = 0; n < 200; ++n) {
        Word w = random_word(*pres.alphabet, 0, 8, rng);
        Letter x = pres.alphabet->letter("x_1");
        int inv = 0, ps = 0, xs = 0;
        for (Letter l : w) {
            if (l == x) inv += ps, ++xs;
            else ++ps;
        }
        Word sorted(xs, x);
        sorted.insert(sorted.end(), ps, pres.alphabet->letter("p_1"));
        NCPoly want = NCPoly::monomial(pres.alphabet, sorted, Coefficient::q_power(inv));
        NCPoly m = NCPoly::monomial(pres.alphabet, w);
        EXPECT_EQ(brute_force_reduce(m, sys), want);
        EXPECT_EQ(normalize(m, sys), want);
    }
}

TEST(Oracle, DetectsDivergenceOnPrintedGaddis) {
    Presentation g = catalog("gaddis", {{"variant", "printed"}});
    RewriteSystem sys = orient(g);
    EXPECT_THROW(brute_force_reduce(parse_expr("y*z*x", g), sys), OracleDivergence);
    EXPECT_NO_THROW(brute_force_reduce(parse_expr("y*x*x", g), sys));
}

TEST(Oracle, OverflowCap) {
    Presentation c = catalog("classical", {{"dim", "2"}});
    RewriteSystem sys = orient(c);
    EXPECT_THROW(brute_force_reduce(parse_expr("p_2*p_1*x_2*x_1*p_2*x_2", c), sys, 5), OracleOverflow);
}

TEST(Oracle, SweepEveryFamily) {
    for (const auto& f : family_list()) {
        RewriteSystem sys = orient(catalog(f.id)).with_step_limit(1000000);
        auto sw = oracle_sweep(sys, 4, 50, 9);
        EXPECT_EQ(sw.mismatches, 0u) << f.id << ": " << sw.first_mismatch.value_or("");
    }
}

TEST(Verify, GaddisPowersMatchExplicitSum) {
    Presentation g = catalog("gaddis");
    RewriteSystem sys = orient(g);
    for (int k = 1; k <= 6; ++k) {
        NCPoly x = g.gen("x"), y = g.gen("y"), z = g.gen("z");
        NCPoly xk = x.pow(k), xk1 = k > 1 ? x.pow(k - 1) : g.scalar(Coefficient(1));
        NCPoly want = Coefficient::q_power(k) * xk * y + Coefficient::hbar_power(1) * pq_integer(k) * xk1 * z;
        EXPECT_EQ(normalize(y * xk, sys), want) << "k=" << k;
        EXPECT_EQ(pq_integer(k), qnumber(k));
    }
    EXPECT_TRUE(verify_power_identities(10).ok());
    auto printed = verify_power_identities(4, catalog("gaddis", {{"variant", "printed"}}));
    EXPECT_EQ(printed.status, Status::fail);
    EXPECT_EQ(printed.summary, "fails for k = 2,3,4");
}

TEST(Verify, PolyIdentity) {
    Presentation w = catalog("wess");
    RewriteSystem sys = orient(w);
    auto ok = verify_poly_identity(parse_expr("Lambda*Lambda_inv*x", w), parse_expr("x", w), sys);
    EXPECT_TRUE(ok.ok()) << ok.summary;
    auto bad = verify_poly_identity(parse_expr("x*p", w), parse_expr("q*p*x", w), sys);
    EXPECT_EQ(bad.status, Status::fail);
    ASSERT_TRUE(bad.witness);
}

TEST(Verify, NumericSpotCheckCatchesMismatch) {
    Presentation w = catalog("wess");
    Rng rng(5);
    EXPECT_FALSE(numeric_spot_check(parse_expr("(q - 1)*x", w), parse_expr("q*x - x", w), 5, rng));
    EXPECT_TRUE(numeric_spot_check(parse_expr("(q - 1)*x", w), parse_expr("q*x", w), 5, rng));
}

TEST(Verify, RelationSetEquivalence) {
    auto r = verify_relation_set_equivalence(catalog("schmudgen", {{"variant", "definition"}}),
                                             catalog("schmudgen", {{"variant", "proposition"}}), 5);
    EXPECT_TRUE(r.ok()) << r.summary;
    auto bad = verify_relation_set_equivalence(catalog("wess"), catalog("wess", {{"drop", "Lambda_p"}}), 4);
    EXPECT_EQ(bad.status, Status::fail);
}

TEST(Verify, SpecializationUnits) {
    SpecializationRow row{detail::uparams(-1, -1, -1, "hbar^2*y_1*q^(3/2)", "0", "0"), catalog("wess"),
                          {{"x_1", "x"}, {"y_1", "Lambda"}, {"p_1", "p"}}};
    auto r = verify_specialization(row);
    ASSERT_TRUE(r.ok()) << r.summary;
    ASSERT_TRUE(r.unit);
    EXPECT_NE(r.unit->find("nH1[1,1] = (q^(-1/2)) * xp"), std::string::npos) << *r.unit;
    row.params.m = 1;
    auto bad = verify_specialization(row);
    EXPECT_EQ(bad.status, Status::fail);
    ASSERT_TRUE(bad.witness);
    EXPECT_EQ(bad.witness->rfind("nH2[1,1]", 0), 0u);
}

TEST(Verify, TableRowDiagnostics) {
    TableRow t;
    t.row = SpecializationRow{detail::uparams(-1, 0, 0, "0", "hbar^2*y_1*q^(3/2)", "0"), catalog("wess"),
                              {{"x_1", "x"}, {"y_1", "Lambda"}, {"p_1", "p"}}, false, {"nH1"}};
    auto r = verify_table_row(t);
    EXPECT_EQ(r.status, Status::discrepancy);
    EXPECT_EQ(r.notes.front().rfind("diagnostic: column-swap", 0), 0u);
}

TEST(Suite, GaddisSelection) {
    SuiteOptions opt;
    opt.K = 10;
    auto rs = run_suite("gaddis", opt);
    EXPECT_EQ(unexpected_count(rs), 0u) << report_table(rs);
    std::size_t powers = 0;
    for (const auto& r : rs) powers += r.id.rfind("gaddis-power-k", 0) == 0;
    EXPECT_EQ(powers, 10u);
    EXPECT_EQ(find(rs, "gaddis-ore-z-x").status, Status::discrepancy);
}

TEST(Suite, SelectionErrors) {
    EXPECT_THROW(run_suite(""), SelectionError);
    EXPECT_THROW(run_suite("no-such-case"), SelectionError);
    auto rs = run_suite("wess-remark-identity,gaddis-power-k3");
    ASSERT_EQ(rs.size(), 2u);
    EXPECT_EQ(rs[0].id, "gaddis-power-k3");
}

TEST(Suite, FullRunIsDeterministicAndSchemaValid) {
    SuiteOptions par, seq;
    seq.parallel = false;
    auto a = run_suite("all", par);
    auto b = run_suite("all", seq);
    auto ja = report_json(a, "all", 10), jb = report_json(b, "all", 10);
    EXPECT_EQ(ja.dump(), jb.dump());
    EXPECT_EQ(unexpected_count(a), 0u) << report_table(a);
    auto err = validate(ja, load_schema(), "$");
    EXPECT_FALSE(err) << *err;

    std::set<std::string> ids;
    for (const auto& r : a) EXPECT_TRUE(ids.insert(r.id).second) << "duplicate id " << r.id;
    for (const auto& r : a) {
        if (r.status == Status::discrepancy) {
            EXPECT_TRUE(!r.notes.empty() || r.witness) << r.id << " has no annotation";
        }
    }
}

TEST(Suite, SchemaValidatorRejects) {
    auto schema = load_schema();
    auto js = report_json(run_suite("wess-remark-identity"), "x", 1);
    js["cases"][0]["status"] = "maybe";
    EXPECT_TRUE(validate(js, schema, "$"));
    js = report_json(run_suite("wess-remark-identity"), "x", 1);
    js["extra"] = 1;
    EXPECT_TRUE(validate(js, schema, "$"));
}
