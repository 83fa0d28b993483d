#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "qheis/families.hpp"
#include "qheis/interface/presentation_io.hpp"
#include "qheis/rewrite.hpp"

using namespace qheis;

namespace {

std::vector<Presentation> sample_presentations() {
    std::vector<Presentation> out;
    for (const auto& f : family_list()) out.push_back(catalog(f.id));
    out.push_back(catalog("wess", {{"variant", "remark"}}));
    out.push_back(catalog("schmudgen", {{"variant", "definition"}}));
    out.push_back(catalog("schmudgen", {{"variant", "printed"}}));
    out.push_back(catalog("gaddis", {{"variant", "printed"}}));
    out.push_back(catalog("gaddis", {{"p", "q^2"}}));
    out.push_back(catalog("classical", {{"dim", "1"}}));
    out.push_back(catalog("q_gha", {{"f", "h^3 + 2*h"}, {"g", "h^2 - 1"}}));
    out.push_back(unified({}));
    out.push_back(unified(unified_params_from({{"range", "2"}, {"n", "-1"}, {"psi", "hbar^2*y_1"}})));
    return out;
}

std::string expect_schema_error(const std::string& doc) {
    try {
        load_presentation(doc);
    } catch (const SchemaError& e) {
        return e.what();
    }
    ADD_FAILURE() << "no SchemaError for:\n" << doc;
    return "";
}

const char* kQuantumPlane = R"(# quantum plane
[presentation]
name = plane
[generators]
x p
[relations]
px : p*x - q*x*p
)";

}  // namespace

TEST(PresentationIO, RoundTripEveryFamily) {
    for (const auto& pres : sample_presentations()) {
        std::string text = save_presentation(pres);
        Presentation back = load_presentation(text);
        EXPECT_TRUE(same_presentation(pres, back)) << text;
        EXPECT_EQ(save_presentation(back), text);
    }
}

TEST(PresentationIO, RoundTripKeepsRewriting) {
    Presentation g = catalog("gha");
    Presentation back = load_presentation(save_presentation(g));
    RewriteSystem a = orient(g), b = orient(back);
    NCPoly w = parse_expr("y*h*x*h", g);
    EXPECT_EQ(format_expr(normalize(w, a)), format_expr(normalize(rename_generators(w, back.alphabet), b)));
}

TEST(PresentationIO, MinimalDocument) {
    Presentation p = load_presentation(kQuantumPlane);
    EXPECT_EQ(p.name, "plane");
    ASSERT_EQ(p.relations.size(), 1u);
    RewriteSystem sys = orient(p);
    EXPECT_EQ(format_expr(normalize(parse_expr("p*p*x", p), sys)), "q^2*x*p^2");
}

TEST(PresentationIO, UndeclaredGeneratorIsNamed) {
    std::string msg = expect_schema_error(R"([presentation]
name = bad
[generators]
x p
[relations]
xp : x*p - q*p*x
xw : x*w - w*x
)");
    EXPECT_NE(msg.find("line 7"), std::string::npos) << msg;
    EXPECT_NE(msg.find("relations[1] (xw)"), std::string::npos) << msg;
    EXPECT_NE(msg.find("'w'"), std::string::npos) << msg;
}

TEST(PresentationIO, OpaqueSymbolIsCentral) {
    Presentation p = load_presentation(R"([presentation]
name = quant
[generators]
x p
[opaque]
D
[relations]
xp : x*p - q*p*x - i*hbar*D
)");
    EXPECT_EQ(p.opaque_symbols, std::vector<std::string>{"D"});
    RewriteSystem sys = orient(p);
    NCPoly nf = normalize(parse_expr("D*x*p - x*D*p", p), sys);
    EXPECT_TRUE(nf.is_zero());
    EXPECT_TRUE(parse_expr("p*x", p).central_variables().empty());
    EXPECT_EQ(normalize(parse_expr("p*x", p), sys).central_variables(), (std::set<std::string>{"D", "h", "s"}));
}

TEST(PresentationIO, SchemaErrors) {
    EXPECT_NE(expect_schema_error("name = x\n").find("before the first section"), std::string::npos);
    EXPECT_NE(expect_schema_error("[presentation]\nname = a\n[wat]\n").find("unknown section"), std::string::npos);
    EXPECT_NE(expect_schema_error("[generators]\nx\n[relations]\nr : x\n").find("presentation.name"), std::string::npos);
    EXPECT_NE(expect_schema_error("[presentation]\nname = a\n[generators]\nx x\n").find("declared twice"),
              std::string::npos);
    EXPECT_NE(expect_schema_error("[presentation]\nname = a\n[generators]\nx\n[opaque]\nh\n").find("reserved"),
              std::string::npos);
    EXPECT_NE(expect_schema_error("[presentation]\nname = a\norder = lex\n[generators]\nx\n").find("presentation.order"),
              std::string::npos);
    EXPECT_NE(expect_schema_error("[presentation]\nname = a\n[generators]\nx\n[inverses]\nx y\n").find("inverses[0]"),
              std::string::npos);
    EXPECT_NE(expect_schema_error("[presentation]\nname = a\n[generators]\nx\n[relations]\nno colon\n")
                  .find("relations[0]"),
              std::string::npos);
    EXPECT_NE(expect_schema_error("[presentation]\nname = a\ncolor = red\n[generators]\nx\n").find("presentation.color"),
              std::string::npos);
}

TEST(PresentationIO, FileLoading) {
    auto path = std::filesystem::temp_directory_path() / "qheis_plane.pres";
    {
        std::ofstream f(path);
        f << kQuantumPlane;
    }
    EXPECT_EQ(load_presentation_file(path.string()).name, "plane");
    std::filesystem::remove(path);
    EXPECT_THROW(load_presentation_file(path.string()), ParamError);
}

TEST(PresentationIO, ShippedSamplesLoad) {
    for (const char* name : {"quantum_plane.pres", "wess.pres"}) {
        auto path = std::filesystem::path(QHEIS_SOURCE_DIR) / "docs" / name;
        Presentation p = load_presentation_file(path.string());
        RewriteSystem sys = orient(p);
        EXPECT_TRUE(check_confluence(sys, 6).confluent) << name;
    }
}
