#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "modp/cli.hpp"

using namespace modp;
using namespace modp::cli;

namespace {

struct Outcome {
    int code;
    json out;
    std::string raw;
};

Outcome call(const std::string& command, json params, std::optional<FieldSpec> field = std::nullopt) {
    std::ostringstream os;
    const int code = run(JobSpec{command, std::move(params), std::move(field)}, os);
    Outcome o{code, json(), os.str()};
    try {
        o.out = json::parse(o.raw);
    } catch (const json::exception&) {
    }
    return o;
}

json trivial_eta() { return json{{"unramified", 1}, {"tame", 0}}; }

json principal_series_datum(int n) {
    json d;
    d["P"] = std::vector<int>(static_cast<std::size_t>(n), 1);
    d["blocks"] = json::array();
    for (int i = 0; i < n; ++i) d["blocks"].push_back(json{{"steinberg", {{"eta", trivial_eta()}}}});
    return d;
}

}  // namespace

TEST(Cli, SatakeExpand) {
    const auto o = call("satake", {{"q", 3}, {"nu", "0,0"}, {"lambda", "-2,0"}});
    ASSERT_EQ(o.code, 0) << o.raw;
    EXPECT_EQ(o.out["basis"], "tau");
    EXPECT_EQ(o.out["terms"]["-2,0"], 1);
    EXPECT_EQ(o.out["terms"]["-1,-1"], 2);
    // and back
    const auto back = call("satake", {{"q", 3}, {"nu", "0,0"}, {"basis", "tau"}, {"terms", o.out["terms"]}});
    ASSERT_EQ(back.code, 0) << back.raw;
    EXPECT_EQ(back.out["terms"], (json{{"-2,0", 1}}));
}

TEST(Cli, SatakeMultiplyAndMoebius) {
    const auto o = call("satake", {{"op", "multiply"}, {"q", 3}, {"nu", "0,0"}, {"basis", "tau"},
                                   {"a", {{"-1,0", 1}}}, {"b", {{"-1,0", 2}}}});
    ASSERT_EQ(o.code, 0) << o.raw;
    EXPECT_EQ(o.out["terms"], (json{{"-2,0", 2}}));
    const auto m = call("satake", {{"op", "moebius"}, {"mu", "-3,0,3"}, {"lambda", "-2,0,2"}, {"levi", "3"}});
    ASSERT_EQ(m.code, 0) << m.raw;
    EXPECT_EQ(m.out["integer"], 1);
}

TEST(Cli, ClassifyConstituents) {
    const auto o = call("classify", {{"q", 3}, {"datum", principal_series_datum(2)}});
    ASSERT_EQ(o.code, 0) << o.raw;
    EXPECT_EQ(o.out["count"], 2);
    EXPECT_EQ(o.out["delta"], 1);
    EXPECT_EQ(o.out["param_pair"]["M"], (json{1, 1}));
}

TEST(Cli, DatumRoundTrip) {
    const auto& F = FiniteField::get(3, {2, 2, 1});
    const InductionDatum d(StandardParabolic({2, 2}),
                           {Steinberg{StandardParabolic({1, 1}), SmoothCharacter(F.from_code(5), 3, 9)},
                            Supersingular{2, "pi", SmoothCharacter(F.from_code(2), 1, 9)}});
    EXPECT_EQ(parse_datum(datum_json(d), F, 9), d);
    EXPECT_EQ(datum_json(d)["blocks"][0]["steinberg"]["eta"]["unramified"], (json{2, 1}));
}

TEST(Cli, LatticeJsonAndDot) {
    const auto o = call("lattice", {{"q", 3}, {"datum", principal_series_datum(3)}});
    ASSERT_EQ(o.code, 0) << o.raw;
    EXPECT_EQ(o.out["lower_set_count"], 6);
    EXPECT_EQ(o.out["lower_sets"].size(), 6u);
    EXPECT_EQ(o.out["socle"].size(), 1u);
    const auto dot = call("lattice", {{"q", 3}, {"datum", principal_series_datum(3)}, {"dot", true}});
    ASSERT_EQ(dot.code, 0);
    EXPECT_EQ(dot.raw.rfind("digraph lattice {", 0), 0u);
    std::size_t nodes = 0, edges = 0;
    std::istringstream in(dot.raw);
    for (std::string line; std::getline(in, line);) {
        nodes += line.find("[label=") != std::string::npos;
        edges += line.find("->") != std::string::npos;
    }
    EXPECT_EQ(nodes, 6u);
    EXPECT_EQ(edges, 6u);
}

TEST(Cli, WeightsAndEigen) {
    auto o = call("weights", {{"op", "canonical"}, {"q", 3}, {"nu", "4,2"}});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(o.out["nu"], "2,0");
    o = call("weights", {{"op", "enumerate"}, {"q", 3}, {"n", 2}});
    EXPECT_EQ(o.out.size(), 6u);
    o = call("eigen", {{"op", "eval-T"}, {"q", 3}, {"nu", "0,0"}, {"lambda", "-2,0"},
                       {"pair", {{"M", {1, 1}}, {"chars", {trivial_eta(), trivial_eta()}}}}});
    ASSERT_EQ(o.code, 0) << o.raw;
    EXPECT_EQ(o.out["value"], 0);  // 1 - 1
}

TEST(Cli, ExtensionFieldScalars) {
    const FieldSpec f9{3, {2, 2, 1}};
    const auto o = call("eigen", {{"op", "eval-tau"}, {"q", 9}, {"lambda", "-1,0"},
                                  {"pair", {{"M", {1, 1}}, {"chars", {{{"unramified", {0, 1}}, {"tame", 2}}, trivial_eta()}}}}},
                        f9);
    ASSERT_EQ(o.code, 0) << o.raw;
    EXPECT_EQ(o.out["value"], (json{0, 1}));
    EXPECT_EQ(parse_field_string("3:2,2,1").modulus, (poly::Poly{2, 2, 1}));
}

TEST(Cli, FieldFromEnvironment) {
    ::setenv(kFieldEnv, "3:2,2,1", 1);
    const auto o = call("eigen", {{"op", "eval-tau"}, {"q", 9}, {"lambda", "-1,0"},
                                  {"pair", {{"M", {2}}, {"chars", {{{"unramified", "[1,1]"}, {"tame", 0}}}}}}});
    ::unsetenv(kFieldEnv);
    ASSERT_EQ(o.code, 0) << o.raw;
    EXPECT_EQ(o.out["value"], (json{0, 0}));  // (-1,0) is not central in GL_2
}

TEST(Cli, Hecke0) {
    auto o = call("hecke0", {{"op", "verify"}, {"n", 3}});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(o.out["braid_and_rotation"], true);
    o = call("hecke0", {{"op", "derive"}, {"n", 2}});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(o.out["steps"][0]["chain"], "(S_1Π)²v = S_1Π(v−Πv) = S_1Πv − S_1v = S_1Πv");
    o = call("hecke0", {{"op", "multiply"}, {"n", 2}, {"a", {"S1"}}, {"b", {"S1"}}});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(o.out["terms"][0]["coeff"], 2);
}

TEST(Cli, Verify) {
    const auto o = call("verify", {{"max_n", 2}, {"max_q", 3}});
    EXPECT_EQ(o.code, 0) << o.raw;
    EXPECT_EQ(o.out["pass"], true);
    EXPECT_GT(o.out["gates"].size(), 5u);
}

TEST(Cli, Errors) {
    auto o = call("nope", json::object());
    EXPECT_EQ(o.code, kExitSchema);
    EXPECT_EQ(o.out["error"]["kind"], "schema");
    o = call("satake", {{"q", 3}, {"nu", "0,0"}});
    EXPECT_EQ(o.code, kExitSchema);
    o = call("satake", {{"q", 3}, {"nu", "0,0"}, {"lambda", "x"}});
    EXPECT_EQ(o.code, kExitSchema);
    o = call("satake", {{"q", 3}, {"nu", "0,0"}, {"lambda", "0,-1"}});
    EXPECT_EQ(o.code, kExitDomain);
    EXPECT_EQ(o.out["error"]["kind"], "domain");
    o = call("satake", {{"q", 6}, {"nu", "0,0"}, {"lambda", "0,0"}});
    EXPECT_EQ(o.code, kExitDomain);
    o = call("satake", {{"q", 3}, {"nu", "0,0"}, {"lambda", "0,0"}}, FieldSpec{5, {}});
    EXPECT_EQ(o.code, kExitDomain);
    o = call("satake", {{"q", 3}, {"nu", "0,0"}, {"lambda", "0,0"}}, FieldSpec{3, {2, 0, 1}});
    EXPECT_EQ(o.code, kExitDomain);  // reducible modulus
    o = call("classify", {{"q", 3}, {"datum", {{"P", {1, 1}}, {"blocks", {trivial_eta()}}}}});
    EXPECT_EQ(o.code, kExitSchema);
    EXPECT_THROW(parse_field_string("3:x"), schema_error);
}

TEST(Cli, JobFileShape) {
    const auto job = parse_job(json::parse(R"({"command":"weights","params":{"op":"canonical","q":3,"nu":"1,1"},"scalar_field":{"p":3}})"));
    EXPECT_EQ(job.command, "weights");
    ASSERT_TRUE(job.field.has_value());
    EXPECT_EQ(job.field->p, 3);
    EXPECT_THROW(parse_job(json::parse(R"({"params":{}})")), schema_error);
}
