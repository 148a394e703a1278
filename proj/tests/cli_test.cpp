#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "locmod_cli/app.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "locmod");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = locmod::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(LOCMOD_TEST_DATA) + "/" + name; }

nlohmann::json structured(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Explore, Z6) {
    const auto r = run({"explore", "--instance", data("z6.json"), "--format", "structured"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = structured(r);
    EXPECT_EQ(doc["schema"], "locmod.report/1");
    const auto& zero = doc["submodules"][0];
    EXPECT_EQ(zero["elements"], nlohmann::json::array({0}));
    EXPECT_EQ(zero["not_prime"], nlohmann::json::array({0, 2, 3, 4}));
    EXPECT_EQ(zero["primal"], false);
    const auto text = run({"explore", "--instance", data("z6.json")});
    EXPECT_NE(text.out.find("{0,2,3,4}"), std::string::npos);
}

TEST(Explore, SmallRings) {
    auto z2 = structured(run({"explore", "--instance", data("z2.json"), "--format", "structured"}));
    EXPECT_EQ(z2["module_verdicts"]["hollow"], true);
    EXPECT_EQ(z2["module_verdicts"]["local"], true);
    auto z4 = structured(run({"explore", "--instance", data("z4.json"), "--format", "structured"}));
    EXPECT_EQ(z4["rad"], nlohmann::json::array({0, 2}));
    EXPECT_EQ(z4["module_verdicts"]["local"], true);
}

TEST(Explore, CapExceeded) {
    const auto r = run({"explore", "--instance", data("z6.json"), "--max-module-size", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("cap-exceeded"), std::string::npos);
}

TEST(Localize, Sizes) {
    auto units = structured(run({"localize", "--instance", data("z6.json"), "--format", "structured"}));
    EXPECT_EQ(units["ring_S"]["size"], 6);
    EXPECT_EQ(units["module_S"]["size"], 6);
    EXPECT_EQ(units["submodules_S"].size(), 4u);
    EXPECT_EQ(units["round_trip_ok"], true);
    auto evens = structured(run({"localize", "--instance", data("z6_evens.json"), "--format", "structured"}));
    EXPECT_EQ(evens["ring_S"]["size"], 3);
    EXPECT_EQ(evens["module_S"]["size"], 3);
    auto three = structured(run({"localize", "--instance", data("z6_three.json"), "--format", "structured"}));
    EXPECT_EQ(three["ring_S"]["size"], 2);
    EXPECT_EQ(three["module_S"]["size"], 2);
}

TEST(Localize, Errors) {
    EXPECT_EQ(run({"localize", "--instance", data("z4.json")}).code, 2);
    EXPECT_EQ(run({"localize", "--instance", data("z6_bad.json")}).code, 2);
    EXPECT_EQ(run({"localize", "--instance", data("z6.json"), "--mulset", "2,x"}).code, 2);
}

TEST(Verify, SingleProposition) {
    const auto r = run({"verify", "--prop", "3.11", "--corpus", "z6"});
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Verify, UnknownProposition) {
    const auto r = run({"verify", "--prop", "9.99"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unknown-proposition"), std::string::npos);
}

TEST(Verify, ExitOneOnViolations) {
    const auto r = run({"verify", "--prop", "3.17", "--corpus", "z6", "--format", "structured"});
    EXPECT_EQ(r.code, 1);
    EXPECT_GT(structured(r)["total_violations"].get<int>(), 0);
}

TEST(Verify, ByteIdenticalWithoutTiming) {
    const std::vector<std::string> args{"verify", "--prop", "all", "--corpus", "small", "--no-timing", "--jobs", "3"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Search, EssentialFindsEvens) {
    const auto r = run({"search", "--prop", "3.17", "--corpus", "z6", "--format", "structured", "--no-timing"});
    EXPECT_EQ(r.code, 0);
    bool found = false;
    const auto doc = structured(r);
    for (const auto& f : doc["findings"])
        found = found || f["instance"].get<std::string>().rfind("Z6|regular|S={2,4}|", 0) == 0;
    EXPECT_TRUE(found);
}

TEST(Search, NamedConverses) {
    EXPECT_EQ(run({"search", "--prop", "3.19.2-reverse", "--corpus", "small"}).code, 0);
    EXPECT_EQ(run({"search", "--prop", "3.3-converse", "--corpus", "small"}).code, 0);
}

TEST(Usage, Errors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"explore"}).code, 2);
    EXPECT_EQ(run({"verify", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"verify", "--corpus", "nowhere"}).code, 2);
}

TEST(Output, WritesFile) {
    const std::string path = ::testing::TempDir() + "/locmod_report.json";
    const auto r = run({"verify", "--prop", "3.1", "--corpus", "z6", "--format", "structured", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    EXPECT_EQ(nlohmann::json::parse(in)["schema"], "locmod.report/1");
}
