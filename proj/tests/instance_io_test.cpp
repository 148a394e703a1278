#include <gtest/gtest.h>

#include "locmod/error.hpp"
#include "locmod/instance_io.hpp"

using namespace locmod;

TEST(InstanceIo, Zn) {
    const auto spec = parse_instance(R"({"ring": {"kind": "zn", "n": 6}, "mulset": [1, 5], "submodules": [[0, 3]]})");
    EXPECT_EQ(spec.ring->descriptor(), "Z6");
    EXPECT_EQ(spec.module->descriptor(), "regular");
    ASSERT_TRUE(spec.mulset);
    EXPECT_EQ(spec.mulset->elements(), (ElementSet{1, 5}));
    ASSERT_EQ(spec.submodules.size(), 1u);
    EXPECT_EQ(spec.submodules[0].elements(), (ElementSet{0, 3}));
}

TEST(InstanceIo, ProductAndQuotient) {
    const auto p = parse_instance(
        R"({"ring": {"kind": "product", "factors": [{"kind": "zn", "n": 2}, {"kind": "zn", "n": 3}]}})");
    EXPECT_EQ(p.ring->size(), 6u);
    const auto q = parse_instance(
        R"({"ring": {"kind": "quotient", "ring": {"kind": "zn", "n": 6}, "ideal": [0, 3]},
            "module": {"kind": "regular"}})");
    EXPECT_EQ(q.ring->size(), 3u);
    const auto qm = parse_instance(R"({"ring": {"kind": "zn", "n": 6}, "module": {"kind": "quotient", "submodule": [0, 3]}})");
    EXPECT_EQ(qm.module->size(), 3u);
}

TEST(InstanceIo, Tables) {
    const auto spec = parse_instance(R"({
        "ring": {"kind": "tables", "name": "F2", "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 1]], "zero": 0, "one": 1},
        "module": {"kind": "tables", "name": "V", "add": [[0, 1], [1, 0]], "action": [[0, 0], [0, 1]], "zero": 0}})");
    EXPECT_EQ(spec.ring->descriptor(), "F2");
    EXPECT_EQ(spec.module->size(), 2u);
}

TEST(InstanceIo, Errors) {
    auto kind_of = [](const std::string& text) {
        try {
            parse_instance(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::internal_inconsistency;
    };
    EXPECT_EQ(kind_of("{not json"), ErrorKind::parse_error);
    EXPECT_EQ(kind_of(R"({"module": {"kind": "regular"}})"), ErrorKind::parse_error);
    EXPECT_EQ(kind_of(R"({"ring": {"kind": "zn", "n": 6}, "mulset": [2, 3]})"), ErrorKind::parse_error);
    EXPECT_EQ(kind_of(R"({"ring": {"kind": "zn", "n": 6}, "mulset": [7]})"), ErrorKind::parse_error);
    EXPECT_EQ(kind_of(R"({"ring": {"kind": "ring-of-wonders"}})"), ErrorKind::parse_error);
    EXPECT_EQ(kind_of(R"({"ring": {"kind": "zn", "n": 6}, "submodules": [[0, 2]]})"), ErrorKind::parse_error);
}

TEST(CorpusIo, Rings) {
    const auto c = parse_corpus(R"({"name": "pair", "rings": [{"kind": "zn", "n": 4}, {"kind": "zn", "n": 6}], "quotients": false})");
    EXPECT_EQ(c.name, "pair");
    EXPECT_EQ(c.rings.size(), 2u);
    EXPECT_FALSE(c.include_quotients);
}
