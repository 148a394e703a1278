#include <gtest/gtest.h>

#include "locmod/error.hpp"
#include "locmod/harness.hpp"
#include "locmod/properties.hpp"
#include "locmod/report.hpp"
#include "oracles.hpp"

using namespace locmod;

namespace {

RingPtr z6() {
    static const RingPtr r = make_zn(6);
    return r;
}
ModulePtr z6m() {
    static const ModulePtr m = regular_module(z6());
    return m;
}

Instance at(ElementSet s, std::vector<ElementSet> focus) {
    Instance inst{z6(), z6m(), MultiplicativeSet::make(z6(), s), {}, {}};
    for (ElementSet n : focus) inst.focus.push_back(Submodule::make(z6m(), n));
    return inst;
}

bool has_key_prefix(const std::vector<Violation>& list, const std::string& prefix) {
    for (const auto& v : list)
        if (v.key.rfind(prefix, 0) == 0) return true;
    return false;
}

}  // namespace

TEST(Corpus, Z6RegularOnly) {
    CorpusConfig c;
    c.rings = {z6()};
    c.include_quotients = false;
    EXPECT_EQ(standard_corpus(c).size(), 4 * oracle::mulsets(*z6()).size());
}

TEST(Corpus, Z2MulSets) {
    CorpusConfig c;
    c.rings = {make_zn(2)};
    c.include_quotients = false;
    std::set<std::uint64_t> seen;
    for (const auto& inst : standard_corpus(c)) seen.insert(inst.mulset->elements().bits());
    EXPECT_EQ(seen, (std::set<std::uint64_t>{ElementSet{0}.bits(), ElementSet{1}.bits(), ElementSet{0, 1}.bits()}));
}

TEST(Corpus, EmptyAndCaps) {
    EXPECT_TRUE(standard_corpus(CorpusConfig{}).empty());
    CorpusConfig big;
    big.rings = {make_zn(17)};
    try {
        standard_corpus(big);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
    }
}

TEST(Corpus, Deterministic) {
    const auto a = standard_corpus(named_corpus("small"));
    const auto b = standard_corpus(named_corpus("small"));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].key(), b[i].key());
}

TEST(Check, WorkedInstances) {
    auto r = check(find_proposition("3.11"), at({1, 5}, {{0, 3}}));
    EXPECT_TRUE(r.hypothesis_holds);
    EXPECT_TRUE(r.conclusion_holds);
    r = check(find_proposition("3.11"), at({1, 5}, {{0}}));
    EXPECT_TRUE(r.hypothesis_holds);
    EXPECT_TRUE(r.conclusion_holds);
    r = check(find_proposition("3.13"), at({1, 5}, {{0, 2, 4}}));
    EXPECT_TRUE(r.hypothesis_holds);
    EXPECT_TRUE(r.conclusion_holds);
}

TEST(Check, Errors) {
    Instance no_mulset{z6(), z6m(), std::nullopt, {Submodule::make(z6m(), {0})}, {}};
    try {
        check(find_proposition("3.11"), no_mulset);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::signature_mismatch);
    }
    EXPECT_THROW(check(find_proposition("3.22.2"), at({1}, {{0}})), Error);
    try {
        find_proposition("9.99");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::unknown_proposition);
    }
    EXPECT_THROW(sweep("9.99", named_corpus("z6")), Error);
}

TEST(Check, KeyFormat) { EXPECT_EQ(at({1, 5}, {{0, 3}}).key(), "Z6|regular|S={1,5}|N={0,3}"); }

TEST(Sweep, TenOverUnitsOfZ6) {
    std::size_t satisfied = 0;
    for (ElementSet n : z6m()->submodules()) {
        const auto r = check(find_proposition("3.10"), at({1, 5}, {n}));
        satisfied += r.hypothesis_holds;
        EXPECT_TRUE(!r.hypothesis_holds || r.conclusion_holds) << n.to_string();
    }
    EXPECT_EQ(satisfied, 3u);
}

TEST(Sweep, GoldensOnZ6) {
    const auto r = sweep("3.20-goldens", named_corpus("z6"));
    EXPECT_EQ(r.hypothesis_satisfied, 3u);
    EXPECT_TRUE(r.violations.empty());
}

TEST(Sweep, ParallelMatchesSerial) {
    CorpusConfig serial = named_corpus("small");
    CorpusConfig parallel = serial;
    parallel.jobs = 4;
    const auto ids = default_proposition_ids();
    const auto a = sweep_many(ids, serial);
    const auto b = sweep_many(ids, parallel);
    RenderOptions opts{ReportFormat::structured, false};
    EXPECT_EQ(render_sweep_report(a, "small", opts), render_sweep_report(b, "small", opts));
}

TEST(Sweep, UnitSetHypothesisIsExactlyPrimalOverUnits) {
    const CorpusConfig config = standard_corpus_config();
    std::size_t expected = 0;
    for (const auto& ring : config.rings)
        for (const auto& m : corpus_modules(ring, config))
            for (ElementSet n : m->submodules()) expected += decide::primal(*m, n);
    const auto r = sweep("3.30", config);
    EXPECT_EQ(r.hypothesis_satisfied, expected);
    EXPECT_TRUE(r.violations.empty());
}

class TheoremSweep : public ::testing::TestWithParam<std::string> {};

TEST_P(TheoremSweep, NoViolationsOnStandardCorpus) {
    const auto r = sweep(GetParam(), standard_corpus_config());
    EXPECT_GT(r.instances_examined, 0u);
    EXPECT_TRUE(r.violations.empty()) << r.violations.size() << " violations, first: " << r.violations.front().key
                                      << " " << r.violations.front().detail;
}

INSTANTIATE_TEST_SUITE_P(Registry, TheoremSweep, ::testing::ValuesIn(default_proposition_ids()),
                         [](const auto& info) {
                             std::string name = "p" + info.param;
                             for (char& c : name)
                                 if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                             return name;
                         });

// Counterexamples to the literal hypotheses, re-derived with the oracles.

TEST(KnownCounterexample, IdealTransferForRingSubsets) {
    // A = {2} in Z6, S = {3}: S(A) = {2,4,5} misses S, A is no ideal, but
    // 2/3 = 0/3 because 3 * (3*2 - 3*0) = 0, so A_S is the zero ideal.
    EXPECT_EQ(oracle::not_prime(*z6m(), {2}), (ElementSet{2, 4, 5}));
    const auto classes = oracle::fraction_classes(*z6m(), {3});
    EXPECT_EQ(classes.of(2, 3), classes.of(0, 3));
    Instance inst{z6(), z6m(), MultiplicativeSet::make(z6(), {3}), {}, ElementSet{2}};
    const auto r = check(find_proposition("3.8"), inst);
    EXPECT_TRUE(r.hypothesis_holds);
    EXPECT_FALSE(r.conclusion_holds);
}

TEST(KnownCounterexample, EssentialTransferUnderZeroColon) {
    // S = {1,3}: {0}:S = {0}, yet 3 kills 2 and 4, so M_S = Z2 and {0,3}
    // becomes all of M_S while {0,3} misses {0,2,4} in M.
    const auto classes = oracle::fraction_classes(*z6m(), {1, 3});
    EXPECT_EQ(classes.count, 2u);
    const auto r = check(find_proposition("3.17"), at({1, 3}, {{0, 3}}));
    EXPECT_TRUE(r.hypothesis_holds);
    EXPECT_FALSE(r.conclusion_holds);
}

TEST(Search, EssentialOnZ6FindsEvenDenominators) {
    const auto a = necessity_search("3.17", named_corpus("z6"));
    EXPECT_TRUE(has_key_prefix(a.findings, "Z6|regular|S={2,4}|"));
    const auto b = necessity_search("3.17", named_corpus("z6"));
    ASSERT_EQ(a.findings.size(), b.findings.size());
    for (std::size_t i = 0; i < a.findings.size(); ++i) EXPECT_EQ(a.findings[i].key, b.findings[i].key);
}

TEST(Search, ComplementaryConverseIsEmpty) {
    // S(N) in S(N:M) follows from complementarity, so nothing can be found.
    const auto r = necessity_search("3.3-converse", standard_corpus_config());
    EXPECT_GT(r.instances_examined, 0u);
    EXPECT_TRUE(r.findings.empty());
    EXPECT_TRUE(sweep("3.3-converse", standard_corpus_config()).violations.empty());
}

TEST(Search, SupplementedReverseRuns) {
    const auto r = sweep("3.19.2-reverse", standard_corpus_config());
    EXPECT_TRUE(r.informational);
    EXPECT_GT(r.hypothesis_satisfied, 0u);
}
