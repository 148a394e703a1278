// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "locmod/harness.hpp"
#include "locmod/localization.hpp"
#include "locmod/properties.hpp"
#include "locmod/report.hpp"
#include "oracles.hpp"

using namespace locmod;

namespace {

constexpr double kGoldenBudgetMs = 1000.0;
constexpr double kSweepBudgetMs = 300000.0;

struct Result {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        if (pass) note.clear();
        pass = false;
        if (!note.empty()) note += "; ";
        note += why;
    }
};

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void within(Result& r, double elapsed, double budget) {
    if (elapsed >= budget) r.fail("took " + std::to_string(elapsed) + " ms, budget " + std::to_string(budget));
    if (r.pass) r.note = "elapsed " + std::to_string(static_cast<int>(elapsed)) + " ms";
}

ModulePtr z6m() {
    static const ModulePtr m = regular_module(make_zn(6));
    return m;
}

Result golden_not_prime() {
    Result r;
    const auto start = std::chrono::steady_clock::now();
    const auto m = z6m();
    const std::vector<std::pair<ElementSet, ElementSet>> expected{
        {{0}, {0, 2, 3, 4}}, {{0, 2, 4}, {0, 2, 4}}, {{0, 3}, {0, 3}}};
    for (const auto& [n, s] : expected) {
        const ElementSet got = not_prime_set(Submodule::make(m, n)).elements;
        if (got != s) r.fail("S(" + n.to_string() + ") = " + got.to_string());
    }
    if (is_ideal(*m->ring(), {0, 2, 3, 4})) r.fail("{0,2,3,4} reported as an ideal");
    within(r, ms_since(start), kGoldenBudgetMs);
    return r;
}

Result golden_colons() {
    Result r;
    const auto start = std::chrono::steady_clock::now();
    const auto m = z6m();
    auto sub = [&](ElementSet s) { return Submodule::make(m, s); };
    if (colon_set(sub({0}), {1, 5}).elements() != ElementSet{0}) r.fail("{0}:{1,5}");
    if (colon_set(sub({0}), {2, 4}).elements() != ElementSet{0, 3}) r.fail("{0}:{2,4}");
    for (ElementSet k : {ElementSet{0}, ElementSet{0, 2, 4}, ElementSet{0, 3}})
        if (colon_set(sub(k), {1, 5}).elements() != k) r.fail(k.to_string() + ":{1,5}");
    for (Element s : {1u, 5u})
        if (colon_element(sub({0, 2, 4}), s).elements() != ElementSet{0, 2, 4})
            r.fail("{0,2,4}:" + std::to_string(s));
    within(r, ms_since(start), kGoldenBudgetMs);
    return r;
}

Result theorem_sweeps() {
    Result r;
    const auto start = std::chrono::steady_clock::now();
    CorpusConfig config = standard_corpus_config();
    config.jobs = 4;
    std::vector<std::string> ids;
    for (const auto& id : default_proposition_ids())
        if (id != "3.20-goldens") ids.push_back(id);
    const auto reports = sweep_many(ids, config);
    std::size_t total = 0;
    for (const auto& rep : reports) {
        total += rep.violations.size();
        if (!rep.violations.empty())
            r.fail(rep.proposition + ": " + std::to_string(rep.violations.size()) + " of " +
                   std::to_string(rep.hypothesis_satisfied) + " (first " + rep.violations.front().key + ")");
    }
    const double elapsed = ms_since(start);
    if (elapsed >= kSweepBudgetMs) r.fail("sweep exceeded the time budget");
    if (r.pass)
        r.note = std::to_string(reports.size()) + " propositions, 0 violations, " +
                 std::to_string(static_cast<int>(elapsed)) + " ms";
    (void)total;
    return r;
}

Result prime_agreement() {
    Result r;
    const CorpusConfig config = standard_corpus_config();
    std::size_t checked = 0;
    for (const auto& ring : config.rings)
        for (const auto& m : corpus_modules(ring, config))
            for (ElementSet n : m->submodules()) {
                const auto s = Submodule::make(m, n);
                const bool a = is_prime_submodule(s).holds;
                if (a != is_prime_via_ideal_criterion(s).holds || a != is_prime_via_element_criterion(s).holds)
                    r.fail(ring->descriptor() + "|" + m->descriptor() + "|N=" + n.to_string());
                ++checked;
            }
    if (r.pass) r.note = std::to_string(checked) + " (module, submodule) pairs agree";
    return r;
}

Result structural_invariants() {
    Result r;
    const CorpusConfig config = standard_corpus_config();
    std::size_t contexts = 0;
    for (const auto& ring : config.rings) {
        for (ElementSet s : enumerate_multiplicative_sets(*ring)) {
            const auto lr = localize_ring(ring, MultiplicativeSet::make(ring, s));
            for (const auto& m : corpus_modules(ring, config)) {
                ++contexts;
                const auto lm = localize_module(m, lr);
                const auto& ms = *lm->module();
                const std::string where = ring->descriptor() + "|" + m->descriptor() + "|S=" + s.to_string();
                const auto& subs = m->submodules();
                for (ElementSet l : subs)
                    for (ElementSet n : subs) {
                        const ElementSet ls = lattice::localize(*lm, l), ns = lattice::localize(*lm, n);
                        if (lattice::localize(*lm, lattice::sum(*m, l, n)) != lattice::sum(ms, ls, ns))
                            r.fail("sum at " + where);
                        if (lattice::localize(*lm, l & n) != (ls & ns)) r.fail("meet at " + where);
                    }
                for (Element a = 0; a < ring->size(); ++a)
                    for (Element t : s)
                        if (ms.scale(lr->class_of(a, t), ms.all()) != lattice::localize(*lm, m->scale(a, m->all())))
                            r.fail("(r/s)M_S at " + where);
                for (ElementSet np : ms.submodules())
                    if (lattice::localize(*lm, lattice::lift(*lm, np)) != np) r.fail("round trip at " + where);
            }
        }
    }
    if (r.pass) r.note = std::to_string(contexts) + " (M, S) pairs";
    return r;
}

Result unit_degeneracy() {
    Result r;
    const CorpusConfig config = standard_corpus_config();
    for (const auto& ring : config.rings) {
        const auto lr = localize_ring(ring, MultiplicativeSet::make(ring, units(*ring)));
        if (!lr->canonical().is_bijective()) r.fail(ring->descriptor() + " ring map not bijective");
        for (const auto& m : corpus_modules(ring, config)) {
            const auto lm = localize_module(m, lr);
            std::set<Element> image(lm->canonical().begin(), lm->canonical().end());
            if (image.size() != m->size() || lm->module()->size() != m->size())
                r.fail(ring->descriptor() + "|" + m->descriptor() + " module map not bijective");
        }
    }
    const auto rep = sweep("3.30", config);
    if (!rep.violations.empty()) r.fail("3.30 violations: " + std::to_string(rep.violations.size()));
    if (r.pass)
        r.note = std::to_string(config.rings.size()) + " rings, " + std::to_string(rep.hypothesis_satisfied) +
                 " primal instances with identical verdicts";
    return r;
}

Result necessity_findings() {
    Result r;
    const auto a = necessity_search("3.17", named_corpus("z6"));
    const auto b = necessity_search("3.17", named_corpus("z6"));
    bool found = false;
    for (const auto& f : a.findings) found = found || f.key.rfind("Z6|regular|S={2,4}|", 0) == 0;
    if (!found) r.fail("no S={2,4} finding on the regular Z6-module");
    const auto m = z6m();
    if (colon_set(Submodule::make(m, {0}), {2, 4}).elements() == ElementSet{0}) r.fail("{0}:{2,4} = {0}");
    RenderOptions opts{ReportFormat::structured, false};
    if (render_search_report(a, "z6", opts) != render_search_report(b, "z6", opts)) r.fail("output not deterministic");
    if (r.pass) r.note = std::to_string(a.findings.size()) + " findings, deterministic";
    return r;
}

Result localization_sizes() {
    Result r;
    const auto m = z6m();
    const std::vector<std::pair<ElementSet, std::size_t>> cases{{{2, 4}, 3}, {{3}, 2}, {{1, 5}, 6}};
    for (const auto& [s, size] : cases) {
        const std::size_t by_oracle = oracle::fraction_classes(*m, s).count;
        if (by_oracle != size) r.fail("oracle gives " + std::to_string(by_oracle) + " at " + s.to_string());
        const auto lr = localize_ring(m->ring(), MultiplicativeSet::make(m->ring(), s));
        if (lr->ring()->size() != size) r.fail("R_S size at " + s.to_string());
        if (localize_module(m, lr)->module()->size() != size) r.fail("M_S size at " + s.to_string());
    }
    if (r.pass) r.note = "|Z6 at {2,4}| = 3, |Z6 at {3}| = 2, |Z6 at {1,5}| = 6";
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
        {"golden S(N) on Z6", golden_not_prime},
        {"golden colon sets on Z6", golden_colons},
        {"theorem sweeps over the standard corpus", theorem_sweeps},
        {"prime characterizations agree", prime_agreement},
        {"localization structural invariants", structural_invariants},
        {"unit-set degeneracy", unit_degeneracy},
        {"necessity findings", necessity_findings},
        {"localization sizes against the oracle", localization_sizes},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Result res;
        try {
            res = run();
        } catch (const std::exception& e) {
            res.fail(std::string("exception: ") + e.what());
        }
        std::printf("[%s] criterion %d: %s -- %s\n", res.pass ? "PASS" : "FAIL", index, name, res.note.c_str());
        failures += !res.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
