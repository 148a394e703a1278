#include "locmod/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "locmod/error.hpp"

namespace locmod {

std::string Instance::key() const {
    std::ostringstream os;
    os << (ring ? ring->descriptor() : "?") << '|' << (module ? module->descriptor() : "?");
    if (mulset) os << "|S=" << mulset->elements().to_string();
    if (ring_subset) os << "|A=" << ring_subset->to_string();
    static const char* names[] = {"N", "L", "K"};
    for (std::size_t i = 0; i < focus.size(); ++i)
        os << '|' << (i < 3 ? names[i] : "X") << '=' << focus[i].elements().to_string();
    return os.str();
}

LocalizationContext::LocalizationContext(ModulePtr module, std::optional<MultiplicativeSet> mulset,
                                         LocalizedRingPtr localized_ring)
    : module_(std::move(module)), mulset_(std::move(mulset)), localized_ring_(std::move(localized_ring)) {}

const LocalizedModule& LocalizationContext::localized() {
    if (!mulset_) throw Error(ErrorKind::signature_mismatch, "instance has no multiplicative set");
    if (!localized_) {
        if (!localized_ring_) localized_ring_ = localize_ring(module_->ring(), *mulset_);
        localized_ = localize_module(module_, localized_ring_);
    }
    return *localized_;
}

ElementSet LocalizationContext::loc(ElementSet n) {
    auto [it, fresh] = sets_.try_emplace({0, n.bits()});
    if (fresh) it->second = lattice::localize(localized(), n);
    return it->second;
}

ElementSet LocalizationContext::not_prime(ElementSet n) {
    auto [it, fresh] = sets_.try_emplace({1, n.bits()});
    if (fresh) it->second = lattice::not_prime(*module_, n);
    return it->second;
}

ElementSet LocalizationContext::not_prime_S(ElementSet nprime) {
    auto [it, fresh] = sets_.try_emplace({2, nprime.bits()});
    if (fresh) it->second = lattice::not_prime(module_S(), nprime);
    return it->second;
}

ElementSet LocalizationContext::colon(ElementSet n) {
    auto [it, fresh] = sets_.try_emplace({3, n.bits()});
    if (fresh) it->second = lattice::colon_ideal(*module_, n, module_->all());
    return it->second;
}

bool LocalizationContext::all_proper_disjoint() {
    return memo("all-proper-disjoint", ElementSet{}, [&] {
        for (ElementSet k : module_->submodules())
            if (k != module_->all() && !(not_prime(k) & S()).empty()) return false;
        return true;
    });
}

bool LocalizationContext::all_proper_colon_fixed() {
    return memo("all-proper-colon-fixed", ElementSet{}, [&] {
        for (ElementSet k : module_->submodules()) {
            if (k == module_->all()) continue;
            for (Element s : S())
                if (lattice::colon_element(*module_, k, s) != k) return false;
        }
        return true;
    });
}

bool LocalizationContext::memo(const std::string& tag, ElementSet key, const std::function<bool()>& compute) {
    const auto k = std::make_pair(tag, key.bits());
    if (auto it = flags_.find(k); it != flags_.end()) return it->second;
    const bool value = compute();
    flags_.emplace(k, value);
    return value;
}

Outcome& Outcome::require(bool ok, const std::string& what) {
    if (!ok) {
        holds = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    return *this;
}

Outcome& Outcome::iff(const std::string& what, bool lhs, bool rhs) {
    return require(lhs == rhs, what + " (" + (lhs ? "true" : "false") + " vs " + (rhs ? "true" : "false") + ")");
}

Outcome& Outcome::equal(const std::string& what, ElementSet lhs, ElementSet rhs) {
    return require(lhs == rhs, what + " (" + lhs.to_string() + " vs " + rhs.to_string() + ")");
}

const PropositionCheck& find_proposition(const std::string& id) {
    for (const auto& p : proposition_registry())
        if (p.id == id) return p;
    throw Error(ErrorKind::unknown_proposition, "no proposition '" + id + "'");
}

std::vector<std::string> default_proposition_ids() {
    std::vector<std::string> ids;
    for (const auto& p : proposition_registry())
        if (!p.informational) ids.push_back(p.id);
    return ids;
}

namespace {

void validate(const PropositionCheck& prop, const Instance& inst) {
    auto mismatch = [&](const std::string& why) {
        throw Error(ErrorKind::signature_mismatch, prop.id + ": " + why);
    };
    if (!inst.ring || !inst.module) mismatch("instance needs a ring and a module");
    if (inst.module->ring() != inst.ring) mismatch("module is over a different ring");
    if (prop.needs_mulset && !inst.mulset) mismatch("needs a multiplicative set");
    if (inst.mulset && inst.mulset->ring() != inst.ring) mismatch("multiplicative set over a different ring");
    std::size_t want = 0;
    switch (prop.scope) {
        case Scope::submodule: want = 1; break;
        case Scope::submodule_pair: want = 2; break;
        case Scope::module: want = 0; break;
        case Scope::ring_subset:
            if (!inst.ring_subset || inst.ring_subset->empty()) mismatch("needs a nonempty ring subset");
            if (!inst.ring_subset->subset_of(inst.ring->all())) mismatch("ring subset outside the ring");
            break;
    }
    if (inst.focus.size() < want) mismatch("needs " + std::to_string(want) + " focus submodule(s)");
    for (const auto& n : inst.focus)
        if (n.module() != inst.module) mismatch("focus submodule of a different module");
}

CheckRecord evaluate(const PropositionCheck& prop, LocalizationContext& ctx, const Instance& inst) {
    CheckRecord rec;
    rec.hypothesis_holds = prop.hypothesis(ctx, inst);
    Outcome out = prop.conclusion(ctx, inst);
    rec.conclusion_holds = out.holds;
    rec.detail = std::move(out.detail);
    return rec;
}

}  // namespace

CheckRecord check(const PropositionCheck& prop, const Instance& inst) {
    validate(prop, inst);
    LocalizationContext ctx(inst.module, inst.mulset);
    return evaluate(prop, ctx, inst);
}

CorpusConfig standard_corpus_config() {
    CorpusConfig c;
    c.name = "standard";
    for (std::size_t n = 2; n <= 12; ++n) c.rings.push_back(make_zn(n));
    const auto z2 = make_zn(2), z3 = make_zn(3), z4 = make_zn(4);
    c.rings.push_back(product_ring(z2, z2));
    c.rings.push_back(product_ring(z2, z4));
    c.rings.push_back(product_ring(z3, z3));
    c.rings.push_back(product_ring(product_ring(z2, z2), z2));
    return c;
}

CorpusConfig named_corpus(const std::string& name) {
    if (name == "standard") return standard_corpus_config();
    CorpusConfig c;
    c.name = name;
    if (name == "z6") {
        c.rings.push_back(make_zn(6));
    } else if (name == "small") {
        for (std::size_t n = 2; n <= 6; ++n) c.rings.push_back(make_zn(n));
    } else {
        throw Error(ErrorKind::invalid_parameter, "unknown corpus '" + name + "'");
    }
    return c;
}

std::vector<ModulePtr> corpus_modules(const RingPtr& ring, const CorpusConfig& config) {
    std::vector<ModulePtr> out;
    auto regular = regular_module(ring);
    if (regular->size() <= config.max_module_size) out.push_back(regular);
    if (config.include_quotients)
        for (ElementSet i : ring->ideals()) {
            // R/0 duplicates the regular module and R/R is the zero module.
            if (i == ElementSet{ring->zero()} || i == ring->all()) continue;
            auto q = quotient_module(regular, i).module;
            if (q->size() <= config.max_module_size) out.push_back(q);
        }
    return out;
}

namespace {

std::vector<ElementSet> mulsets_of(const FiniteRing& r, const CorpusConfig& config) {
    if (r.size() > config.max_enumeration_ring_size)
        throw Error(ErrorKind::cap_exceeded, r.descriptor() + " exceeds the multiplicative-set enumeration cap of " +
                                                 std::to_string(config.max_enumeration_ring_size));
    return enumerate_multiplicative_sets(r, config.max_enumeration_ring_size);
}

void validate_config(const CorpusConfig& config) {
    if (config.max_module_size == 0 || config.max_module_size > kMaxCarrierSize)
        throw Error(ErrorKind::cap_exceeded, "module-size cap must be in [1, 64]");
    if (config.jobs == 0) throw Error(ErrorKind::invalid_parameter, "jobs must be positive");
}

}  // namespace

std::vector<Instance> standard_corpus(const CorpusConfig& config) {
    validate_config(config);
    std::vector<Instance> out;
    for (const auto& ring : config.rings) {
        const auto mulsets = mulsets_of(*ring, config);
        for (const auto& m : corpus_modules(ring, config))
            for (ElementSet s : mulsets)
                for (ElementSet n : m->submodules())
                    out.push_back(Instance{ring, m, MultiplicativeSet::make(ring, s), {Submodule::make(m, n)}, {}});
    }
    return out;
}

namespace {

struct Partial {
    std::size_t examined = 0;
    std::size_t satisfied = 0;
    std::size_t skipped = 0;
    std::vector<Violation> violations;
    std::vector<Violation> findings;
    double ms = 0;
};

/// One parallel work item: a ring, optionally one multiplicative set, and its modules.
struct Unit {
    RingPtr ring;
    std::optional<ElementSet> mulset;
    std::vector<ModulePtr> modules;
};

enum class Mode { sweep, search };

void run_on_context(const std::vector<const PropositionCheck*>& props, const std::vector<std::size_t>& which,
                    LocalizationContext& ctx, const Instance& base, const CorpusConfig& config, Mode mode,
                    std::vector<Partial>& parts) {
    const auto& m = ctx.module();
    for (std::size_t idx : which) {
        const PropositionCheck& prop = *props[idx];
        Partial& part = parts[idx];
        if (prop.scope == Scope::ring_subset && m.descriptor() != "regular") continue;
        if (prop.lattice_scan && m.size() > config.max_lattice_scan_size) {
            ++part.skipped;
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        auto visit = [&](Instance inst) {
            ++part.examined;
            const CheckRecord rec = evaluate(prop, ctx, inst);
            if (rec.hypothesis_holds) ++part.satisfied;
            if (mode == Mode::sweep && rec.hypothesis_holds && !rec.conclusion_holds)
                part.violations.push_back({inst.key(), rec.detail});
            if (mode == Mode::search && !rec.hypothesis_holds && !rec.conclusion_holds)
                part.findings.push_back({inst.key(), rec.detail});
        };
        const auto& subs = m.submodules();
        switch (prop.scope) {
            case Scope::module: visit(base); break;
            case Scope::submodule:
                for (ElementSet n : subs) {
                    Instance inst = base;
                    inst.focus = {Submodule::make(base.module, n)};
                    visit(std::move(inst));
                }
                break;
            case Scope::submodule_pair:
                for (ElementSet n : subs)
                    for (ElementSet l : subs) {
                        Instance inst = base;
                        inst.focus = {Submodule::make(base.module, n), Submodule::make(base.module, l)};
                        visit(std::move(inst));
                    }
                break;
            case Scope::ring_subset: {
                const auto n = ctx.ring().size();
                if (n > config.max_enumeration_ring_size) {
                    ++part.skipped;
                    break;
                }
                for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
                    Instance inst = base;
                    inst.ring_subset = ElementSet::from_bits(bits);
                    visit(std::move(inst));
                }
                break;
            }
        }
        part.ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
}

std::vector<Partial> run(const std::vector<const PropositionCheck*>& props, const CorpusConfig& config, Mode mode) {
    validate_config(config);
    std::vector<std::size_t> plain, localized;
    for (std::size_t i = 0; i < props.size(); ++i) (props[i]->needs_mulset ? localized : plain).push_back(i);

    std::vector<Unit> units;
    for (const auto& ring : config.rings) {
        auto modules = corpus_modules(ring, config);
        if (!plain.empty()) units.push_back(Unit{ring, std::nullopt, modules});
        if (!localized.empty())
            for (ElementSet s : mulsets_of(*ring, config)) units.push_back(Unit{ring, s, modules});
    }

    std::vector<std::vector<Partial>> results(units.size(), std::vector<Partial>(props.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t u = next++; u < units.size(); u = next++) {
            try {
                const Unit& unit = units[u];
                std::optional<MultiplicativeSet> mulset;
                LocalizedRingPtr lr;
                if (unit.mulset) {
                    mulset = MultiplicativeSet::make(unit.ring, *unit.mulset);
                    lr = localize_ring(unit.ring, *mulset);
                }
                for (const auto& m : unit.modules) {
                    LocalizationContext ctx(m, mulset, lr);
                    Instance base{unit.ring, m, mulset, {}, {}};
                    run_on_context(props, unit.mulset ? localized : plain, ctx, base, config, mode, results[u]);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = units.size();
            }
        }
    };
    const unsigned jobs = std::min<unsigned>(config.jobs, std::max<std::size_t>(units.size(), 1));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Partial> merged(props.size());
    for (auto& unit : results)
        for (std::size_t i = 0; i < props.size(); ++i) {
            Partial& dst = merged[i];
            Partial& src = unit[i];
            dst.examined += src.examined;
            dst.satisfied += src.satisfied;
            dst.skipped += src.skipped;
            dst.ms += src.ms;
            std::move(src.violations.begin(), src.violations.end(), std::back_inserter(dst.violations));
            std::move(src.findings.begin(), src.findings.end(), std::back_inserter(dst.findings));
        }
    auto by_key = [](const Violation& a, const Violation& b) { return a.key < b.key; };
    for (auto& p : merged) {
        std::sort(p.violations.begin(), p.violations.end(), by_key);
        std::sort(p.findings.begin(), p.findings.end(), by_key);
    }
    return merged;
}

std::vector<const PropositionCheck*> lookup(const std::vector<std::string>& ids) {
    std::vector<const PropositionCheck*> out;
    for (const auto& id : ids) out.push_back(&find_proposition(id));
    return out;
}

}  // namespace

std::vector<SweepReport> sweep_many(const std::vector<std::string>& ids, const CorpusConfig& config) {
    const auto props = lookup(ids);
    auto parts = run(props, config, Mode::sweep);
    std::vector<SweepReport> out;
    for (std::size_t i = 0; i < props.size(); ++i) {
        SweepReport r;
        r.proposition = props[i]->id;
        r.statement = props[i]->statement;
        r.informational = props[i]->informational;
        r.instances_examined = parts[i].examined;
        r.hypothesis_satisfied = parts[i].satisfied;
        r.skipped = parts[i].skipped;
        r.violations = std::move(parts[i].violations);
        r.elapsed_ms = parts[i].ms;
        out.push_back(std::move(r));
    }
    return out;
}

SweepReport sweep(const std::string& id, const CorpusConfig& config) { return std::move(sweep_many({id}, config).front()); }

SearchReport necessity_search(const std::string& id, const CorpusConfig& config) {
    const auto props = lookup({id});
    auto parts = run(props, config, Mode::search);
    SearchReport r;
    r.proposition = id;
    r.instances_examined = parts[0].examined;
    r.findings = std::move(parts[0].findings);
    r.elapsed_ms = parts[0].ms;
    return r;
}

}  // namespace locmod
