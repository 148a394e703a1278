#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locmod/localization.hpp"
#include "locmod/module.hpp"
#include "locmod/ring.hpp"

namespace locmod {

/// One point of a verification sweep: a module over a ring, optionally a
/// multiplicative set, and the submodules (or ring subset) under focus.
struct Instance {
    RingPtr ring;
    ModulePtr module;
    std::optional<MultiplicativeSet> mulset;
    std::vector<Submodule> focus;
    std::optional<ElementSet> ring_subset;

    /// Canonical serialization, e.g. "Z6|regular|S={1,5}|N={0,3}".
    std::string key() const;
};

/// Lazily computed, memoized facts about one (M, S) pair shared by every
/// proposition evaluated on it. Not thread-safe; each worker owns its own.
class LocalizationContext {
public:
    LocalizationContext(ModulePtr module, std::optional<MultiplicativeSet> mulset,
                        LocalizedRingPtr localized_ring = nullptr);

    const FiniteRing& ring() const { return *module_->ring(); }
    const FiniteModule& module() const { return *module_; }
    const ModulePtr& module_ptr() const { return module_; }
    bool has_mulset() const { return mulset_.has_value(); }
    const MultiplicativeSet& mulset() const { return *mulset_; }
    ElementSet S() const { return mulset_->elements(); }

    const LocalizedModule& localized();
    const FiniteRing& ring_S() { return *localized().module()->ring(); }
    const FiniteModule& module_S() { return *localized().module(); }

    /// N_S.
    ElementSet loc(ElementSet n);
    /// S(N) in M (empty for N = M).
    ElementSet not_prime(ElementSet n);
    /// S(N') in M_S.
    ElementSet not_prime_S(ElementSet nprime);
    /// N : M.
    ElementSet colon(ElementSet n);

    /// S(K) and S are disjoint for every proper submodule K.
    bool all_proper_disjoint();
    /// K : s = K for every proper K and every s in S.
    bool all_proper_colon_fixed();

    /// Memoized boolean keyed by a tag and a set (use ElementSet{} for module-level facts).
    bool memo(const std::string& tag, ElementSet key, const std::function<bool()>& compute);

private:
    ModulePtr module_;
    std::optional<MultiplicativeSet> mulset_;
    LocalizedRingPtr localized_ring_;
    LocalizedModulePtr localized_;
    std::map<std::pair<std::string, std::uint64_t>, bool> flags_;
    std::map<std::pair<int, std::uint64_t>, ElementSet> sets_;
};

/// Conclusion result; `detail` names every failing item.
struct Outcome {
    bool holds = true;
    std::string detail;

    /// Records `what` as failed unless `ok`.
    Outcome& require(bool ok, const std::string& what);
    /// Literal biconditional: both sides computed, failure when they differ.
    Outcome& iff(const std::string& what, bool lhs, bool rhs);
    Outcome& equal(const std::string& what, ElementSet lhs, ElementSet rhs);
};

enum class Scope {
    submodule,       ///< focus = {N}
    submodule_pair,  ///< focus = {N, L}
    module,          ///< no focus
    ring_subset,     ///< ring_subset = A, regular module only
};

struct PropositionCheck {
    std::string id;
    std::string statement;
    Scope scope = Scope::submodule;
    bool needs_mulset = true;
    /// Reported but never counted as a build failure.
    bool informational = false;
    /// Uses supplement/lifting scans and is limited by the lattice-scan cap.
    bool lattice_scan = false;
    std::function<bool(LocalizationContext&, const Instance&)> hypothesis;
    std::function<Outcome(LocalizationContext&, const Instance&)> conclusion;
};

/// Every registered check in registration order.
const std::vector<PropositionCheck>& proposition_registry();
/// Throws Error{unknown_proposition}.
const PropositionCheck& find_proposition(const std::string& id);
/// Ids selected by "all": every non-informational check.
std::vector<std::string> default_proposition_ids();

struct CheckRecord {
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
    std::string detail;
};

/// Evaluates hypothesis and conclusion (the latter regardless of the
/// former). Throws Error{signature_mismatch} when the instance lacks what
/// the proposition's scope needs.
CheckRecord check(const PropositionCheck& prop, const Instance& inst);

struct CorpusConfig {
    std::string name = "custom";
    std::vector<RingPtr> rings;
    bool include_quotients = true;
    std::size_t max_module_size = 36;
    /// Modules above this size are skipped by supplement/lifting checks.
    std::size_t max_lattice_scan_size = 16;
    /// Rings above this size cannot have their subsets enumerated.
    std::size_t max_enumeration_ring_size = 16;
    unsigned jobs = 1;
};

/// Z2..Z12, Z2xZ2, Z2xZ4, Z3xZ3, Z2xZ2xZ2.
CorpusConfig standard_corpus_config();
/// "standard", "z6" (Z6 only) or "small" (Z2..Z6). Throws Error{invalid_parameter}.
CorpusConfig named_corpus(const std::string& name);

/// Modules of the corpus for one ring: the regular module then R/I for
/// every ideal I, filtered by max_module_size.
std::vector<ModulePtr> corpus_modules(const RingPtr& ring, const CorpusConfig& config);

/// Deterministic enumeration of (ring, module, S, N) for every multiplicative
/// set S and every submodule N. Throws Error{cap_exceeded} when a ring is too
/// large to enumerate its multiplicative sets.
std::vector<Instance> standard_corpus(const CorpusConfig& config);

struct Violation {
    std::string key;
    std::string detail;
};

struct SweepReport {
    std::string proposition;
    std::string statement;
    bool informational = false;
    std::size_t instances_examined = 0;
    std::size_t hypothesis_satisfied = 0;
    std::size_t skipped = 0;
    std::vector<Violation> violations;
    double elapsed_ms = 0;
};

/// Runs one proposition over the corpus. Violations are sorted by key.
SweepReport sweep(const std::string& id, const CorpusConfig& config);
/// Runs several propositions sharing one pass over the corpus.
std::vector<SweepReport> sweep_many(const std::vector<std::string>& ids, const CorpusConfig& config);

struct SearchReport {
    std::string proposition;
    std::size_t instances_examined = 0;
    /// Hypothesis fails and the conclusion fails too.
    std::vector<Violation> findings;
    double elapsed_ms = 0;
};

SearchReport necessity_search(const std::string& id, const CorpusConfig& config);

}  // namespace locmod
