#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locmod/module.hpp"

namespace locmod {

/// Named pieces of a counterexample, e.g. {"r", {2}}, {"m", {3}}, or a
/// submodule {"L", {0,2,4}}. Element lists index the ring for scalar
/// fields and the module otherwise.
struct Witness {
    std::vector<std::pair<std::string, std::vector<Element>>> fields;

    Witness& add(std::string name, std::vector<Element> value) {
        fields.emplace_back(std::move(name), std::move(value));
        return *this;
    }
    Witness& add(std::string name, ElementSet value) { return add(std::move(name), value.to_vector()); }
    Witness& add(std::string name, Element scalar) { return add(std::move(name), std::vector<Element>{scalar}); }
    /// First field with this name, or nullptr.
    const std::vector<Element>* find(const std::string& name) const;
    std::string to_string() const;
};

/// Outcome of a property decider. A failing verdict always carries the
/// lexicographically first violating tuple.
struct PropertyVerdict {
    std::string property;
    bool holds = false;
    std::optional<Witness> witness;

    explicit operator bool() const { return holds; }
};

// Prime submodules, three ways. They must always agree.
PropertyVerdict is_prime_submodule(const Submodule& n);
PropertyVerdict is_prime_via_ideal_criterion(const Submodule& n);
PropertyVerdict is_prime_via_element_criterion(const Submodule& n);

/// S(N) is an ideal. Throws Error{not_proper}.
PropertyVerdict is_primal(const Submodule& n);
/// Each scalar sends M - N either entirely into N or entirely outside it.
/// Throws Error{not_proper}.
PropertyVerdict is_complementary(const Submodule& n);
/// N + L != M for every proper L. Throws Error{not_proper}.
PropertyVerdict is_small(const Submodule& n);
PropertyVerdict is_essential(const Submodule& n);
PropertyVerdict is_maximal(const Submodule& n);
/// N + L = M and N meet L small in N. Throws Error{mixed_modules}.
PropertyVerdict is_supplement_of(const Submodule& n, const Submodule& l);
/// N is a supplement of some submodule L (L ranges over all submodules).
PropertyVerdict is_supplemented_submodule(const Submodule& n);

PropertyVerdict is_hollow(const ModulePtr& m);
PropertyVerdict is_lifting(const ModulePtr& m);
PropertyVerdict is_coatomic(const ModulePtr& m);
PropertyVerdict is_reduced(const ModulePtr& m);
/// Evaluates both "largest proper submodule" and "Rad M maximal and small";
/// throws Error{internal_inconsistency} if they ever disagree.
PropertyVerdict is_local_module(const ModulePtr& m);

/// Ideal (as a ring subset) primality: not_prime_subset(i) is an ideal.
bool is_primal_ideal(const FiniteRing& r, ElementSet i);

/// Set-level deciders used by the harness; no proper-ness checks, no witnesses.
namespace decide {

bool prime(const FiniteModule& m, ElementSet n);
bool primal(const FiniteModule& m, ElementSet n);
bool complementary(const FiniteModule& m, ElementSet n);
bool small(const FiniteModule& m, ElementSet n);
bool essential(const FiniteModule& m, ElementSet n);
bool maximal(const FiniteModule& m, ElementSet n);
bool supplement_of(const FiniteModule& m, ElementSet n, ElementSet l);
bool supplemented(const FiniteModule& m, ElementSet n);
bool hollow(const FiniteModule& m);
bool lifting(const FiniteModule& m);
bool coatomic(const FiniteModule& m);
bool reduced(const FiniteModule& m);
bool local(const FiniteModule& m);

}  // namespace decide

}  // namespace locmod
