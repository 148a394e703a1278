#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "locmod/element_set.hpp"
#include "locmod/ring.hpp"

namespace locmod {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// A finite unitary module over a FiniteRing: an additive table plus the
/// action table (r, m) -> rm, stored row-major by ring element.
class FiniteModule {
    struct Token {};

public:
    /// Validates abelian group, bilinearity, (rs)m = r(sm) and 1m = m.
    /// Throws Error{invalid_parameter} on the first failing axiom.
    static ModulePtr from_tables(RingPtr ring, std::size_t size, std::vector<Element> add, Element zero,
                                 std::vector<Element> action, std::string descriptor,
                                 std::vector<std::string> labels = {});

    FiniteModule(Token, RingPtr ring, std::size_t size, std::vector<Element> add, Element zero,
                 std::vector<Element> action, std::string descriptor, std::vector<std::string> labels);

    FiniteModule(const FiniteModule&) = delete;
    FiniteModule& operator=(const FiniteModule&) = delete;

    const RingPtr& ring() const { return ring_; }
    std::size_t size() const { return size_; }
    Element zero() const { return zero_; }
    bool is_zero_module() const { return size_ == 1; }

    Element add(Element a, Element b) const { return add_[a * size_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element act(Element r, Element m) const { return action_[r * size_ + m]; }

    ElementSet all() const { return ElementSet::full(size_); }
    ElementSet zero_set() const { return ElementSet{zero_}; }

    const std::string& descriptor() const { return descriptor_; }
    std::string label(Element e) const;
    bool has_labels() const { return !labels_.empty(); }

    const std::vector<Element>& add_table() const { return add_; }
    const std::vector<Element>& action_table() const { return action_; }

    /// Every submodule in canonical order. Built once, safe for concurrent readers.
    const std::vector<ElementSet>& submodules() const;

    /// True when `s` is a submodule (contains 0, closed under + and the action).
    bool is_submodule(ElementSet s) const;

    /// Smallest submodule containing `gens`.
    ElementSet closure(ElementSet gens) const;

    /// r * S as a set of module elements.
    ElementSet scale(Element r, ElementSet s) const;

private:
    RingPtr ring_;
    std::size_t size_;
    std::vector<Element> add_;
    std::vector<Element> neg_;
    Element zero_;
    std::vector<Element> action_;
    std::string descriptor_;
    std::vector<std::string> labels_;

    mutable std::once_flag lattice_once_;
    mutable std::vector<ElementSet> lattice_;
};

/// A submodule together with the module it lives in.
class Submodule {
public:
    /// Throws Error{not_a_submodule}.
    static Submodule make(ModulePtr module, ElementSet elements);

    const ModulePtr& module() const { return module_; }
    ElementSet elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool is_proper() const { return elements_ != module_->all(); }
    bool is_zero() const { return elements_ == module_->zero_set(); }

    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.module_ == b.module_ && a.elements_ == b.elements_;
    }

private:
    Submodule(ModulePtr module, ElementSet elements) : module_(std::move(module)), elements_(elements) {}

    ModulePtr module_;
    ElementSet elements_;
};

/// S(N): ring elements r with rm in N for some m outside N.
struct NotPrimeSet {
    ModulePtr module;
    ElementSet submodule;
    ElementSet elements;
};

struct QuotientModule {
    ModulePtr module;
    /// Module element -> coset index.
    std::vector<Element> projection;
};

/// A submodule viewed as a module in its own right.
struct RestrictedModule {
    ModulePtr module;
    /// Restricted index -> ambient index.
    std::vector<Element> embedding;
};

ModulePtr regular_module(const RingPtr& r);

/// Throws Error{not_a_submodule}.
QuotientModule quotient_module(const ModulePtr& m, ElementSet n);

RestrictedModule as_module(const Submodule& n);

Submodule submodule_generated(const ModulePtr& m, ElementSet gens);

/// Throws Error{cap_exceeded} when |m| > cap.
std::vector<Submodule> enumerate_submodules(const ModulePtr& m, std::size_t cap = kMaxCarrierSize);

Submodule sum(const Submodule& a, const Submodule& b);
Submodule intersection(const Submodule& a, const Submodule& b);

/// {r : r l in n for all l in l}. Throws Error{mixed_modules}.
IdealSet colon_ideal(const Submodule& n, const Submodule& l);

/// N : r = {x : rx in N}.
Submodule colon_element(const Submodule& n, Element r);

/// N : S = {x : sx in N for every s in S}. Throws Error{empty_set}.
Submodule colon_set(const Submodule& n, ElementSet s);

/// Throws Error{not_proper} when n = M.
NotPrimeSet not_prime_set(const Submodule& n);

std::vector<Submodule> maximal_submodules(const ModulePtr& m, std::size_t cap = kMaxCarrierSize);

/// Intersection of the maximal submodules; M itself when there are none.
Submodule rad(const ModulePtr& m, std::size_t cap = kMaxCarrierSize);

/// Rad of `n` taken with `n` as the ambient module.
Submodule rad_of_submodule(const Submodule& n);

/// P(M): sum of all submodules N with Rad N = N.
Submodule p_sum(const ModulePtr& m, std::size_t cap = kMaxCarrierSize);

/// Set-level lattice primitives. `ambient` must be a submodule of `m`; the
/// submodules of `ambient` are exactly the submodules of `m` inside it.
namespace lattice {

ElementSet sum(const FiniteModule& m, ElementSet a, ElementSet b);
std::vector<ElementSet> below(const FiniteModule& m, ElementSet ambient);
std::vector<ElementSet> maximal_in(const FiniteModule& m, ElementSet ambient);
ElementSet rad_in(const FiniteModule& m, ElementSet ambient);
ElementSet p_sum_in(const FiniteModule& m, ElementSet ambient);
ElementSet colon_ideal(const FiniteModule& m, ElementSet n, ElementSet l);
ElementSet colon_element(const FiniteModule& m, ElementSet n, Element r);
ElementSet colon_set(const FiniteModule& m, ElementSet n, ElementSet s);
/// S(N) by its defining scan; the empty set when n = M.
ElementSet not_prime(const FiniteModule& m, ElementSet n);
/// k << ambient: k + l = ambient forces l = ambient, l ranging below ambient.
bool is_small_in(const FiniteModule& m, ElementSet k, ElementSet ambient);

}  // namespace lattice

std::string format_set(const FiniteModule& m, ElementSet s);

}  // namespace locmod
