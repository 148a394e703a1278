#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "locmod/module.hpp"
#include "locmod/ring.hpp"

namespace locmod {

/// A fraction x/s, stored as the pair (x, s).
using Fraction = std::pair<Element, Element>;

/// Partition of the pairs (x, s), x in a carrier and s in S, into fraction
/// classes. Classes are numbered in order of their least pair, and each
/// member list is sorted.
struct FractionClasses {
    std::vector<std::vector<Fraction>> members;
    /// Class index of (x, s) at x * ring_size + s; entries with s outside S are unused.
    std::vector<Element> class_of_pair;
    std::size_t ring_size = 0;

    std::size_t count() const { return members.size(); }
    Element class_of(Element x, Element s) const { return class_of_pair[x * ring_size + s]; }
    const Fraction& representative(Element c) const { return members[c].front(); }
};

/// R_S as a quotient of R x S by (r,s) ~ (r',s') iff t(s'r - sr') = 0 for some t in S.
class LocalizedRing {
public:
    const RingPtr& base() const { return base_; }
    const MultiplicativeSet& mulset() const { return mulset_; }
    const RingPtr& ring() const { return ring_; }
    const FractionClasses& classes() const { return classes_; }
    const RingMap& canonical() const { return canonical_; }
    /// 0 is in S, so R_S collapsed to the zero ring.
    bool degenerate() const { return mulset_.contains_zero(); }

    Element class_of(Element r, Element s) const { return classes_.class_of(r, s); }

private:
    friend std::shared_ptr<const LocalizedRing> localize_ring(const RingPtr&, const MultiplicativeSet&);
    LocalizedRing(RingPtr base, MultiplicativeSet mulset, RingPtr ring, FractionClasses classes, RingMap canonical)
        : base_(std::move(base)),
          mulset_(std::move(mulset)),
          ring_(std::move(ring)),
          classes_(std::move(classes)),
          canonical_(std::move(canonical)) {}

    RingPtr base_;
    MultiplicativeSet mulset_;
    RingPtr ring_;
    FractionClasses classes_;
    RingMap canonical_;
};

using LocalizedRingPtr = std::shared_ptr<const LocalizedRing>;

/// M_S as an R_S-module.
class LocalizedModule {
public:
    const ModulePtr& base() const { return base_; }
    const MultiplicativeSet& mulset() const { return localized_ring_->mulset(); }
    const LocalizedRingPtr& localized_ring() const { return localized_ring_; }
    const ModulePtr& module() const { return module_; }
    const FractionClasses& classes() const { return classes_; }
    /// m -> m/1 (computed as sm/s for the least s in S).
    const std::vector<Element>& canonical() const { return canonical_; }
    bool degenerate() const { return localized_ring_->degenerate(); }

    Element class_of(Element m, Element s) const { return classes_.class_of(m, s); }

private:
    friend std::shared_ptr<const LocalizedModule> localize_module(const ModulePtr&, const LocalizedRingPtr&);
    LocalizedModule(ModulePtr base, LocalizedRingPtr lr, ModulePtr module, FractionClasses classes,
                    std::vector<Element> canonical)
        : base_(std::move(base)),
          localized_ring_(std::move(lr)),
          module_(std::move(module)),
          classes_(std::move(classes)),
          canonical_(std::move(canonical)) {}

    ModulePtr base_;
    LocalizedRingPtr localized_ring_;
    ModulePtr module_;
    FractionClasses classes_;
    std::vector<Element> canonical_;
};

using LocalizedModulePtr = std::shared_ptr<const LocalizedModule>;

/// Builds R_S. Classes come from an exhaustive pairwise test of the
/// defining relation merged by union-find; every class is then re-verified
/// as a clique and the operations are checked to be independent of
/// representatives (Error{internal_inconsistency} otherwise).
LocalizedRingPtr localize_ring(const RingPtr& r, const MultiplicativeSet& s);

LocalizedModulePtr localize_module(const ModulePtr& m, const LocalizedRingPtr& lr);
LocalizedModulePtr localize_module(const ModulePtr& m, const MultiplicativeSet& s);

/// N_S = {x/s : x in N, s in S}.
Submodule localize_submodule(const LocalizedModule& lm, const Submodule& n);

/// N = {x in M : sx/s in N'}, checked to be the same for every s in S.
Submodule lift_submodule(const LocalizedModule& lm, const Submodule& nprime);

/// A_S = {a/s : a in A, s in S}. Throws Error{empty_set}.
ElementSet localize_ring_subset(const LocalizedRing& lr, ElementSet a);

namespace lattice {

ElementSet localize(const LocalizedModule& lm, ElementSet n);
ElementSet lift(const LocalizedModule& lm, ElementSet nprime);

}  // namespace lattice

}  // namespace locmod
