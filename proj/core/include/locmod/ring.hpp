#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "locmod/element_set.hpp"

namespace locmod {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A finite commutative ring with identity, stored as Cayley tables.
///
/// Instances are immutable and always handled through RingPtr. Construction
/// verifies every ring axiom exhaustively.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
    struct Token {};

public:
    /// Validates the tables (abelian group, associative commutative
    /// multiplication with identity, distributivity) and throws
    /// Error{invalid_parameter} on the first failure.
    ///
    /// `descriptor` is the canonical name used in instance keys; `labels`
    /// optionally names each element for pretty printing.
    static RingPtr from_tables(std::size_t size, std::vector<Element> add, std::vector<Element> mul,
                               Element zero, Element one, std::string descriptor,
                               std::vector<std::string> labels = {});

    FiniteRing(Token, std::size_t size, std::vector<Element> add, std::vector<Element> mul,
               Element zero, Element one, std::string descriptor, std::vector<std::string> labels);

    FiniteRing(const FiniteRing&) = delete;
    FiniteRing& operator=(const FiniteRing&) = delete;

    std::size_t size() const { return size_; }
    Element zero() const { return zero_; }
    Element one() const { return one_; }
    bool is_zero_ring() const { return size_ == 1; }

    Element add(Element a, Element b) const { return add_[a * size_ + b]; }
    Element mul(Element a, Element b) const { return mul_[a * size_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    ElementSet all() const { return ElementSet::full(size_); }

    const std::string& descriptor() const { return descriptor_; }
    /// Pretty label for an element; the index itself when no labels were given.
    std::string label(Element e) const;
    bool has_labels() const { return !labels_.empty(); }

    const std::vector<Element>& add_table() const { return add_; }
    const std::vector<Element>& mul_table() const { return mul_; }

    /// All ideals in canonical order (cardinality, then elements). Computed
    /// once and shared by concurrent readers.
    const std::vector<ElementSet>& ideals() const;

private:
    std::size_t size_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    Element zero_;
    Element one_;
    std::string descriptor_;
    std::vector<std::string> labels_;

    mutable std::once_flag ideals_once_;
    mutable std::vector<ElementSet> ideals_;
};

/// An ideal of a ring; construction checks the ideal axioms.
class IdealSet {
public:
    /// Throws Error{invalid_ideal} when `elements` is not an ideal of `ring`.
    static IdealSet make(RingPtr ring, ElementSet elements);

    const RingPtr& ring() const { return ring_; }
    ElementSet elements() const { return elements_; }
    bool is_proper() const { return elements_ != ring_->all(); }

    friend bool operator==(const IdealSet& a, const IdealSet& b) {
        return a.ring_ == b.ring_ && a.elements_ == b.elements_;
    }

private:
    IdealSet(RingPtr ring, ElementSet elements) : ring_(std::move(ring)), elements_(elements) {}

    RingPtr ring_;
    ElementSet elements_;
};

/// A nonempty multiplicatively closed subset. It need not contain 1 and may
/// contain 0; the latter collapses every localization to the zero structure.
class MultiplicativeSet {
public:
    /// Throws Error{invalid_parameter} when `elements` is empty or not closed.
    static MultiplicativeSet make(RingPtr ring, ElementSet elements);

    const RingPtr& ring() const { return ring_; }
    ElementSet elements() const { return elements_; }
    bool contains_zero() const { return elements_.contains(ring_->zero()); }
    bool contains_one() const { return elements_.contains(ring_->one()); }

    friend bool operator==(const MultiplicativeSet& a, const MultiplicativeSet& b) {
        return a.ring_ == b.ring_ && a.elements_ == b.elements_;
    }

private:
    MultiplicativeSet(RingPtr ring, ElementSet elements) : ring_(std::move(ring)), elements_(elements) {}

    RingPtr ring_;
    ElementSet elements_;
};

/// A unital ring homomorphism given by its table.
class RingMap {
public:
    /// Throws Error{invalid_parameter} unless the table preserves +, *, 0, 1.
    static RingMap make(RingPtr source, RingPtr target, std::vector<Element> table);

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const std::vector<Element>& table() const { return table_; }
    Element operator()(Element e) const { return table_[e]; }
    bool is_bijective() const;

private:
    RingMap(RingPtr source, RingPtr target, std::vector<Element> table)
        : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {}

    RingPtr source_;
    RingPtr target_;
    std::vector<Element> table_;
};

struct QuotientRing {
    RingPtr ring;
    RingMap projection;
};

/// Integers modulo n; index k is the residue k.
RingPtr make_zn(std::size_t n);

/// Componentwise product; the pair (a, b) has index a * |r2| + b.
RingPtr product_ring(const RingPtr& r1, const RingPtr& r2);

/// Coset ring r / i. Cosets are indexed in order of their least member.
QuotientRing quotient_ring(const RingPtr& r, const IdealSet& i);

bool is_ideal(const FiniteRing& r, ElementSet a);
bool is_multiplicative_set(const FiniteRing& r, ElementSet s);

/// Smallest ideal containing `gens`.
ElementSet ideal_generated(const FiniteRing& r, ElementSet gens);

ElementSet units(const FiniteRing& r);

/// Throws Error{invalid_ideal} when `i` is not an ideal of `r`.
bool is_prime_ideal(const FiniteRing& r, ElementSet i);
bool is_prime_ideal(const IdealSet& i);

/// R minus a prime ideal. Throws Error{invalid_parameter} if `p` is not prime.
MultiplicativeSet complement_mulset(const RingPtr& r, const IdealSet& p);

std::vector<ElementSet> maximal_ideals(const FiniteRing& r);
std::vector<ElementSet> prime_ideals(const FiniteRing& r);

/// The unique maximal ideal when `r` is local, otherwise nullopt.
std::optional<IdealSet> local_ring_maximal_ideal(const RingPtr& r);

/// Every nonempty multiplicatively closed subset, in canonical order.
/// Throws Error{cap_exceeded} when |r| > max_ring_size.
std::vector<ElementSet> enumerate_multiplicative_sets(const FiniteRing& r, std::size_t max_ring_size = 16);

/// {x : x y in a for some y outside a}: the elements not prime to the ring
/// subset `a` inside the regular module. Empty when a = R.
ElementSet not_prime_subset(const FiniteRing& r, ElementSet a);

/// Render a set using the ring's labels.
std::string format_set(const FiniteRing& r, ElementSet s);

}  // namespace locmod
