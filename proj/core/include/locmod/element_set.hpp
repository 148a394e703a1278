#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace locmod {

/// Index of an element in a finite carrier (ring or module), 0..size-1.
using Element = std::uint32_t;

/// Hard upper bound on carrier sizes; sets are stored as 64-bit masks.
inline constexpr std::size_t kMaxCarrierSize = 64;

/// A set of element indices drawn from a carrier of at most 64 elements.
///
/// Ordering (operator<=>) is the canonical one used for every listing in
/// the library: first by cardinality, then lexicographically on the
/// sorted element lists.
class ElementSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Element;
        using difference_type = std::ptrdiff_t;
        using pointer = const Element*;
        using reference = Element;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr ElementSet() = default;
    ElementSet(std::initializer_list<Element> elems) {
        for (Element e : elems) insert(e);
    }

    static constexpr ElementSet from_bits(std::uint64_t bits) {
        ElementSet s;
        s.bits_ = bits;
        return s;
    }
    /// {0, 1, ..., n-1}.
    static constexpr ElementSet full(std::size_t n) {
        return from_bits(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static ElementSet from_vector(const std::vector<Element>& elems) {
        ElementSet s;
        for (Element e : elems) s.insert(e);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Element e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }
    constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
    constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Smallest element; undefined on the empty set.
    Element front() const { return static_cast<Element>(std::countr_zero(bits_)); }

    constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint_from(ElementSet other) const { return (bits_ & other.bits_) == 0; }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<Element> to_vector() const { return {begin(), end()}; }

    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return from_bits(a.bits_ & ~b.bits_); }
    ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }
    friend std::strong_ordering operator<=>(ElementSet a, ElementSet b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        if (a.bits_ == b.bits_) return std::strong_ordering::equal;
        const std::uint64_t diff = a.bits_ ^ b.bits_;
        const std::uint64_t lowest = diff & (~diff + 1);
        // The set owning the smallest differing element sorts first.
        return (a.bits_ & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    /// "{0,2,4}"
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

}  // namespace locmod
