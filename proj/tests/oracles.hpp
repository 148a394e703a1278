#pragma once

// Brute-force reference computations. They read only the Cayley tables
// of the structures under test and never call the library's lattice,
// closure or localization code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "locmod/module.hpp"
#include "locmod/ring.hpp"

namespace oracle {

using locmod::Element;
using locmod::ElementSet;

/// Exhaustive search for a bijection preserving +, *, and 1.
inline bool isomorphic(const locmod::FiniteRing& a, const locmod::FiniteRing& b) {
    const std::size_t n = a.size();
    if (n != b.size()) return false;
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[a.one()] != b.one()) continue;
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x)
            for (Element y = 0; y < n && ok; ++y)
                ok = perm[a.add(x, y)] == b.add(perm[x], perm[y]) && perm[a.mul(x, y)] == b.mul(perm[x], perm[y]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// Every subset containing 0 and closed under + and the action.
inline std::vector<ElementSet> submodules(const locmod::FiniteModule& m) {
    std::vector<ElementSet> out;
    const std::size_t n = m.size();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        const auto s = ElementSet::from_bits(bits);
        if (!s.contains(m.zero())) continue;
        bool closed = true;
        for (Element x = 0; x < n && closed; ++x) {
            if (!s.contains(x)) continue;
            for (Element y = 0; y < n && closed; ++y)
                if (s.contains(y) && !s.contains(m.add(x, y))) closed = false;
            for (Element r = 0; r < m.ring()->size() && closed; ++r)
                if (!s.contains(m.act(r, x))) closed = false;
        }
        if (closed) out.push_back(s);
    }
    return sorted(out);
}

inline std::vector<ElementSet> ideals(const locmod::FiniteRing& r) {
    std::vector<ElementSet> out;
    const std::size_t n = r.size();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        const auto s = ElementSet::from_bits(bits);
        bool ok = s.contains(r.zero());
        for (Element x = 0; x < n && ok; ++x) {
            if (!s.contains(x)) continue;
            for (Element y = 0; y < n && ok; ++y) {
                if (s.contains(y) && !s.contains(r.sub(x, y))) ok = false;
                if (!s.contains(r.mul(y, x))) ok = false;
            }
        }
        if (ok) out.push_back(s);
    }
    return sorted(out);
}

/// Nonempty subsets closed under multiplication.
inline std::vector<ElementSet> mulsets(const locmod::FiniteRing& r) {
    std::vector<ElementSet> out;
    const std::size_t n = r.size();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        const auto s = ElementSet::from_bits(bits);
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x)
            for (Element y = 0; y < n && ok; ++y)
                if (s.contains(x) && s.contains(y) && !s.contains(r.mul(x, y))) ok = false;
        if (ok) out.push_back(s);
    }
    return sorted(out);
}

/// Fraction classes of pairs (x, s), x in M, s in S, via Warshall's
/// transitive closure of the defining relation. Returns class ids indexed
/// by x * ring_size + s (entries with s outside S are -1).
struct Classes {
    std::size_t count = 0;
    std::vector<int> id;
    std::size_t ring_size = 0;
    int of(Element x, Element s) const { return id[x * ring_size + s]; }
};

inline Classes fraction_classes(const locmod::FiniteModule& m, ElementSet s) {
    const auto& r = *m.ring();
    std::vector<std::pair<Element, Element>> pairs;
    for (Element x = 0; x < m.size(); ++x)
        for (Element t : s) pairs.emplace_back(x, t);
    const std::size_t p = pairs.size();
    std::vector<std::vector<char>> rel(p, std::vector<char>(p, 0));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            const auto [x, a] = pairs[i];
            const auto [y, b] = pairs[j];
            const Element diff = m.sub(m.act(b, x), m.act(a, y));
            for (Element t : s)
                if (m.act(t, diff) == m.zero()) rel[i][j] = 1;
        }
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t i = 0; i < p; ++i)
            if (rel[i][k])
                for (std::size_t j = 0; j < p; ++j)
                    if (rel[k][j]) rel[i][j] = 1;
    Classes c;
    c.ring_size = r.size();
    c.id.assign(m.size() * r.size(), -1);
    std::vector<int> label(p, -1);
    for (std::size_t i = 0; i < p; ++i) {
        if (label[i] >= 0) continue;
        for (std::size_t j = i; j < p; ++j)
            if (rel[i][j]) label[j] = static_cast<int>(c.count);
        ++c.count;
    }
    for (std::size_t i = 0; i < p; ++i) c.id[pairs[i].first * r.size() + pairs[i].second] = label[i];
    return c;
}

/// {r : r m in N for some m outside N}.
inline ElementSet not_prime(const locmod::FiniteModule& m, ElementSet n) {
    ElementSet out;
    for (Element r = 0; r < m.ring()->size(); ++r)
        for (Element x = 0; x < m.size(); ++x)
            if (!n.contains(x) && n.contains(m.act(r, x))) out.insert(r);
    return out;
}

/// Number of distinct cosets x + I.
inline std::size_t coset_count(const locmod::FiniteRing& r, ElementSet ideal) {
    std::set<std::uint64_t> cosets;
    for (Element x = 0; x < r.size(); ++x) {
        ElementSet c;
        for (Element i : ideal) c.insert(r.add(x, i));
        cosets.insert(c.bits());
    }
    return cosets.size();
}

}  // namespace oracle
