#pragma once

// Closure and lattice helpers shared by ring and module code.

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <vector>

#include "locmod/element_set.hpp"

namespace locmod::detail {

/// Smallest superset of `seed` closed under `binop` and under whatever
/// `extend(cur, next)` inserts. Iterates to a fixpoint.
template <class BinOp, class Extend>
ElementSet close_under(std::size_t /*n*/, ElementSet seed, BinOp binop, Extend extend) {
    ElementSet cur = seed;
    for (;;) {
        ElementSet next = cur;
        extend(cur, next);
        for (Element x : cur)
            for (Element y : cur) next.insert(binop(x, y));
        if (next == cur) return cur;
        cur = next;
    }
}

/// Closure-BFS: start from close({}), grow each known closed set by one
/// outside element and close again. Result is deduplicated and sorted.
template <class Close>
std::vector<ElementSet> enumerate_closed_sets(std::size_t n, Close close) {
    std::vector<ElementSet> found;
    std::unordered_set<std::uint64_t> seen;
    std::deque<ElementSet> queue;
    const ElementSet bottom = close(ElementSet{});
    seen.insert(bottom.bits());
    queue.push_back(bottom);
    const ElementSet all = ElementSet::full(n);
    while (!queue.empty()) {
        const ElementSet cur = queue.front();
        queue.pop_front();
        found.push_back(cur);
        for (Element e : all - cur) {
            ElementSet grown = cur;
            grown.insert(e);
            const ElementSet closed = close(grown);
            if (seen.insert(closed.bits()).second) queue.push_back(closed);
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace locmod::detail
