#include "locmod/localization.hpp"

#include "locmod/error.hpp"
#include "union_find.hpp"

namespace locmod {

namespace {

void inconsistent(const std::string& what) { throw Error(ErrorKind::internal_inconsistency, what); }

/// Fraction classes over a carrier of size n on which the ring acts by
/// `act(r, x)` with subtraction `sub(x, y)` and zero `zero`.
template <class Act, class Sub>
FractionClasses fraction_classes(std::size_t n, std::size_t ring_size, ElementSet mulset, Element zero, Act act,
                                 Sub sub) {
    // Elements killed by some t in S: the relation reads s'x - sx' in `killed`.
    ElementSet killed;
    for (Element d = 0; d < n; ++d)
        for (Element t : mulset)
            if (act(t, d) == zero) {
                killed.insert(d);
                break;
            }
    auto related = [&](const Fraction& a, const Fraction& b) {
        return killed.contains(sub(act(b.second, a.first), act(a.second, b.first)));
    };

    std::vector<Fraction> pairs;
    for (Element x = 0; x < n; ++x)
        for (Element s : mulset) pairs.emplace_back(x, s);

    detail::DisjointSet uf(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (related(pairs[i], pairs[j])) uf.unite(i, j);

    FractionClasses out;
    out.ring_size = ring_size;
    out.class_of_pair.assign(n * ring_size, 0);
    std::vector<std::size_t> class_of_root(pairs.size(), pairs.size());
    // `pairs` is in lexicographic order, so classes are numbered by least member.
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::size_t root = uf.find(i);
        if (class_of_root[root] == pairs.size()) {
            class_of_root[root] = out.members.size();
            out.members.emplace_back();
        }
        const std::size_t c = class_of_root[root];
        out.members[c].push_back(pairs[i]);
        out.class_of_pair[pairs[i].first * ring_size + pairs[i].second] = static_cast<Element>(c);
    }
    // Union-find took the transitive closure; the relation itself must already be transitive.
    for (const auto& cls : out.members)
        for (const auto& a : cls)
            for (const auto& b : cls)
                if (!related(a, b)) inconsistent("fraction relation is not transitive; is S multiplicatively closed?");
    return out;
}

std::string fraction_label(const std::string& num, const std::string& den) { return num + "/" + den; }

}  // namespace

LocalizedRingPtr localize_ring(const RingPtr& r, const MultiplicativeSet& s) {
    if (s.ring() != r) throw Error(ErrorKind::invalid_parameter, "multiplicative set over a different ring");
    const std::size_t n = r->size();
    const ElementSet mulset = s.elements();
    auto classes = fraction_classes(
        n, n, mulset, r->zero(), [&](Element a, Element x) { return r->mul(a, x); },
        [&](Element x, Element y) { return r->sub(x, y); });

    const std::size_t q = classes.count();
    std::vector<Element> add(q * q), mul(q * q);
    auto sum_of = [&](const Fraction& a, const Fraction& b) {
        return classes.class_of(r->add(r->mul(b.second, a.first), r->mul(a.second, b.first)),
                                r->mul(a.second, b.second));
    };
    auto product_of = [&](const Fraction& a, const Fraction& b) {
        return classes.class_of(r->mul(a.first, b.first), r->mul(a.second, b.second));
    };
    for (Element c1 = 0; c1 < q; ++c1)
        for (Element c2 = 0; c2 < q; ++c2) {
            const Fraction& a = classes.representative(c1);
            const Fraction& b = classes.representative(c2);
            add[c1 * q + c2] = sum_of(a, b);
            mul[c1 * q + c2] = product_of(a, b);
            // Varying one argument at a time over its class covers all choices.
            for (const Fraction& other : classes.members[c1])
                if (sum_of(other, b) != add[c1 * q + c2] || product_of(other, b) != mul[c1 * q + c2])
                    inconsistent("R_S operations depend on the representative");
            for (const Fraction& other : classes.members[c2])
                if (sum_of(a, other) != add[c1 * q + c2] || product_of(a, other) != mul[c1 * q + c2])
                    inconsistent("R_S operations depend on the representative");
        }

    const Element s0 = mulset.front();
    std::vector<std::string> labels(q);
    for (Element c = 0; c < q; ++c) {
        const auto& [num, den] = classes.representative(c);
        labels[c] = fraction_label(r->label(num), r->label(den));
    }
    auto ring = FiniteRing::from_tables(q, std::move(add), std::move(mul), classes.class_of(r->zero(), s0),
                                        classes.class_of(s0, s0), r->descriptor() + "_S" + mulset.to_string(),
                                        std::move(labels));

    std::vector<Element> canonical(n);
    for (Element x = 0; x < n; ++x) {
        canonical[x] = classes.class_of(r->mul(s0, x), s0);
        for (Element t : mulset)
            if (classes.class_of(r->mul(t, x), t) != canonical[x]) inconsistent("canonical map depends on s");
    }
    for (Element t : mulset)
        if (classes.class_of(t, t) != ring->one()) inconsistent("s/s is not the identity");
    auto map = RingMap::make(r, ring, std::move(canonical));
    return LocalizedRingPtr(new LocalizedRing(r, s, std::move(ring), std::move(classes), std::move(map)));
}

LocalizedModulePtr localize_module(const ModulePtr& m, const LocalizedRingPtr& lr) {
    if (m->ring() != lr->base()) throw Error(ErrorKind::invalid_parameter, "module over a different ring");
    const auto& r = *lr->base();
    const auto& rs = *lr->ring();
    const ElementSet mulset = lr->mulset().elements();
    const std::size_t n = m->size();
    auto classes = fraction_classes(
        n, r.size(), mulset, m->zero(), [&](Element a, Element x) { return m->act(a, x); },
        [&](Element x, Element y) { return m->sub(x, y); });

    const std::size_t q = classes.count();
    const std::size_t rq = rs.size();
    std::vector<Element> add(q * q), action(rq * q);
    auto sum_of = [&](const Fraction& a, const Fraction& b) {
        return classes.class_of(m->add(m->act(b.second, a.first), m->act(a.second, b.first)),
                                r.mul(a.second, b.second));
    };
    auto act_of = [&](const Fraction& scalar, const Fraction& x) {
        return classes.class_of(m->act(scalar.first, x.first), r.mul(scalar.second, x.second));
    };
    for (Element c1 = 0; c1 < q; ++c1)
        for (Element c2 = 0; c2 < q; ++c2) {
            const Fraction& a = classes.representative(c1);
            const Fraction& b = classes.representative(c2);
            add[c1 * q + c2] = sum_of(a, b);
            for (const Fraction& other : classes.members[c1])
                if (sum_of(other, b) != add[c1 * q + c2]) inconsistent("M_S addition depends on the representative");
        }
    const auto& ring_classes = lr->classes();
    for (Element rc = 0; rc < rq; ++rc)
        for (Element mc = 0; mc < q; ++mc) {
            const Fraction& scalar = ring_classes.representative(rc);
            const Fraction& x = classes.representative(mc);
            const Element result = act_of(scalar, x);
            action[rc * q + mc] = result;
            for (const Fraction& other : ring_classes.members[rc])
                if (act_of(other, x) != result) inconsistent("R_S action depends on the scalar representative");
            for (const Fraction& other : classes.members[mc])
                if (act_of(scalar, other) != result) inconsistent("R_S action depends on the fraction representative");
        }

    const Element s0 = mulset.front();
    std::vector<std::string> labels(q);
    for (Element c = 0; c < q; ++c) {
        const auto& [num, den] = classes.representative(c);
        labels[c] = fraction_label(m->label(num), r.label(den));
    }
    auto module = FiniteModule::from_tables(lr->ring(), q, std::move(add), classes.class_of(m->zero(), s0),
                                            std::move(action), m->descriptor() + "_S" + mulset.to_string(),
                                            std::move(labels));

    std::vector<Element> canonical(n);
    for (Element x = 0; x < n; ++x) {
        canonical[x] = classes.class_of(m->act(s0, x), s0);
        for (Element t : mulset)
            if (classes.class_of(m->act(t, x), t) != canonical[x]) inconsistent("canonical map depends on s");
    }
    // Additive, and compatible with the ring's canonical map.
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y)
            if (canonical[m->add(x, y)] != module->add(canonical[x], canonical[y]))
                inconsistent("canonical module map is not additive");
        for (Element a = 0; a < r.size(); ++a)
            if (canonical[m->act(a, x)] != module->act(lr->canonical()(a), canonical[x]))
                inconsistent("canonical module map ignores the action");
    }
    return LocalizedModulePtr(
        new LocalizedModule(m, lr, std::move(module), std::move(classes), std::move(canonical)));
}

LocalizedModulePtr localize_module(const ModulePtr& m, const MultiplicativeSet& s) {
    return localize_module(m, localize_ring(m->ring(), s));
}

Submodule localize_submodule(const LocalizedModule& lm, const Submodule& n) {
    if (n.module() != lm.base()) throw Error(ErrorKind::mixed_modules, "submodule of a different module");
    return Submodule::make(lm.module(), lattice::localize(lm, n.elements()));
}

Submodule lift_submodule(const LocalizedModule& lm, const Submodule& nprime) {
    if (nprime.module() != lm.module()) throw Error(ErrorKind::mixed_modules, "not a submodule of M_S");
    return Submodule::make(lm.base(), lattice::lift(lm, nprime.elements()));
}

ElementSet localize_ring_subset(const LocalizedRing& lr, ElementSet a) {
    if (a.empty()) throw Error(ErrorKind::empty_set, "A_S needs a nonempty A");
    ElementSet out;
    for (Element x : a)
        for (Element s : lr.mulset().elements()) out.insert(lr.class_of(x, s));
    return out;
}

namespace lattice {

ElementSet localize(const LocalizedModule& lm, ElementSet n) {
    ElementSet out;
    for (Element x : n)
        for (Element s : lm.mulset().elements()) out.insert(lm.class_of(x, s));
    return out;
}

ElementSet lift(const LocalizedModule& lm, ElementSet nprime) {
    const auto& m = *lm.base();
    std::optional<ElementSet> result;
    for (Element s : lm.mulset().elements()) {
        ElementSet candidate;
        for (Element x = 0; x < m.size(); ++x)
            if (nprime.contains(lm.class_of(m.act(s, x), s))) candidate.insert(x);
        if (result && *result != candidate) inconsistent("lift depends on the chosen s");
        result = candidate;
    }
    return *result;
}

}  // namespace lattice

}  // namespace locmod
