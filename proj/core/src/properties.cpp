#include "locmod/properties.hpp"

#include <sstream>

#include "locmod/error.hpp"

namespace locmod {

namespace {

PropertyVerdict pass(std::string name) { return PropertyVerdict{std::move(name), true, std::nullopt}; }
PropertyVerdict fail(std::string name, Witness w) { return PropertyVerdict{std::move(name), false, std::move(w)}; }

void require_proper(const Submodule& n, const char* what) {
    if (!n.is_proper()) throw Error(ErrorKind::not_proper, std::string(what) + " needs a proper submodule");
}

PropertyVerdict prime_direct(const FiniteModule& m, ElementSet n) {
    const char* name = "prime";
    if (n == m.all()) return fail(name, Witness{}.add("N=M", n));
    const ElementSet colon = lattice::colon_ideal(m, n, m.all());
    for (Element r = 0; r < m.ring()->size(); ++r) {
        if (colon.contains(r)) continue;
        for (Element x = 0; x < m.size(); ++x)
            if (!n.contains(x) && n.contains(m.act(r, x))) return fail(name, Witness{}.add("r", r).add("m", x));
    }
    return pass(name);
}

PropertyVerdict prime_ideal_criterion(const FiniteModule& m, ElementSet n) {
    const char* name = "prime(ideal-criterion)";
    if (n == m.all()) return fail(name, Witness{}.add("N=M", n));
    const ElementSet colon = lattice::colon_ideal(m, n, m.all());
    for (ElementSet ideal : m.ring()->ideals()) {
        if (ideal.subset_of(colon)) continue;
        for (ElementSet l : m.submodules()) {
            if (l.subset_of(n)) continue;
            bool product_inside = true;
            for (Element i : ideal) {
                if (!m.scale(i, l).subset_of(n)) {
                    product_inside = false;
                    break;
                }
            }
            if (product_inside) return fail(name, Witness{}.add("I", ideal).add("L", l));
        }
    }
    return pass(name);
}

PropertyVerdict prime_element_criterion(const FiniteModule& m, ElementSet n) {
    const char* name = "prime(element-criterion)";
    if (n == m.all()) return fail(name, Witness{}.add("N=M", n));
    const ElementSet colon = lattice::colon_ideal(m, n, m.all());
    for (Element y = 0; y < m.ring()->size(); ++y) {
        if (colon.contains(y)) continue;
        for (ElementSet l : m.submodules())
            if (!l.subset_of(n) && m.scale(y, l).subset_of(n))
                return fail(name, Witness{}.add("y", y).add("L", l));
    }
    return pass(name);
}

PropertyVerdict primal_core(const FiniteModule& m, ElementSet n) {
    const char* name = "primal";
    const auto& ring = *m.ring();
    const ElementSet s = lattice::not_prime(m, n);
    if (s.empty()) return fail(name, Witness{}.add("S(N)", s));
    for (Element a : s) {
        for (Element b : s)
            if (!s.contains(ring.sub(a, b)))
                return fail(name, Witness{}.add("S(N)", s).add("a", a).add("b", b));
        for (Element r = 0; r < ring.size(); ++r)
            if (!s.contains(ring.mul(r, a)))
                return fail(name, Witness{}.add("S(N)", s).add("r", r).add("a", a));
    }
    return pass(name);
}

PropertyVerdict complementary_core(const FiniteModule& m, ElementSet n) {
    const char* name = "complementary";
    const ElementSet outside = m.all() - n;
    for (Element r = 0; r < m.ring()->size(); ++r) {
        std::optional<Element> escapes, lands;
        for (Element x : outside) {
            if (n.contains(m.act(r, x))) {
                if (!lands) lands = x;
            } else if (!escapes) {
                escapes = x;
            }
        }
        if (escapes && lands) return fail(name, Witness{}.add("r", r).add("x", *escapes).add("y", *lands));
    }
    return pass(name);
}

PropertyVerdict small_core(const FiniteModule& m, ElementSet n) {
    const char* name = "small";
    for (ElementSet l : m.submodules())
        if (l != m.all() && lattice::sum(m, n, l) == m.all()) return fail(name, Witness{}.add("L", l));
    return pass(name);
}

PropertyVerdict essential_core(const FiniteModule& m, ElementSet n) {
    const char* name = "essential";
    for (ElementSet l : m.submodules())
        if (l != m.zero_set() && (n & l) == m.zero_set()) return fail(name, Witness{}.add("L", l));
    return pass(name);
}

PropertyVerdict maximal_core(const FiniteModule& m, ElementSet n) {
    const char* name = "maximal";
    if (n == m.all()) return fail(name, Witness{}.add("N=M", n));
    for (ElementSet l : m.submodules())
        if (l != n && l != m.all() && n.subset_of(l)) return fail(name, Witness{}.add("L", l));
    return pass(name);
}

PropertyVerdict supplement_core(const FiniteModule& m, ElementSet n, ElementSet l) {
    const char* name = "supplement";
    const ElementSet total = lattice::sum(m, n, l);
    if (total != m.all()) return fail(name, Witness{}.add("N+L", total));
    if (!lattice::is_small_in(m, n & l, n)) return fail(name, Witness{}.add("N&L", n & l));
    return pass(name);
}

PropertyVerdict supplemented_core(const FiniteModule& m, ElementSet n) {
    const char* name = "supplemented";
    for (ElementSet l : m.submodules())
        if (supplement_core(m, n, l).holds) return pass(name);
    return fail(name, Witness{}.add("N", n));
}

PropertyVerdict hollow_core(const FiniteModule& m) {
    const char* name = "hollow";
    if (m.is_zero_module()) return fail(name, Witness{}.add("M=0", m.zero_set()));
    for (ElementSet k : m.submodules())
        if (k != m.all() && !small_core(m, k).holds) return fail(name, Witness{}.add("K", k));
    return pass(name);
}

PropertyVerdict lifting_core(const FiniteModule& m) {
    const char* name = "lifting";
    const auto& subs = m.submodules();
    for (ElementSet n : subs) {
        bool found = false;
        for (ElementSet k : subs) {
            if (!k.subset_of(n)) continue;
            for (ElementSet l : subs) {
                if ((k & l) != m.zero_set() || lattice::sum(m, k, l) != m.all()) continue;
                if (lattice::is_small_in(m, n & l, l)) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) return fail(name, Witness{}.add("N", n));
    }
    return pass(name);
}

PropertyVerdict coatomic_core(const FiniteModule& m) {
    const char* name = "coatomic";
    const auto maxes = lattice::maximal_in(m, m.all());
    for (ElementSet k : m.submodules()) {
        if (k == m.all()) continue;
        bool inside = false;
        for (ElementSet mx : maxes) inside = inside || k.subset_of(mx);
        if (!inside) return fail(name, Witness{}.add("K", k));
    }
    return pass(name);
}

PropertyVerdict reduced_core(const FiniteModule& m) {
    const ElementSet p = lattice::p_sum_in(m, m.all());
    if (p != m.zero_set()) return fail("reduced", Witness{}.add("P(M)", p));
    return pass("reduced");
}

PropertyVerdict local_core(const FiniteModule& m) {
    const char* name = "local";
    // Largest proper submodule: a proper submodule containing every proper one.
    std::optional<ElementSet> largest;
    ElementSet proper_union;
    for (ElementSet k : m.submodules())
        if (k != m.all()) proper_union |= k;
    for (ElementSet k : m.submodules())
        if (k != m.all() && proper_union.subset_of(k)) largest = k;
    const bool by_largest = largest.has_value();

    const ElementSet radical = lattice::rad_in(m, m.all());
    const bool by_radical = maximal_core(m, radical).holds && lattice::is_small_in(m, radical, m.all());

    if (by_largest != by_radical)
        throw Error(ErrorKind::internal_inconsistency,
                    "local-module characterizations disagree on " + m.descriptor());
    if (by_largest) return pass(name);
    if (m.is_zero_module()) return fail(name, Witness{}.add("M=0", m.zero_set()));
    const auto maxes = lattice::maximal_in(m, m.all());
    Witness w;
    for (ElementSet mx : maxes) w.add("maximal", mx);
    return fail(name, std::move(w));
}

}  // namespace

const std::vector<Element>* Witness::find(const std::string& name) const {
    for (const auto& [key, value] : fields)
        if (key == name) return &value;
    return nullptr;
}

std::string Witness::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, value] : fields) {
        if (!first) os << ' ';
        first = false;
        os << key << '=';
        if (value.size() == 1 && key.size() == 1 && key[0] >= 'a' && key[0] <= 'z') {
            os << value.front();
        } else {
            os << ElementSet::from_vector(value).to_string();
        }
    }
    return os.str();
}

PropertyVerdict is_prime_submodule(const Submodule& n) { return prime_direct(*n.module(), n.elements()); }
PropertyVerdict is_prime_via_ideal_criterion(const Submodule& n) {
    return prime_ideal_criterion(*n.module(), n.elements());
}
PropertyVerdict is_prime_via_element_criterion(const Submodule& n) {
    return prime_element_criterion(*n.module(), n.elements());
}

PropertyVerdict is_primal(const Submodule& n) {
    require_proper(n, "primal");
    return primal_core(*n.module(), n.elements());
}

PropertyVerdict is_complementary(const Submodule& n) {
    require_proper(n, "complementary");
    return complementary_core(*n.module(), n.elements());
}

PropertyVerdict is_small(const Submodule& n) {
    require_proper(n, "small");
    return small_core(*n.module(), n.elements());
}

PropertyVerdict is_essential(const Submodule& n) { return essential_core(*n.module(), n.elements()); }
PropertyVerdict is_maximal(const Submodule& n) { return maximal_core(*n.module(), n.elements()); }

PropertyVerdict is_supplement_of(const Submodule& n, const Submodule& l) {
    if (n.module() != l.module()) throw Error(ErrorKind::mixed_modules, "submodules of different modules");
    return supplement_core(*n.module(), n.elements(), l.elements());
}

PropertyVerdict is_supplemented_submodule(const Submodule& n) {
    return supplemented_core(*n.module(), n.elements());
}

PropertyVerdict is_hollow(const ModulePtr& m) { return hollow_core(*m); }
PropertyVerdict is_lifting(const ModulePtr& m) { return lifting_core(*m); }
PropertyVerdict is_coatomic(const ModulePtr& m) { return coatomic_core(*m); }
PropertyVerdict is_reduced(const ModulePtr& m) { return reduced_core(*m); }
PropertyVerdict is_local_module(const ModulePtr& m) { return local_core(*m); }

bool is_primal_ideal(const FiniteRing& r, ElementSet i) { return is_ideal(r, not_prime_subset(r, i)); }

namespace decide {

bool prime(const FiniteModule& m, ElementSet n) { return prime_direct(m, n).holds; }
bool primal(const FiniteModule& m, ElementSet n) { return n != m.all() && primal_core(m, n).holds; }
bool complementary(const FiniteModule& m, ElementSet n) { return complementary_core(m, n).holds; }
bool small(const FiniteModule& m, ElementSet n) { return small_core(m, n).holds; }
bool essential(const FiniteModule& m, ElementSet n) { return essential_core(m, n).holds; }
bool maximal(const FiniteModule& m, ElementSet n) { return maximal_core(m, n).holds; }
bool supplement_of(const FiniteModule& m, ElementSet n, ElementSet l) { return supplement_core(m, n, l).holds; }
bool supplemented(const FiniteModule& m, ElementSet n) { return supplemented_core(m, n).holds; }
bool hollow(const FiniteModule& m) { return hollow_core(m).holds; }
bool lifting(const FiniteModule& m) { return lifting_core(m).holds; }
bool coatomic(const FiniteModule& m) { return coatomic_core(m).holds; }
bool reduced(const FiniteModule& m) { return reduced_core(m).holds; }
bool local(const FiniteModule& m) { return local_core(m).holds; }

}  // namespace decide

}  // namespace locmod
