#include "locmod/module.hpp"

#include <algorithm>
#include <sstream>

#include "locmod/error.hpp"
#include "lattice_util.hpp"

namespace locmod {

namespace {

void fail(const std::string& what) { throw Error(ErrorKind::invalid_parameter, what); }

void check_module_axioms(const FiniteRing& r, std::size_t n, const std::vector<Element>& add, Element zero,
                         const std::vector<Element>& action) {
    const std::size_t rn = r.size();
    auto A = [&](Element a, Element b) { return add[a * n + b]; };
    auto act = [&](Element s, Element m) { return action[s * n + m]; };
    if (zero >= n) fail("module zero out of range");
    for (Element a = 0; a < n; ++a) {
        if (A(zero, a) != a) fail("zero is not an additive identity");
        if (act(r.one(), a) != a) fail("module is not unitary");
        bool has_inverse = false;
        for (Element b = 0; b < n; ++b) {
            if (A(a, b) != A(b, a)) fail("module addition is not commutative");
            if (A(a, b) == zero) has_inverse = true;
            for (Element c = 0; c < n; ++c)
                if (A(A(a, b), c) != A(a, A(b, c))) fail("module addition is not associative");
        }
        if (!has_inverse) fail("module element lacks an additive inverse");
    }
    for (Element s = 0; s < rn; ++s)
        for (Element a = 0; a < n; ++a) {
            for (Element b = 0; b < n; ++b)
                if (act(s, A(a, b)) != A(act(s, a), act(s, b))) fail("action does not distribute over module +");
            for (Element t = 0; t < rn; ++t) {
                if (act(r.add(s, t), a) != A(act(s, a), act(t, a))) fail("action does not distribute over ring +");
                if (act(r.mul(s, t), a) != act(s, act(t, a))) fail("action is not associative");
            }
        }
}

void require_same_module(const Submodule& a, const Submodule& b) {
    if (a.module() != b.module()) throw Error(ErrorKind::mixed_modules, "submodules of different modules");
}

std::string format_with(ElementSet s, auto label) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Element e : s) {
        if (!first) os << ',';
        first = false;
        os << label(e);
    }
    os << '}';
    return os.str();
}

}  // namespace

FiniteModule::FiniteModule(Token, RingPtr ring, std::size_t size, std::vector<Element> add, Element zero,
                           std::vector<Element> action, std::string descriptor, std::vector<std::string> labels)
    : ring_(std::move(ring)),
      size_(size),
      add_(std::move(add)),
      neg_(size),
      zero_(zero),
      action_(std::move(action)),
      descriptor_(std::move(descriptor)),
      labels_(std::move(labels)) {
    for (Element a = 0; a < size_; ++a)
        for (Element b = 0; b < size_; ++b)
            if (add_[a * size_ + b] == zero_) neg_[a] = b;
}

ModulePtr FiniteModule::from_tables(RingPtr ring, std::size_t size, std::vector<Element> add, Element zero,
                                    std::vector<Element> action, std::string descriptor,
                                    std::vector<std::string> labels) {
    if (!ring) fail("module needs a ring");
    if (size == 0) fail("module must have at least one element");
    if (size > kMaxCarrierSize) throw Error(ErrorKind::cap_exceeded, "module larger than 64 elements");
    if (add.size() != size * size) fail("add table must have size*size entries");
    if (action.size() != ring->size() * size) fail("action table must have |R|*size entries");
    for (Element e : add)
        if (e >= size) fail("add table entry out of range");
    for (Element e : action)
        if (e >= size) fail("action table entry out of range");
    if (!labels.empty() && labels.size() != size) fail("label count must match module size");
    check_module_axioms(*ring, size, add, zero, action);
    return std::make_shared<const FiniteModule>(Token{}, std::move(ring), size, std::move(add), zero,
                                                std::move(action), std::move(descriptor), std::move(labels));
}

std::string FiniteModule::label(Element e) const { return labels_.empty() ? std::to_string(e) : labels_[e]; }

ElementSet FiniteModule::closure(ElementSet gens) const {
    return detail::close_under(size_, gens | zero_set(), [this](Element a, Element b) { return add(a, b); },
                               [this](ElementSet cur, ElementSet& next) {
                                   for (Element x : cur)
                                       for (Element r = 0; r < ring_->size(); ++r) next.insert(act(r, x));
                               });
}

const std::vector<ElementSet>& FiniteModule::submodules() const {
    std::call_once(lattice_once_, [this] {
        lattice_ = detail::enumerate_closed_sets(size_, [this](ElementSet g) { return closure(g); });
    });
    return lattice_;
}

bool FiniteModule::is_submodule(ElementSet s) const {
    if (!s.contains(zero_) || !s.subset_of(all())) return false;
    for (Element x : s) {
        for (Element y : s)
            if (!s.contains(add(x, y))) return false;
        for (Element r = 0; r < ring_->size(); ++r)
            if (!s.contains(act(r, x))) return false;
    }
    return true;
}

ElementSet FiniteModule::scale(Element r, ElementSet s) const {
    ElementSet out;
    for (Element x : s) out.insert(act(r, x));
    return out;
}

Submodule Submodule::make(ModulePtr module, ElementSet elements) {
    if (!module->is_submodule(elements))
        throw Error(ErrorKind::not_a_submodule,
                    elements.to_string() + " is not a submodule of " + module->descriptor());
    return Submodule(std::move(module), elements);
}

ModulePtr regular_module(const RingPtr& r) {
    std::vector<std::string> labels;
    if (r->has_labels())
        for (Element e = 0; e < r->size(); ++e) labels.push_back(r->label(e));
    return FiniteModule::from_tables(r, r->size(), r->add_table(), r->zero(), r->mul_table(), "regular",
                                     std::move(labels));
}

QuotientModule quotient_module(const ModulePtr& m, ElementSet n) {
    if (!m->is_submodule(n))
        throw Error(ErrorKind::not_a_submodule, n.to_string() + " is not a submodule of " + m->descriptor());
    const std::size_t size = m->size();
    std::vector<Element> coset_of(size, static_cast<Element>(size));
    std::vector<Element> reps;
    for (Element a = 0; a < size; ++a) {
        if (coset_of[a] != size) continue;
        const auto c = static_cast<Element>(reps.size());
        reps.push_back(a);
        for (Element x : n) coset_of[m->add(a, x)] = c;
    }
    const std::size_t q = reps.size();
    const std::size_t rn = m->ring()->size();
    std::vector<Element> add(q * q), action(rn * q);
    std::vector<std::string> labels(q);
    for (Element a = 0; a < q; ++a) {
        labels[a] = "[" + m->label(reps[a]) + "]";
        for (Element b = 0; b < q; ++b) add[a * q + b] = coset_of[m->add(reps[a], reps[b])];
        for (Element r = 0; r < rn; ++r) action[r * q + a] = coset_of[m->act(r, reps[a])];
    }
    std::string descriptor =
        m->descriptor() == "regular" ? "quotient" + n.to_string() : m->descriptor() + "/" + n.to_string();
    auto module = FiniteModule::from_tables(m->ring(), q, std::move(add), coset_of[m->zero()], std::move(action),
                                            std::move(descriptor), std::move(labels));
    return QuotientModule{std::move(module), std::move(coset_of)};
}

RestrictedModule as_module(const Submodule& n) {
    const auto& m = *n.module();
    std::vector<Element> embedding = n.elements().to_vector();
    std::vector<Element> index(m.size(), 0);
    for (Element i = 0; i < embedding.size(); ++i) index[embedding[i]] = i;
    const std::size_t k = embedding.size();
    const std::size_t rn = m.ring()->size();
    std::vector<Element> add(k * k), action(rn * k);
    std::vector<std::string> labels(k);
    for (Element a = 0; a < k; ++a) {
        labels[a] = m.label(embedding[a]);
        for (Element b = 0; b < k; ++b) add[a * k + b] = index[m.add(embedding[a], embedding[b])];
        for (Element r = 0; r < rn; ++r) action[r * k + a] = index[m.act(r, embedding[a])];
    }
    auto module = FiniteModule::from_tables(m.ring(), k, std::move(add), index[m.zero()], std::move(action),
                                            m.descriptor() + "|" + n.elements().to_string(), std::move(labels));
    return RestrictedModule{std::move(module), std::move(embedding)};
}

Submodule submodule_generated(const ModulePtr& m, ElementSet gens) {
    if (!gens.subset_of(m->all())) throw Error(ErrorKind::invalid_parameter, "generators outside the module");
    return Submodule::make(m, m->closure(gens));
}

std::vector<Submodule> enumerate_submodules(const ModulePtr& m, std::size_t cap) {
    if (m->size() > cap)
        throw Error(ErrorKind::cap_exceeded, "module of size " + std::to_string(m->size()) + " exceeds cap");
    std::vector<Submodule> out;
    for (ElementSet s : m->submodules()) out.push_back(Submodule::make(m, s));
    return out;
}

Submodule sum(const Submodule& a, const Submodule& b) {
    require_same_module(a, b);
    return Submodule::make(a.module(), lattice::sum(*a.module(), a.elements(), b.elements()));
}

Submodule intersection(const Submodule& a, const Submodule& b) {
    require_same_module(a, b);
    return Submodule::make(a.module(), a.elements() & b.elements());
}

IdealSet colon_ideal(const Submodule& n, const Submodule& l) {
    require_same_module(n, l);
    return IdealSet::make(n.module()->ring(), lattice::colon_ideal(*n.module(), n.elements(), l.elements()));
}

Submodule colon_element(const Submodule& n, Element r) {
    if (r >= n.module()->ring()->size()) throw Error(ErrorKind::invalid_parameter, "scalar out of range");
    return Submodule::make(n.module(), lattice::colon_element(*n.module(), n.elements(), r));
}

Submodule colon_set(const Submodule& n, ElementSet s) {
    if (s.empty()) throw Error(ErrorKind::empty_set, "N : S needs a nonempty S");
    if (!s.subset_of(n.module()->ring()->all())) throw Error(ErrorKind::invalid_parameter, "scalars out of range");
    return Submodule::make(n.module(), lattice::colon_set(*n.module(), n.elements(), s));
}

NotPrimeSet not_prime_set(const Submodule& n) {
    if (!n.is_proper()) throw Error(ErrorKind::not_proper, "S(N) needs a proper submodule");
    return NotPrimeSet{n.module(), n.elements(), lattice::not_prime(*n.module(), n.elements())};
}

std::vector<Submodule> maximal_submodules(const ModulePtr& m, std::size_t cap) {
    if (m->size() > cap) throw Error(ErrorKind::cap_exceeded, "module exceeds cap");
    std::vector<Submodule> out;
    for (ElementSet s : lattice::maximal_in(*m, m->all())) out.push_back(Submodule::make(m, s));
    return out;
}

Submodule rad(const ModulePtr& m, std::size_t cap) {
    if (m->size() > cap) throw Error(ErrorKind::cap_exceeded, "module exceeds cap");
    return Submodule::make(m, lattice::rad_in(*m, m->all()));
}

Submodule rad_of_submodule(const Submodule& n) {
    return Submodule::make(n.module(), lattice::rad_in(*n.module(), n.elements()));
}

Submodule p_sum(const ModulePtr& m, std::size_t cap) {
    if (m->size() > cap) throw Error(ErrorKind::cap_exceeded, "module exceeds cap");
    return Submodule::make(m, lattice::p_sum_in(*m, m->all()));
}

namespace lattice {

ElementSet sum(const FiniteModule& m, ElementSet a, ElementSet b) {
    const ElementSet u = a | b;
    // The lattice is intersection-closed and sorted by size, so the first
    // superset is the least one.
    for (ElementSet s : m.submodules())
        if (u.subset_of(s)) return s;
    return m.closure(u);
}

std::vector<ElementSet> below(const FiniteModule& m, ElementSet ambient) {
    std::vector<ElementSet> out;
    for (ElementSet s : m.submodules())
        if (s.subset_of(ambient)) out.push_back(s);
    return out;
}

std::vector<ElementSet> maximal_in(const FiniteModule& m, ElementSet ambient) {
    const auto subs = below(m, ambient);
    std::vector<ElementSet> out;
    for (ElementSet k : subs) {
        if (k == ambient) continue;
        const bool covered = std::any_of(subs.begin(), subs.end(), [&](ElementSet l) {
            return l != k && l != ambient && k.subset_of(l);
        });
        if (!covered) out.push_back(k);
    }
    return out;
}

ElementSet rad_in(const FiniteModule& m, ElementSet ambient) {
    ElementSet out = ambient;
    for (ElementSet k : maximal_in(m, ambient)) out &= k;
    return out;
}

ElementSet p_sum_in(const FiniteModule& m, ElementSet ambient) {
    ElementSet out = m.zero_set();
    for (ElementSet k : below(m, ambient))
        if (rad_in(m, k) == k) out = sum(m, out, k);
    return out;
}

ElementSet colon_ideal(const FiniteModule& m, ElementSet n, ElementSet l) {
    ElementSet out;
    for (Element r = 0; r < m.ring()->size(); ++r)
        if (m.scale(r, l).subset_of(n)) out.insert(r);
    return out;
}

ElementSet colon_element(const FiniteModule& m, ElementSet n, Element r) {
    ElementSet out;
    for (Element x = 0; x < m.size(); ++x)
        if (n.contains(m.act(r, x))) out.insert(x);
    return out;
}

ElementSet colon_set(const FiniteModule& m, ElementSet n, ElementSet s) {
    ElementSet out = m.all();
    for (Element r : s) out &= colon_element(m, n, r);
    return out;
}

ElementSet not_prime(const FiniteModule& m, ElementSet n) {
    ElementSet out;
    const ElementSet outside = m.all() - n;
    for (Element r = 0; r < m.ring()->size(); ++r)
        for (Element x : outside)
            if (n.contains(m.act(r, x))) {
                out.insert(r);
                break;
            }
    return out;
}

bool is_small_in(const FiniteModule& m, ElementSet k, ElementSet ambient) {
    for (ElementSet l : below(m, ambient))
        if (l != ambient && sum(m, k, l) == ambient) return false;
    return true;
}

}  // namespace lattice

std::string format_set(const FiniteModule& m, ElementSet s) {
    if (!m.has_labels()) return s.to_string();
    return format_with(s, [&](Element e) { return m.label(e); });
}

}  // namespace locmod
