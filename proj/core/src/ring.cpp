#include "locmod/ring.hpp"

#include <algorithm>
#include <sstream>

#include "locmod/error.hpp"
#include "lattice_util.hpp"

namespace locmod {

namespace {

void fail(const std::string& what) { throw Error(ErrorKind::invalid_parameter, what); }

void check_table_shape(std::size_t n, const std::vector<Element>& table, const char* name) {
    if (table.size() != n * n) fail(std::string(name) + " table must have size*size entries");
    for (Element e : table)
        if (e >= n) fail(std::string(name) + " table entry out of range");
}

// O(n^3) exhaustive axiom check.
void check_ring_axioms(std::size_t n, const std::vector<Element>& add, const std::vector<Element>& mul,
                       Element zero, Element one) {
    auto A = [&](Element a, Element b) { return add[a * n + b]; };
    auto M = [&](Element a, Element b) { return mul[a * n + b]; };
    if (zero >= n || one >= n) fail("zero/one out of range");
    if (n > 1 && zero == one) fail("zero equals one in a nontrivial ring");
    for (Element a = 0; a < n; ++a) {
        if (A(zero, a) != a) fail("zero is not an additive identity");
        if (M(one, a) != a) fail("one is not a multiplicative identity");
        bool has_inverse = false;
        for (Element b = 0; b < n; ++b) {
            if (A(a, b) != A(b, a)) fail("addition is not commutative");
            if (M(a, b) != M(b, a)) fail("multiplication is not commutative");
            if (A(a, b) == zero) has_inverse = true;
            for (Element c = 0; c < n; ++c) {
                if (A(A(a, b), c) != A(a, A(b, c))) fail("addition is not associative");
                if (M(M(a, b), c) != M(a, M(b, c))) fail("multiplication is not associative");
                if (M(a, A(b, c)) != A(M(a, b), M(a, c))) fail("multiplication does not distribute");
            }
        }
        if (!has_inverse) fail("missing additive inverse");
    }
}

ElementSet close_ideal(const FiniteRing& r, ElementSet gens) {
    return detail::close_under(r.size(), gens | ElementSet{r.zero()},
                               [&](Element a, Element b) { return r.add(a, b); },
                               [&](ElementSet cur, ElementSet& next) {
                                   for (Element x : cur)
                                       for (Element s = 0; s < r.size(); ++s) next.insert(r.mul(s, x));
                               });
}

}  // namespace

FiniteRing::FiniteRing(Token, std::size_t size, std::vector<Element> add, std::vector<Element> mul,
                       Element zero, Element one, std::string descriptor, std::vector<std::string> labels)
    : size_(size),
      add_(std::move(add)),
      mul_(std::move(mul)),
      neg_(size),
      zero_(zero),
      one_(one),
      descriptor_(std::move(descriptor)),
      labels_(std::move(labels)) {
    for (Element a = 0; a < size_; ++a)
        for (Element b = 0; b < size_; ++b)
            if (add_[a * size_ + b] == zero_) neg_[a] = b;
}

RingPtr FiniteRing::from_tables(std::size_t size, std::vector<Element> add, std::vector<Element> mul,
                                Element zero, Element one, std::string descriptor,
                                std::vector<std::string> labels) {
    if (size == 0) fail("ring must have at least one element");
    if (size > kMaxCarrierSize) throw Error(ErrorKind::cap_exceeded, "ring larger than 64 elements");
    check_table_shape(size, add, "add");
    check_table_shape(size, mul, "mul");
    if (!labels.empty() && labels.size() != size) fail("label count must match ring size");
    check_ring_axioms(size, add, mul, zero, one);
    return std::make_shared<const FiniteRing>(Token{}, size, std::move(add), std::move(mul), zero, one,
                                              std::move(descriptor), std::move(labels));
}

std::string FiniteRing::label(Element e) const {
    return labels_.empty() ? std::to_string(e) : labels_[e];
}

const std::vector<ElementSet>& FiniteRing::ideals() const {
    std::call_once(ideals_once_, [this] {
        ideals_ = detail::enumerate_closed_sets(size_, [this](ElementSet g) { return close_ideal(*this, g); });
    });
    return ideals_;
}

IdealSet IdealSet::make(RingPtr ring, ElementSet elements) {
    if (!is_ideal(*ring, elements))
        throw Error(ErrorKind::invalid_ideal, elements.to_string() + " is not an ideal of " + ring->descriptor());
    return IdealSet(std::move(ring), elements);
}

MultiplicativeSet MultiplicativeSet::make(RingPtr ring, ElementSet elements) {
    if (!is_multiplicative_set(*ring, elements))
        fail(elements.to_string() + " is not a multiplicative set of " + ring->descriptor());
    return MultiplicativeSet(std::move(ring), elements);
}

RingMap RingMap::make(RingPtr source, RingPtr target, std::vector<Element> table) {
    const std::size_t n = source->size();
    if (table.size() != n) fail("ring map table has wrong length");
    for (Element e : table)
        if (e >= target->size()) fail("ring map image out of range");
    if (table[source->zero()] != target->zero()) fail("ring map does not preserve zero");
    if (table[source->one()] != target->one()) fail("ring map does not preserve one");
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (table[source->add(a, b)] != target->add(table[a], table[b])) fail("ring map does not preserve +");
            if (table[source->mul(a, b)] != target->mul(table[a], table[b])) fail("ring map does not preserve *");
        }
    return RingMap(std::move(source), std::move(target), std::move(table));
}

bool RingMap::is_bijective() const {
    if (source_->size() != target_->size()) return false;
    ElementSet image;
    for (Element e : table_) image.insert(e);
    return image == target_->all();
}

RingPtr make_zn(std::size_t n) {
    if (n == 0) fail("Z_n needs n >= 1");
    if (n > kMaxCarrierSize) throw Error(ErrorKind::cap_exceeded, "Z_n larger than 64 elements");
    std::vector<Element> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Element>((a + b) % n);
            mul[a * n + b] = static_cast<Element>((a * b) % n);
        }
    return FiniteRing::from_tables(n, std::move(add), std::move(mul), 0, static_cast<Element>(1 % n),
                                   "Z" + std::to_string(n));
}

RingPtr product_ring(const RingPtr& r1, const RingPtr& r2) {
    const std::size_t n1 = r1->size(), n2 = r2->size(), n = n1 * n2;
    if (n > kMaxCarrierSize) throw Error(ErrorKind::cap_exceeded, "product ring larger than 64 elements");
    auto idx = [n2](Element a, Element b) { return static_cast<Element>(a * n2 + b); };
    std::vector<Element> add(n * n), mul(n * n);
    std::vector<std::string> labels(n);
    for (Element a1 = 0; a1 < n1; ++a1)
        for (Element a2 = 0; a2 < n2; ++a2) {
            labels[idx(a1, a2)] = "(" + r1->label(a1) + "," + r2->label(a2) + ")";
            for (Element b1 = 0; b1 < n1; ++b1)
                for (Element b2 = 0; b2 < n2; ++b2) {
                    add[idx(a1, a2) * n + idx(b1, b2)] = idx(r1->add(a1, b1), r2->add(a2, b2));
                    mul[idx(a1, a2) * n + idx(b1, b2)] = idx(r1->mul(a1, b1), r2->mul(a2, b2));
                }
        }
    return FiniteRing::from_tables(n, std::move(add), std::move(mul), idx(r1->zero(), r2->zero()),
                                   idx(r1->one(), r2->one()), r1->descriptor() + "x" + r2->descriptor(),
                                   std::move(labels));
}

QuotientRing quotient_ring(const RingPtr& r, const IdealSet& i) {
    if (i.ring() != r) throw Error(ErrorKind::invalid_ideal, "ideal belongs to a different ring");
    const std::size_t n = r->size();
    const ElementSet ideal = i.elements();
    // Cosets ordered by their least member.
    std::vector<Element> coset_of(n, n);
    std::vector<Element> reps;
    for (Element a = 0; a < n; ++a) {
        if (coset_of[a] != n) continue;
        const auto c = static_cast<Element>(reps.size());
        reps.push_back(a);
        for (Element x : ideal) coset_of[r->add(a, x)] = c;
    }
    const std::size_t q = reps.size();
    std::vector<Element> add(q * q), mul(q * q);
    std::vector<std::string> labels(q);
    for (Element a = 0; a < q; ++a) {
        labels[a] = "[" + r->label(reps[a]) + "]";
        for (Element b = 0; b < q; ++b) {
            add[a * q + b] = coset_of[r->add(reps[a], reps[b])];
            mul[a * q + b] = coset_of[r->mul(reps[a], reps[b])];
        }
    }
    auto ring = FiniteRing::from_tables(q, std::move(add), std::move(mul), coset_of[r->zero()],
                                        coset_of[r->one()], r->descriptor() + "/" + ideal.to_string(),
                                        std::move(labels));
    auto projection = RingMap::make(r, ring, coset_of);
    return QuotientRing{std::move(ring), std::move(projection)};
}

bool is_ideal(const FiniteRing& r, ElementSet a) {
    if (a.empty() || !a.subset_of(r.all())) return false;
    for (Element x : a) {
        for (Element y : a)
            if (!a.contains(r.sub(x, y))) return false;
        for (Element s = 0; s < r.size(); ++s)
            if (!a.contains(r.mul(s, x))) return false;
    }
    return true;
}

bool is_multiplicative_set(const FiniteRing& r, ElementSet s) {
    if (s.empty() || !s.subset_of(r.all())) return false;
    for (Element x : s)
        for (Element y : s)
            if (!s.contains(r.mul(x, y))) return false;
    return true;
}

ElementSet ideal_generated(const FiniteRing& r, ElementSet gens) { return close_ideal(r, gens); }

ElementSet units(const FiniteRing& r) {
    ElementSet out;
    for (Element u = 0; u < r.size(); ++u)
        for (Element v = 0; v < r.size(); ++v)
            if (r.mul(u, v) == r.one()) {
                out.insert(u);
                break;
            }
    return out;
}

bool is_prime_ideal(const FiniteRing& r, ElementSet i) {
    if (!is_ideal(r, i)) throw Error(ErrorKind::invalid_ideal, i.to_string() + " is not an ideal");
    if (i == r.all()) return false;
    for (Element a = 0; a < r.size(); ++a)
        for (Element b = 0; b < r.size(); ++b)
            if (i.contains(r.mul(a, b)) && !i.contains(a) && !i.contains(b)) return false;
    return true;
}

bool is_prime_ideal(const IdealSet& i) { return is_prime_ideal(*i.ring(), i.elements()); }

MultiplicativeSet complement_mulset(const RingPtr& r, const IdealSet& p) {
    if (!is_prime_ideal(p)) fail(p.elements().to_string() + " is not a prime ideal");
    return MultiplicativeSet::make(r, r->all() - p.elements());
}

std::vector<ElementSet> maximal_ideals(const FiniteRing& r) {
    const auto& all = r.ideals();
    std::vector<ElementSet> out;
    for (ElementSet i : all) {
        if (i == r.all()) continue;
        const bool covered = std::any_of(all.begin(), all.end(), [&](ElementSet j) {
            return j != i && j != r.all() && i.subset_of(j);
        });
        if (!covered) out.push_back(i);
    }
    return out;
}

std::vector<ElementSet> prime_ideals(const FiniteRing& r) {
    std::vector<ElementSet> out;
    for (ElementSet i : r.ideals())
        if (is_prime_ideal(r, i)) out.push_back(i);
    return out;
}

std::optional<IdealSet> local_ring_maximal_ideal(const RingPtr& r) {
    const auto maxes = maximal_ideals(*r);
    if (maxes.size() != 1) return std::nullopt;
    return IdealSet::make(r, maxes.front());
}

std::vector<ElementSet> enumerate_multiplicative_sets(const FiniteRing& r, std::size_t max_ring_size) {
    if (r.size() > max_ring_size)
        throw Error(ErrorKind::cap_exceeded, "multiplicative-set enumeration over " + r.descriptor());
    std::vector<ElementSet> out;
    const std::uint64_t limit = std::uint64_t{1} << r.size();
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
        const auto s = ElementSet::from_bits(bits);
        if (is_multiplicative_set(r, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ElementSet not_prime_subset(const FiniteRing& r, ElementSet a) {
    ElementSet out;
    const ElementSet outside = r.all() - a;
    for (Element x = 0; x < r.size(); ++x)
        for (Element y : outside)
            if (a.contains(r.mul(x, y))) {
                out.insert(x);
                break;
            }
    return out;
}

std::string format_set(const FiniteRing& r, ElementSet s) {
    if (!r.has_labels()) return s.to_string();
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Element e : s) {
        if (!first) os << ',';
        first = false;
        os << r.label(e);
    }
    os << '}';
    return os.str();
}

}  // namespace locmod
