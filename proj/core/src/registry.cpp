#include <array>
#include <map>

#include "locmod/harness.hpp"
#include "locmod/properties.hpp"

namespace locmod {

namespace {

using Ctx = LocalizationContext;

ElementSet focus_n(const Instance& inst) { return inst.focus.at(0).elements(); }
ElementSet focus_l(const Instance& inst) { return inst.focus.at(1).elements(); }

bool proper(Ctx& c, ElementSet n) { return n != c.module().all(); }
bool disjoint(Ctx& c, ElementSet n) { return (c.not_prime(n) & c.S()).empty(); }

/// A_S for a ring subset, with the empty set sent to itself.
ElementSet loc_ring_subset(Ctx& c, ElementSet a) {
    if (a.empty()) return a;
    return localize_ring_subset(*c.localized().localized_ring(), a);
}

using ModuleDecider = bool (*)(const FiniteModule&);
using SetDecider = bool (*)(const FiniteModule&, ElementSet);

bool on_m(Ctx& c, const std::string& name, ModuleDecider f) {
    return c.memo("M:" + name, ElementSet{}, [&] { return f(c.module()); });
}
bool on_ms(Ctx& c, const std::string& name, ModuleDecider f) {
    return c.memo("MS:" + name, ElementSet{}, [&] { return f(c.module_S()); });
}
bool on_n(Ctx& c, const std::string& name, SetDecider f, ElementSet n) {
    return c.memo("N:" + name, n, [&] { return f(c.module(), n); });
}
bool on_ns(Ctx& c, const std::string& name, SetDecider f, ElementSet n) {
    const ElementSet ns = c.loc(n);
    return c.memo("NS:" + name, ns, [&] { return f(c.module_S(), ns); });
}

bool primal_ideal(Ctx& c, ElementSet ideal) { return is_primal_ideal(c.ring(), ideal); }

void module_transfer(Ctx& c, Outcome& out, const std::string& name, ModuleDecider f) {
    out.iff(name + "(M) <=> " + name + "(M_S)", on_m(c, name, f), on_ms(c, name, f));
}

void submodule_transfer(Ctx& c, Outcome& out, const std::string& name, SetDecider f, ElementSet n) {
    out.iff(name + "(N) <=> " + name + "(N_S)", on_n(c, name, f, n), on_ns(c, name, f, n));
}

void rad_transfer(Ctx& c, Outcome& out, ElementSet n) {
    out.equal("Rad(N_S) = (Rad N)_S", lattice::rad_in(c.module_S(), c.loc(n)), c.loc(lattice::rad_in(c.module(), n)));
}

/// Module-level items shared by the three corollaries.
void module_items(Ctx& c, Outcome& out) {
    module_transfer(c, out, "coatomic", decide::coatomic);
    module_transfer(c, out, "reduced", decide::reduced);
    module_transfer(c, out, "hollow", decide::hollow);
    module_transfer(c, out, "lifting", decide::lifting);
    module_transfer(c, out, "local", decide::local);
}

void submodule_items(Ctx& c, Outcome& out, ElementSet n) {
    submodule_transfer(c, out, "maximal", decide::maximal, n);
    submodule_transfer(c, out, "essential", decide::essential, n);
    submodule_transfer(c, out, "small", decide::small, n);
    submodule_transfer(c, out, "supplemented", decide::supplemented, n);
    rad_transfer(c, out, n);
}

/// P = R - S when that is a prime ideal.
std::optional<ElementSet> complement_prime(Ctx& c) {
    const ElementSet p = c.ring().all() - c.S();
    if (!is_ideal(c.ring(), p) || !is_prime_ideal(c.ring(), p)) return std::nullopt;
    return p;
}

bool all_proper_inside(Ctx& c, ElementSet p) {
    return c.memo("all-proper-inside", p, [&] {
        for (ElementSet k : c.module().submodules())
            if (k != c.module().all() && !c.not_prime(k).subset_of(p)) return false;
        return true;
    });
}

Outcome pass() { return Outcome{}; }

std::vector<PropositionCheck> build_registry() {
    std::vector<PropositionCheck> r;
    auto add = [&](PropositionCheck p) { r.push_back(std::move(p)); };

    auto is_proper = [](Ctx& c, const Instance& i) { return proper(c, focus_n(i)); };
    auto proper_disjoint = [](Ctx& c, const Instance& i) {
        const ElementSet n = focus_n(i);
        return proper(c, n) && disjoint(c, n);
    };
    auto colon_fixed = [](Ctx& c, const Instance&) { return c.all_proper_colon_fixed(); };
    auto all_disjoint = [](Ctx& c, const Instance&) { return c.all_proper_disjoint(); };

    add({"3.1", "N proper => (N prime <=> ideal criterion)", Scope::submodule, false, false, false, is_proper,
         [](Ctx& c, const Instance& i) {
             return Outcome{}.iff("prime <=> ideal criterion", decide::prime(c.module(), focus_n(i)),
                                  is_prime_via_ideal_criterion(i.focus[0]).holds);
         }});
    add({"3.2", "N proper => (N prime <=> element criterion)", Scope::submodule, false, false, false, is_proper,
         [](Ctx& c, const Instance& i) {
             return Outcome{}.iff("prime <=> element criterion", decide::prime(c.module(), focus_n(i)),
                                  is_prime_via_element_criterion(i.focus[0]).holds);
         }});
    add({"3.3", "N proper => S(N:M) in S(N) and (N:M) in S(N)", Scope::submodule, false, false, false, is_proper,
         [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             const ElementSet colon = c.colon(n);
             const ElementSet sn = c.not_prime(n);
             Outcome out;
             out.require(not_prime_subset(c.ring(), colon).subset_of(sn), "S(N:M) not inside S(N)");
             out.require(colon.subset_of(sn), "(N:M) not inside S(N)");
             return out;
         }});
    add({"3.3-converse", "N complementary => S(N) in S(N:M)", Scope::submodule, false, true, false,
         [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             return proper(c, n) && decide::complementary(c.module(), n);
         },
         [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             return Outcome{}.require(c.not_prime(n).subset_of(not_prime_subset(c.ring(), c.colon(n))),
                                      "S(N) not inside S(N:M)");
         }});
    add({"3.4", "N primal => (N:M) primal ideal", Scope::submodule, false, false, false,
         [](Ctx& c, const Instance& i) { return decide::primal(c.module(), focus_n(i)); },
         [](Ctx& c, const Instance& i) {
             return Outcome{}.require(primal_ideal(c, c.colon(focus_n(i))), "(N:M) is not primal");
         }});
    add({"3.6", "N complementary and (N:M) primal => N primal with S(N) = S(N:M)", Scope::submodule, false, false,
         false,
         [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             return proper(c, n) && decide::complementary(c.module(), n) && primal_ideal(c, c.colon(n));
         },
         [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             Outcome out;
             out.require(decide::primal(c.module(), n), "N is not primal");
             out.equal("S(N) = S(N:M)", c.not_prime(n), not_prime_subset(c.ring(), c.colon(n)));
             return out;
         }});
    add({"3.7", "N complementary => (N primal <=> (N:M) primal)", Scope::submodule, false, false, false,
         [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             return proper(c, n) && decide::complementary(c.module(), n);
         },
         [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             return Outcome{}.iff("primal(N) <=> primal(N:M)", decide::primal(c.module(), n),
                                  primal_ideal(c, c.colon(n)));
         }});
    add({"3.8", "A nonempty and S(A) disjoint from S => (A ideal <=> A_S ideal)", Scope::ring_subset, true, false,
         false,
         [](Ctx& c, const Instance& i) {
             const ElementSet a = *i.ring_subset;
             return !a.empty() && (not_prime_subset(c.ring(), a) & c.S()).empty();
         },
         [](Ctx& c, const Instance& i) {
             const ElementSet a = *i.ring_subset;
             return Outcome{}.iff("ideal(A) <=> ideal(A_S)", is_ideal(c.ring(), a),
                                  is_ideal(c.ring_S(), loc_ring_subset(c, a)));
         }});
    add({"3.9", "S(N) disjoint from S => (S(N) ideal <=> S(N)_S ideal)", Scope::submodule, true, false, false,
         [](Ctx& c, const Instance& i) { return disjoint(c, focus_n(i)); },
         [](Ctx& c, const Instance& i) {
             const ElementSet sn = c.not_prime(focus_n(i));
             return Outcome{}.iff("ideal(S(N)) <=> ideal(S(N)_S)", is_ideal(c.ring(), sn),
                                  is_ideal(c.ring_S(), loc_ring_subset(c, sn)));
         }});
    add({"3.10", "N proper and S(N) disjoint from S => S(N_S) = S(N)_S", Scope::submodule, true, false, false,
         proper_disjoint, [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             return Outcome{}.equal("S(N_S) = S(N)_S", c.not_prime_S(c.loc(n)), loc_ring_subset(c, c.not_prime(n)));
         }});
    add({"3.11", "N proper and S(N) disjoint from S => (N primal <=> N_S primal) and N_S proper", Scope::submodule,
         true, false, false, proper_disjoint, [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             Outcome out;
             submodule_transfer(c, out, "primal", decide::primal, n);
             out.require(c.loc(n) != c.module_S().all(), "N_S is not proper");
             return out;
         }});
    add({"3.13", "N proper and N:s = N for all s in S => (N prime <=> N_S prime)", Scope::submodule, true, false,
         false,
         [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             if (!proper(c, n)) return false;
             for (Element s : c.S())
                 if (lattice::colon_element(c.module(), n, s) != n) return false;
             return true;
         },
         [](Ctx& c, const Instance& i) {
             Outcome out;
             submodule_transfer(c, out, "prime", decide::prime, focus_n(i));
             return out;
         }});
    add({"3.16", "every N' in M_S is (lift N')_S, with properness preserved", Scope::module, true, false, false,
         [](Ctx&, const Instance&) { return true; },
         [](Ctx& c, const Instance&) {
             Outcome out;
             const auto& lm = c.localized();
             for (ElementSet np : c.module_S().submodules()) {
                 const ElementSet n = lattice::lift(lm, np);
                 out.equal("localize(lift N') = N' for N'=" + np.to_string(), c.loc(n), np);
                 out.iff("N proper <=> N' proper for N'=" + np.to_string(), n != c.module().all(),
                         np != c.module_S().all());
             }
             return out;
         }});
    add({"3.17", "{0}:S = {0} => (N essential <=> N_S essential)", Scope::submodule, true, false, false,
         [](Ctx& c, const Instance&) {
             return c.memo("zero-colon-S", ElementSet{}, [&] {
                 const ElementSet zero = c.module().zero_set();
                 return lattice::colon_set(c.module(), zero, c.S()) == zero;
             });
         },
         [](Ctx& c, const Instance& i) {
             Outcome out;
             submodule_transfer(c, out, "essential", decide::essential, focus_n(i));
             return out;
         }});
    add({"3.19.1", "K:s = K for proper K, s in S => (N small <=> N_S small)", Scope::submodule, true, false, false,
         colon_fixed, [](Ctx& c, const Instance& i) {
             Outcome out;
             submodule_transfer(c, out, "small", decide::small, focus_n(i));
             return out;
         }});
    add({"3.19.2", "K:s = K for proper K, s in S => (N supplemented => N_S supplemented)", Scope::submodule, true,
         false, true, colon_fixed, [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             return Outcome{}.require(!on_n(c, "supplemented", decide::supplemented, n) ||
                                          on_ns(c, "supplemented", decide::supplemented, n),
                                      "N supplemented but N_S is not");
         }});
    add({"3.19.2-reverse", "K:s = K for proper K, s in S => (N_S supplemented => N supplemented)", Scope::submodule,
         true, true, true, colon_fixed, [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             return Outcome{}.require(!on_ns(c, "supplemented", decide::supplemented, n) ||
                                          on_n(c, "supplemented", decide::supplemented, n),
                                      "N_S supplemented but N is not");
         }});
    add({"3.19.3", "K:s = K for proper K, s in S => (M hollow <=> M_S hollow)", Scope::module, true, false, false,
         colon_fixed, [](Ctx& c, const Instance&) {
             Outcome out;
             module_transfer(c, out, "hollow", decide::hollow);
             return out;
         }});
    add({"3.19.4", "K:s = K for proper K, s in S => (M lifting <=> M_S lifting)", Scope::module, true, false, true,
         colon_fixed, [](Ctx& c, const Instance&) {
             Outcome out;
             module_transfer(c, out, "lifting", decide::lifting);
             return out;
         }});
    add({"3.20-goldens", "S(N) on the regular Z6-module matches the worked values", Scope::submodule, false, false,
         false,
         [](Ctx& c, const Instance& i) {
             return c.ring().descriptor() == "Z6" && c.module().descriptor() == "regular" && proper(c, focus_n(i));
         },
         [](Ctx& c, const Instance& i) {
             static const std::map<std::uint64_t, std::pair<ElementSet, bool>> golden{
                 {ElementSet{0}.bits(), {ElementSet{0, 2, 3, 4}, false}},
                 {ElementSet{0, 2, 4}.bits(), {ElementSet{0, 2, 4}, true}},
                 {ElementSet{0, 3}.bits(), {ElementSet{0, 3}, true}},
             };
             const ElementSet n = focus_n(i);
             auto it = golden.find(n.bits());
             if (c.ring().descriptor() != "Z6" || c.module().descriptor() != "regular" || it == golden.end())
                 return pass();
             const ElementSet sn = c.not_prime(n);
             Outcome out;
             out.equal("S(N)", sn, it->second.first);
             out.iff("S(N) ideal", is_ideal(c.ring(), sn), it->second.second);
             out.require((sn & ElementSet{1, 5}).empty(), "S(N) meets {1,5}");
             return out;
         }});
    add({"3.21", "S(K) disjoint from S for proper K => (N maximal <=> N_S maximal)", Scope::submodule, true, false,
         false, all_disjoint, [](Ctx& c, const Instance& i) {
             Outcome out;
             submodule_transfer(c, out, "maximal", decide::maximal, focus_n(i));
             return out;
         }});
    add({"3.22.1", "S(K) disjoint from S for proper K => Rad(N_S) = (Rad N)_S", Scope::submodule, true, false, false,
         all_disjoint, [](Ctx& c, const Instance& i) {
             Outcome out;
             rad_transfer(c, out, focus_n(i));
             return out;
         }});
    add({"3.22.2", "S(K) disjoint from S for proper K => (N = L <=> N_S = L_S)", Scope::submodule_pair, true, false,
         false, all_disjoint, [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i), l = focus_l(i);
             return Outcome{}.iff("N = L <=> N_S = L_S", n == l, c.loc(n) == c.loc(l));
         }});
    add({"3.22.3", "S(K) disjoint from S for proper K => P(M_S) = P(M)_S", Scope::module, true, false, false,
         all_disjoint, [](Ctx& c, const Instance&) {
             return Outcome{}.equal("P(M_S) = P(M)_S", lattice::p_sum_in(c.module_S(), c.module_S().all()),
                                    c.loc(lattice::p_sum_in(c.module(), c.module().all())));
         }});
    add({"3.23", "N proper and S(N) disjoint from S => N:p = N for p in S", Scope::submodule, true, false, false,
         proper_disjoint, [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             Outcome out;
             for (Element p : c.S())
                 out.equal("N:" + std::to_string(p) + " = N", lattice::colon_element(c.module(), n, p), n);
             return out;
         }});
    add({"3.24.1", "S(K) disjoint from S for proper K => (M coatomic <=> M_S coatomic)", Scope::module, true, false,
         false, all_disjoint, [](Ctx& c, const Instance&) {
             Outcome out;
             module_transfer(c, out, "coatomic", decide::coatomic);
             return out;
         }});
    add({"3.24.2", "S(K) disjoint from S for proper K => (M reduced <=> M_S reduced)", Scope::module, true, false,
         false, all_disjoint, [](Ctx& c, const Instance&) {
             Outcome out;
             module_transfer(c, out, "reduced", decide::reduced);
             return out;
         }});
    add({"3.24.3", "S(K) disjoint from S for proper K => (M local <=> M_S local)", Scope::module, true, false, false,
         all_disjoint, [](Ctx& c, const Instance&) {
             Outcome out;
             module_transfer(c, out, "local", decide::local);
             return out;
         }});
    add({"3.26", "S = R - P, P prime, S(K) in P for proper K => twelve transfers", Scope::submodule, true, false, true,
         [](Ctx& c, const Instance&) {
             const auto p = complement_prime(c);
             return p && all_proper_inside(c, *p);
         },
         [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             Outcome out;
             module_items(c, out);
             submodule_transfer(c, out, "maximal", decide::maximal, n);
             if (proper(c, n)) {
                 const ElementSet sn = c.not_prime(n);
                 out.iff("ideal(S(N)) <=> ideal(S(N_P))", is_ideal(c.ring(), sn),
                         is_ideal(c.ring_S(), c.not_prime_S(c.loc(n))));
                 submodule_transfer(c, out, "primal", decide::primal, n);
                 submodule_transfer(c, out, "essential", decide::essential, n);
                 submodule_transfer(c, out, "small", decide::small, n);
                 submodule_transfer(c, out, "supplemented", decide::supplemented, n);
                 rad_transfer(c, out, n);
             }
             return out;
         }});
    add({"3.28", "R local with maximal P, S = R - P, N primal => S(N) in P and ten transfers", Scope::submodule, true,
         false, true,
         [](Ctx& c, const Instance& i) {
             const auto p = local_ring_maximal_ideal(c.module().ring());
             return p && c.S() == c.ring().all() - p->elements() && decide::primal(c.module(), focus_n(i));
         },
         [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             Outcome out;
             out.require((c.not_prime(n) & c.S()).empty(), "S(N) not inside P");
             module_items(c, out);
             submodule_items(c, out, n);
             return out;
         }});
    add({"3.30", "S = units(R), N primal => S(N) disjoint from S and ten transfers", Scope::submodule, true, false,
         true,
         [](Ctx& c, const Instance& i) {
             return c.S() == units(c.ring()) && decide::primal(c.module(), focus_n(i));
         },
         [](Ctx& c, const Instance& i) {
             const ElementSet n = focus_n(i);
             Outcome out;
             out.require(disjoint(c, n), "S(N) meets S");
             module_items(c, out);
             submodule_items(c, out, n);
             return out;
         }});
    return r;
}

}  // namespace

const std::vector<PropositionCheck>& proposition_registry() {
    static const std::vector<PropositionCheck> registry = build_registry();
    return registry;
}

}  // namespace locmod
