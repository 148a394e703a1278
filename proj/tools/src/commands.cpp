#include "locmod_cli/commands.hpp"

#include <filesystem>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "locmod/error.hpp"
#include "locmod/instance_io.hpp"
#include "locmod/localization.hpp"
#include "locmod/properties.hpp"

namespace locmod::cli {

namespace {

using nlohmann::ordered_json;

ordered_json set_json(ElementSet s) { return s.to_vector(); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Printer {
public:
    Printer(const CliConfig& config, const FiniteModule& m) : labels_(config.labels), m_(m) {}

    std::string module_set(ElementSet s) const { return labels_ ? format_set(m_, s) : s.to_string(); }
    std::string ring_set(ElementSet s) const { return labels_ ? format_set(*m_.ring(), s) : s.to_string(); }

private:
    bool labels_;
    const FiniteModule& m_;
};

void require_within_cap(const FiniteModule& m, const CliConfig& config) {
    if (m.size() > config.max_module_size)
        throw Error(ErrorKind::cap_exceeded, "module has " + std::to_string(m.size()) + " elements, cap is " +
                                                 std::to_string(config.max_module_size));
}

MultiplicativeSet parse_mulset_override(const RingPtr& ring, const std::string& text) {
    ElementSet s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            const unsigned long v = std::stoul(item);
            if (v >= ring->size()) throw Error(ErrorKind::parse_error, "mulset element out of range: " + item);
            s.insert(static_cast<Element>(v));
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::parse_error, "bad mulset element '" + item + "'");
        }
    }
    return MultiplicativeSet::make(ring, s);
}

struct SubmoduleRow {
    ElementSet n;
    ElementSet colon;
    ElementSet not_prime;
    bool proper;
    bool not_prime_ideal;
    bool prime, primal, complementary, small, essential, maximal;
};

SubmoduleRow row_for(const FiniteModule& m, ElementSet n) {
    SubmoduleRow r{};
    r.n = n;
    r.proper = n != m.all();
    r.colon = lattice::colon_ideal(m, n, m.all());
    r.not_prime = lattice::not_prime(m, n);
    r.not_prime_ideal = is_ideal(*m.ring(), r.not_prime);
    r.prime = r.proper && decide::prime(m, n);
    r.primal = decide::primal(m, n);
    r.complementary = r.proper && decide::complementary(m, n);
    r.small = decide::small(m, n);
    r.essential = decide::essential(m, n);
    r.maximal = decide::maximal(m, n);
    return r;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

}  // namespace

CorpusConfig resolve_corpus(const CliConfig& config) {
    CorpusConfig c;
    if (config.corpus == "standard" || config.corpus == "z6" || config.corpus == "small") {
        c = named_corpus(config.corpus);
    } else if (std::filesystem::exists(config.corpus)) {
        c = load_corpus(config.corpus);
    } else {
        throw Error(ErrorKind::parse_error, "unknown corpus '" + config.corpus + "'");
    }
    c.max_module_size = std::min(c.max_module_size, config.max_module_size);
    c.jobs = config.jobs;
    return c;
}

CommandResult cmd_explore(const CliConfig& config) {
    const InstanceSpec spec = load_instance(config.instance_path);
    const FiniteModule& m = *spec.module;
    require_within_cap(m, config);
    const Printer p(config, m);

    std::vector<SubmoduleRow> rows;
    for (ElementSet n : m.submodules()) rows.push_back(row_for(m, n));
    const ElementSet radical = lattice::rad_in(m, m.all());
    const ElementSet psum = lattice::p_sum_in(m, m.all());
    const std::vector<std::pair<std::string, bool>> verdicts{
        {"hollow", decide::hollow(m)},     {"lifting", decide::lifting(m)}, {"coatomic", decide::coatomic(m)},
        {"reduced", decide::reduced(m)},   {"local", decide::local(m)},
    };

    if (config.format == ReportFormat::structured) {
        ordered_json doc;
        doc["schema"] = kReportSchema;
        doc["command"] = "explore";
        doc["ring"] = {{"descriptor", m.ring()->descriptor()}, {"size", m.ring()->size()}};
        doc["module"] = {{"descriptor", m.descriptor()}, {"size", m.size()}};
        doc["submodules"] = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["elements"] = set_json(r.n);
            row["colon"] = set_json(r.colon);
            row["not_prime"] = set_json(r.not_prime);
            row["not_prime_is_ideal"] = r.not_prime_ideal;
            auto proper_only = [&](bool v) { return r.proper ? ordered_json(v) : ordered_json(nullptr); };
            row["prime"] = proper_only(r.prime);
            row["primal"] = proper_only(r.primal);
            row["complementary"] = proper_only(r.complementary);
            row["small"] = r.small;
            row["essential"] = r.essential;
            row["maximal"] = r.maximal;
            doc["submodules"].push_back(row);
        }
        doc["rad"] = set_json(radical);
        doc["p_sum"] = set_json(psum);
        ordered_json mv;
        for (const auto& [name, v] : verdicts) mv[name] = v;
        doc["module_verdicts"] = mv;
        return {0, doc.dump(2) + "\n"};
    }

    std::ostringstream os;
    os << "ring: " << m.ring()->descriptor() << " (" << m.ring()->size() << " elements)\n"
       << "module: " << m.descriptor() << " (" << m.size() << " elements)\n"
       << "submodules:";
    for (const auto& r : rows) os << ' ' << p.module_set(r.n);
    os << "\n\n";
    std::size_t w = 8;
    for (const auto& r : rows)
        w = std::max({w, p.module_set(r.n).size() + 2, p.ring_set(r.colon).size() + 2, p.ring_set(r.not_prime).size() + 2});
    os << pad("N", w) << pad("N:M", w) << pad("S(N)", w) << "ideal prime primal compl small essential maximal\n";
    for (const auto& r : rows) {
        auto proper_only = [&](bool v) { return r.proper ? yes_no(v) : std::string("-"); };
        os << pad(p.module_set(r.n), w) << pad(p.ring_set(r.colon), w) << pad(p.ring_set(r.not_prime), w)
           << pad(yes_no(r.not_prime_ideal), 6) << pad(proper_only(r.prime), 6) << pad(proper_only(r.primal), 7)
           << pad(proper_only(r.complementary), 6) << pad(yes_no(r.small), 6) << pad(yes_no(r.essential), 10)
           << yes_no(r.maximal) << "\n";
    }
    os << "\nRad M: " << p.module_set(radical) << "\nP(M): " << p.module_set(psum) << "\n";
    for (const auto& [name, v] : verdicts) os << name << ": " << yes_no(v) << "\n";
    return {0, os.str()};
}

CommandResult cmd_localize(const CliConfig& config) {
    const InstanceSpec spec = load_instance(config.instance_path);
    require_within_cap(*spec.module, config);
    std::optional<MultiplicativeSet> mulset = spec.mulset;
    if (config.mulset) mulset = parse_mulset_override(spec.ring, *config.mulset);
    if (!mulset) throw Error(ErrorKind::parse_error, "localize needs a multiplicative set");

    const auto lr = localize_ring(spec.ring, *mulset);
    const auto lm = localize_module(spec.module, lr);
    const FiniteModule& m = *spec.module;
    const FiniteModule& ms = *lm->module();
    const auto& r = *spec.ring;

    struct RoundTrip {
        ElementSet nprime, lifted, back;
    };
    std::vector<RoundTrip> trips;
    std::size_t ok = 0;
    for (ElementSet np : ms.submodules()) {
        const ElementSet lifted = lattice::lift(*lm, np);
        const ElementSet back = lattice::localize(*lm, lifted);
        trips.push_back({np, lifted, back});
        if (back == np) ++ok;
    }

    auto class_json = [](const FractionClasses& fc) {
        ordered_json out = ordered_json::array();
        for (Element c = 0; c < fc.count(); ++c) {
            ordered_json members = ordered_json::array();
            for (const auto& [x, s] : fc.members[c]) members.push_back({x, s});
            out.push_back({{"class", c},
                           {"representative", {fc.representative(c).first, fc.representative(c).second}},
                           {"members", members}});
        }
        return out;
    };

    if (config.format == ReportFormat::structured) {
        ordered_json doc;
        doc["schema"] = kReportSchema;
        doc["command"] = "localize";
        doc["ring"] = {{"descriptor", r.descriptor()}, {"size", r.size()}};
        doc["module"] = {{"descriptor", m.descriptor()}, {"size", m.size()}};
        doc["mulset"] = set_json(mulset->elements());
        doc["degenerate"] = lr->degenerate();
        doc["ring_S"] = {{"size", lr->ring()->size()}, {"classes", class_json(lr->classes())}};
        doc["module_S"] = {{"size", ms.size()}, {"classes", class_json(lm->classes())}};
        doc["ring_canonical"] = lr->canonical().table();
        doc["module_canonical"] = lm->canonical();
        doc["submodules_S"] = ordered_json::array();
        for (const auto& t : trips)
            doc["submodules_S"].push_back(
                {{"elements", set_json(t.nprime)}, {"lift", set_json(t.lifted)}, {"round_trip", t.back == t.nprime}});
        doc["round_trip_ok"] = ok == trips.size();
        return {ok == trips.size() ? 0 : 2, doc.dump(2) + "\n"};
    }

    const Printer p(config, m);
    std::ostringstream os;
    os << "ring: " << r.descriptor() << " (" << r.size() << " elements)\n"
       << "module: " << m.descriptor() << " (" << m.size() << " elements)\n"
       << "S: " << p.ring_set(mulset->elements()) << "\n";
    if (lr->degenerate()) os << "warning: 0 is in S, the localization is the zero structure\n";
    os << "|R_S| = " << lr->ring()->size() << ", |M_S| = " << ms.size() << "\n\n";

    auto print_classes = [&](const char* title, const FractionClasses& fc, auto&& num_label) {
        os << title << ":\n";
        for (Element c = 0; c < fc.count(); ++c) {
            os << "  [" << c << "] ";
            bool first = true;
            for (const auto& [x, s] : fc.members[c]) {
                os << (first ? "" : " ") << num_label(x) << '/' << r.label(s);
                first = false;
            }
            os << "\n";
        }
    };
    print_classes("R_S classes", lr->classes(), [&](Element x) { return r.label(x); });
    print_classes("M_S classes", lm->classes(), [&](Element x) { return m.label(x); });

    os << "\nR -> R_S:";
    for (Element x = 0; x < r.size(); ++x) os << ' ' << r.label(x) << "->" << lr->canonical()(x);
    os << "\nM -> M_S:";
    for (Element x = 0; x < m.size(); ++x) os << ' ' << m.label(x) << "->" << lm->canonical()[x];
    os << "\n\nsubmodules of M_S (lift, localize(lift)):\n";
    for (const auto& t : trips)
        os << "  " << t.nprime.to_string() << "  lift " << p.module_set(t.lifted) << "  back " << t.back.to_string()
           << (t.back == t.nprime ? "" : "  MISMATCH") << "\n";
    os << "round-trip: " << (ok == trips.size() ? "ok" : "FAILED") << " (" << ok << "/" << trips.size() << ")\n";
    return {ok == trips.size() ? 0 : 2, os.str()};
}

namespace {

std::vector<std::string> selected_ids(const std::string& prop) {
    if (prop == "all") return default_proposition_ids();
    std::vector<std::string> ids;
    std::stringstream ss(prop);
    std::string id;
    while (std::getline(ss, id, ',')) {
        find_proposition(id);
        ids.push_back(id);
    }
    return ids;
}

}  // namespace

CommandResult cmd_verify(const CliConfig& config) {
    const auto ids = selected_ids(config.prop);
    const CorpusConfig corpus = resolve_corpus(config);
    const auto reports = sweep_many(ids, corpus);
    bool failed = false;
    for (const auto& r : reports) failed = failed || (!r.informational && !r.violations.empty());
    RenderOptions options{config.format, config.timing};
    return {failed ? 1 : 0, render_sweep_report(reports, corpus.name, options)};
}

CommandResult cmd_search(const CliConfig& config) {
    find_proposition(config.prop);
    const CorpusConfig corpus = resolve_corpus(config);
    const auto report = necessity_search(config.prop, corpus);
    RenderOptions options{config.format, config.timing};
    return {0, render_search_report(report, corpus.name, options)};
}

}  // namespace locmod::cli
