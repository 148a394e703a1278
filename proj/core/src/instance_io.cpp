#include "locmod/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "locmod/error.hpp"

namespace locmod {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
    return j.at(name);
}

ElementSet element_list(const json& j, std::size_t size, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be a list of element indices");
    ElementSet out;
    for (const auto& e : j) {
        if (!e.is_number_unsigned() || e.get<std::size_t>() >= size)
            bad(std::string(what) + " has an element outside 0.." + std::to_string(size - 1));
        out.insert(e.get<Element>());
    }
    return out;
}

std::vector<Element> flat_table(const json& j, std::size_t rows, std::size_t cols, std::size_t range,
                                const char* what) {
    if (!j.is_array() || j.size() != rows) bad(std::string(what) + " must have " + std::to_string(rows) + " rows");
    std::vector<Element> out;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols)
            bad(std::string(what) + " rows must have " + std::to_string(cols) + " entries");
        for (const auto& e : row) {
            if (!e.is_number_unsigned() || e.get<std::size_t>() >= range) bad(std::string(what) + " entry out of range");
            out.push_back(e.get<Element>());
        }
    }
    return out;
}

RingPtr parse_ring(const json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "zn") {
        const auto n = field(j, "n").get<std::size_t>();
        if (n == 0 || n > kMaxCarrierSize) bad("zn needs 1 <= n <= 64");
        return make_zn(n);
    }
    if (kind == "product") {
        const auto& factors = field(j, "factors");
        if (!factors.is_array() || factors.empty()) bad("product needs a nonempty factor list");
        RingPtr out = parse_ring(factors.front());
        for (std::size_t i = 1; i < factors.size(); ++i) {
            RingPtr next = parse_ring(factors[i]);
            if (out->size() * next->size() > kMaxCarrierSize) bad("product ring exceeds 64 elements");
            out = product_ring(out, next);
        }
        return out;
    }
    if (kind == "quotient") {
        RingPtr base = parse_ring(field(j, "ring"));
        return quotient_ring(base, IdealSet::make(base, element_list(field(j, "ideal"), base->size(), "ideal"))).ring;
    }
    if (kind == "tables") {
        const auto& add = field(j, "add");
        if (!add.is_array() || add.empty() || add.size() > kMaxCarrierSize) bad("tables ring needs 1..64 rows");
        const std::size_t n = add.size();
        const std::string name = j.value("name", "R" + std::to_string(n));
        return FiniteRing::from_tables(n, flat_table(add, n, n, n, "add"), flat_table(field(j, "mul"), n, n, n, "mul"),
                                       j.value("zero", Element{0}), j.value("one", Element{1}), name);
    }
    bad("unknown ring kind '" + kind + "'");
}

ModulePtr parse_module(const json& j, const RingPtr& ring) {
    auto regular = regular_module(ring);
    if (j.is_null()) return regular;
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "regular") return regular;
    if (kind == "quotient") {
        const json& sub = j.contains("submodule") ? j.at("submodule") : field(j, "ideal");
        return quotient_module(regular, element_list(sub, regular->size(), "submodule")).module;
    }
    if (kind == "tables") {
        const auto& add = field(j, "add");
        if (!add.is_array() || add.empty() || add.size() > kMaxCarrierSize) bad("tables module needs 1..64 rows");
        const std::size_t n = add.size();
        return FiniteModule::from_tables(ring, n, flat_table(add, n, n, n, "add"), j.value("zero", Element{0}),
                                         flat_table(field(j, "action"), ring->size(), n, n, "action"),
                                         j.value("name", "M" + std::to_string(n)));
    }
    bad("unknown module kind '" + kind + "'");
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Library errors from inconsistent content become parse errors; the message keeps the cause.
template <class F>
auto as_parse_error(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::parse_error) throw;
        bad(e.what());
    } catch (const json::exception& e) {
        bad(e.what());
    }
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
    const json doc = parse_json(text);
    return as_parse_error([&] {
        InstanceSpec spec;
        spec.ring = parse_ring(field(doc, "ring"));
        spec.module = parse_module(doc.contains("module") ? doc.at("module") : json(), spec.ring);
        if (doc.contains("mulset"))
            spec.mulset = MultiplicativeSet::make(spec.ring, element_list(doc.at("mulset"), spec.ring->size(), "mulset"));
        if (doc.contains("ideal"))
            spec.ideal = IdealSet::make(spec.ring, element_list(doc.at("ideal"), spec.ring->size(), "ideal"));
        if (doc.contains("submodules"))
            for (const auto& s : doc.at("submodules"))
                spec.submodules.push_back(
                    Submodule::make(spec.module, element_list(s, spec.module->size(), "submodule")));
        return spec;
    });
}

InstanceSpec load_instance(const std::string& path) { return parse_instance(read_file(path)); }

CorpusConfig parse_corpus(const std::string& text) {
    const json doc = parse_json(text);
    return as_parse_error([&] {
        CorpusConfig c;
        c.name = doc.value("name", "file");
        const auto& rings = field(doc, "rings");
        if (!rings.is_array()) bad("rings must be a list");
        for (const auto& r : rings) c.rings.push_back(parse_ring(r));
        c.include_quotients = doc.value("quotients", true);
        c.max_module_size = doc.value("max_module_size", c.max_module_size);
        return c;
    });
}

CorpusConfig load_corpus(const std::string& path) { return parse_corpus(read_file(path)); }

}  // namespace locmod
