#include <sstream>

#include "locmod/element_set.hpp"
#include "locmod/error.hpp"

namespace locmod {

std::string ElementSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Element e : *this) {
        if (!first) os << ',';
        first = false;
        os << e;
    }
    os << '}';
    return os.str();
}

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::invalid_ideal: return "invalid-ideal";
        case ErrorKind::not_a_submodule: return "not-a-submodule";
        case ErrorKind::mixed_modules: return "mixed-modules";
        case ErrorKind::empty_set: return "empty-set";
        case ErrorKind::not_proper: return "not-proper";
        case ErrorKind::cap_exceeded: return "cap-exceeded";
        case ErrorKind::degenerate_input: return "degenerate-input";
        case ErrorKind::internal_inconsistency: return "internal-inconsistency";
        case ErrorKind::unknown_proposition: return "unknown-proposition";
        case ErrorKind::signature_mismatch: return "signature-mismatch";
        case ErrorKind::parse_error: return "parse-error";
    }
    return "unknown";
}

}  // namespace locmod
