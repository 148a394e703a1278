#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace locmod {

enum class ErrorKind {
    invalid_parameter,
    invalid_ideal,
    not_a_submodule,
    mixed_modules,
    empty_set,
    not_proper,
    cap_exceeded,
    degenerate_input,
    internal_inconsistency,
    unknown_proposition,
    signature_mismatch,
    parse_error,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library; `kind()` says which
/// contract was broken.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace locmod
