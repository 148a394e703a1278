#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locmod/harness.hpp"
#include "locmod/module.hpp"
#include "locmod/ring.hpp"

namespace locmod {

/// Contents of an instance file.
///
///   {
///     "ring":   {"kind": "zn", "n": 6}
///             | {"kind": "product", "factors": [<ring>, <ring>, ...]}
///             | {"kind": "quotient", "ring": <ring>, "ideal": [0, 3]}
///             | {"kind": "tables", "name": "F4", "add": [[..]], "mul": [[..]], "zero": 0, "one": 1},
///     "module": {"kind": "regular"}
///             | {"kind": "quotient", "submodule": [0, 3]}
///             | {"kind": "tables", "name": "V", "add": [[..]], "action": [[..]], "zero": 0},
///     "mulset": [1, 5],
///     "ideal": [0, 3],
///     "submodules": [[0, 3], [0, 2, 4]]
///   }
///
/// Only "ring" is required; the module defaults to the regular one. For a
/// module over an infinite ring such as Z, give the finite ring R/ann(M)
/// and the image of the multiplicative set in it (Z acting on Z6 with
/// S = {-1, 1} becomes Z6 with S = {1, 5}).
struct InstanceSpec {
    RingPtr ring;
    ModulePtr module;
    std::optional<MultiplicativeSet> mulset;
    std::optional<IdealSet> ideal;
    std::vector<Submodule> submodules;
};

/// All parse and validation failures surface as Error{parse_error}.
InstanceSpec parse_instance(const std::string& text);
InstanceSpec load_instance(const std::string& path);

/// Corpus file: {"name": "mine", "rings": [<ring>, ...], "quotients": true,
/// "max_module_size": 36}.
CorpusConfig parse_corpus(const std::string& text);
CorpusConfig load_corpus(const std::string& path);

}  // namespace locmod
