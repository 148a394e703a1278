#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "locmod/report.hpp"

namespace locmod::cli {

enum class Command { explore, localize, verify, search };

struct CliConfig {
    Command command = Command::explore;
    std::string instance_path;
    /// Corpus name ("standard", "z6", "small") or path to a corpus file.
    std::string corpus = "standard";
    std::string prop = "all";
    std::string out_path;
    ReportFormat format = ReportFormat::text;
    std::size_t max_module_size = 36;
    unsigned jobs = 1;
    /// Print element labels (residues, pairs, fractions) instead of indices.
    bool labels = false;
    bool timing = true;
    /// Overrides the instance file's multiplicative set for `localize`.
    std::optional<std::string> mulset;
};

struct CommandResult {
    int exit_code = 0;
    std::string body;
};

CommandResult cmd_explore(const CliConfig& config);
CommandResult cmd_localize(const CliConfig& config);
/// Exit code 1 when any non-informational proposition reports a violation.
CommandResult cmd_verify(const CliConfig& config);
/// Always exit code 0; findings go into the report.
CommandResult cmd_search(const CliConfig& config);

/// Resolves a corpus selector (name or file path) and applies the config caps.
CorpusConfig resolve_corpus(const CliConfig& config);

}  // namespace locmod::cli
