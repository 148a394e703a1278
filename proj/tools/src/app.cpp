#include "locmod_cli/app.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "locmod/error.hpp"
#include "locmod_cli/commands.hpp"

namespace locmod::cli {

namespace {

void add_common(CLI::App* sub, CliConfig& c) {
    sub->add_option("--out", c.out_path, "Write the report to this file instead of stdout");
    sub->add_option("--format", c.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, ReportFormat>{{"text", ReportFormat::text}, {"structured", ReportFormat::structured}},
            CLI::ignore_case));
    sub->add_option("--max-module-size", c.max_module_size, "Largest module carrier to process")
        ->check(CLI::Range(1, 64));
}

void add_instance(CLI::App* sub, CliConfig& c) {
    sub->add_option("--instance", c.instance_path, "Instance file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_flag("--labels", c.labels, "Print element labels instead of indices");
}

void add_corpus(CLI::App* sub, CliConfig& c) {
    sub->add_option("--corpus", c.corpus, "standard | z6 | small | path to a corpus file");
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1, 256));
    sub->add_flag("!--no-timing", c.timing, "Omit the timing section");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Localization of finite modules: explore, localize, verify and search"};
    app.require_subcommand(1);
    CliConfig c;

    auto* explore = app.add_subcommand("explore", "Submodule lattice and property table of one instance");
    add_instance(explore, c);
    add_common(explore, c);

    auto* localize = app.add_subcommand("localize", "Fraction classes, canonical maps and round trips");
    add_instance(localize, c);
    add_common(localize, c);
    localize->add_option("--mulset", c.mulset, "Comma-separated multiplicative set, overrides the instance");

    auto* verify = app.add_subcommand("verify", "Sweep propositions over a corpus");
    verify->add_option("--prop", c.prop, "Proposition id, comma-separated ids, or all");
    add_corpus(verify, c);
    add_common(verify, c);

    auto* search = app.add_subcommand("search", "Instances where hypothesis and conclusion both fail");
    search->add_option("--prop", c.prop, "Proposition id")->required();
    add_corpus(search, c);
    add_common(search, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    CommandResult result;
    try {
        if (*explore) result = cmd_explore(c);
        else if (*localize) result = cmd_localize(c);
        else if (*verify) result = cmd_verify(c);
        else result = cmd_search(c);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (c.out_path.empty()) {
        out << result.body;
    } else {
        std::ofstream file(c.out_path);
        if (!file) {
            err << "error: cannot write '" << c.out_path << "'\n";
            return 2;
        }
        file << result.body;
    }
    return result.exit_code;
}

}  // namespace locmod::cli
