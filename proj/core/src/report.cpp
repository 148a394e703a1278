#include "locmod/report.hpp"

#include <sstream>

#include "json.hpp"

namespace locmod {

namespace {

using nlohmann::ordered_json;

ordered_json violations_json(const std::vector<Violation>& list) {
    ordered_json out = ordered_json::array();
    for (const auto& v : list) out.push_back({{"instance", v.key}, {"detail", v.detail}});
    return out;
}

std::string format_ms(double ms) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << ms;
    return os.str();
}

}  // namespace

std::string render_sweep_report(const std::vector<SweepReport>& reports, const std::string& corpus,
                                const RenderOptions& options) {
    std::size_t failing = 0;
    for (const auto& r : reports)
        if (!r.informational) failing += r.violations.size();

    if (options.format == ReportFormat::structured) {
        ordered_json doc;
        doc["schema"] = kReportSchema;
        doc["command"] = "verify";
        doc["corpus"] = corpus;
        doc["results"] = ordered_json::array();
        for (const auto& r : reports)
            doc["results"].push_back({{"proposition", r.proposition},
                                      {"statement", r.statement},
                                      {"informational", r.informational},
                                      {"instances_examined", r.instances_examined},
                                      {"hypothesis_satisfied", r.hypothesis_satisfied},
                                      {"skipped", r.skipped},
                                      {"violations", violations_json(r.violations)}});
        doc["total_violations"] = failing;
        if (options.include_timing) {
            ordered_json timing;
            for (const auto& r : reports) timing[r.proposition] = r.elapsed_ms;
            doc["timing"] = {{"elapsed_ms", timing}};
        }
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "corpus: " << corpus << "\n";
    for (const auto& r : reports) {
        os << r.proposition << (r.informational ? " [informational]" : "") << ": " << r.statement << "\n"
           << "  examined " << r.instances_examined << ", hypothesis " << r.hypothesis_satisfied << ", skipped "
           << r.skipped << ", violations " << r.violations.size() << "\n";
        for (const auto& v : r.violations) os << "    " << v.key << "  " << v.detail << "\n";
    }
    os << "total violations: " << failing << "\n";
    if (options.include_timing) {
        os << "timing:\n";
        for (const auto& r : reports) os << "  " << r.proposition << " " << format_ms(r.elapsed_ms) << " ms\n";
    }
    return os.str();
}

std::string render_search_report(const SearchReport& report, const std::string& corpus,
                                 const RenderOptions& options) {
    if (options.format == ReportFormat::structured) {
        ordered_json doc;
        doc["schema"] = kReportSchema;
        doc["command"] = "search";
        doc["corpus"] = corpus;
        doc["proposition"] = report.proposition;
        doc["instances_examined"] = report.instances_examined;
        doc["findings"] = violations_json(report.findings);
        if (options.include_timing) doc["timing"] = {{"elapsed_ms", report.elapsed_ms}};
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "corpus: " << corpus << "\n"
       << report.proposition << ": examined " << report.instances_examined << ", findings "
       << report.findings.size() << "\n";
    for (const auto& f : report.findings) os << "  " << f.key << "  " << f.detail << "\n";
    if (options.include_timing) os << "timing:\n  " << format_ms(report.elapsed_ms) << " ms\n";
    return os.str();
}

}  // namespace locmod
