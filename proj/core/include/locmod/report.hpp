#pragma once

#include <string>
#include <vector>

#include "locmod/harness.hpp"

namespace locmod {

/// Schema tag written at the top of every structured report.
inline constexpr const char* kReportSchema = "locmod.report/1";

enum class ReportFormat { text, structured };

struct RenderOptions {
    ReportFormat format = ReportFormat::text;
    /// Emit the "timing" section. It is the only part that varies between runs.
    bool include_timing = true;
};

std::string render_sweep_report(const std::vector<SweepReport>& reports, const std::string& corpus,
                                const RenderOptions& options = {});
std::string render_search_report(const SearchReport& report, const std::string& corpus,
                                 const RenderOptions& options = {});

}  // namespace locmod
