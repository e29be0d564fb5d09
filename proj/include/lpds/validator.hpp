#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpds/dataset.hpp"
#include "lpds/diagnostics.hpp"

namespace lpds {

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;  // sorted by (path, code, message)
  int error_count = 0;
  int warning_count = 0;
  int info_count = 0;
  struct TreeSummary {
    int participants = 0;
    int sessions = 0;
    int files = 0;
  } tree_summary;
  std::string profile_version;
  bool strict = false;

  bool is_valid() const { return error_count == 0; }
};

// Applies the structural and naming rule set to a scanned tree. With
// strict=true every warning is promoted to an error; codes are unchanged
// and the total finding count stays the same.
ValidationReport validate_tree(const ProjectTree& tree, bool strict = false);

enum class ReportFormat { Text, Json };

std::optional<ReportFormat> parse_report_format(std::string_view s);

// Deterministic rendering: byte-identical across repeated runs on the
// same tree. Text is one line per diagnostic plus summary lines; JSON has
// a stable field order, UTF-8, LF line endings.
std::string render_report(const ValidationReport& report, ReportFormat format);

}  // namespace lpds
