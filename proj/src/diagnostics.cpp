#include "lpds/diagnostics.hpp"

#include <algorithm>
#include <tuple>

namespace lpds {

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Info: return "INFO";
    case Severity::Warning: return "WARNING";
    case Severity::Error: return "ERROR";
  }
  return "ERROR";
}

Severity severity_for_code(std::string_view code) {
  if (!code.empty()) {
    switch (code.front()) {
      case 'E': return Severity::Error;
      case 'W': return Severity::Warning;
      case 'I': return Severity::Info;
      default: break;
    }
  }
  return Severity::Error;
}

Diagnostic make_diagnostic(std::string_view code, std::string path, std::string message,
                           std::optional<std::string> fix_hint) {
  Diagnostic d;
  d.code = std::string(code);
  d.severity = severity_for_code(code);
  d.path = std::move(path);
  d.message = std::move(message);
  d.fix_hint = std::move(fix_hint);
  return d;
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.path, a.code, a.message) < std::tie(b.path, b.code, b.message);
  });
}

}  // namespace lpds
