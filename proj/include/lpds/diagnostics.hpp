#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpds {

enum class Severity { Info, Warning, Error };

std::string_view to_string(Severity s);

// Frozen diagnostic codes. Codes are stable identifiers for scripting;
// messages may evolve, codes may not. The code prefix fixes the base
// severity: E = error, W = warning, I = info.
namespace codes {
// Tree structure
inline constexpr const char* MissingParticipantsDir = "E001";
inline constexpr const char* BadParticipantDirName = "E002";
inline constexpr const char* NoTaskDir = "E003";
inline constexpr const char* BadSessionDirName = "E004";
// Filenames
inline constexpr const char* UnparseableName = "E010";
inline constexpr const char* PartLabelMismatch = "E011";
inline constexpr const char* SesLabelMismatch = "E012";
inline constexpr const char* SesEntityOutsideSession = "E013";
inline constexpr const char* InvalidEntityKey = "E014";
inline constexpr const char* DuplicateEntityKey = "E015";
inline constexpr const char* MandatoryEntityMissing = "E016";
inline constexpr const char* PartNotFirst = "E017";
inline constexpr const char* ProcessingEntityInRaw = "E018";
// Warnings
inline constexpr const char* EntityOrderDeviates = "W020";
inline constexpr const char* UnknownEntityKey = "W021";
inline constexpr const char* UnknownSuffix = "W022";
inline constexpr const char* MixedLongitudinal = "W023";
inline constexpr const char* SymlinkSkipped = "W024";
inline constexpr const char* UnexpectedFilePlacement = "W025";
inline constexpr const char* SubdirInTaskDir = "W026";
// Info
inline constexpr const char* MissingSidecar = "I030";
inline constexpr const char* SuffixAbsent = "I031";
}  // namespace codes

// Base severity implied by the code prefix. Strict validation promotes
// warnings to errors in the report without changing the code.
Severity severity_for_code(std::string_view code);

struct Diagnostic {
  std::string code;
  Severity severity;
  std::string path;  // relative to the project root; may be empty for name-only checks
  std::string message;
  std::optional<std::string> fix_hint;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

Diagnostic make_diagnostic(std::string_view code, std::string path, std::string message,
                           std::optional<std::string> fix_hint = std::nullopt);

// Report ordering: (path, code, message).
void sort_diagnostics(std::vector<Diagnostic>& diags);

}  // namespace lpds
