#pragma once

namespace lpds {

inline constexpr const char* kToolName = "lpds";
inline constexpr const char* kToolVersion = "0.1.0";

// Version of the directory/naming convention this toolkit implements.
inline constexpr const char* kLpdsVersion = "1.0";

// Version string of the validator rule profile, recorded in reports.
inline constexpr const char* kProfileVersion = "lpds-1.0";

}  // namespace lpds
