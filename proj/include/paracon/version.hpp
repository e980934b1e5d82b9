#pragma once

namespace paracon {

inline constexpr const char* kToolName = "paracon";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace paracon
