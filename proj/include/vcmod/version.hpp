#pragma once

namespace vcmod {

inline constexpr const char* kVersion = "0.3.0";
inline constexpr const char* kToolName = "vcmod";

}  // namespace vcmod
