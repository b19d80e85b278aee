#pragma once

namespace trislit {

inline constexpr const char* tool_name = "trislit";
inline constexpr const char* tool_version = "0.1.0";

}  // namespace trislit
