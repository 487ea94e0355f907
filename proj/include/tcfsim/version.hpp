#pragma once

namespace tcfsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tcfsim
