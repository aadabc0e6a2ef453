#pragma once

namespace wsn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wsn
