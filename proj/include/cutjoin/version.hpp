#pragma once

namespace cutjoin {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cutjoin
