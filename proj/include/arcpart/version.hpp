#pragma once

namespace arcpart {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace arcpart
