#pragma once

namespace augur {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace augur
