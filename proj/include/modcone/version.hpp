#pragma once

namespace modcone {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace modcone
