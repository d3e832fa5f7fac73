#pragma once

namespace cvt {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kGenerator = "cvteleport 0.1.0";

} // namespace cvt
