#pragma once

namespace sigmat {

inline constexpr const char* kEngineName = "sigmat";
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace sigmat
