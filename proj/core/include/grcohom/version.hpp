#pragma once

namespace grcohom {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace grcohom
