#pragma once

namespace gammalat {

inline constexpr const char* kVersion = "0.3.0";

}  // namespace gammalat
