#pragma once

namespace surrogen {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace surrogen
