#pragma once

namespace permorb {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace permorb
