#pragma once

namespace catoni {

inline constexpr const char* kVersion = "catoni-v0.1.0";

}  // namespace catoni
