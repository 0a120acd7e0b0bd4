#pragma once

namespace ergoflow {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ergoflow
