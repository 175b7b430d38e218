#pragma once

namespace lbcv {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace lbcv
