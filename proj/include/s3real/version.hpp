#pragma once

namespace s3real {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace s3real
