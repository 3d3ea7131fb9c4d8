#pragma once

namespace tashkeel {

inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace tashkeel
