#pragma once

namespace cnmf {
inline constexpr const char* kVersion = "0.1.0";
}
