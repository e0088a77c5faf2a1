#pragma once

namespace exo {

inline constexpr const char* kVersion = "0.1.0";

}
