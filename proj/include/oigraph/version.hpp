#pragma once

namespace oigraph {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace oigraph
