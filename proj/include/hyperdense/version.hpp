#pragma once

namespace hyperdense {
inline constexpr const char* kToolName = "hyperdense";
inline constexpr const char* kVersion = "0.1.0";
}
