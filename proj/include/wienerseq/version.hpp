#pragma once

namespace wienerseq {

inline constexpr const char* kToolName = "wienerseq";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace wienerseq
