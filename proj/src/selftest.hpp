#pragma once

#include <cstdint>

#include <json.hpp>

namespace fpreg {

inline constexpr std::uint64_t kSelftestDefaultSeed = 20240601;

// Oracle-agreement suite at small p / N. The result lists one entry per check
// with its observed error and tolerance; "passed" is the conjunction.
nlohmann::json run_selftest(std::uint64_t seed = kSelftestDefaultSeed);

}  // namespace fpreg
