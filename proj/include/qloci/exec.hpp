#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "qloci/errors.hpp"

namespace qloci {

/// Selects the single-threaded reference kernel or its OpenMP counterpart.
/// Both produce identical results.
enum class Exec { serial, parallel };

/// Default enumeration ceiling shared by the orbit search and the oracle.
inline constexpr std::uint64_t kDefaultGuard = std::uint64_t{1} << 20;

/// kDefaultGuard, or the value of QLOCI_GUARD when set.
inline std::uint64_t default_guard() {
  const char* env = std::getenv("QLOCI_GUARD");
  if (env == nullptr || *env == '\0') return kDefaultGuard;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("QLOCI_GUARD must be a positive integer, got '" + std::string(env) + "'");
  }
}

}  // namespace qloci
