#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>

#include <Eigen/Dense>

namespace ordlip {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Absolute slack used for every distance comparison unless a caller overrides it.
inline constexpr double kDefaultTol = 1e-9;

namespace detail {

inline std::size_t env_size(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) {
        return fallback;
    }
    return static_cast<std::size_t>(value);
}

} // namespace detail

// Enumeration caps. The environment variables ORDLIP_MAX_TRIPLES and
// ORDLIP_MAX_GRID override the defaults.
inline std::size_t max_triples() { return detail::env_size("ORDLIP_MAX_TRIPLES", 1'000'000); }
inline std::size_t max_grid_size() { return detail::env_size("ORDLIP_MAX_GRID", 100'000); }

} // namespace ordlip
