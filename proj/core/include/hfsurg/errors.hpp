#pragma once

#include <stdexcept>
#include <string>

namespace hfsurg {

// exit code 2
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& m) : std::runtime_error(m) {}
};

// exit code 3: truncation order too small, caller must raise N
struct stabilization_error : std::runtime_error {
    explicit stabilization_error(const std::string& m) : std::runtime_error(m) {}
};

// exit code 4: internal invariant violated
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& m) : std::runtime_error(m) {}
};

inline void require(bool cond, const char* msg) {
    if (!cond) throw invariant_error(msg);
}

} // namespace hfsurg
