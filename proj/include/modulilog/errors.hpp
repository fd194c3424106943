#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace modulilog {

// Error codes used across the library:
//   precondition, host_mismatch, duplicate_member, internal_consistency,
//   interior_image, divergent_series, budget_exhausted, path_invalid,
//   clearance, eps_too_large, domain
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

} // namespace modulilog
