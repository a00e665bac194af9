#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace linclo {

// Invalid mathematical input. The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// A desk-scale guard tripped. The CLI maps these to exit code 3.
// Most guarded operations accept a force flag that bypasses the bound.
class GuardError : public std::runtime_error {
public:
    GuardError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace linclo
