/**
 * @file errors.hpp
 * @brief Exception types shared across the library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qhall {

/// Malformed or invalid user input (config files, class names, words).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured enumeration guard (dimension cap, word-length cap) was exceeded.
struct guard_exceeded : std::runtime_error {
    explicit guard_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two values from incompatible contexts (different q, different quiver, different word).
struct context_mismatch : std::logic_error {
    explicit context_mismatch(const std::string& msg) : std::logic_error(msg) {}
};

/// An internal self-check failed; indicates a bug, not bad input.
struct validation_error : std::logic_error {
    explicit validation_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace qhall
