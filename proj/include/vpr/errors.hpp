#pragma once

#include <stdexcept>
#include <string>

namespace vpr {

/// Bad input from the user: malformed files, mismatched kinds, parameters
/// out of range. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Failure while doing otherwise valid work (I/O errors, broken pipeline
/// state). Maps to CLI exit code 2.
class PipelineError : public std::runtime_error {
public:
    explicit PipelineError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vpr
