#pragma once

#include <stdexcept>
#include <string>

namespace gl11 {

// Raised when an input violates a documented precondition (bad weight, bad
// word, non-generic color, ...). The CLI maps it to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exact computation is requested that the chosen backend
// cannot represent, e.g. q^z outside the cyclotomic conductor.
class BackendError : public std::runtime_error {
public:
    explicit BackendError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gl11
