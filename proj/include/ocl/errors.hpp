#pragma once

#include <stdexcept>
#include <string>

namespace ocl {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Malformed input: bad edges, non-permutation orders, dangling predictions, bad JSON.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message) : Error(message) {}
};

/// Exact computation refused because the instance exceeds the configured size limit.
class OracleLimitError : public Error {
public:
    explicit OracleLimitError(const std::string& message) : Error(message) {}
};

/// An online colorer returned a color already held by a revealed neighbor.
class ImproperStepError : public Error {
public:
    ImproperStepError(const std::string& message, int vertex, int neighbor)
        : Error(message), vertex(vertex), neighbor(neighbor) {}

    int vertex;
    int neighbor;
};

} // namespace ocl
