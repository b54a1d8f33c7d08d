#pragma once

#include <stdexcept>
#include <string>

namespace pathdist {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input: malformed edge lists, out-of-range ids, unusable arguments.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Source and target lie in different components.
class DisconnectedError : public Error {
public:
    explicit DisconnectedError(const std::string& what) : Error(what) {}
};

} // namespace pathdist
