#pragma once

#include <stdexcept>
#include <string>

namespace sumsetlab {

// Base for everything this library throws on contract violations.  Callers that
// need the CLI exit-code mapping catch the concrete types.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContextMismatch : Error {
    explicit ContextMismatch(const std::string& msg) : Error(msg) {}
};
struct Overflow : Error {
    explicit Overflow(const std::string& msg) : Error(msg) {}
};
struct Unsupported : Error {
    explicit Unsupported(const std::string& msg) : Error(msg) {}
};
struct EmptySet : Error {
    explicit EmptySet(const std::string& msg) : Error(msg) {}
};
struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& msg) : Error(msg) {}
};
struct BadConstant : Error {
    explicit BadConstant(const std::string& msg) : Error(msg) {}
};
struct BadParams : Error {
    explicit BadParams(const std::string& msg) : Error(msg) {}
};
struct NoBaseline : Error {
    explicit NoBaseline(const std::string& msg) : Error(msg) {}
};
struct NoPrimeFound : Error {
    explicit NoPrimeFound(const std::string& msg) : Error(msg) {}
};
struct NotSubset : Error {
    explicit NotSubset(const std::string& msg) : Error(msg) {}
};
struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& msg) : Error(msg) {}
};
// Thrown when a requested point configuration provably does not exist in the
// input set; carries the covering witness in the message.
struct Infeasible : Error {
    explicit Infeasible(const std::string& msg) : Error(msg) {}
};
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace sumsetlab
