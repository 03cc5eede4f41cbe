#pragma once

#include <stdexcept>
#include <string>

namespace rr {

// Base class so callers can catch all domain errors at once (the CLI maps
// these to exit code 1, parse errors to exit code 2).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptySemigroup : Error {
    EmptySemigroup() : Error("semigroup needs at least one positive generator") {}
};

struct NotAMember : Error {
    explicit NotAMember(long long s)
        : Error("not a member of the semigroup: " + std::to_string(s)) {}
};

struct NoRepresentation : Error {
    NoRepresentation(long long s, long long l)
        : Error("no representation of " + std::to_string(s) +
                " with coefficient total " + std::to_string(l)) {}
};

struct AlphaOutOfRange : Error {
    AlphaOutOfRange() : Error("alpha must satisfy 0 <= alpha < 1") {}
};

struct ZeroIdeal : Error {
    ZeroIdeal() : Error("operation undefined for the zero ideal") {}
};

struct ZeroDivisor : Error {
    ZeroDivisor() : Error("colon by the zero ideal") {}
};

struct NotPrimary : Error {
    NotPrimary() : Error("ideal is not <x,y>-primary") {}
};

struct WrongClass : Error {
    explicit WrongClass(const std::string& what_op)
        : Error(what_op + ": ideal class not supported") {}
};

struct NotCertified : Error {
    NotCertified() : Error("closure result is not certified") {}
};

struct BadBound : Error {
    explicit BadBound(long long l)
        : Error("max_l must be >= 1, got " + std::to_string(l)) {}
};

struct BadParameters : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace rr
