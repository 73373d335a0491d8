#pragma once

#include <stdexcept>
#include <string>

namespace rootchar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// The caller handed in data that violates a documented precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    NotDivisible() : Error("not divisible") {}
};

class GroupTooLarge : public Error {
public:
    explicit GroupTooLarge(const std::string& what) : Error("group too large: " + what) {}
};

/// A result that would falsify the implementation (never the input).
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

}  // namespace rootchar
