#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nv {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two values of different arity were mixed in one operation.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// A construction required incomparable addresses but got comparable ones.
class NotIncomparable : public Error {
public:
    using Error::Error;
};

/// A dimension index lies outside its permitted range.
class BadDimension : public Error {
public:
    using Error::Error;
};

/// A support address violates the length preconditions of a builder.
class BadSupportAddress : public Error {
public:
    using Error::Error;
};

/// A cell list is not a partition of the n-dimensional Cantor space.
class NotAPartition : public Error {
public:
    enum class Reason { overlap, gap };

    NotAPartition(Reason r, const std::string& what) : Error(what), reason(r) {}

    Reason reason;
};

/// An index map handed to perm_to_element is not a bijection.
class NotABijection : public Error {
public:
    using Error::Error;
};

/// Generator parameters outside the defined ranges.
class BadParameters : public Error {
public:
    using Error::Error;
};

/// Word capacity exceeded (coordinates are limited to 56 bits).
class WordOverflow : public Error {
public:
    using Error::Error;
};

/// Text did not parse; carries the byte offset of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}

    std::size_t position;
};

} // namespace nv
