#pragma once

#include <stdexcept>
#include <string>

namespace cbn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input or violated precondition (unknown variable, overlapping sets, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A dense representation would exceed a configured size limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// The standard chain-rule semantics was requested for a graph with cycles.
class CyclicGraphError : public Error {
public:
    using Error::Error;
};

class NotACutsetError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// No algorithm is available for the requested case (e.g. intersecting
/// infinite families of distributions).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace cbn
