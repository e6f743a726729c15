#pragma once

#include <stdexcept>
#include <string>

namespace clarke {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gram matrix of the joint-angle layout is (numerically) singular.
class DegenerateDesign : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Malformed design file, via-point file or command-line value.
class ParseError : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

}  // namespace clarke
