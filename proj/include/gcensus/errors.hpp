#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcensus {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class LoopEdge : public Error {
public:
    using Error::Error;
};

class SameVertex : public Error {
public:
    using Error::Error;
};

class SizeMismatch : public Error {
public:
    using Error::Error;
};

class Overflow : public Error {
public:
    using Error::Error;
};

// Input exceeds a documented size bound for the requested operation.
class TooLarge : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class Timeout : public Error {
public:
    using Error::Error;
};

class CertificateFailed : public Error {
public:
    using Error::Error;
};

// byte_offset points at the first offending byte of the input.
class MalformedGraph6 : public Error {
public:
    MalformedGraph6(const std::string& what, std::size_t byte_offset)
        : Error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset(byte_offset) {}

    std::size_t byte_offset;
};

}  // namespace gcensus
