#pragma once

#include <stdexcept>
#include <string>

namespace csecs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

/// Parameters violate a documented precondition (t² + r² ≠ 1, negative order, ...).
class InvalidParams : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "InvalidParams"; }
};

/// The state vanishes identically (zero norm) or a denominator collapses.
class DegenerateState : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DegenerateState"; }
};

/// Fock cutoff too small for the requested amplitude.
class TruncationError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "TruncationError"; }
};

/// A creation step would push amplitude past the end of a Fock vector.
class HeadroomError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "HeadroomError"; }
};

class ConvergenceError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ConvergenceError"; }
};

/// A closed form was requested outside the orders it covers.
class UnsupportedOrder : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "UnsupportedOrder"; }
};

class InvalidSpec : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "InvalidSpec"; }
};

}  // namespace csecs
