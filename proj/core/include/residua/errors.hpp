#pragma once

#include <stdexcept>
#include <string>

namespace residua {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A table set fails a ring (or algebra) axiom; the message names the axiom
/// and the witnessing elements.
class AxiomViolation : public Error {
public:
    using Error::Error;
};

class InvalidIdeal : public Error {
public:
    using Error::Error;
};

/// Raised by predicates that need 1 != 0.
class ZeroRing : public Error {
public:
    ZeroRing() : Error("operation requires a nonzero ring") {}
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZeroPoly : public Error {
public:
    DivisionByZeroPoly() : Error("division by the zero polynomial") {}
};

class DegreeZero : public Error {
public:
    DegreeZero() : Error("polynomial of degree < 1") {}
};

class NotPrimePower : public Error {
public:
    explicit NotPrimePower(unsigned long q) : Error(std::to_string(q) + " is not a prime power") {}
};

class PreconditionUnmet : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class InvalidTriple : public Error {
public:
    using Error::Error;
};

class UnknownSuite : public Error {
public:
    explicit UnknownSuite(const std::string& name) : Error("unknown suite: " + name) {}
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace residua
