#pragma once

#include <stdexcept>
#include <string>

namespace ffh {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(long p) : Error("not a prime: " + std::to_string(p)) {}
};

struct BoundExceeded : Error {
    explicit BoundExceeded(const std::string& what) : Error("bound exceeded: " + what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct LogOfZero : Error {
    LogOfZero() : Error("discrete log of zero") {}
};

struct ConductorMismatch : Error {
    ConductorMismatch(unsigned a, unsigned b)
        : Error("conductor mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct NotDivisible : Error {
    NotDivisible(unsigned m, unsigned n)
        : Error("conductor " + std::to_string(m) + " does not divide " + std::to_string(n)) {}
};

struct EvenCharacteristic : Error {
    explicit EvenCharacteristic(long q)
        : Error("q = " + std::to_string(q) + " has even characteristic") {}
};

struct ZeroArgument : Error {
    ZeroArgument() : Error("argument must be nonzero") {}
};

struct NotOddPrime : Error {
    explicit NotOddPrime(long p) : Error("not an odd prime: " + std::to_string(p)) {}
};

struct UnknownTheorem : Error {
    explicit UnknownTheorem(const std::string& id) : Error("unknown theorem: " + id) {}
};

}  // namespace ffh
