#pragma once

#include <stdexcept>
#include <string>

namespace starlike {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSeries : public Error {
public:
    using Error::Error;
};

// |c0| below the reciprocal threshold.
class ZeroConstantTerm : public Error {
public:
    using Error::Error;
};

// Complex powers need c0 == 1 so that the principal branch is forced.
class NonUnitConstantTerm : public Error {
public:
    using Error::Error;
};

// A series does not satisfy the normalisation of its function class.
class MembershipError : public Error {
public:
    using Error::Error;
};

class GateViolation : public Error {
public:
    using Error::Error;
};

class ZeroMu : public GateViolation {
public:
    ZeroMu() : GateViolation("mu must be nonzero") {}
};

// (c - mu) + k == 0 for some 1 <= k <= N.
class Resonance : public Error {
public:
    using Error::Error;
};

class ZeroOnCircle : public Error {
public:
    using Error::Error;
};

class DegenerateMaximum : public Error {
public:
    using Error::Error;
};

} // namespace starlike
