#pragma once

#include <stdexcept>
#include <string>

namespace rootpoly {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition-style failures. The CLI maps these to exit code 2.
struct NotPrime : Error {
    using Error::Error;
};
struct ModulusMismatch : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct NonResidue : Error {
    using Error::Error;
};
struct WrongResidueClass : Error {
    using Error::Error;
};
struct InvalidOrder : Error {
    using Error::Error;
};
struct DuplicateNode : Error {
    using Error::Error;
};
struct EmptyInput : Error {
    using Error::Error;
};
struct HypothesisViolated : Error {
    using Error::Error;
};

// Input text that failed to parse. CLI exit code 3.
struct ParseError : Error {
    using Error::Error;
};

// Enumeration would exceed the configured assignment cap. CLI exit code 4.
struct SearchSpaceTooLarge : Error {
    using Error::Error;
};

// A checked mathematical invariant failed. Must never happen on valid input;
// reaching this means the implementation (not the caller) is wrong. CLI exit code 5.
struct TheoremViolation : Error {
    using Error::Error;
};

} // namespace rootpoly
