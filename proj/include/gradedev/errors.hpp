#pragma once

#include <stdexcept>
#include <string>

namespace gradedev {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user input (parse errors, violated preconditions on inputs). CLI exit 2.
struct InputError : Error {
    using Error::Error;
};

/// A configurable size cap was exceeded. CLI exit 3.
struct ResourceCap : Error {
    using Error::Error;
};

// --- polynomial / series arithmetic ---
struct DenominatorVanishesAtZero : InputError { using InputError::InputError; };
struct ConstantTermNotOne : InputError { using InputError::InputError; };
struct InexactDivision : Error { using Error::Error; };

// --- monomial ideals ---
struct GeneratorDegreeBelowTwo : InputError { using InputError::InputError; };
struct MacaulayViolation : Error { using Error::Error; };

// --- Betti numbers ---
struct LatticeTooLarge : ResourceCap { using ResourceCap::ResourceCap; };
struct NotStable : InputError { using InputError::InputError; };

// --- Poincare series and deviations ---
struct NotAPoincareSeries : InputError { using InputError::InputError; };
struct OddSignPattern : NotAPoincareSeries { using NotAPoincareSeries::NotAPoincareSeries; };
struct NonIntegralDeviation : Error { using Error::Error; };
struct NegativeDeviation : Error { using Error::Error; };
struct RigidityViolation : Error { using Error::Error; };
struct NoCertificate : Error { using Error::Error; };

// --- graphs ---
struct TooManyVertices : ResourceCap { using ResourceCap::ResourceCap; };
struct DegreeMismatch : InputError { using InputError::InputError; };
struct IndexOutOfRange : InputError { using InputError::InputError; };

// --- asymptotics ---
struct HypothesisViolated : InputError { using InputError::InputError; };
struct MinModulusNotCertified : Error { using Error::Error; };

} // namespace gradedev
