#pragma once

#include <stdexcept>
#include <string>

namespace eulertop {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad input: violated preconditions that the caller could have checked
/// (non-physical inertia, malformed axes, out-of-range energies, ...).
/// The CLI maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};

/// Runtime numerical failure: a computation that was set up correctly but
/// could not be completed (no periodic return, blown-up step, open orbit).
/// The CLI maps these to exit code 3.
struct NumericError : Error {
    using Error::Error;
};

struct NonUnitAxis final : InputError {
    NonUnitAxis() : InputError("rotation axis is not a unit vector") {}
    explicit NonUnitAxis(const std::string& what) : InputError(what) {}
};

struct InvalidRotation final : InputError {
    explicit InvalidRotation(const std::string& what) : InputError(what) {}
};

struct AxisNotFixed final : NumericError {
    explicit AxisNotFixed(const std::string& what) : NumericError(what) {}
};

struct DegeneratePolygon final : InputError {
    explicit DegeneratePolygon(const std::string& what) : InputError(what) {}
};

struct AntipodalEdge final : InputError {
    explicit AntipodalEdge(const std::string& what) : InputError(what) {}
};

struct InvalidInertia final : InputError {
    explicit InvalidInertia(const std::string& what) : InputError(what) {}
};

struct DegenerateInertia final : InputError {
    explicit DegenerateInertia(const std::string& what) : InputError(what) {}
};

struct EnergyOutOfRange final : InputError {
    explicit EnergyOutOfRange(const std::string& what) : InputError(what) {}
};

struct BasisNotOrthonormal final : InputError {
    explicit BasisNotOrthonormal(const std::string& what) : InputError(what) {}
};

struct NonTangentSeed final : InputError {
    explicit NonTangentSeed(const std::string& what) : InputError(what) {}
};

struct StepTooLarge final : NumericError {
    explicit StepTooLarge(const std::string& what) : NumericError(what) {}
};

struct Equilibrium final : NumericError {
    explicit Equilibrium(const std::string& what) : NumericError(what) {}
};

struct SeparatrixTimeout final : NumericError {
    explicit SeparatrixTimeout(const std::string& what) : NumericError(what) {}
};

struct NumericalFailure final : NumericError {
    explicit NumericalFailure(const std::string& what) : NumericError(what) {}
};

struct OpenOrbit final : NumericError {
    explicit OpenOrbit(const std::string& what) : NumericError(what) {}
};

struct OpenCurve final : NumericError {
    explicit OpenCurve(const std::string& what) : NumericError(what) {}
};

}  // namespace eulertop
