#ifndef SUSYOSC_ERRORS_HPP
#define SUSYOSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace susyosc {

// Base class for all numerical failures raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series did not reach the requested tolerance within the term budget.
struct NonConvergentError : Error {
    using Error::Error;
};

// A hypergeometric lower parameter hit a non-positive integer before the
// series terminated.
struct PoleError : Error {
    using Error::Error;
};

// Input outside the validity range of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Adaptive quadrature exhausted its refinement budget.
struct QuadratureError : Error {
    using Error::Error;
};

// Requested quantity would exceed double range (e.g. very high oscillator
// index).
struct OverflowError : Error {
    using Error::Error;
};

// Wronskian of the seed pair vanished at a sample point.
struct ZeroWronskianError : Error {
    using Error::Error;
};

// Attempt to build a transformed eigenstate at a level removed from the
// spectrum.
struct DeletedLevelError : Error {
    using Error::Error;
};

// Ladder/coherent operation mixing states of different invariant subspaces.
struct SubspaceMismatchError : Error {
    using Error::Error;
};

// Mandel Q requested at zero mean occupation number.
struct ZeroMeanOccupationError : Error {
    using Error::Error;
};

// Invalid run configuration (CLI layer).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace susyosc

#endif
