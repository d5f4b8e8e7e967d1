#pragma once

#include <stdexcept>
#include <string>

namespace fano7 {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contraction pattern is not a perfect label-consistent matching.
struct InvalidPattern : Error {
    using Error::Error;
};

// line_through called with two equal points.
struct SamePoint : Error {
    using Error::Error;
};

// Octonion product of a point with itself (table diagonal is blank).
struct DiagonalUndefined : Error {
    using Error::Error;
};

// normalize() on the zero state.
struct ZeroState : Error {
    using Error::Error;
};

// A Fano incidence count deviates from the closed-form values.
struct StructureBroken : Error {
    using Error::Error;
};

// build_catalog without a calibration record.
struct CalibrationMissing : Error {
    using Error::Error;
};

// No sign assignment satisfies the calibration oracles.
struct CalibrationFailed : Error {
    using Error::Error;
};

// The two printed eigenvalue forms disagree (implementation bug).
struct FormMismatch : Error {
    using Error::Error;
};

// Amplitudes are genuinely complex where a real (rebit) tensor is required.
struct NotRebit : Error {
    using Error::Error;
};

// A reduced state populates a line not through its apex.
struct WrongApex : Error {
    using Error::Error;
};

// A point permutation that does not carry lines to lines.
struct NotAutomorphism : Error {
    using Error::Error;
};

// random_sl2 exhausted its redraw budget on near-singular matrices.
struct Degenerate : Error {
    using Error::Error;
};

// An invariance check exceeded its tolerance; message names the sample seed.
struct InvarianceViolated : Error {
    using Error::Error;
};

// Malformed state file.
struct StateFileError : Error {
    using Error::Error;
};

}  // namespace fano7
