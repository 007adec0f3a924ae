#pragma once

#include <stdexcept>
#include <string>

namespace childci {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural problems in a document: missing field, wrong type, bad closed-set value.
struct SchemaError : Error {
    using Error::Error;
};

// Time regression within a pointer's event sequence or a stroke.
struct MonotonicityError : Error {
    using Error::Error;
};

// Numeric value outside its contract (negative duration, test_id out of 1..6, ...).
struct RangeError : Error {
    using Error::Error;
};

// Scene config handed to an operation for the wrong test.
struct ConfigMismatch : Error {
    using Error::Error;
};

struct EmptySequence : Error {
    using Error::Error;
};

// Trace whose bounding box collapses to a single point.
struct DegenerateTrace : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Region mask violating area[R0..R4] > 0 or carrying an unknown label.
struct MaskInvariantError : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

struct UnknownChild : Error {
    using Error::Error;
};

}  // namespace childci
