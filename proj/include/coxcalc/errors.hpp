#pragma once
#include <stdexcept>
#include <string>

namespace coxcalc {

// Input parses but does not match the expected document structure.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured size limit.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The presentation is outside the supported classes (free or trinomial chain).
struct UnsupportedRing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A query point lies outside the support of the fan it is asked against.
struct OutsideSupport : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two computations that must agree by theory came out different; indicates a
// bug or corrupt input data, not a user error.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// A requested ray insertion does not carry the relation along as a prime
// transform, or its verification failed.
struct NotAdmissible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace coxcalc
