#ifndef MAGICLAB_ERRORS_H
#define MAGICLAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace magiclab {

/// Two objects that must live in the same Hilbert space do not.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested construction is only implemented for prime (local) dimensions.
struct UnsupportedDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A phase assignment on an isotropic subset does not produce a rank-1 projector.
struct NotAProjector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A unitary failed to map a displacement operator onto the displacement basis.
struct NoMatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed state, set or catalog input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace magiclab

#endif
