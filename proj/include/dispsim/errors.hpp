#ifndef DISPSIM_ERRORS_HPP
#define DISPSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dispsim {

/// Base class for all solver errors.
struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Density (or water depth) at or below the admissibility floor.
struct NonPositiveDepth : SimError {
    using SimError::SimError;
};

/// IKW mixture density too high: 1/rho <= Y1/rho10 leaves no gas volume.
struct NonPositiveBubbleVolume : SimError {
    using SimError::SimError;
};

/// Argument outside the closure's admissible domain (e.g. eta <= 0 for IKW).
struct DomainError : SimError {
    using SimError::SimError;
};

/// HLLC star-speed denominator vanished; caller falls back to Rusanov.
struct DegenerateStarState : SimError {
    using SimError::SimError;
};

/// CFL reduction produced no positive wave speed (or a non-finite state).
struct ZeroWaveSpeed : SimError {
    using SimError::SimError;
};

/// Dam-break plateau detector found no qualifying window.
struct PlateauNotFound : SimError {
    using SimError::SimError;
};

/// Field arrays with incompatible shapes.
struct ShapeMismatch : SimError {
    using SimError::SimError;
};

/// Eigenstructure verification failed on a sampled state.
struct HyperbolicityViolation : SimError {
    using SimError::SimError;
};

/// Bad scenario/config input.
struct ConfigError : SimError {
    using SimError::SimError;
};

} // namespace dispsim

#endif
