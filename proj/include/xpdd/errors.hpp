#ifndef XPDD_ERRORS_HPP
#define XPDD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xpdd {

// Base class for everything the toolkit can throw. The CLI maps ConfigError
// to exit code 2 and any other Error to exit code 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// spin_model
struct ZeroFrequency : Error { using Error::Error; };
struct InsufficientSites : Error { using Error::Error; };
struct UnknownNucleus : Error { using Error::Error; };

// pulse_shape
struct EvenHarmonic : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NoRoom : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };
struct BoundViolation : Error { using Error::Error; };
struct EdgeSingularity : Error { using Error::Error; };

// sequence / dynamics
struct ScheduleOverlap : Error { using Error::Error; };
struct StepTooLarge : Error { using Error::Error; };

}  // namespace xpdd

#endif
