#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace heisim {

using Complex = std::complex<double>;

/// Tolerance knobs shared by every numerical check in the library.
/// Three tiers: expectation values, operator-level identities, and
/// identities that are exact up to floating-point roundoff.
struct Tolerances {
    double expectation = 1e-9;
    double operator_identity = 1e-10;
    double exact = 1e-12;
};

/// Largest Fock-space dimension accepted by default.
inline constexpr std::int64_t kDefaultDimensionBound = 4096;

/// Thrown when two redundant computation paths disagree beyond tolerance
/// (descriptor path vs. conjugation oracle, gate synthesis residuals, ...).
class consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace heisim
