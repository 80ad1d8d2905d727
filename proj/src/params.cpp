#include "armlab/params.hpp"

namespace armlab::params {

Intensity alpha_from_kappa(Kappa k) {
    const double v = k.value;
    return Intensity((3.0 * v - 8.0) * (6.0 - v) / (4.0 * v));
}

double predicted_exponent(ExponentKind kind, int j, Kappa k) {
    if (j < 1) throw std::domain_error("exponent index j must be >= 1");
    const double kp = k.value;
    const double dj = static_cast<double>(j);
    switch (kind) {
        case ExponentKind::Interior2j:
            return (16.0 * dj * dj - (kp - 4.0) * (kp - 4.0)) / (8.0 * kp);
        case ExponentKind::Boundary2j:
            return dj * (4.0 * dj + 4.0 - kp) / kp;
        case ExponentKind::Boundary2jMinus1:
            return (dj - 1.0) * (4.0 * dj + 4.0 - kp) / kp;
    }
    throw std::domain_error("unknown exponent kind");
}

}  // namespace armlab::params
