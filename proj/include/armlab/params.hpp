#pragma once

#include <stdexcept>

namespace armlab::params {

// SLE/CLE parameter in the simple-loop regime (8/3, 4]. Validated strictly:
// the lower endpoint corresponds to zero soup intensity, which is rejected
// rather than silently producing an empty ensemble.
struct Kappa {
    double value;

    explicit Kappa(double v) : value(v) {
        if (!(v > 8.0 / 3.0) || !(v <= 4.0))
            throw std::domain_error("kappa must lie in (8/3, 4]");
    }
};

// Loop-soup intensity. Zero is admitted as the degenerate empty-soup case;
// the CLE correspondence itself only uses (0, 1/2].
struct Intensity {
    double value;

    explicit Intensity(double v) : value(v) {
        if (!(v >= 0.0) || !(v <= 0.5))
            throw std::domain_error("intensity must lie in [0, 1/2]");
    }
};

enum class ExponentKind {
    Interior2j,        // 2j arms at an interior point
    Boundary2j,        // 2j arms at a boundary point
    Boundary2jMinus1,  // 2j-1 arms at a boundary point
};

// Soup intensity matching a given kappa: (3k-8)(6-k)/(4k).
// Strictly increasing on (8/3, 4], equal to 1/2 at kappa = 4.
Intensity alpha_from_kappa(Kappa k);

// Closed-form crossing exponents:
//   interior 2j arms:  (16 j^2 - (k-4)^2) / (8k)
//   boundary 2j arms:  j (4j + 4 - k) / k
//   boundary 2j-1:     (j-1)(4j + 4 - k) / k
double predicted_exponent(ExponentKind kind, int j, Kappa k);

}  // namespace armlab::params
