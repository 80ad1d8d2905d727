#include "armlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace armlab::rng {

double Stream::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_unit() - 1.0;
        v = 2.0 * next_unit() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

double exp_negative(double x) {
    if (x < 0.0) throw std::invalid_argument("exp_negative: x must be >= 0");
    if (x > 746.0) return 0.0;  // below double denormal range anyway
    // Range-reduce to y <= 0.5, Taylor for e^y, then repeated squaring of 1/e^y.
    int m = 0;
    double y = x;
    while (y > 0.5) {
        y *= 0.5;
        ++m;
    }
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 20; ++k) {
        term = term * y / static_cast<double>(k);
        sum += term;
    }
    double r = 1.0 / sum;  // e^{-y}
    for (int i = 0; i < m; ++i) r *= r;
    return r;
}

int poisson_with_p0(Stream& rng, double mean, double p0) {
    const double u = rng.next_unit();
    if (u < p0) return 0;  // fast path: empty class
    double p = p0, cum = p0;
    int k = 0;
    while (u >= cum) {
        ++k;
        p *= mean / static_cast<double>(k);
        cum += p;
        if (k > 10000000) throw std::runtime_error("poisson: inversion failed to terminate");
    }
    return k;
}

int poisson(Stream& rng, double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("poisson: mean must be >= 0");
    if (mean == 0.0) return 0;
    if (mean >= 10.0) {
        const double half = mean * 0.5;
        return poisson(rng, half) + poisson(rng, mean - half);
    }
    return poisson_with_p0(rng, mean, exp_negative(mean));
}

}  // namespace armlab::rng
