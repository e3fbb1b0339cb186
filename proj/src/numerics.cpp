#include "emm/numerics.hpp"

#include <cmath>
#include <limits>

#include "emm/errors.hpp"
#include "emm/kernels.hpp"

namespace emm {

namespace {
constexpr double kShift = 10.0;  // recur up to here, then asymptotic series
}

double digamma(double x) {
    if (!(x > 0.0)) throw numeric_error("digamma: argument must be positive");
    double acc = 0.0;
    while (x < kShift) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ ln x - 1/(2x) - sum B_2n / (2n x^2n)
    const double r = 1.0 / (x * x);
    double series = r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 -
                    r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
    return acc + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
    if (!(x > 0.0)) throw numeric_error("trigamma: argument must be positive");
    double acc = 0.0;
    while (x < kShift) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    double series = 1.0 + r * (1.0 / 6 - r * (1.0 / 30 - r * (1.0 / 42 - r * (1.0 / 30 -
                    r * (5.0 / 66 - r * (691.0 / 2730 - r * 7.0 / 6))))));
    return acc + 0.5 * r + series / x;
}

double tetragamma(double x) {
    if (!(x > 0.0)) throw numeric_error("tetragamma: argument must be positive");
    double acc = 0.0;
    while (x < kShift) {
        acc -= 2.0 / (x * x * x);
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    double even = r * r * (0.5 - r * (1.0 / 6 - r * (1.0 / 6 - r * (3.0 / 10 - r * 5.0 / 6))));
    return acc - (r + r / x + even);
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw numeric_error("log_gamma: argument must be positive");
    return std::lgamma(x);
}

void log_normalize(const double* in, double* out, std::size_t n) {
    if (n == 0) throw numeric_error("log_normalize: empty input");
    const double m = kernels::max(in, n);
    if (m == -std::numeric_limits<double>::infinity())
        throw numeric_error("log_normalize: all inputs are -inf");
    const double s = kernels::exp_shift_sum(in, m, out, n);
    kernels::scale(out, 1.0 / s, n);
}

std::vector<double> log_normalize(const std::vector<double>& log_values) {
    std::vector<double> out(log_values.size());
    log_normalize(log_values.data(), out.data(), log_values.size());
    return out;
}

} // namespace emm
