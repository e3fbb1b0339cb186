#include "emm/kernels.hpp"

#include <cmath>
#include <limits>

namespace emm::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sum_scalar(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i];
    return s;
}

double max_scalar(const double* a, std::size_t n) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > m) m = a[i];
    return m;
}

double exp_shift_sum_scalar(const double* a, double shift, double* out, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(a[i] - shift);
        s += out[i];
    }
    return s;
}

void scale_scalar(double* a, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= s;
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops = {dot_scalar, axpy_scalar,          sum_scalar,
                            max_scalar, exp_shift_sum_scalar, scale_scalar,
                            "scalar"};
    return ops;
}

} // namespace emm::kernels
