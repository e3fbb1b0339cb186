#ifndef EMM_MAT_HPP
#define EMM_MAT_HPP

#include <cassert>
#include <cstddef>
#include <vector>

namespace emm {

using Vec = std::vector<double>;

// Dense row-major matrix. Just storage plus indexed access; all the math in
// this project runs through explicit loops and the kernels module.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> v;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), v(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) {
        assert(r < rows && c < cols);
        return v[r * cols + c];
    }
    double operator()(std::size_t r, std::size_t c) const {
        assert(r < rows && c < cols);
        return v[r * cols + c];
    }
    double* row(std::size_t r) { return v.data() + r * cols; }
    const double* row(std::size_t r) const { return v.data() + r * cols; }

    bool operator==(const Mat&) const = default;
};

} // namespace emm

#endif
