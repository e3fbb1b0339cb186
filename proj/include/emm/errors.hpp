#ifndef EMM_ERRORS_HPP
#define EMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace emm {

// Bad file contents, unknown formats, inconsistent dimensions.
struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver did not converge, invalid numeric domain, quadrature failure.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct dimension_error : data_error {
    explicit dimension_error(const std::string& msg) : data_error(msg) {}
};

} // namespace emm

#endif
