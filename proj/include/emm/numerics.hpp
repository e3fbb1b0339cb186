#ifndef EMM_NUMERICS_HPP
#define EMM_NUMERICS_HPP

#include <cstddef>
#include <vector>

namespace emm {

// Digamma (psi) for x > 0. Upward recurrence into the asymptotic regime.
double digamma(double x);

// Trigamma (psi') for x > 0; strictly positive.
double trigamma(double x);

// Second derivative of digamma, needed by Newton solvers; x > 0.
double tetragamma(double x);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Normalize log-domain scores onto the probability simplex. Entries may be
// -inf (mapped to 0) but not all of them. Shift-invariant by construction.
std::vector<double> log_normalize(const std::vector<double>& log_values);

// In-place variant writing into out[0..n); returns nothing. out may alias in.
void log_normalize(const double* in, double* out, std::size_t n);

} // namespace emm

#endif
