#ifndef EMM_RNG_HPP
#define EMM_RNG_HPP

#include <cstdint>
#include <cstddef>

namespace emm {

// Deterministic, portable generator: xoshiro256++ (Blackman & Vigna) seeded
// through splitmix64. Every distribution below is implemented explicitly on
// top of the raw stream, so corpora regenerate bit-identically anywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // [0, 1), 53-bit resolution
    double uniform();

    // unbiased integer in [0, bound), bound >= 1, via rejection
    std::uint64_t uniform_int(std::uint64_t bound);

    // inclusive integer range
    std::int64_t uniform_range(std::int64_t lo, std::int64_t hi);

    // rate parameterization, inverse CDF
    double exponential(double rate);

    // standard normal, Marsaglia polar method
    double normal();

    // shape k > 0, unit scale; Marsaglia-Tsang squeeze
    double gamma(double shape);

    // symmetric Dirichlet(concentration) of dimension n, written to out
    void dirichlet_symmetric(double concentration, std::size_t n, double* out);

    // index draw from unnormalized nonnegative weights
    std::size_t categorical(const double* weights, std::size_t n);

  private:
    std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

// FNV-1a over a little-endian byte view of the values; used for stable,
// content-derived sub-seeds.
std::uint64_t fnv1a64(const std::uint64_t* values, std::size_t n, std::uint64_t basis = 1469598103934665603ull);

} // namespace emm

#endif
