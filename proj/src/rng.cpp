#include "emm/rng.hpp"

#include <cmath>

#include "emm/errors.hpp"

namespace emm {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a64(const std::uint64_t* values, std::size_t n, std::uint64_t basis) {
    std::uint64_t h = basis;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t v = values[i];
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xffull;
            h *= 1099511628211ull;
        }
    }
    return h;
}

Rng::Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_) s = splitmix64(sm);
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
} // namespace

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t bound) {
    if (bound == 0) throw numeric_error("uniform_int: bound must be positive");
    const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

std::int64_t Rng::uniform_range(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw numeric_error("uniform_range: empty interval");
    return lo + static_cast<std::int64_t>(uniform_int(static_cast<std::uint64_t>(hi - lo + 1)));
}

double Rng::exponential(double rate) {
    if (!(rate > 0.0)) throw numeric_error("exponential: rate must be positive");
    return -std::log1p(-uniform()) / rate;
}

double Rng::normal() {
    for (;;) {
        double u = 2.0 * uniform() - 1.0;
        double v = 2.0 * uniform() - 1.0;
        double s = u * u + v * v;
        if (s > 0.0 && s < 1.0)
            return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0)) throw numeric_error("gamma: shape must be positive");
    if (shape < 1.0) {
        // boost: G(a) = G(a+1) * U^(1/a)
        double u = uniform();
        while (u == 0.0) u = uniform();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double t = 1.0 + c * x;
        if (t <= 0.0) continue;
        double v = t * t * t;
        double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

void Rng::dirichlet_symmetric(double concentration, std::size_t n, double* out) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = gamma(concentration);
        total += out[i];
    }
    if (total <= 0.0) {  // extreme concentrations can underflow; fall back to uniform
        for (std::size_t i = 0; i < n; ++i) out[i] = 1.0 / static_cast<double>(n);
        return;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] /= total;
}

std::size_t Rng::categorical(const double* weights, std::size_t n) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += weights[i];
    if (!(total > 0.0)) throw numeric_error("categorical: weights must have positive mass");
    double u = uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return n - 1;  // rounding fell off the end
}

} // namespace emm
