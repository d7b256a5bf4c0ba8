#pragma once

#include <cstdint>

#include "g2/core.hpp"

namespace g2 {

// Counter-based splittable generator. A stream is a 64-bit key; draw n of a
// stream is mix(key + (n+1)*gamma), and split(id) derives the child key
// mix(key ^ mix(id + gamma)). mix is the splitmix64 finalizer.
class Stream {
public:
    static constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ULL;

    explicit Stream(std::uint64_t seed) : key_(mix(seed)) {}

    static std::uint64_t mix(std::uint64_t z);

    std::uint64_t bits(std::uint64_t counter) const { return mix(key_ + (counter + 1) * gamma); }
    // Uniform in [0, 1) from the top 53 bits.
    double unit(std::uint64_t counter) const { return double(bits(counter) >> 11) * 0x1.0p-53; }
    double uniform(std::uint64_t counter, double lo, double hi) const { return lo + (hi - lo) * unit(counter); }

    Stream split(std::uint64_t id) const { return Stream(key_ ^ mix(id + gamma), 0); }
    std::uint64_t key() const { return key_; }

private:
    Stream(std::uint64_t key, int) : key_(key) {}
    std::uint64_t key_;
};

// Re in [-0.5, 0.5], Im in [-0.2, 0.2] for both u and v. Uses counters 0..3.
Point2 sample_point(const Stream& s);

// Period matrices for moduli sweeps: Re tau1, Re tau2 in [-0.5, 0.5], Re tau12 in [-0.3, 0.3],
// Im tau1, Im tau2 in [0.9, 1.6], Im tau12 in [-0.3, 0.3]; redrawn on the stream until Im tau
// is positive definite.
PeriodMatrix sample_tau(const Stream& s);

}  // namespace g2
