#include "g2/sampling.hpp"

namespace g2 {

std::uint64_t Stream::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Point2 sample_point(const Stream& s) {
    return {{s.uniform(0, -0.5, 0.5), s.uniform(1, -0.2, 0.2)}, {s.uniform(2, -0.5, 0.5), s.uniform(3, -0.2, 0.2)}};
}

PeriodMatrix sample_tau(const Stream& s) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t c = attempt * 6;
        PeriodMatrix t{{s.uniform(c, -0.5, 0.5), s.uniform(c + 1, 0.9, 1.6)},
                       {s.uniform(c + 2, -0.5, 0.5), s.uniform(c + 3, 0.9, 1.6)},
                       {s.uniform(c + 4, -0.3, 0.3), s.uniform(c + 5, -0.3, 0.3)}};
        if (t.valid()) return t;
    }
}

}  // namespace g2
