#pragma once

#include <cstdint>
#include <random>

namespace spindlekit::detail {

/// Seeded uniform doubles with a fixed bit mapping so streams are identical
/// across platforms and standard libraries (std::uniform_real_distribution
/// is not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t bits() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace spindlekit::detail
