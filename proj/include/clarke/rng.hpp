#pragma once

#include <cstdint>
#include <random>

namespace clarke {

/// Stream identifiers used when splitting one user seed into independent
/// substreams.
enum class Stream : std::uint32_t {
    DiskMagnitude = 1,
    DiskAngle = 2,
    MeasurementNoise = 3,
};

/// Portable seeded generator for one substream.
///
/// The engine is std::mt19937_64 seeded through std::seed_seq with the words
/// {seed_lo, seed_hi, stream, block}; both are fully specified by the standard,
/// so sequences are identical across platforms. Doubles are formed from the
/// top 53 bits (std distributions are implementation-defined and avoided).
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, Stream stream, std::uint64_t block = 0);

    /// Uniform on [0, 1).
    double uniform01();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace clarke
