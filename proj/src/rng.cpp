#include "clarke/rng.hpp"

namespace clarke {

SubstreamRng::SubstreamRng(std::uint64_t seed, Stream stream, std::uint64_t block)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(block),
                      static_cast<std::uint32_t>(block >> 32)};
    engine_.seed(seq);
}

double SubstreamRng::uniform01()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SubstreamRng::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform01();
}

}  // namespace clarke
