#pragma once

// Seeded pseudo-random profile sequences for property suites and the gen
// subcommand. Streams are reproducible: a fixed seed yields byte-identical
// serialized output on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "sppkit/profile.hpp"

namespace sppkit {

// Uniform over the 12 signatures per factor.
Profile random_profile(std::mt19937_64& rng);

ProfileSequence random_sequence(std::mt19937_64& rng, std::size_t length);

std::vector<ProfileSequence> generate_sequences(std::uint64_t seed, std::size_t count,
                                                std::size_t length);

} // namespace sppkit
