#include "sppkit/generator.hpp"

namespace sppkit {

Profile random_profile(std::mt19937_64& rng) {
    Profile p;
    for (std::size_t i = 0; i < kFactorCount; ++i) {
        // modulo keeps the stream portable; the engine's output sequence is
        // pinned by the standard, distributions are not
        p.signatures[i] = kSignatures[rng() % kSignatureCount];
    }
    return p;
}

ProfileSequence random_sequence(std::mt19937_64& rng, std::size_t length) {
    std::vector<Profile> profiles;
    profiles.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
        profiles.push_back(random_profile(rng));
    return ProfileSequence(std::move(profiles));
}

std::vector<ProfileSequence> generate_sequences(std::uint64_t seed, std::size_t count,
                                                std::size_t length) {
    std::mt19937_64 rng(seed);
    std::vector<ProfileSequence> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_sequence(rng, length));
    return out;
}

} // namespace sppkit
