#pragma once

// Data model for the symbolic test-profile domain: the twelve reaction
// signatures with their two-chain partial order, the eight personality
// factors grouped into four vectors, complete profiles (one signature per
// factor), and nonempty profile sequences ordered oldest-first with the
// suffix partial order.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sppkit/errors.hpp"

namespace sppkit {

// The twelve reaction signatures. Enum order follows the two order chains:
// -!!! < -!! < -! < - < 0 < + < +! < +!! < +!!! and pm- < pm < pm+.
enum class Signature : std::uint8_t {
    Minus3, // -!!!  strong rejection
    Minus2, // -!!
    Minus1, // -!
    Minus,  // -
    Zero,   // 0     indifference
    Plus,   // +
    Plus1,  // +!
    Plus2,  // +!!
    Plus3,  // +!!!  strong approval
    AmbiMinus, // pm-  ambivalence, rejection bias
    Ambi,      // pm   ambivalence, no bias
    AmbiPlus,  // pm+  ambivalence, approval bias
};

inline constexpr std::size_t kSignatureCount = 12;

inline constexpr std::array<Signature, kSignatureCount> kSignatures = {
    Signature::Minus3, Signature::Minus2, Signature::Minus1, Signature::Minus,
    Signature::Zero,   Signature::Plus,   Signature::Plus1,  Signature::Plus2,
    Signature::Plus3,  Signature::AmbiMinus, Signature::Ambi, Signature::AmbiPlus,
};

// Quanta-stripped signature values, in the row/column order of the
// implication diagrams: 0, +, -, pm.
enum class PlainSignature : std::uint8_t {
    Zero = 0,
    Plus = 1,
    Minus = 2,
    Ambi = 3,
};

inline constexpr std::size_t kPlainSignatureCount = 4;

inline constexpr std::array<PlainSignature, kPlainSignatureCount> kPlainSignatures = {
    PlainSignature::Zero, PlainSignature::Plus, PlainSignature::Minus, PlainSignature::Ambi,
};

// The eight personality factors, in canonical order h s e hy k p d m.
enum class Factor : std::uint8_t { H, S, E, Hy, K, P, D, M };

inline constexpr std::size_t kFactorCount = 8;

inline constexpr std::array<Factor, kFactorCount> kFactors = {
    Factor::H, Factor::S, Factor::E, Factor::Hy,
    Factor::K, Factor::P, Factor::D, Factor::M,
};

// The four factor vectors; metadata only.
enum class VectorGroup : std::uint8_t { S, P, Sch, C };

constexpr std::size_t index_of(Factor f) { return static_cast<std::size_t>(f); }
constexpr std::size_t index_of(Signature s) { return static_cast<std::size_t>(s); }

// Grouping: h,s -> S; e,hy -> P; k,p -> Sch; d,m -> C.
constexpr VectorGroup vector_group(Factor f) {
    return static_cast<VectorGroup>(index_of(f) / 2);
}

std::string_view factor_name(Factor f);
std::string_view vector_group_name(VectorGroup g);
std::optional<Factor> factor_from_name(std::string_view name);

// ASCII token for a signature: "0", "+", "+!", "+!!", "+!!!", "-", "-!",
// "-!!", "-!!!", "pm-", "pm", "pm+".
std::string_view signature_token(Signature s);
std::optional<Signature> signature_from_token(std::string_view token);

std::string_view plain_signature_token(PlainSignature p);
std::optional<PlainSignature> plain_signature_from_token(std::string_view token);

// Reflexive-transitive order of the two signature chains; values in
// different chains are incomparable.
constexpr bool poset_leq(Signature a, Signature b) {
    const auto ia = index_of(a);
    const auto ib = index_of(b);
    const bool a_linear = ia <= index_of(Signature::Plus3);
    const bool b_linear = ib <= index_of(Signature::Plus3);
    return a_linear == b_linear && ia <= ib;
}

// Strips quanta and bias marks: +!!! -> +, -!! -> -, pm+ -> pm, 0 -> 0.
constexpr PlainSignature modulo_quanta(Signature s) {
    switch (s) {
    case Signature::Minus3:
    case Signature::Minus2:
    case Signature::Minus1:
    case Signature::Minus:
        return PlainSignature::Minus;
    case Signature::Zero:
        return PlainSignature::Zero;
    case Signature::Plus:
    case Signature::Plus1:
    case Signature::Plus2:
    case Signature::Plus3:
        return PlainSignature::Plus;
    default:
        return PlainSignature::Ambi;
    }
}

// Row/column index of a plain signature in the diagram subtables.
constexpr int code(PlainSignature p) { return static_cast<int>(p); }

constexpr PlainSignature plain_from_code(int c) { return static_cast<PlainSignature>(c); }

// The plain signature embedded back into the full signature set.
constexpr Signature to_signature(PlainSignature p) {
    switch (p) {
    case PlainSignature::Zero: return Signature::Zero;
    case PlainSignature::Plus: return Signature::Plus;
    case PlainSignature::Minus: return Signature::Minus;
    default: return Signature::Ambi;
    }
}

// The three plain signatures other than p.
constexpr std::array<PlainSignature, 3> co_set(PlainSignature p) {
    std::array<PlainSignature, 3> out{};
    std::size_t n = 0;
    for (PlainSignature q : kPlainSignatures) {
        if (q != p)
            out[n++] = q;
    }
    return out;
}

// A complete profile: one signature per factor.
struct Profile {
    std::array<Signature, kFactorCount> signatures{};

    Signature operator[](Factor f) const { return signatures[index_of(f)]; }
    Signature& operator[](Factor f) { return signatures[index_of(f)]; }

    auto operator<=>(const Profile&) const = default;
};

// A nonempty sequence of profiles, stored oldest-first (index 0 is the
// temporally first test result).
class ProfileSequence {
public:
    explicit ProfileSequence(std::vector<Profile> profiles);
    ProfileSequence(std::initializer_list<Profile> profiles);

    std::size_t size() const { return profiles_.size(); }
    const Profile& operator[](std::size_t i) const { return profiles_[i]; }
    const std::vector<Profile>& profiles() const { return profiles_; }

    // Projection onto the first (oldest) profile.
    const Profile& head() const { return profiles_.front(); }

    auto begin() const { return profiles_.begin(); }
    auto end() const { return profiles_.end(); }

    bool operator==(const ProfileSequence&) const = default;
    auto operator<=>(const ProfileSequence&) const = default;

private:
    std::vector<Profile> profiles_;
};

// List concatenation; the result starts with all of `prefix`.
ProfileSequence concat(const ProfileSequence& prefix, const ProfileSequence& suffix);

// Whether p equals q or extends it backwards in time, i.e. there is some r
// with p = concat(r, q).
bool is_extension_of(const ProfileSequence& p, const ProfileSequence& q);

// All suffixes of p, longest first; exactly p.size() of them.
std::vector<ProfileSequence> suffixes(const ProfileSequence& p);

// Parses the profile-sequence file format: '#' starts a comment, blank
// lines are skipped, each data line holds exactly 8 signature tokens in
// factor order h s e hy k p d m. Input whose first non-space character is
// '[' is instead parsed as JSON: an array of arrays of 8 token strings.
// Throws ParseError with a line number on malformed input.
ProfileSequence parse_sequence(std::string_view text);

// Reads and parses a sequence file; throws IoError when unreadable.
ProfileSequence load_sequence(const std::string& path);

// One line of 8 tokens per profile; parse_sequence(serialize_sequence(p)) == p.
std::string serialize_sequence(const ProfileSequence& p);

} // namespace sppkit
