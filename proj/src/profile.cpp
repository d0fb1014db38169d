#include "sppkit/profile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sppkit {

namespace {

constexpr std::array<std::string_view, kFactorCount> kFactorNames = {
    "h", "s", "e", "hy", "k", "p", "d", "m",
};

constexpr std::array<std::string_view, 4> kVectorGroupNames = {"S", "P", "Sch", "C"};

constexpr std::array<std::string_view, kSignatureCount> kSignatureTokens = {
    "-!!!", "-!!", "-!", "-", "0", "+", "+!", "+!!", "+!!!", "pm-", "pm", "pm+",
};

constexpr std::array<std::string_view, kPlainSignatureCount> kPlainTokens = {"0", "+", "-", "pm"};

} // namespace

std::string_view factor_name(Factor f) { return kFactorNames[index_of(f)]; }

std::string_view vector_group_name(VectorGroup g) {
    return kVectorGroupNames[static_cast<std::size_t>(g)];
}

std::optional<Factor> factor_from_name(std::string_view name) {
    for (Factor f : kFactors) {
        if (kFactorNames[index_of(f)] == name)
            return f;
    }
    return std::nullopt;
}

std::string_view signature_token(Signature s) { return kSignatureTokens[index_of(s)]; }

std::optional<Signature> signature_from_token(std::string_view token) {
    for (Signature s : kSignatures) {
        if (kSignatureTokens[index_of(s)] == token)
            return s;
    }
    return std::nullopt;
}

std::string_view plain_signature_token(PlainSignature p) { return kPlainTokens[code(p)]; }

std::optional<PlainSignature> plain_signature_from_token(std::string_view token) {
    for (PlainSignature p : kPlainSignatures) {
        if (kPlainTokens[code(p)] == token)
            return p;
    }
    return std::nullopt;
}

ProfileSequence::ProfileSequence(std::vector<Profile> profiles) : profiles_(std::move(profiles)) {
    if (profiles_.empty())
        throw std::invalid_argument("profile sequence must be nonempty");
}

ProfileSequence::ProfileSequence(std::initializer_list<Profile> profiles)
    : ProfileSequence(std::vector<Profile>(profiles)) {}

ProfileSequence concat(const ProfileSequence& prefix, const ProfileSequence& suffix) {
    std::vector<Profile> all = prefix.profiles();
    all.insert(all.end(), suffix.begin(), suffix.end());
    return ProfileSequence(std::move(all));
}

bool is_extension_of(const ProfileSequence& p, const ProfileSequence& q) {
    if (q.size() > p.size())
        return false;
    const std::size_t offset = p.size() - q.size();
    return std::equal(q.begin(), q.end(), p.begin() + static_cast<std::ptrdiff_t>(offset));
}

std::vector<ProfileSequence> suffixes(const ProfileSequence& p) {
    std::vector<ProfileSequence> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out.emplace_back(std::vector<Profile>(p.begin() + static_cast<std::ptrdiff_t>(i), p.end()));
    }
    return out;
}

namespace {

Profile profile_from_tokens(const std::vector<std::string>& tokens, int line) {
    if (tokens.size() != kFactorCount) {
        throw ParseError("expected 8 signature tokens, got " + std::to_string(tokens.size()),
                         line);
    }
    Profile profile;
    for (std::size_t i = 0; i < kFactorCount; ++i) {
        auto sig = signature_from_token(tokens[i]);
        if (!sig) {
            throw ParseError("unknown signature token '" + tokens[i] + "' for factor " +
                                 std::string(factor_name(kFactors[i])),
                             line);
        }
        profile.signatures[i] = *sig;
    }
    return profile;
}

ProfileSequence parse_sequence_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array())
        throw ParseError("JSON sequence must be an array of profiles");
    std::vector<Profile> profiles;
    int row = 0;
    for (const auto& entry : doc) {
        ++row;
        if (!entry.is_array())
            throw ParseError("JSON profile must be an array of 8 tokens", row);
        std::vector<std::string> tokens;
        for (const auto& tok : entry) {
            if (!tok.is_string())
                throw ParseError("JSON signature token must be a string", row);
            tokens.push_back(tok.get<std::string>());
        }
        profiles.push_back(profile_from_tokens(tokens, row));
    }
    if (profiles.empty())
        throw ParseError("empty input: no profiles");
    return ProfileSequence(std::move(profiles));
}

} // namespace

ProfileSequence parse_sequence(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[')
        return parse_sequence_json(text);

    std::vector<Profile> profiles;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream fields(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok)
            tokens.push_back(tok);
        if (tokens.empty())
            continue;
        profiles.push_back(profile_from_tokens(tokens, line_no));
    }
    if (profiles.empty())
        throw ParseError("empty input: no profiles");
    return ProfileSequence(std::move(profiles));
}

ProfileSequence load_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open sequence file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sequence(buf.str());
}

std::string serialize_sequence(const ProfileSequence& p) {
    std::string out;
    for (const Profile& profile : p) {
        for (std::size_t i = 0; i < kFactorCount; ++i) {
            if (i > 0)
                out += ' ';
            out += signature_token(profile.signatures[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace sppkit
