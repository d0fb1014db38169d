#include "sppkit/transform.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sppkit {

Transformation Transformation::identity() { return Transformation(); }

Transformation Transformation::append_profile(const Profile& p) {
    Transformation t;
    t.kind_ = Kind::AppendProfile;
    t.profile_ = p;
    std::string tokens;
    for (std::size_t i = 0; i < kFactorCount; ++i) {
        if (i > 0)
            tokens += ' ';
        tokens += signature_token(p.signatures[i]);
    }
    t.name_ = "append-profile(" + tokens + ")";
    return t;
}

Transformation Transformation::drop_oldest(std::size_t k) {
    Transformation t;
    t.kind_ = Kind::DropOldest;
    t.drop_count_ = k;
    t.name_ = "drop-oldest(" + std::to_string(k) + ")";
    return t;
}

Transformation Transformation::factor_permutation(const std::array<Factor, kFactorCount>& perm) {
    std::array<bool, kFactorCount> seen{};
    for (Factor f : perm) {
        if (seen[index_of(f)])
            throw std::invalid_argument("factor permutation must mention every factor once");
        seen[index_of(f)] = true;
    }
    Transformation t;
    t.kind_ = Kind::FactorPermutation;
    t.perm_ = perm;
    std::string names;
    for (Factor f : perm) {
        if (!names.empty())
            names += ' ';
        names += factor_name(f);
    }
    t.name_ = "factor-permutation(" + names + ")";
    return t;
}

Transformation Transformation::signature_map(const std::array<Signature, kSignatureCount>& map) {
    Transformation t;
    t.kind_ = Kind::SignatureMap;
    t.sig_map_ = map;
    t.name_ = "signature-map";
    return t;
}

Transformation Transformation::union_constant(SequenceSet extra) {
    Transformation t;
    t.kind_ = Kind::UnionConstant;
    t.constant_ = std::move(extra);
    t.name_ = "union-constant(" + std::to_string(t.constant_.size()) + " sequences)";
    return t;
}

Transformation Transformation::replace_constant(SequenceSet value) {
    Transformation t;
    t.kind_ = Kind::ReplaceConstant;
    t.constant_ = std::move(value);
    t.name_ = "replace-constant(" + std::to_string(t.constant_.size()) + " sequences)";
    return t;
}

Transformation Transformation::compose(Transformation outer, Transformation inner) {
    Transformation t;
    t.kind_ = Kind::Composite;
    t.name_ = "compose(" + outer.name_ + "," + inner.name_ + ")";
    t.parts_.push_back(std::move(outer));
    t.parts_.push_back(std::move(inner));
    return t;
}

namespace {

Profile permute_factors(const Profile& p, const std::array<Factor, kFactorCount>& perm) {
    Profile out;
    for (std::size_t i = 0; i < kFactorCount; ++i)
        out.signatures[i] = p[perm[i]];
    return out;
}

Profile map_signatures(const Profile& p, const std::array<Signature, kSignatureCount>& map) {
    Profile out;
    for (std::size_t i = 0; i < kFactorCount; ++i)
        out.signatures[i] = map[index_of(p.signatures[i])];
    return out;
}

} // namespace

SequenceSet Transformation::apply(const SequenceSet& input) const {
    switch (kind_) {
    case Kind::Identity:
        return input;
    case Kind::AppendProfile: {
        SequenceSet out;
        const ProfileSequence prefix{profile_};
        for (const ProfileSequence& p : input)
            out.insert(concat(prefix, p));
        return out;
    }
    case Kind::DropOldest: {
        SequenceSet out;
        for (const ProfileSequence& p : input) {
            if (p.size() > drop_count_) {
                out.insert(ProfileSequence(std::vector<Profile>(
                    p.begin() + static_cast<std::ptrdiff_t>(drop_count_), p.end())));
            } else {
                out.insert(p);
            }
        }
        return out;
    }
    case Kind::FactorPermutation: {
        SequenceSet out;
        for (const ProfileSequence& p : input) {
            std::vector<Profile> profiles;
            profiles.reserve(p.size());
            for (const Profile& profile : p)
                profiles.push_back(permute_factors(profile, perm_));
            out.insert(ProfileSequence(std::move(profiles)));
        }
        return out;
    }
    case Kind::SignatureMap: {
        SequenceSet out;
        for (const ProfileSequence& p : input) {
            std::vector<Profile> profiles;
            profiles.reserve(p.size());
            for (const Profile& profile : p)
                profiles.push_back(map_signatures(profile, sig_map_));
            out.insert(ProfileSequence(std::move(profiles)));
        }
        return out;
    }
    case Kind::UnionConstant: {
        SequenceSet out = input;
        out.insert(constant_.begin(), constant_.end());
        return out;
    }
    case Kind::ReplaceConstant:
        return constant_;
    default: { // Composite: outermost first, so apply right to left
        SequenceSet current = input;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
            current = it->apply(current);
        return current;
    }
    }
}

namespace {

SequenceSet sequences_from_json(const nlohmann::json& node) {
    if (!node.is_array())
        throw ParseError("transformation 'sequences' must be an array");
    SequenceSet out;
    for (const auto& entry : node)
        out.insert(parse_sequence(entry.dump()));
    return out;
}

Transformation transformation_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("kind"))
        throw ParseError("transformation spec needs a 'kind'");
    const std::string kind = doc["kind"].get<std::string>();

    Transformation t = [&]() -> Transformation {
        if (kind == "identity")
            return Transformation::identity();
        if (kind == "append-profile") {
            const auto seq = parse_sequence(nlohmann::json::array({doc.at("profile")}).dump());
            return Transformation::append_profile(seq.head());
        }
        if (kind == "drop-oldest")
            return Transformation::drop_oldest(doc.at("k").get<std::size_t>());
        if (kind == "factor-permutation") {
            const auto& names = doc.at("permutation");
            if (!names.is_array() || names.size() != kFactorCount)
                throw ParseError("factor permutation needs 8 factor names");
            std::array<Factor, kFactorCount> perm{};
            for (std::size_t i = 0; i < kFactorCount; ++i) {
                auto f = factor_from_name(names[i].get<std::string>());
                if (!f)
                    throw ParseError("unknown factor '" + names[i].get<std::string>() + "'");
                perm[i] = *f;
            }
            return Transformation::factor_permutation(perm);
        }
        if (kind == "signature-map") {
            std::array<Signature, kSignatureCount> map{};
            for (Signature s : kSignatures)
                map[index_of(s)] = s;
            for (const auto& [from, to] : doc.at("map").items()) {
                auto src = signature_from_token(from);
                auto dst = signature_from_token(to.get<std::string>());
                if (!src || !dst)
                    throw ParseError("unknown signature token in signature map");
                map[index_of(*src)] = *dst;
            }
            return Transformation::signature_map(map);
        }
        if (kind == "union-constant")
            return Transformation::union_constant(sequences_from_json(doc.at("sequences")));
        if (kind == "replace-constant")
            return Transformation::replace_constant(sequences_from_json(doc.at("sequences")));
        if (kind == "composite") {
            const auto& list = doc.at("list");
            if (!list.is_array() || list.empty())
                throw ParseError("composite transformation needs a nonempty 'list'");
            Transformation out = transformation_from_json(list.back());
            for (auto it = std::next(list.rbegin()); it != list.rend(); ++it)
                out = Transformation::compose(transformation_from_json(*it), std::move(out));
            return out;
        }
        throw ParseError("unknown transformation kind '" + kind + "'");
    }();

    if (doc.contains("name"))
        t.set_name(doc["name"].get<std::string>());
    return t;
}

} // namespace

Transformation Transformation::from_json_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid transformation JSON: ") + e.what());
    }
    return transformation_from_json(doc);
}

Transformation Transformation::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open transformation spec: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

std::vector<Transformation> Transformation::list_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open transformation spec: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid transformation JSON: ") + e.what());
    }
    std::vector<Transformation> out;
    if (doc.is_array()) {
        for (const auto& entry : doc)
            out.push_back(transformation_from_json(entry));
    } else {
        out.push_back(transformation_from_json(doc));
    }
    return out;
}

PreservationVerdict preserves(const Transformation& tau, const std::vector<Formula>& phi,
                              const std::vector<SequenceSet>& tests,
                              const ProverOptions& options) {
    for (const SequenceSet& test : tests) {
        const TheoryHandle before =
            theory_of(std::vector<ProfileSequence>(test.begin(), test.end()), options);
        const SequenceSet image = tau.apply(test);
        const TheoryHandle after =
            theory_of(std::vector<ProfileSequence>(image.begin(), image.end()), options);
        for (const Formula& f : phi) {
            if (before.contains(f) && !after.contains(f)) {
                PreservationVerdict verdict;
                verdict.preserved = false;
                verdict.witness_set = test;
                verdict.witness_formula = f;
                return verdict;
            }
        }
    }
    return PreservationVerdict{};
}

std::vector<CategoryReportEntry> category_membership_report(
    const std::vector<Formula>& phi, const std::vector<Transformation>& candidates,
    const std::vector<SequenceSet>& tests, const ProverOptions& options) {
    std::vector<CategoryReportEntry> out;
    out.reserve(candidates.size());
    for (const Transformation& tau : candidates)
        out.push_back(CategoryReportEntry{tau.name(), preserves(tau, phi, tests, options)});
    return out;
}

} // namespace sppkit
