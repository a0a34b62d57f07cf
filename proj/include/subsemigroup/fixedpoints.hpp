#pragma once

#include "subsemigroup/prefix_language.hpp"
#include "subsemigroup/semigroup.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace subsemigroup {

/// A composition word together with a letter it maps to itself under the
/// first-letter action. In a fixed-letter-free semigroup the realized
/// substitution then has a unique infinite fixed point starting with that letter.
struct Anchor {
    CompositionWord word;
    char letter;

    friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// All anchors (w, a) with 1 <= |w| <= depth, in (depth, lexicographic, letter) order.
inline std::vector<Anchor> find_anchors(const GeneratorSet& g, std::size_t depth, const EnumerationLimits& limits = {})
{
    require_fixed_letter_free(g);
    std::vector<Anchor> out;
    const auto& alphabet = g.alphabet();
    for_each_first_letter_map(g, depth, limits, [&](const CompositionWord& w, const std::vector<std::size_t>& m) {
        for (std::size_t a = 0; a < m.size(); ++a) {
            if (m[a] == a) {
                out.push_back({w, alphabet.letter(a)});
            }
        }
    });
    return out;
}

/// First k letters of the fixed point of realize(anchor.word) that starts with
/// anchor.letter.
///
/// With g[a] = a, each g^n(a) is a prefix of g^(n+1)(a); since g has no fixed
/// letter, g(a) is at least two letters long and every iteration adds a letter.
inline std::string fixed_point_prefix(const GeneratorSet& g, const Anchor& anchor, std::size_t k)
{
    PrefixRequest request(k);
    const auto realization = realize_prefix(g, anchor.word, k);
    const auto& alphabet = g.alphabet();
    const auto a = alphabet.at(anchor.letter);
    if (realization.prefix_at(a).front() != anchor.letter) {
        throw PreconditionError("not an anchor: " + render(g, anchor.word) + " does not keep '"
                                + std::string(1, anchor.letter) + "' as first letter");
    }
    if (realization.complete_at(a) && realization.prefix_at(a).size() == 1) {
        throw PreconditionError("anchor letter is fixed; no infinite fixed point");
    }
    std::string x(1, anchor.letter);
    while (x.size() < request.k) {
        x = realization.apply_prefix(x, request.k);
    }
    return x;
}

inline PrefixLanguage fix_language(const GeneratorSet& g, std::size_t depth, std::size_t k,
                                   const EnumerationLimits& limits = {})
{
    std::vector<std::string> words;
    for (const auto& anchor : find_anchors(g, depth, limits)) {
        words.push_back(fixed_point_prefix(g, anchor, k));
    }
    return PrefixLanguage(g.alphabet(), k, std::move(words));
}

/// k-prefixes of the fixed points found up to `fix_depth`, together with their
/// images under every composition word of depth 1..image_depth.
///
/// A k-letter prefix of the fixed point is enough: substitutions are non-erasing,
/// so the first k letters of s(x) only depend on the first k letters of x.
inline PrefixLanguage image_closure_language(const GeneratorSet& g, std::size_t fix_depth, std::size_t image_depth,
                                             std::size_t k, const EnumerationLimits& limits = {})
{
    const auto fixed = fix_language(g, fix_depth, k, limits);
    std::vector<std::string> words = fixed.words();
    for (std::size_t d = 1; d <= image_depth; ++d) {
        for_each_composition(g, d, k, limits, [&](const CompositionWord&, const PrefixRealization& r) {
            for (const auto& p : fixed.words()) {
                words.push_back(r.apply_prefix(p, k));
            }
        });
    }
    return PrefixLanguage(g.alphabet(), k, std::move(words));
}

struct FixProfile {
    std::vector<std::size_t> sizes; // sizes[d - 1] = |fix_language(g, d, k)|
    /// Whether the last two depths gave the same language. A single repeat is
    /// only an observation; no anchor depth is known to guarantee stability.
    bool unchanged_at_last_depth = false;
};

inline FixProfile fix_language_profile(const GeneratorSet& g, std::size_t depth, std::size_t k,
                                       const EnumerationLimits& limits = {})
{
    FixProfile out;
    std::optional<PrefixLanguage> previous;
    for (std::size_t d = 1; d <= depth; ++d) {
        auto lang = fix_language(g, d, k, limits);
        out.sizes.push_back(lang.size());
        out.unchanged_at_last_depth = previous && *previous == lang;
        previous = std::move(lang);
    }
    return out;
}

} // namespace subsemigroup
