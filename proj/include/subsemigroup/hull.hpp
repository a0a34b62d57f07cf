#pragma once

#include "subsemigroup/limitset.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace subsemigroup {

/// Where a hull member came from: the k letters of F(w)(a) starting after `shift` letters.
struct ShiftedWitness {
    CompositionWord word;
    char letter;
    std::size_t shift;
};

/// Finite-resolution approximation of the hull of a letter: k-prefixes of all
/// shifts (up to the budget) of the images F(w)(a), |w| = depth.
struct HullLanguage {
    char letter;
    std::size_t depth;
    std::size_t k;
    std::size_t shift_budget;
    PrefixLanguage words;
    std::vector<ShiftedWitness> witnesses; // aligned with words.words(); first source in (w, shift) order
};

/// Same one-sided cover semantics as limit_language. The gate
/// min_image_length(depth) >= k + shift_budget guarantees every shifted prefix is
/// fully determined.
inline HullLanguage hull_language(const GeneratorSet& g, char letter, std::size_t depth, std::size_t k,
                                  std::size_t shift_budget, const EnumerationLimits& limits = {})
{
    PrefixRequest request(k);
    const auto a = g.alphabet().at(letter);
    require_fixed_letter_free(g);
    const std::size_t needed = request.k + shift_budget;
    detail::gate_resolution(depth, needed, min_image_length(g, depth, limits));

    std::unordered_map<std::string, ShiftedWitness> first_source;
    std::vector<std::string> members;
    for_each_composition(g, depth, needed, limits, [&](const CompositionWord& w, const PrefixRealization& r) {
        const auto& u = r.prefix_at(a);
        for (std::size_t j = 0; j <= shift_budget; ++j) {
            auto p = u.substr(j, request.k);
            if (first_source.emplace(p, ShiftedWitness{w, letter, j}).second) {
                members.push_back(std::move(p));
            }
        }
    });
    PrefixLanguage language(g.alphabet(), request.k, std::move(members));
    std::vector<ShiftedWitness> witnesses;
    for (const auto& m : language.words()) {
        witnesses.push_back(first_source.at(m));
    }
    return HullLanguage{letter, depth, request.k, shift_budget, std::move(language), std::move(witnesses)};
}

struct HullDifference {
    char left;
    char right;
    std::vector<std::string> only_left;
    std::vector<ShiftedWitness> only_left_witnesses;
    std::vector<std::string> only_right;
    std::vector<ShiftedWitness> only_right_witnesses;

    bool equal() const noexcept { return only_left.empty() && only_right.empty(); }
};

struct HullEqualityReport {
    std::size_t depth;
    std::size_t k;
    std::size_t shift_budget;
    std::vector<HullLanguage> hulls; // one per letter, alphabet order
    std::vector<HullDifference> pairs;

    bool all_equal() const noexcept
    {
        for (const auto& p : pairs) {
            if (!p.equal()) {
                return false;
            }
        }
        return true;
    }
};

namespace detail {

inline const ShiftedWitness& hull_witness(const HullLanguage& h, const std::string& member)
{
    const auto& words = h.words.words();
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i] == member) {
            return h.witnesses[i];
        }
    }
    throw ValidationError("'" + member + "' is not a hull member");
}

} // namespace detail

/// Pairwise comparison of the hulls of all letters. For irreducible semigroups
/// the hull does not depend on the letter.
inline HullEqualityReport hull_equality_report(const GeneratorSet& g, std::size_t depth, std::size_t k,
                                               std::size_t shift_budget, const EnumerationLimits& limits = {})
{
    if (!is_irreducible(g)) {
        throw PreconditionError("the semigroup is not irreducible");
    }
    HullEqualityReport report{depth, k, shift_budget, {}, {}};
    for (char a : g.alphabet().letters()) {
        report.hulls.push_back(hull_language(g, a, depth, k, shift_budget, limits));
    }
    for (std::size_t i = 0; i < report.hulls.size(); ++i) {
        for (std::size_t j = i + 1; j < report.hulls.size(); ++j) {
            const auto& x = report.hulls[i];
            const auto& y = report.hulls[j];
            HullDifference diff{x.letter, y.letter, x.words.minus(y.words), {}, y.words.minus(x.words), {}};
            for (const auto& m : diff.only_left) {
                diff.only_left_witnesses.push_back(detail::hull_witness(x, m));
            }
            for (const auto& m : diff.only_right) {
                diff.only_right_witnesses.push_back(detail::hull_witness(y, m));
            }
            report.pairs.push_back(std::move(diff));
        }
    }
    return report;
}

/// Hull sizes for shift budgets 0..shift_budget at `depth`, then at depth + 1 with the
/// full budget. Reported without any claim of convergence.
struct HullProfile {
    std::vector<std::size_t> by_budget;
    std::size_t next_depth_size = 0;
};

inline HullProfile hull_size_profile(const GeneratorSet& g, char letter, std::size_t depth, std::size_t k,
                                     std::size_t shift_budget, const EnumerationLimits& limits = {})
{
    HullProfile out;
    for (std::size_t j = 0; j <= shift_budget; ++j) {
        out.by_budget.push_back(hull_language(g, letter, depth, k, j, limits).words.size());
    }
    out.next_depth_size = hull_language(g, letter, depth + 1, k, shift_budget, limits).words.size();
    return out;
}

struct ShiftInvarianceViolation {
    std::string member;
    ShiftedWitness source;
    std::string shifted; // k-prefix of the next shift, missing from the hull
};

struct ShiftInvarianceReport {
    std::size_t checked = 0;
    std::vector<ShiftInvarianceViolation> violations;

    bool clean() const noexcept { return violations.empty(); }
};

/// Prefix-level reflection of shift invariance: for each member whose source shift
/// j is below the budget, the k-prefix of the (j+1)-shift of the same source word
/// must also be a member. The source word is re-realized independently of the
/// hull computation.
inline ShiftInvarianceReport shift_invariance_check(const HullLanguage& h, const GeneratorSet& g)
{
    ShiftInvarianceReport report;
    const auto& members = h.words.words();
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& src = h.witnesses[i];
        if (src.shift >= h.shift_budget) {
            continue;
        }
        ++report.checked;
        const auto u = realize_prefix(g, src.word, h.k + src.shift + 1).prefix(src.letter);
        auto shifted = u.substr(src.shift + 1, h.k);
        if (shifted.size() < h.k || !h.words.contains(shifted)) {
            report.violations.push_back({members[i], src, shifted});
        }
    }
    return report;
}

} // namespace subsemigroup
