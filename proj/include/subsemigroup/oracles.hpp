#pragma once

// Brute-force oracles. Each one materializes words in full from its own copy of
// the generator images and shares no traversal or caching logic with the fast
// paths it is used to validate.

#include "subsemigroup/semigroup.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace subsemigroup::oracle {

/// Plain copy of a generating set: names in order, each with a letter -> image map.
struct NaiveSystem {
    std::string letters;
    std::vector<std::string> names;
    std::vector<std::map<char, std::string>> images;

    explicit NaiveSystem(const GeneratorSet& g) : letters(g.alphabet().letters())
    {
        for (const auto& f : g.generators()) {
            names.push_back(f.name());
            std::map<char, std::string> m;
            for (std::size_t i = 0; i < letters.size(); ++i) {
                m[letters[i]] = f.images()[i];
            }
            images.push_back(std::move(m));
        }
    }

    std::string apply(std::size_t generator, const std::string& w) const
    {
        std::string out;
        for (char c : w) {
            out += images[generator].at(c);
        }
        return out;
    }

    /// f1 ∘ ... ∘ fn applied to w: fn first.
    std::string apply_word(const std::vector<std::size_t>& word, std::string w) const
    {
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            w = apply(*it, w);
        }
        return w;
    }

    /// Image of every letter under the composition, in letter order.
    std::vector<std::string> realize(const std::vector<std::size_t>& word) const
    {
        std::vector<std::string> out;
        for (char a : letters) {
            out.push_back(apply_word(word, std::string(1, a)));
        }
        return out;
    }

    std::string render(const std::vector<std::size_t>& word) const
    {
        bool single = std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
        std::string out;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i > 0 && !single) {
                out += '.';
            }
            out += names[word[i]];
        }
        return out;
    }

    /// All words of exactly `depth` generator indices, lexicographic (odometer order).
    std::vector<std::vector<std::size_t>> words_of_depth(std::size_t depth) const
    {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> w(depth, 0);
        if (depth == 0) {
            return out;
        }
        for (;;) {
            out.push_back(w);
            std::size_t pos = depth;
            while (pos > 0 && w[pos - 1] + 1 == names.size()) {
                w[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) {
                return out;
            }
            ++w[pos - 1];
        }
    }
};

inline void check_cap(std::size_t generators, std::size_t depth, std::size_t cap)
{
    std::size_t total = 0;
    std::size_t layer = 1;
    for (std::size_t d = 1; d <= depth; ++d) {
        layer *= generators;
        total += layer;
        if (total > cap) {
            throw ResourceLimitError("oracle enumeration exceeds the cap of " + std::to_string(cap));
        }
    }
}

/// Over a two-letter alphabet: for every factor length, the number of occurrences
/// of the first letter in any two factors of that length differs by at most one.
/// Direct O(n^2) sliding-window counting.
inline bool balanced(std::string_view w, const Alphabet& alphabet)
{
    if (alphabet.size() != 2) {
        throw ValidationError("balance is defined over a two-letter alphabet");
    }
    if (auto c = alphabet.first_foreign(w)) {
        throw ValidationError(std::string("letter '") + *c + "' is not in the alphabet");
    }
    const char first = alphabet.letter(0);
    for (std::size_t len = 1; len <= w.size(); ++len) {
        std::size_t count = static_cast<std::size_t>(std::count(w.begin(), w.begin() + static_cast<long>(len), first));
        std::size_t lo = count;
        std::size_t hi = count;
        for (std::size_t i = len; i < w.size(); ++i) {
            count += (w[i] == first);
            count -= (w[i - len] == first);
            lo = std::min(lo, count);
            hi = std::max(hi, count);
        }
        if (hi - lo > 1) {
            return false;
        }
    }
    return true;
}

struct FoundFixedLetter {
    std::string word; // rendered composition word
    char letter;
};

/// First composition word (by depth, then lexicographically) of depth <= `depth`
/// whose realization maps some letter to itself.
inline std::optional<FoundFixedLetter> brute_fixed_letter(const GeneratorSet& g, std::size_t depth,
                                                          std::size_t cap = 1'000'000)
{
    NaiveSystem sys(g);
    check_cap(sys.names.size(), depth, cap);
    for (std::size_t d = 1; d <= depth; ++d) {
        for (const auto& w : sys.words_of_depth(d)) {
            for (char a : sys.letters) {
                if (sys.apply_word(w, std::string(1, a)) == std::string(1, a)) {
                    return FoundFixedLetter{sys.render(w), a};
                }
            }
        }
    }
    return std::nullopt;
}

/// Claimed equality of two composition words as substitutions.
struct RelationClaim {
    std::string left;
    std::string right;
};

inline std::vector<std::size_t> parse_naive_word(const NaiveSystem& sys, std::string_view text)
{
    std::vector<std::size_t> out;
    bool single = std::all_of(sys.names.begin(), sys.names.end(), [](const std::string& n) { return n.size() == 1; });
    auto lookup = [&](std::string_view name) {
        for (std::size_t i = 0; i < sys.names.size(); ++i) {
            if (sys.names[i] == name) {
                return i;
            }
        }
        throw UnknownGenerator(std::string(name));
    };
    if (single && text.find('.') == std::string_view::npos) {
        for (char c : text) {
            out.push_back(lookup(std::string_view(&c, 1)));
        }
    } else {
        std::size_t start = 0;
        for (;;) {
            auto end = text.find('.', start);
            out.push_back(lookup(text.substr(start, end == std::string_view::npos ? end : end - start)));
            if (end == std::string_view::npos) {
                break;
            }
            start = end + 1;
        }
    }
    if (out.empty()) {
        throw ValidationError("composition words are nonempty");
    }
    return out;
}

/// Realizes both sides and compares their images letter by letter.
inline bool check_relation(const GeneratorSet& g, const RelationClaim& claim)
{
    NaiveSystem sys(g);
    auto left = parse_naive_word(sys, claim.left);
    auto right = parse_naive_word(sys, claim.right);
    return sys.realize(left) == sys.realize(right);
}

struct NormalFormReport {
    std::string outer;
    std::string inner;
    std::size_t depth;
    std::size_t checked = 0;
    std::vector<std::string> exceptions; // words equal to no outer^m ∘ inner^n
    /// Normal form found for each covered word, as (word, m, n).
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> covered;
};

/// For every composition word of depth 1..depth, looks for m + n <= depth, not both
/// zero, with realize(word) == outer^m ∘ inner^n.
inline NormalFormReport normal_form_coverage(const GeneratorSet& g, std::size_t depth, std::string_view outer,
                                             std::string_view inner, std::size_t cap = 1'000'000)
{
    NaiveSystem sys(g);
    check_cap(sys.names.size(), depth, cap);
    auto outer_w = parse_naive_word(sys, outer);
    auto inner_w = parse_naive_word(sys, inner);
    if (outer_w.size() != 1 || inner_w.size() != 1) {
        throw ValidationError("normal form generators must be single generator names");
    }

    std::map<std::vector<std::string>, std::pair<std::size_t, std::size_t>> forms;
    for (std::size_t m = 0; m <= depth; ++m) {
        for (std::size_t n = 0; m + n <= depth; ++n) {
            if (m + n == 0) {
                continue;
            }
            std::vector<std::size_t> w(m, outer_w.front());
            w.insert(w.end(), n, inner_w.front());
            forms.emplace(sys.realize(w), std::make_pair(m, n));
        }
    }

    NormalFormReport report{std::string(outer), std::string(inner), depth, 0, {}, {}};
    for (std::size_t d = 1; d <= depth; ++d) {
        for (const auto& w : sys.words_of_depth(d)) {
            ++report.checked;
            auto it = forms.find(sys.realize(w));
            if (it == forms.end()) {
                report.exceptions.push_back(sys.render(w));
            } else {
                report.covered.emplace_back(sys.render(w), it->second.first, it->second.second);
            }
        }
    }
    return report;
}

/// k-prefixes of F(w)(a) over all words of exactly `depth` generators and letters
/// in `letters`, from fully materialized images. Short images are left out.
inline std::set<std::string> brute_limit_language(const GeneratorSet& g, std::string_view letters, std::size_t depth,
                                                  std::size_t k)
{
    NaiveSystem sys(g);
    std::set<std::string> out;
    for (const auto& w : sys.words_of_depth(depth)) {
        for (char a : letters) {
            auto u = sys.apply_word(w, std::string(1, a));
            if (u.size() >= k) {
                out.insert(u.substr(0, k));
            }
        }
    }
    return out;
}

/// Minimum image length over all words of exactly `depth` generators, materialized.
inline std::size_t brute_min_image_length(const GeneratorSet& g, std::size_t depth)
{
    NaiveSystem sys(g);
    std::size_t best = static_cast<std::size_t>(-1);
    for (const auto& w : sys.words_of_depth(depth)) {
        for (const auto& img : sys.realize(w)) {
            best = std::min(best, img.size());
        }
    }
    return best;
}

/// All distinct factors of length k of w.
inline std::set<std::string> factors(std::string_view w, std::size_t k)
{
    std::set<std::string> out;
    for (std::size_t i = 0; i + k <= w.size(); ++i) {
        out.emplace(w.substr(i, k));
    }
    return out;
}

/// Strongly connected components by transitive closure: repeated squaring of the
/// boolean reachability relation until it stops growing.
struct BruteComponents {
    std::vector<std::string> components; // letters in alphabet order, sorted by least letter
    std::vector<bool> terminal;
    std::string non_recurrent;
};

inline BruteComponents brute_components(const std::string& letters,
                                        const std::vector<std::pair<char, char>>& edges)
{
    const std::size_t n = letters.size();
    auto idx = [&](char c) { return letters.find(c); };
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto [s, t] : edges) {
        reach[idx(s)][idx(t)] = true;
    }
    for (;;) {
        auto next = reach;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!reach[i][k]) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    if (reach[k][j]) {
                        next[i][j] = true;
                    }
                }
            }
        }
        if (next == reach) {
            break;
        }
        reach = std::move(next);
    }

    BruteComponents out;
    std::vector<bool> placed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (!reach[i][i]) {
            out.non_recurrent += letters[i];
            continue;
        }
        if (placed[i]) {
            continue;
        }
        std::string comp;
        for (std::size_t j = 0; j < n; ++j) {
            if (reach[j][j] && reach[i][j] && reach[j][i]) {
                comp += letters[j];
                placed[j] = true;
            }
        }
        bool terminal = true;
        for (char c : comp) {
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[idx(c)][j] && comp.find(letters[j]) == std::string::npos) {
                    terminal = false;
                }
            }
        }
        out.components.push_back(comp);
        out.terminal.push_back(terminal);
    }
    return out;
}

} // namespace subsemigroup::oracle
