#pragma once

#include "subsemigroup/error.hpp"
#include "subsemigroup/length.hpp"
#include "subsemigroup/substitution.hpp"
#include "subsemigroup/words.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subsemigroup {

/// Nonempty finite family of named substitutions over one alphabet.
///
/// Generators are kept sorted by name; index order is therefore the
/// lexicographic order used by every enumeration.
class GeneratorSet {
public:
    GeneratorSet(Alphabet alphabet, std::vector<Substitution> generators)
        : alphabet_(std::move(alphabet)), generators_(std::move(generators))
    {
        if (generators_.empty()) {
            throw ValidationError("a generating set needs at least one substitution");
        }
        std::sort(generators_.begin(), generators_.end(),
                  [](const Substitution& f, const Substitution& g) { return f.name() < g.name(); });
        single_char_names_ = true;
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            const auto& f = generators_[i];
            if (!(f.alphabet() == alphabet_)) {
                throw ValidationError("generator '" + f.name() + "' is over a different alphabet");
            }
            if (f.name().empty()) {
                throw ValidationError("generator names must be nonempty");
            }
            if (f.name().find_first_of(". \t\n") != std::string::npos) {
                throw ValidationError("generator name '" + f.name() + "' contains '.' or whitespace");
            }
            if (i > 0 && generators_[i - 1].name() == f.name()) {
                throw ValidationError("duplicate generator name '" + f.name() + "'");
            }
            single_char_names_ = single_char_names_ && f.name().size() == 1;
        }
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Substitution>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    const Substitution& operator[](std::size_t i) const { return generators_.at(i); }

    std::optional<std::size_t> find(std::string_view name) const
    {
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (generators_[i].name() == name) {
                return i;
            }
        }
        return std::nullopt;
    }

    const Substitution& by_name(std::string_view name) const
    {
        auto i = find(name);
        if (!i) {
            throw UnknownGenerator(std::string(name));
        }
        return generators_[*i];
    }

    /// Composition words are written by concatenating names when every name is a
    /// single character, and joined with '.' otherwise.
    bool single_char_names() const noexcept { return single_char_names_; }

private:
    Alphabet alphabet_;
    std::vector<Substitution> generators_;
    bool single_char_names_ = true;
};

/// Nonempty word f1 f2 ... fn over the generators, stored as generator indices.
/// It realizes to f1 ∘ f2 ∘ ... ∘ fn: the rightmost generator is applied first.
struct CompositionWord {
    std::vector<std::uint32_t> indices;

    std::size_t depth() const noexcept { return indices.size(); }

    friend bool operator==(const CompositionWord&, const CompositionWord&) = default;
    friend auto operator<=>(const CompositionWord& u, const CompositionWord& v)
    {
        // (depth, lexicographic)
        if (auto c = u.indices.size() <=> v.indices.size(); c != 0) {
            return c;
        }
        return u.indices <=> v.indices;
    }
};

inline std::string render(const GeneratorSet& g, const CompositionWord& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
        if (i > 0 && !g.single_char_names()) {
            out += '.';
        }
        out += g[w.indices[i]].name();
    }
    return out;
}

inline CompositionWord parse_composition(const GeneratorSet& g, std::string_view text)
{
    CompositionWord w;
    if (g.single_char_names() && text.find('.') == std::string_view::npos) {
        for (char c : text) {
            auto i = g.find(std::string_view(&c, 1));
            if (!i) {
                throw UnknownGenerator(std::string(1, c));
            }
            w.indices.push_back(static_cast<std::uint32_t>(*i));
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('.', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            auto name = text.substr(start, end - start);
            auto i = g.find(name);
            if (!i) {
                throw UnknownGenerator(std::string(name));
            }
            w.indices.push_back(static_cast<std::uint32_t>(*i));
            start = end + 1;
        }
    }
    if (w.indices.empty()) {
        throw ValidationError("composition words are nonempty");
    }
    return w;
}

/// Caps on enumeration size. The default matches the CLI's --max-enumeration.
struct EnumerationLimits {
    std::size_t max_words = 1'000'000;
};

/// Number of composition words of exactly `depth` letters, checked against the cap.
inline std::size_t checked_word_count(const GeneratorSet& g, std::size_t depth, const EnumerationLimits& limits)
{
    Length count = power(Length(g.size()), depth);
    if (count > Length(limits.max_words)) {
        throw ResourceLimitError(std::to_string(g.size()) + "^" + std::to_string(depth) + " = " + count.str()
                                 + " composition words exceeds the enumeration cap of "
                                 + std::to_string(limits.max_words));
    }
    return static_cast<std::size_t>(count);
}

/// Number of composition words of depth 1..depth, checked against the cap.
inline std::size_t checked_word_count_upto(const GeneratorSet& g, std::size_t depth, const EnumerationLimits& limits)
{
    Length total = 0;
    Length layer = 1;
    for (std::size_t d = 1; d <= depth; ++d) {
        layer *= g.size();
        total += layer;
    }
    if (total > Length(limits.max_words)) {
        throw ResourceLimitError(total.str() + " composition words up to depth " + std::to_string(depth)
                                 + " exceeds the enumeration cap of " + std::to_string(limits.max_words));
    }
    return static_cast<std::size_t>(total);
}

inline Substitution realize(const GeneratorSet& g, const CompositionWord& w)
{
    if (w.indices.empty()) {
        throw ValidationError("composition words are nonempty");
    }
    Substitution result = g[w.indices.front()];
    for (std::size_t i = 1; i < w.indices.size(); ++i) {
        result = compose(result, g[w.indices[i]]);
    }
    return Substitution(g.alphabet(), result.images(), render(g, w));
}

inline PrefixRealization realize_prefix(const GeneratorSet& g, const CompositionWord& w, std::size_t resolution)
{
    if (w.indices.empty()) {
        throw ValidationError("composition words are nonempty");
    }
    PrefixRealization result(g[w.indices.front()], resolution);
    for (std::size_t i = 1; i < w.indices.size(); ++i) {
        result = result.then(g[w.indices[i]]);
    }
    return result;
}

namespace detail {

template <typename Visitor>
void enumerate_from(const GeneratorSet& g, std::size_t depth, CompositionWord& word,
                    std::vector<PrefixRealization>& stack, Visitor& visit)
{
    if (word.depth() == depth) {
        visit(static_cast<const CompositionWord&>(word), static_cast<const PrefixRealization&>(stack.back()));
        return;
    }
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        word.indices.push_back(i);
        stack.push_back(stack.back().then(g[i]));
        enumerate_from(g, depth, word, stack, visit);
        stack.pop_back();
        word.indices.pop_back();
    }
}

} // namespace detail

/// Visits every composition word of exactly `depth` letters, in lexicographic
/// order of generator names, together with its realization at `resolution`.
template <typename Visitor>
void for_each_composition(const GeneratorSet& g, std::size_t depth, std::size_t resolution,
                          const EnumerationLimits& limits, Visitor&& visit)
{
    if (depth == 0) {
        throw ValidationError("composition depth must be at least 1");
    }
    checked_word_count(g, depth, limits);
    CompositionWord word;
    std::vector<PrefixRealization> stack;
    stack.reserve(depth);
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        word.indices.assign(1, i);
        stack.assign(1, PrefixRealization(g[i], resolution));
        detail::enumerate_from(g, depth, word, stack, visit);
    }
}

struct EnumeratedElement {
    CompositionWord word;
    PrefixRealization realization;
};

inline std::vector<EnumeratedElement> enumerate(const GeneratorSet& g, std::size_t depth, std::size_t resolution,
                                                const EnumerationLimits& limits = {})
{
    std::vector<EnumeratedElement> out;
    out.reserve(checked_word_count(g, depth, limits));
    for_each_composition(g, depth, resolution, limits,
                         [&](const CompositionWord& w, const PrefixRealization& r) { out.push_back({w, r}); });
    return out;
}

/// Visits composition words of depth 1..depth in (depth, lexicographic) order
/// with their first-letter maps (index of f[a] for each letter index a).
template <typename Visitor>
void for_each_first_letter_map(const GeneratorSet& g, std::size_t depth, const EnumerationLimits& limits,
                               Visitor&& visit)
{
    if (depth == 0) {
        throw ValidationError("composition depth must be at least 1");
    }
    checked_word_count_upto(g, depth, limits);
    const auto& alphabet = g.alphabet();
    std::vector<std::vector<std::size_t>> generator_maps;
    for (const auto& f : g.generators()) {
        std::vector<std::size_t> m;
        for (const auto& img : f.images()) {
            m.push_back(alphabet.at(img.front()));
        }
        generator_maps.push_back(std::move(m));
    }
    // Breadth-first by depth keeps the (depth, lexicographic) order.
    std::vector<std::pair<CompositionWord, std::vector<std::size_t>>> layer;
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        layer.push_back({CompositionWord{{i}}, generator_maps[i]});
    }
    for (std::size_t d = 1;; ++d) {
        for (const auto& [w, m] : layer) {
            visit(w, m);
        }
        if (d == depth) {
            break;
        }
        std::vector<std::pair<CompositionWord, std::vector<std::size_t>>> next;
        next.reserve(layer.size() * g.size());
        for (const auto& [w, m] : layer) {
            for (std::uint32_t i = 0; i < g.size(); ++i) {
                // (P ∘ f)[a] = P[f[a]]
                std::vector<std::size_t> composed(m.size());
                for (std::size_t a = 0; a < m.size(); ++a) {
                    composed[a] = m[generator_maps[i][a]];
                }
                CompositionWord extended = w;
                extended.indices.push_back(i);
                next.push_back({std::move(extended), std::move(composed)});
            }
        }
        layer = std::move(next);
    }
}

/// A composition word that fixes a letter: realize(word)(letter) == letter.
struct FixedLetterWitness {
    CompositionWord word;
    char letter;
};

/// Decides whether no element of the semigroup fixes a letter.
///
/// Edges a -> b for each generator f with f(a) = b a single letter. The semigroup
/// has a fixed letter iff this graph has a directed cycle: a fixed letter forces
/// single-letter images all along its orbit, and any cycle composes to a fixed
/// letter. On a cycle a = c0 -x1-> c1 -x2-> ... -xm-> c0 the witness word is
/// xm ... x2 x1, since x1 acts first.
inline std::optional<FixedLetterWitness> find_fixed_letter(const GeneratorSet& g)
{
    const auto& alphabet = g.alphabet();
    const std::size_t n = alphabet.size();
    struct Edge {
        std::size_t target;
        std::uint32_t generator;
    };
    std::vector<std::vector<Edge>> edges(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::uint32_t i = 0; i < g.size(); ++i) {
            const auto& img = g[i].image_at(a);
            if (img.size() == 1) {
                edges[a].push_back({alphabet.at(img.front()), i});
            }
        }
    }

    enum class Mark : std::uint8_t { unvisited, on_path, done };
    std::vector<Mark> mark(n, Mark::unvisited);
    std::vector<std::size_t> path;
    std::vector<std::uint32_t> via; // via[i] labels the edge path[i] -> path[i+1]

    for (std::size_t root = 0; root < n; ++root) {
        if (mark[root] != Mark::unvisited) {
            continue;
        }
        // Iterative DFS; next_edge[v] is the next outgoing edge to try.
        std::vector<std::size_t> next_edge(n, 0);
        path.assign(1, root);
        via.clear();
        mark[root] = Mark::on_path;
        while (!path.empty()) {
            std::size_t v = path.back();
            if (next_edge[v] == edges[v].size()) {
                mark[v] = Mark::done;
                path.pop_back();
                if (!via.empty()) {
                    via.pop_back();
                }
                continue;
            }
            const Edge e = edges[v][next_edge[v]++];
            if (mark[e.target] == Mark::on_path) {
                auto start = static_cast<std::size_t>(std::find(path.begin(), path.end(), e.target) - path.begin());
                std::vector<std::uint32_t> labels(via.begin() + static_cast<std::ptrdiff_t>(start), via.end());
                labels.push_back(e.generator);
                FixedLetterWitness witness{CompositionWord{{labels.rbegin(), labels.rend()}},
                                           alphabet.letter(e.target)};
                return witness;
            }
            if (mark[e.target] == Mark::unvisited) {
                mark[e.target] = Mark::on_path;
                path.push_back(e.target);
                via.push_back(e.generator);
            }
        }
    }
    return std::nullopt;
}

inline bool fixed_letter_free(const GeneratorSet& g) { return !find_fixed_letter(g).has_value(); }

inline void require_fixed_letter_free(const GeneratorSet& g)
{
    if (auto w = find_fixed_letter(g)) {
        throw PreconditionError("the semigroup is not fixed-letter-free: " + render(g, w->word) + " fixes '"
                                + std::string(1, w->letter) + "'");
    }
}

/// Minimum of |F(w)(a)| over all composition words w of exactly `depth` letters
/// and all letters a.
///
/// Works on length vectors only. Lengths compose as ℓ(P ∘ f) = N_f ℓ(P) with N_f
/// the nonnegative letter-count matrix of f, so a vector dominated entrywise by
/// another can never produce a smaller minimum and is discarded. The cap bounds
/// the surviving frontier.
inline Length min_image_length(const GeneratorSet& g, std::size_t depth, const EnumerationLimits& limits = {})
{
    if (depth == 0) {
        throw ValidationError("composition depth must be at least 1");
    }
    auto dominates = [](const LengthVector& u, const LengthVector& v) {
        // u <= v entrywise
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] > v[i]) {
                return false;
            }
        }
        return true;
    };

    std::vector<LengthVector> frontier;
    auto insert = [&](std::vector<LengthVector>& into, LengthVector v) {
        for (const auto& u : into) {
            if (dominates(u, v)) {
                return;
            }
        }
        std::erase_if(into, [&](const LengthVector& u) { return dominates(v, u); });
        into.push_back(std::move(v));
    };

    for (const auto& f : g.generators()) {
        insert(frontier, length_vector(f));
    }
    for (std::size_t d = 2; d <= depth; ++d) {
        std::vector<LengthVector> next;
        for (const auto& lv : frontier) {
            for (const auto& f : g.generators()) {
                insert(next, compose_lengths(lv, f));
                if (next.size() > limits.max_words) {
                    throw ResourceLimitError("length frontier at depth " + std::to_string(d)
                                             + " exceeds the enumeration cap of " + std::to_string(limits.max_words));
                }
            }
        }
        frontier = std::move(next);
    }

    Length best = frontier.front().min();
    for (const auto& lv : frontier) {
        auto m = lv.min();
        if (m < best) {
            best = m;
        }
    }
    return best;
}

/// Family length r: the least |f(a)| over generators f and letters a.
inline std::size_t family_length(const GeneratorSet& g)
{
    std::size_t r = std::numeric_limits<std::size_t>::max();
    for (const auto& f : g.generators()) {
        for (const auto& img : f.images()) {
            r = std::min(r, img.size());
        }
    }
    return r;
}

/// Validates a letter set against the alphabet; returns it deduplicated in alphabet order.
inline std::string normalize_letters(const Alphabet& alphabet, std::string_view letters)
{
    if (auto c = alphabet.first_foreign(letters)) {
        throw ValidationError(std::string("letter '") + *c + "' is not in the alphabet");
    }
    std::string out;
    for (char a : alphabet.letters()) {
        if (letters.find(a) != std::string_view::npos) {
            out += a;
        }
    }
    return out;
}

/// Transitive closure of "b occurs in f(a) for some generator f", as a boolean matrix.
inline std::vector<std::vector<bool>> occurrence_closure(const GeneratorSet& g)
{
    const auto& alphabet = g.alphabet();
    const std::size_t n = alphabet.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
        for (const auto& f : g.generators()) {
            for (char c : f.image_at(a)) {
                reach[a][alphabet.at(c)] = true;
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[k][j]) {
                    reach[i][j] = true;
                }
            }
        }
    }
    return reach;
}

/// Every letter eventually produces every letter.
inline bool is_irreducible(const GeneratorSet& g)
{
    for (const auto& row : occurrence_closure(g)) {
        if (std::find(row.begin(), row.end(), false) != row.end()) {
            return false;
        }
    }
    return true;
}

} // namespace subsemigroup
