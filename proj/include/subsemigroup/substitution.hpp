#pragma once

#include "subsemigroup/error.hpp"
#include "subsemigroup/length.hpp"
#include "subsemigroup/words.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subsemigroup {

/// Non-erasing morphism, stored as the image of each letter (indexed by the
/// letter's position in the alphabet).
class Substitution {
public:
    Substitution(Alphabet alphabet, std::vector<std::string> images, std::string name = {})
        : alphabet_(std::move(alphabet)), images_(std::move(images)), name_(std::move(name))
    {
        if (images_.size() != alphabet_.size()) {
            throw ValidationError("substitution must give one image per letter");
        }
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_[i].empty()) {
                throw ValidationError(std::string("image of '") + alphabet_.letter(i)
                                      + "' is empty: erasing morphism rejected");
            }
            if (auto c = alphabet_.first_foreign(images_[i])) {
                throw ValidationError(std::string("image of '") + alphabet_.letter(i) + "' uses letter '" + *c
                                      + "' outside the alphabet");
            }
        }
    }

    static Substitution from_map(const Alphabet& alphabet, const std::map<char, std::string>& images,
                                 std::string name = {})
    {
        std::vector<std::string> ordered;
        ordered.reserve(alphabet.size());
        for (char a : alphabet.letters()) {
            auto it = images.find(a);
            if (it == images.end()) {
                throw ValidationError(std::string("no image given for letter '") + a + "'");
            }
            ordered.push_back(it->second);
        }
        if (images.size() != alphabet.size()) {
            throw ValidationError("image given for a letter outside the alphabet");
        }
        return Substitution(alphabet, std::move(ordered), std::move(name));
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& images() const noexcept { return images_; }

    const std::string& image(char a) const { return images_[alphabet_.at(a)]; }
    const std::string& image_at(std::size_t i) const { return images_.at(i); }

    /// Letterwise equality of images; names are labels and do not participate.
    friend bool operator==(const Substitution& f, const Substitution& g) noexcept
    {
        return f.alphabet_ == g.alphabet_ && f.images_ == g.images_;
    }

private:
    Alphabet alphabet_;
    std::vector<std::string> images_;
    std::string name_;
};

/// Appends f(w) to out, stopping as soon as out holds `limit` letters.
inline void append_image(const Substitution& f, std::string_view w, std::string& out,
                         std::size_t limit = std::string::npos)
{
    const auto& alphabet = f.alphabet();
    for (char c : w) {
        if (out.size() >= limit) {
            return;
        }
        const auto& img = f.image_at(alphabet.at(c));
        out.append(img, 0, limit - out.size());
    }
}

/// First k letters of f(w). Since f is non-erasing, only the first k letters of w matter.
inline std::string apply_prefix(const Substitution& f, std::string_view w, std::size_t k)
{
    std::string out;
    out.reserve(k);
    append_image(f, truncate(w, k), out, k);
    return out;
}

inline Word apply(const Substitution& f, const Word& w)
{
    if (!(f.alphabet() == w.alphabet())) {
        throw AlphabetMismatch();
    }
    std::string out;
    append_image(f, w.str(), out);
    return Word(w.alphabet(), std::move(out));
}

/// f ∘ g: apply g first, then f.
inline Substitution compose(const Substitution& f, const Substitution& g)
{
    if (!(f.alphabet() == g.alphabet())) {
        throw AlphabetMismatch();
    }
    std::vector<std::string> images;
    images.reserve(g.images().size());
    for (const auto& img : g.images()) {
        std::string out;
        append_image(f, img, out);
        images.push_back(std::move(out));
    }
    return Substitution(f.alphabet(), std::move(images), f.name() + g.name());
}

/// f[a]: the first letter of f(a).
inline char first_letter(const Substitution& f, char a) { return f.image(a).front(); }

/// Exact per-letter image lengths |f(a)|, in alphabet order.
struct LengthVector {
    std::vector<Length> entries;

    const Length& operator[](std::size_t i) const { return entries[i]; }
    std::size_t size() const noexcept { return entries.size(); }

    Length min() const
    {
        Length m = entries.front();
        for (const auto& e : entries) {
            if (e < m) {
                m = e;
            }
        }
        return m;
    }

    friend bool operator==(const LengthVector&, const LengthVector&) = default;
};

inline LengthVector length_vector(const Substitution& f)
{
    LengthVector lv;
    lv.entries.reserve(f.images().size());
    for (const auto& img : f.images()) {
        lv.entries.emplace_back(img.size());
    }
    return lv;
}

/// Lengths of f ∘ g from the lengths of f: |f(g(a))| = sum over c in g(a) of |f(c)|.
inline LengthVector compose_lengths(const LengthVector& f_lengths, const Substitution& g)
{
    const auto& alphabet = g.alphabet();
    LengthVector lv;
    lv.entries.reserve(g.images().size());
    for (const auto& img : g.images()) {
        Length total = 0;
        for (char c : img) {
            total += f_lengths[alphabet.at(c)];
        }
        lv.entries.push_back(std::move(total));
    }
    return lv;
}

/// Some letter a with f(a) = a, if one exists.
inline std::optional<char> has_fixed_letter(const Substitution& f)
{
    for (std::size_t i = 0; i < f.images().size(); ++i) {
        const auto& img = f.image_at(i);
        if (img.size() == 1 && img.front() == f.alphabet().letter(i)) {
            return img.front();
        }
    }
    return std::nullopt;
}

/// Distinct letters (shorter, longer) with f(shorter) a prefix of f(longer).
struct PrefixCollision {
    char shorter;
    char longer;
};

/// Succeeds iff no image f(a) is a prefix of another image f(b), a != b.
/// Letters are scanned in alphabet order, so the first collision is deterministic.
inline std::optional<PrefixCollision> find_prefix_collision(const Substitution& f)
{
    const auto& alphabet = f.alphabet();
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        for (std::size_t j = 0; j < alphabet.size(); ++j) {
            if (i != j && is_prefix(f.image_at(i), f.image_at(j))) {
                return PrefixCollision{alphabet.letter(i), alphabet.letter(j)};
            }
        }
    }
    return std::nullopt;
}

inline bool is_prefix_injective(const Substitution& f) { return !find_prefix_collision(f).has_value(); }

/// A composite substitution known only up to a prefix resolution: each letter's
/// image is kept to at most `resolution` letters, alongside its exact length.
///
/// Because substitutions are non-erasing, the first k letters of P(u) depend only
/// on the first k letters of u, so right-composition P ∘ g stays exact at the
/// stored resolution without ever materializing full images.
class PrefixRealization {
public:
    PrefixRealization(const Substitution& f, std::size_t resolution) : alphabet_(f.alphabet()), resolution_(resolution)
    {
        prefixes_.reserve(f.images().size());
        for (const auto& img : f.images()) {
            prefixes_.push_back(img.substr(0, resolution_));
        }
        lengths_ = length_vector(f);
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t resolution() const noexcept { return resolution_; }
    const LengthVector& lengths() const noexcept { return lengths_; }
    const Length& length_at(std::size_t i) const { return lengths_[i]; }

    /// Stored prefix of the image of the i-th letter: min(resolution, |image|) letters.
    const std::string& prefix_at(std::size_t i) const { return prefixes_.at(i); }
    const std::string& prefix(char a) const { return prefixes_[alphabet_.at(a)]; }

    /// True when the stored prefix is the whole image.
    bool complete_at(std::size_t i) const { return lengths_[i] == Length(prefixes_[i].size()); }

    /// this ∘ g.
    PrefixRealization then(const Substitution& g) const
    {
        PrefixRealization out(alphabet_, resolution_);
        out.prefixes_.reserve(g.images().size());
        for (const auto& img : g.images()) {
            std::string p;
            for (char c : img) {
                if (p.size() >= resolution_) {
                    break;
                }
                p.append(prefixes_[alphabet_.at(c)], 0, resolution_ - p.size());
            }
            out.prefixes_.push_back(std::move(p));
        }
        out.lengths_ = compose_lengths(lengths_, g);
        return out;
    }

    /// First k letters of this(u), for k <= resolution.
    std::string apply_prefix(std::string_view u, std::size_t k) const
    {
        if (k > resolution_) {
            throw ResolutionUnreachable("requested " + std::to_string(k) + " letters from a realization held at "
                                        + std::to_string(resolution_));
        }
        std::string out;
        out.reserve(k);
        for (char c : u) {
            if (out.size() >= k) {
                break;
            }
            out.append(prefixes_[alphabet_.at(c)], 0, k - out.size());
        }
        return out;
    }

private:
    PrefixRealization(Alphabet alphabet, std::size_t resolution) : alphabet_(std::move(alphabet)), resolution_(resolution)
    {
    }

    Alphabet alphabet_;
    std::size_t resolution_;
    std::vector<std::string> prefixes_;
    LengthVector lengths_;
};

} // namespace subsemigroup
