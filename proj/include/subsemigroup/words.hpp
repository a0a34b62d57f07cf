#pragma once

#include "subsemigroup/error.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace subsemigroup {

/// Ordered finite set of single-character letters (at least two).
///
/// An Alphabet is a cheap handle onto immutable shared data; copies compare
/// equal to each other and to any alphabet built from the same letter string.
class Alphabet {
public:
    explicit Alphabet(std::string_view letters)
    {
        if (letters.size() < 2) {
            throw ValidationError("an alphabet needs at least two letters");
        }
        auto rep = std::make_shared<Rep>();
        rep->letters = std::string(letters);
        rep->index.fill(-1);
        for (std::size_t i = 0; i < letters.size(); ++i) {
            auto slot = static_cast<unsigned char>(letters[i]);
            if (rep->index[slot] != -1) {
                throw ValidationError(std::string("duplicate letter '") + letters[i] + "' in alphabet");
            }
            rep->index[slot] = static_cast<std::int16_t>(i);
        }
        rep_ = std::move(rep);
    }

    std::size_t size() const noexcept { return rep_->letters.size(); }
    std::string_view letters() const noexcept { return rep_->letters; }
    char letter(std::size_t i) const { return rep_->letters.at(i); }

    bool contains(char c) const noexcept { return rep_->index[static_cast<unsigned char>(c)] >= 0; }

    std::optional<std::size_t> index_of(char c) const noexcept
    {
        auto i = rep_->index[static_cast<unsigned char>(c)];
        if (i < 0) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(i);
    }

    /// Index of a letter known to be in the alphabet.
    std::size_t at(char c) const
    {
        auto i = index_of(c);
        if (!i) {
            throw ValidationError(std::string("letter '") + c + "' is not in the alphabet");
        }
        return *i;
    }

    /// First letter in `text` that is not in the alphabet, if any.
    std::optional<char> first_foreign(std::string_view text) const noexcept
    {
        for (char c : text) {
            if (!contains(c)) {
                return c;
            }
        }
        return std::nullopt;
    }

    /// Lexicographic order on words induced by the alphabet's letter order.
    bool less(std::string_view u, std::string_view v) const noexcept
    {
        return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(),
                                            [this](char x, char y) { return rank(x) < rank(y); });
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept
    {
        return a.rep_ == b.rep_ || a.rep_->letters == b.rep_->letters;
    }

private:
    struct Rep {
        std::string letters;
        std::array<std::int16_t, 256> index{};
    };

    int rank(char c) const noexcept { return rep_->index[static_cast<unsigned char>(c)]; }

    std::shared_ptr<const Rep> rep_;
};

/// Nonempty finite word over an alphabet.
class Word {
public:
    Word(Alphabet alphabet, std::string letters) : alphabet_(std::move(alphabet)), letters_(std::move(letters))
    {
        if (letters_.empty()) {
            throw EmptyWordError("the empty word is not a word");
        }
        if (auto c = alphabet_.first_foreign(letters_)) {
            throw ValidationError(std::string("letter '") + *c + "' is not in the alphabet");
        }
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::string& str() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    char front() const noexcept { return letters_.front(); }

    friend bool operator==(const Word& u, const Word& v) noexcept
    {
        return u.alphabet_ == v.alphabet_ && u.letters_ == v.letters_;
    }

private:
    Alphabet alphabet_;
    std::string letters_;
};

/// Finite resolution at which an infinite word is inspected: its first k letters.
struct PrefixRequest {
    std::size_t k;

    explicit PrefixRequest(std::size_t k_) : k(k_)
    {
        if (k == 0) {
            throw ValidationError("prefix resolution must be at least 1");
        }
    }
};

/// k-th letter (1-based), or nullopt past the end of the word (the sentinel
/// letter that never belongs to the alphabet).
inline std::optional<char> letter_at(std::string_view w, std::size_t k) noexcept
{
    if (k == 0 || k > w.size()) {
        return std::nullopt;
    }
    return w[k - 1];
}

inline std::optional<char> letter_at(const Word& w, std::size_t k) noexcept { return letter_at(w.str(), k); }

/// Exact value of the word metric: zero, or 2^-(n-1) where n is the first
/// position at which the sentinel-extended words disagree.
class Distance {
public:
    static Distance zero() noexcept { return Distance(); }
    static Distance at(std::size_t n) noexcept { return Distance(n); }

    bool is_zero() const noexcept { return !index_; }
    /// First disagreement position; only meaningful when !is_zero().
    std::size_t index() const noexcept { return index_.value_or(0); }

    /// Display value 2^-(n-1). Never used for decisions.
    double value() const noexcept
    {
        if (!index_) {
            return 0.0;
        }
        double v = 1.0;
        for (std::size_t i = 1; i < *index_; ++i) {
            v /= 2.0;
        }
        return v;
    }

    friend bool operator==(const Distance&, const Distance&) = default;

    /// Orders by metric value: zero first, then later disagreements before earlier ones.
    friend std::strong_ordering operator<=>(const Distance& a, const Distance& b) noexcept
    {
        if (a.is_zero() || b.is_zero()) {
            return b.is_zero() <=> a.is_zero();
        }
        return b.index() <=> a.index();
    }

private:
    Distance() = default;
    explicit Distance(std::size_t n) : index_(n) {}

    std::optional<std::size_t> index_;
};

inline Distance word_metric(std::string_view u, std::string_view v) noexcept
{
    if (u == v) {
        return Distance::zero();
    }
    auto [iu, iv] = std::mismatch(u.begin(), u.end(), v.begin(), v.end());
    return Distance::at(static_cast<std::size_t>(iu - u.begin()) + 1);
}

inline Distance word_metric(const Word& u, const Word& v)
{
    if (!(u.alphabet() == v.alphabet())) {
        throw AlphabetMismatch();
    }
    return word_metric(u.str(), v.str());
}

/// Drops the first j letters.
inline Word shift(const Word& w, std::size_t j)
{
    if (j >= w.size()) {
        throw EmptyWordError("shift by " + std::to_string(j) + " would empty a word of length "
                             + std::to_string(w.size()));
    }
    return Word(w.alphabet(), w.str().substr(j));
}

inline bool is_prefix(std::string_view p, std::string_view w) noexcept { return w.starts_with(p); }

inline bool is_prefix(const Word& p, const Word& w)
{
    if (!(p.alphabet() == w.alphabet())) {
        throw AlphabetMismatch();
    }
    return is_prefix(p.str(), w.str());
}

/// First k letters of w (all of w when it is shorter).
inline std::string_view truncate(std::string_view w, std::size_t k) noexcept { return w.substr(0, k); }

} // namespace subsemigroup
