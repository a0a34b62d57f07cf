#pragma once

#include "subsemigroup/error.hpp"
#include "subsemigroup/words.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace subsemigroup {

/// Deduplicated set of length-k words in the alphabet's lexicographic order.
/// Finite-resolution stand-in for a set of infinite words.
class PrefixLanguage {
public:
    PrefixLanguage(Alphabet alphabet, std::size_t k, std::vector<std::string> words = {})
        : alphabet_(std::move(alphabet)), k_(k), words_(std::move(words))
    {
        for (const auto& w : words_) {
            check(w);
        }
        normalize();
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t resolution() const noexcept { return k_; }
    const std::vector<std::string>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }

    bool contains(std::string_view w) const
    {
        auto it = std::lower_bound(words_.begin(), words_.end(), w,
                                   [this](const std::string& x, std::string_view y) { return alphabet_.less(x, y); });
        return it != words_.end() && *it == w;
    }

    bool subset_of(const PrefixLanguage& other) const
    {
        return std::all_of(words_.begin(), words_.end(), [&](const std::string& w) { return other.contains(w); });
    }

    /// Members of this language missing from `other`.
    std::vector<std::string> minus(const PrefixLanguage& other) const
    {
        std::vector<std::string> out;
        for (const auto& w : words_) {
            if (!other.contains(w)) {
                out.push_back(w);
            }
        }
        return out;
    }

    friend bool operator==(const PrefixLanguage& a, const PrefixLanguage& b)
    {
        return a.alphabet_ == b.alphabet_ && a.k_ == b.k_ && a.words_ == b.words_;
    }

private:
    void check(const std::string& w) const
    {
        if (w.size() != k_) {
            throw ValidationError("prefix language member '" + w + "' does not have length " + std::to_string(k_));
        }
        if (auto c = alphabet_.first_foreign(w)) {
            throw ValidationError(std::string("letter '") + *c + "' is not in the alphabet");
        }
    }

    void normalize()
    {
        std::sort(words_.begin(), words_.end(),
                  [this](const std::string& x, const std::string& y) { return alphabet_.less(x, y); });
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

    Alphabet alphabet_;
    std::size_t k_;
    std::vector<std::string> words_;
};

} // namespace subsemigroup
