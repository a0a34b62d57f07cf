#pragma once

#include "subsemigroup/semigroup.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace subsemigroup {

/// Upper bound log_r(s) on the logarithmic Hausdorff dimension of the forward
/// limit set, where r is the family length and s the family size.
struct DimensionReport {
    Length r;
    std::size_t s = 0;
    bool applicable = false; // r > 1
    /// log_r(s) = numerator / denominator when r^numerator == s^denominator.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> rational;
    /// Decimal rendering, at most 12 fractional digits, trailing zeros trimmed
    /// ("2.0", "0.630929753571"). Empty when not applicable.
    std::string decimal;
};

namespace detail {

inline long double log_of(const Length& x)
{
    // ln(x) = ln(x / 2^e) + e ln 2, keeping the mantissa in long double range.
    std::size_t bits = boost::multiprecision::msb(x) + 1;
    std::size_t e = bits > 60 ? bits - 60 : 0;
    Length mantissa = x >> e;
    return std::log(static_cast<long double>(mantissa.convert_to<std::uint64_t>()))
        + static_cast<long double>(e) * std::log(2.0L);
}

/// Renders a nonnegative value with 12 fractional digits, trimming trailing zeros
/// but keeping at least one.
inline std::string render_decimal(std::uint64_t numerator, std::uint64_t denominator)
{
    // Exact long division with round-half-up at the 12th digit.
    std::uint64_t whole = numerator / denominator;
    std::uint64_t rem = numerator % denominator;
    std::string digits;
    for (int i = 0; i < 13; ++i) {
        rem *= 10;
        digits += static_cast<char>('0' + rem / denominator);
        rem %= denominator;
    }
    bool round_up = digits.back() >= '5';
    digits.pop_back();
    if (round_up) {
        int i = static_cast<int>(digits.size()) - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == '9') {
            digits[static_cast<std::size_t>(i)] = '0';
            --i;
        }
        if (i < 0) {
            ++whole;
        } else {
            ++digits[static_cast<std::size_t>(i)];
        }
    }
    while (digits.size() > 1 && digits.back() == '0') {
        digits.pop_back();
    }
    return std::to_string(whole) + "." + digits;
}

inline std::string render_decimal(long double value)
{
    // 12 fractional digits as an exact rational approximation.
    constexpr std::uint64_t scale = 1'000'000'000'000ULL;
    auto scaled = static_cast<std::uint64_t>(std::llround(value * static_cast<long double>(scale)));
    return render_decimal(scaled, scale);
}

} // namespace detail

/// Exponent p/q with r^p = s^q, searched among continued-fraction convergents of
/// log_r(s) with small denominators. Exact: every candidate is verified in integers.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> rational_log(const Length& r, std::size_t s)
{
    if (r <= 1 || s == 0) {
        return std::nullopt;
    }
    if (s == 1) {
        return std::make_pair<std::uint64_t, std::uint64_t>(0, 1);
    }
    long double x = detail::log_of(Length(s)) / detail::log_of(r);
    // Convergents h/k of x.
    std::uint64_t h_prev = 1, h = static_cast<std::uint64_t>(std::floor(x));
    std::uint64_t k_prev = 0, k = 1;
    long double frac = x - std::floor(x);
    for (int step = 0; step < 12; ++step) {
        if (k > 64) {
            break;
        }
        if (h > 0 && power(r, static_cast<std::size_t>(h)) == power(Length(s), static_cast<std::size_t>(k))) {
            return std::make_pair(h, k);
        }
        if (frac < 1e-15L) {
            break;
        }
        long double inv = 1.0L / frac;
        auto a = static_cast<std::uint64_t>(std::floor(inv));
        frac = inv - std::floor(inv);
        std::uint64_t h_next = a * h + h_prev;
        std::uint64_t k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    return std::nullopt;
}

inline DimensionReport dimension_bound(const GeneratorSet& g)
{
    DimensionReport report;
    report.r = Length(family_length(g));
    report.s = g.size();
    report.applicable = report.r > 1;
    if (!report.applicable) {
        return report;
    }
    report.rational = rational_log(report.r, report.s);
    if (report.rational) {
        report.decimal = detail::render_decimal(report.rational->first, report.rational->second);
    } else {
        report.decimal = detail::render_decimal(detail::log_of(Length(report.s)) / detail::log_of(report.r));
    }
    return report;
}

/// All |F|^k composites of depth k, named by their composition words. The new
/// family generates a semigroup with the same forward limit set and a family
/// length of at least r^k.
inline GeneratorSet power_generating_set(const GeneratorSet& g, std::size_t k, const EnumerationLimits& limits = {})
{
    if (k == 0) {
        throw ValidationError("power must be at least 1");
    }
    if (k == 1) {
        return g;
    }
    checked_word_count(g, k, limits);
    std::vector<Substitution> generators;
    // Enumerate words in lexicographic order, realizing left to right.
    std::vector<std::uint32_t> digits(k, 0);
    for (;;) {
        CompositionWord w{digits};
        auto f = realize(g, w);
        generators.push_back(Substitution(g.alphabet(), f.images(), render(g, w)));
        std::size_t pos = k;
        while (pos > 0 && digits[pos - 1] + 1 == g.size()) {
            digits[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++digits[pos - 1];
    }
    return GeneratorSet(g.alphabet(), std::move(generators));
}

namespace detail {

inline std::string generator_name(std::size_t i, std::size_t count)
{
    static constexpr std::string_view names = "fghijklmnopqrstuvwxyz";
    if (count <= names.size()) {
        return std::string(1, names[i]);
    }
    return "f" + std::to_string(i + 1);
}

} // namespace detail

/// Family of s substitutions of length exactly r attaining the dimension bound:
/// for each letter a, the s images of a are the lexicographically least distinct
/// words of length r that start with a, the i-th going to the i-th generator.
inline GeneratorSet extremal_family(const Alphabet& alphabet, std::size_t r, std::size_t s)
{
    if (r < 2) {
        throw ValidationError("family length r must be greater than 1");
    }
    if (s == 0) {
        throw ValidationError("family size s must be positive");
    }
    const Length capacity = power(Length(alphabet.size()), r - 1);
    if (Length(s) > capacity) {
        throw ValidationError("s = " + std::to_string(s) + " exceeds |alphabet|^(r-1) = " + capacity.str());
    }
    const std::size_t base = alphabet.size();
    std::vector<Substitution> generators;
    for (std::size_t i = 0; i < s; ++i) {
        // Suffix: i written in base |alphabet| with r - 1 digits, most significant first.
        std::string suffix(r - 1, alphabet.letter(0));
        std::size_t n = i;
        for (std::size_t pos = r - 1; pos > 0 && n > 0; --pos) {
            suffix[pos - 1] = alphabet.letter(n % base);
            n /= base;
        }
        std::vector<std::string> images;
        for (char a : alphabet.letters()) {
            images.push_back(std::string(1, a) + suffix);
        }
        generators.emplace_back(alphabet, std::move(images), detail::generator_name(i, s));
    }
    return GeneratorSet(alphabet, std::move(generators));
}

struct Collision {
    char letter;
    CompositionWord first;
    CompositionWord second;
};

struct DistinctnessReport {
    std::size_t depth;
    bool distinct = true;
    std::vector<Collision> collisions; // first collision per letter, letters in alphabet order
};

/// For each letter a, whether the s^n images F(w)(a), |w| = n, are pairwise distinct.
/// Images are materialized in full.
inline DistinctnessReport distinctness_check(const GeneratorSet& g, std::size_t n, const EnumerationLimits& limits = {})
{
    constexpr std::size_t letter_budget = 200'000'000;
    const std::size_t count = checked_word_count(g, n, limits);
    std::size_t longest = 0;
    for (const auto& f : g.generators()) {
        for (const auto& img : f.images()) {
            longest = std::max(longest, img.size());
        }
    }
    if (power(Length(longest), n) * count * g.alphabet().size() > Length(letter_budget)) {
        throw ResourceLimitError("materializing all depth-" + std::to_string(n) + " images would exceed "
                                 + std::to_string(letter_budget) + " letters");
    }

    std::vector<CompositionWord> words;
    std::vector<Substitution> realized;
    words.reserve(count);
    realized.reserve(count);
    for_each_composition(g, n, 1, limits, [&](const CompositionWord& w, const PrefixRealization&) {
        words.push_back(w);
        realized.push_back(realize(g, w));
    });

    DistinctnessReport report{n, true, {}};
    for (std::size_t a = 0; a < g.alphabet().size(); ++a) {
        std::unordered_map<std::string_view, std::size_t> seen;
        for (std::size_t i = 0; i < words.size(); ++i) {
            auto [it, inserted] = seen.emplace(realized[i].image_at(a), i);
            if (!inserted) {
                report.distinct = false;
                report.collisions.push_back({g.alphabet().letter(a), words[it->second], words[i]});
                break;
            }
        }
    }
    return report;
}

} // namespace subsemigroup
