#include "systems.hpp"

#include <catch_amalgamated.hpp>

using namespace subsemigroup;
using namespace testing_support;

namespace {

std::string thue_morse_prefix(std::size_t n)
{
    std::string x = "a";
    while (x.size() < n) {
        std::string next;
        for (char c : x) {
            next += c == 'a' ? "ab" : "ba";
        }
        x = std::move(next);
    }
    return x.substr(0, n);
}

} // namespace

TEST_CASE("Thue-Morse hull members are factors", "[hull]")
{
    auto tm = thue_morse();
    auto h = hull_language(tm, 'a', 5, 6, 8);
    auto factors = oracle::factors(thue_morse_prefix(512), 6);
    for (const auto& w : h.words.words()) {
        CHECK(factors.contains(w));
    }
    CHECK(shift_invariance_check(h, tm).clean());
    CHECK(shift_invariance_check(h, tm).checked > 0);
    CHECK_THROWS_AS(hull_language(tm, 'a', 3, 6, 8), ResolutionUnreachable);
    CHECK_THROWS_AS(hull_language(sturmian(), 'a', 8, 6, 2), PreconditionError);
}

TEST_CASE("budget-0 hulls are limit languages", "[hull]")
{
    for (const auto& g : {thue_morse(), fibonacci(), collapsing()}) {
        for (char a : g.alphabet().letters()) {
            auto h = hull_language(g, a, 6, 5, 0);
            CHECK(h.words == limit_language(g, std::string(1, a), 6, 5).language);
            CHECK(shift_invariance_check(h, g).checked == 0);
        }
    }
}

TEST_CASE("hulls contain limit languages", "[hull]")
{
    RandomSystems gen(71);
    for (int n = 0; n < 40; ++n) {
        auto g = gen.fixed_letter_free_system(3, 2, 3);
        std::size_t depth = 1;
        while (min_image_length(g, depth) < 7) {
            ++depth;
        }
        if (depth > 10) {
            continue;
        }
        for (char a : g.alphabet().letters()) {
            auto h = hull_language(g, a, depth, 4, 3);
            CHECK(limit_language(g, std::string(1, a), depth, 4).language.subset_of(h.words));
            CHECK(shift_invariance_check(h, g).clean());
        }
    }
}

TEST_CASE("hull letter independence", "[hull]")
{
    CHECK(hull_equality_report(thue_morse(), 5, 6, 8).all_equal());
    auto fd = hull_equality_report(collapsing(), 6, 5, 6);
    CHECK(fd.all_equal());
    CHECK(fd.pairs.size() == 3);
    CHECK(fd.hulls[0].words.size() == 7);
    CHECK(min_image_length(collapsing(), 6) == 99);
    CHECK_THROWS_AS(hull_equality_report(make("ab", {{"f", {"aab", "bb"}}}), 3, 2, 1), PreconditionError);
}

TEST_CASE("Fibonacci hulls are balanced and shift invariant", "[hull]")
{
    auto fib = fibonacci();
    for (char a : fib.alphabet().letters()) {
        auto h = hull_language(fib, a, 7, 8, 4);
        for (const auto& w : h.words.words()) {
            CHECK(oracle::balanced(w, fib.alphabet()));
        }
        CHECK(shift_invariance_check(h, fib).clean());
    }
}

TEST_CASE("hulls are invariant under the generators", "[hull]")
{
    // A member is the k-prefix of shift_j(F(w)(a)); applying f gives a prefix of a
    // shift by at most j * (longest image) of F(f w)(a), one level deeper.
    for (const auto& g : {thue_morse(), collapsing(), fibonacci()}) {
        std::size_t longest = 0;
        for (const auto& f : g.generators()) {
            for (const auto& img : f.images()) {
                longest = std::max(longest, img.size());
            }
        }
        const std::size_t depth = 6;
        const std::size_t k = 4;
        const std::size_t budget = 2;
        for (char a : g.alphabet().letters()) {
            auto h = hull_language(g, a, depth, k, budget);
            auto deeper = hull_language(g, a, depth + 1, k, budget * longest);
            for (const auto& p : h.words.words()) {
                for (const auto& f : g.generators()) {
                    CHECK(deeper.words.contains(apply_prefix(f, p, k)));
                }
            }
        }
    }
}

TEST_CASE("hull size profile", "[hull]")
{
    const auto tm = thue_morse();
    auto p = hull_size_profile(tm, 'a', 5, 6, 8);
    REQUIRE(p.by_budget.size() == 9);
    CHECK(p.by_budget[0] == limit_language(tm, "a", 5, 6).language.size());
    for (std::size_t j = 1; j < p.by_budget.size(); ++j) {
        CHECK(p.by_budget[j] >= p.by_budget[j - 1]);
    }
    CHECK(p.by_budget.back() == hull_language(tm, 'a', 5, 6, 8).words.size());
    CHECK(p.next_depth_size == hull_language(tm, 'a', 6, 6, 8).words.size());
}
