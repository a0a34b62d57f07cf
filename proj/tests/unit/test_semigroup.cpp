#include "systems.hpp"

#include <catch_amalgamated.hpp>

using namespace subsemigroup;
using namespace testing_support;

namespace {

CompositionWord word(const GeneratorSet& g, std::string_view text) { return parse_composition(g, text); }

} // namespace

TEST_CASE("generator sets validate names and alphabets", "[semigroup]")
{
    Alphabet ab("ab");
    Alphabet abc("abc");
    CHECK_THROWS_AS(GeneratorSet(ab, {}), ValidationError);
    CHECK_THROWS_AS(GeneratorSet(ab, {Substitution(ab, {"a", "b"}, "f"), Substitution(ab, {"b", "a"}, "f")}),
                    ValidationError);
    CHECK_THROWS_AS(GeneratorSet(ab, {Substitution(abc, {"a", "b", "c"}, "f")}), ValidationError);
    CHECK_THROWS_AS(GeneratorSet(ab, {Substitution(ab, {"a", "b"}, "f.g")}), ValidationError);
    auto g = GeneratorSet(ab, {Substitution(ab, {"ab", "b"}, "g"), Substitution(ab, {"a", "ba"}, "f")});
    CHECK(g[0].name() == "f");
    CHECK_THROWS_AS(g.by_name("x"), UnknownGenerator);
}

TEST_CASE("composition words render and parse", "[semigroup]")
{
    auto tm = thue_morse();
    CHECK(render(tm, word(tm, "fgg")) == "fgg");
    CHECK_THROWS_AS(word(tm, "fx"), UnknownGenerator);
    CHECK_THROWS_AS(word(tm, ""), ValidationError);

    auto multi = power_generating_set(fibonacci(), 2);
    auto w = word(multi, "fg.gg");
    CHECK(w.depth() == 2);
    CHECK(render(multi, w) == "fg.gg");
}

TEST_CASE("realize", "[semigroup]")
{
    auto tm = thue_morse();
    auto ff = realize(tm, word(tm, "ff"));
    CHECK(ff.image('a') == "abba");
    CHECK(ff.image('b') == "baab");

    auto st = sturmian();
    auto k = realize(st, word(st, "fg"));
    CHECK(k.image('a') == "aab");
    CHECK(k.image('b') == "ab");
    CHECK(realize(st, word(st, "h")) == st.by_name("h"));
}

TEST_CASE("realization is a homomorphism from words to composition", "[semigroup]")
{
    RandomSystems gen(21);
    for (int n = 0; n < 300; ++n) {
        auto g = gen.system(3, 3, 3);
        CompositionWord w;
        const std::size_t depth = 2 + gen.below(5);
        for (std::size_t i = 0; i < depth; ++i) {
            w.indices.push_back(static_cast<std::uint32_t>(gen.below(g.size())));
        }
        const std::size_t split = 1 + gen.below(depth - 1);
        CompositionWord left{{w.indices.begin(), w.indices.begin() + static_cast<long>(split)}};
        CompositionWord right{{w.indices.begin() + static_cast<long>(split), w.indices.end()}};
        CHECK(realize(g, w) == compose(realize(g, left), realize(g, right)));

        // Prefix realizations agree with truncated full realizations.
        auto full = realize(g, w);
        auto pr = realize_prefix(g, w, 7);
        for (std::size_t a = 0; a < g.alphabet().size(); ++a) {
            CHECK(pr.prefix_at(a) == full.image_at(a).substr(0, 7));
            CHECK(pr.length_at(a) == full.image_at(a).size());
        }
    }
}

TEST_CASE("enumeration", "[semigroup]")
{
    auto tm = thue_morse();
    auto els = enumerate(tm, 2, 4);
    REQUIRE(els.size() == 4);
    std::vector<std::string> names;
    for (const auto& e : els) {
        names.push_back(render(tm, e.word));
    }
    CHECK(names == std::vector<std::string>{"ff", "fg", "gf", "gg"});

    auto fib = fibonacci();
    auto power = power_generating_set(fib, 2);
    auto fib2 = enumerate(fib, 2, 8);
    REQUIRE(fib2.size() == power.size());
    for (std::size_t i = 0; i < fib2.size(); ++i) {
        CHECK(realize(fib, fib2[i].word) == power[i]);
    }

    auto depth1 = enumerate(fib, 1, 8);
    REQUIRE(depth1.size() == 2);
    CHECK(depth1[0].word.indices == std::vector<std::uint32_t>{0});

    // Deterministic.
    auto again = enumerate(fib, 2, 8);
    for (std::size_t i = 0; i < fib2.size(); ++i) {
        CHECK(again[i].word == fib2[i].word);
    }

    EnumerationLimits tiny{3};
    CHECK_THROWS_AS(enumerate(tm, 2, 4, tiny), ResourceLimitError);
}

TEST_CASE("fixed-letter-free decision", "[semigroup]")
{
    auto ex = fixed_letter_pair();
    auto w = find_fixed_letter(ex);
    REQUIRE(w);
    CHECK(w->word.depth() == 1);
    CHECK(w->letter == 'a');
    CHECK(fixed_letter_free(thue_morse()));
    CHECK(fixed_letter_free(fibonacci()));

    auto st = sturmian();
    auto sw = find_fixed_letter(st);
    REQUIRE(sw);
    CHECK(sw->word.depth() == 2);
    // The witness really fixes its letter; h o h is one such word.
    CHECK(realize(st, sw->word).image(sw->letter) == std::string(1, sw->letter));
    CHECK(realize(st, word(st, "hh")).image('a') == "a");
    CHECK_THROWS_AS(require_fixed_letter_free(st), PreconditionError);
}

TEST_CASE("fixed-letter witnesses are genuine on random systems", "[semigroup]")
{
    RandomSystems gen(22);
    for (int n = 0; n < 500; ++n) {
        auto g = gen.system(4, 3, 2);
        if (auto w = find_fixed_letter(g)) {
            CHECK(w->word.depth() <= g.alphabet().size());
            CHECK(realize(g, w->word).image(w->letter) == std::string(1, w->letter));
        }
    }
}

TEST_CASE("min_image_length", "[semigroup]")
{
    auto tm = thue_morse();
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(min_image_length(tm, n) == Length(1) << n);
    }
    CHECK(min_image_length(tm, 80) == Length(1) << 80);
    auto fib = fibonacci();
    CHECK(min_image_length(fib, 1) == 1);
    CHECK(min_image_length(power_generating_set(fib, 2), 1) == 2);
    CHECK(min_image_length(fib, 6) == 13);
    CHECK(min_image_length(fib, 7) == 21);
    CHECK(min_image_length(fib, 8) == 34);
    CHECK(family_length(fib) == 1);
    CHECK(family_length(tm) == 2);
}

TEST_CASE("min_image_length matches materialized minimum", "[semigroup]")
{
    RandomSystems gen(23);
    for (int n = 0; n < 150; ++n) {
        auto g = gen.system(3, 3, 3);
        for (std::size_t d = 1; d <= 5; ++d) {
            CHECK(min_image_length(g, d) == oracle::brute_min_image_length(g, d));
        }
    }
}

TEST_CASE("minimal lengths grow for fixed-letter-free systems", "[semigroup]")
{
    RandomSystems gen(24);
    for (int n = 0; n < 100; ++n) {
        auto g = gen.fixed_letter_free_system(4, 3, 3);
        const std::size_t s = g.alphabet().size();
        for (std::size_t d = 1; d <= 10; ++d) {
            CHECK(min_image_length(g, d + 1) >= min_image_length(g, d));
            CHECK(min_image_length(g, d + s) > min_image_length(g, d));
        }
    }
}

TEST_CASE("irreducibility", "[semigroup]")
{
    CHECK(is_irreducible(thue_morse()));
    CHECK(is_irreducible(collapsing()));
    CHECK_FALSE(is_irreducible(make("ab", {{"f", {"aa", "bb"}}})));
}
