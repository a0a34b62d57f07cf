// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include "systems.hpp"

#include "subsemigroup/cli.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace subsemigroup;
using namespace testing_support;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string complement(const std::string& w)
{
    std::string out = w;
    for (auto& c : out) {
        c = c == 'a' ? 'b' : 'a';
    }
    return out;
}

Outcome classification()
{
    Outcome o;
    std::ostringstream out, err;
    int code = cli::run({"--system", data_path("five_letter.json"), "analyze"}, out, err);
    o.require(code == 0, "analyze exited with " + std::to_string(code) + ": " + err.str());
    if (!o.pass) {
        return o;
    }
    auto doc = nlohmann::json::parse(out.str());
    const auto& graph = doc["first_letter_graph"];
    std::vector<std::string> components;
    for (const auto& c : graph["components"]) {
        components.push_back(c["letters"].get<std::string>());
    }
    o.require(graph["recurrent_letters"] == "bcde", "recurrent letters " + graph["recurrent_letters"].dump());
    o.require(components == std::vector<std::string>{"b", "c", "de"}, "components " + graph["components"].dump());
    o.require(graph["terminal_components"] == nlohmann::json::array({"c", "de"}),
              "terminal components " + graph["terminal_components"].dump());
    return o;
}

Outcome thue_morse_limit()
{
    Outcome o;
    const auto g = thue_morse();
    const std::vector<std::string> expected{"abbabaabbaababba", "baababbaabbabaab"};
    for (std::size_t depth : {4, 5, 6}) {
        auto lang = limit_language(g, "ab", depth, 16);
        o.require(lang.language.words() == expected, "depth " + std::to_string(depth) + " language differs");
    }
    o.require(expected[0].starts_with("abbabaa") && expected[1] == complement(expected[0]), "shape");
    return o;
}

Outcome relation_and_normal_form()
{
    Outcome o;
    const auto g = collapsing();
    o.require(oracle::check_relation(g, {"fg", "gg"}), "f o g != g o g");
    auto nf = oracle::normal_form_coverage(g, 5, "g", "f");
    o.require(nf.exceptions.empty(), std::to_string(nf.exceptions.size()) + " exceptions");
    o.require(nf.checked == 62, "checked " + std::to_string(nf.checked) + " words");
    return o;
}

Outcome sturmian_balance()
{
    Outcome o;
    const auto g = sturmian();
    auto lang = limit_language(g, "ab", 8, 12, {}, ShortImagePolicy::skip);
    o.require(!lang.language.empty(), "empty language");
    std::size_t failures = 0;
    for (const auto& w : lang.language.words()) {
        failures += !oracle::balanced(w, g.alphabet());
    }
    o.require(failures == 0, std::to_string(failures) + " unbalanced members");
    return o;
}

Outcome uncountability()
{
    Outcome o;
    const auto fib = fibonacci();
    // {g, f o g}, built from the Fibonacci generators.
    const auto k = compose(fib.by_name("f"), fib.by_name("g"));
    GeneratorSet pair(fib.alphabet(), {fib.by_name("g"), Substitution(fib.alphabet(), k.images(), "k")});
    auto outcome = certify_uncountable(pair, 2, 8);
    const auto* c = std::get_if<UncountabilityCertificate>(&outcome);
    o.require(c != nullptr, "{g, f o g} not certified");
    if (c) {
        o.require(c->first_prefix == "aabaabab" && c->second_prefix == "ababaaba",
                  "prefixes " + c->first_prefix + ", " + c->second_prefix);
        o.require(c->shared_letter == 'a', "shared letter");
        o.require(validate_certificate(pair, *c).empty(), "certificate does not validate");
    }
    auto fib_outcome = certify_uncountable(fib, 2, 8);
    const auto* inc = std::get_if<Inconclusive>(&fib_outcome);
    o.require(inc != nullptr, "{f, g} not inconclusive");
    if (inc) {
        const auto& v = inc->verdicts.front();
        o.require(v.generator == "f" && v.collision && v.collision->shorter == 'b' && v.collision->longer == 'a',
                  "missing f collision (b, a)");
    }
    return o;
}

Outcome dimension_bounds()
{
    Outcome o;
    auto fib = dimension_bound(fibonacci());
    o.require(fib.r == 1 && !fib.applicable, "Fibonacci bound applicable");
    auto powered = dimension_bound(power_generating_set(fibonacci(), 2));
    o.require(powered.r == 2 && powered.s == 4 && powered.decimal == "2.0",
              "power set: r=" + powered.r.str() + " s=" + std::to_string(powered.s) + " bound=" + powered.decimal);
    auto tm = dimension_bound(thue_morse());
    o.require(tm.decimal == "1.0", "Thue-Morse bound " + tm.decimal);
    return o;
}

Outcome extremal()
{
    Outcome o;
    const Alphabet ab("ab");
    const auto g = extremal_family(ab, 2, 2);
    o.require(g.size() == 2 && family_length(g) == 2, "size or length");
    for (const auto& f : g.generators()) {
        for (std::size_t a = 0; a < ab.size(); ++a) {
            o.require(f.image_at(a).size() == 2, "image length differs from r");
            o.require(f.image_at(a).front() == ab.letter(a), "image does not start with its letter");
        }
    }
    for (std::size_t n = 1; n <= 8; ++n) {
        auto rep = distinctness_check(g, n);
        o.require(rep.distinct, "collision at n = " + std::to_string(n));
    }
    bool rejected = false;
    try {
        extremal_family(ab, 2, 3);
    } catch (const ValidationError&) {
        rejected = true;
    }
    o.require(rejected, "s = 3 accepted");
    return o;
}

Outcome fixed_letter_decision()
{
    Outcome o;
    RandomSystems gen(20260415);
    std::size_t agree = 0;
    for (int i = 0; i < 1000; ++i) {
        auto g = gen.system(4, 3, 3);
        bool fast = fixed_letter_free(g);
        bool brute = !oracle::brute_fixed_letter(g, g.alphabet().size()).has_value();
        agree += fast == brute;
    }
    o.require(agree == 1000, std::to_string(agree) + "/1000 agree");
    return o;
}

Outcome growth()
{
    Outcome o;
    const auto tm = thue_morse();
    for (std::size_t n = 1; n <= 10; ++n) {
        o.require(min_image_length(tm, n) == power(Length(2), n), "Thue-Morse length at n = " + std::to_string(n));
    }
    RandomSystems gen(20260415);
    std::size_t checked = 0;
    for (int i = 0; i < 1000; ++i) {
        auto g = gen.system(4, 3, 3);
        if (!fixed_letter_free(g)) {
            continue;
        }
        ++checked;
        const std::size_t n = g.alphabet().size();
        std::vector<Length> m(10 + n + 1);
        for (std::size_t d = 1; d <= 10 + n; ++d) {
            m[d] = min_image_length(g, d);
        }
        for (std::size_t d = 1; d <= 10; ++d) {
            o.require(m[d + 1] >= m[d], "decrease in system " + std::to_string(i));
            o.require(m[d + n] > m[d], "no growth over |alphabet| steps in system " + std::to_string(i));
        }
    }
    o.require(checked > 0, "no fixed-letter-free systems");
    return o;
}

Outcome invariance()
{
    Outcome o;
    o.require(invariance_check(thue_morse(), "ab", 4, 16).clean(), "Thue-Morse 4 -> 5");
    o.require(invariance_check(fibonacci(), "ab", 6, 10).clean(), "Sturmian pair 6 -> 7");
    o.require(order_consistency_check(five_letter(), 2, 4).clean(), "five-letter order consistency");
    RandomSystems gen(77);
    for (int i = 0; i < 100; ++i) {
        auto g = gen.fixed_letter_free_system(3, 3, 3);
        std::size_t depth = 1;
        while (min_image_length(g, depth) < 4) {
            ++depth;
        }
        auto rep = order_consistency_check(g, depth, 4);
        o.require(rep.clean(), "random system " + std::to_string(i));
    }
    return o;
}

Outcome hull_properties()
{
    Outcome o;
    const auto tm = thue_morse();
    auto h = hull_language(tm, 'a', 5, 6, 8);
    oracle::NaiveSystem naive(tm);
    std::string x = "a";
    while (x.size() < 512) {
        x = naive.apply(0, x);
    }
    auto factors = oracle::factors(x, 6);
    for (const auto& w : h.words.words()) {
        o.require(factors.contains(w), w + " is not a factor");
    }
    o.require(shift_invariance_check(h, tm).clean(), "Thue-Morse shift invariance");
    o.require(hull_equality_report(tm, 5, 6, 8).all_equal(), "Thue-Morse hulls differ");
    auto fd = hull_equality_report(collapsing(), 6, 5, 6);
    o.require(fd.all_equal(), "collapsing pair hulls differ");
    for (const auto& hl : fd.hulls) {
        o.require(shift_invariance_check(hl, collapsing()).clean(), "collapsing pair shift invariance");
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"first-letter classification of the five-letter system", classification},
        {"Thue-Morse limit language is two words, stable in depth", thue_morse_limit},
        {"f o g = g o g and normal form coverage at depth 5", relation_and_normal_form},
        {"Sturmian limit prefixes are balanced", sturmian_balance},
        {"uncountability certificate and inconclusive Fibonacci pair", uncountability},
        {"dimension bounds", dimension_bounds},
        {"extremal family distinctness and size bound", extremal},
        {"fixed-letter-free decision agrees with exhaustive search", fixed_letter_decision},
        {"minimal image length growth", growth},
        {"invariance and order consistency", invariance},
        {"hull factors, letter independence, shift invariance", hull_properties},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
        if (!o.pass) {
            std::cout << " -- " << o.detail;
            ++failures;
        }
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
