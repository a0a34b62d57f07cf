#include "systems.hpp"

#include "subsemigroup/cli.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace subsemigroup;
using namespace testing_support;
using json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;

    json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args, std::optional<std::string> env = std::nullopt)
{
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err, std::move(env));
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text)
{
    auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("system files parse and round-trip", "[cli]")
{
    auto s = parse_system(R"({"alphabet":["a","b"],"substitutions":{"f":{"a":"ab","b":"ba"},"g":{"a":"ba","b":"ab"}}})");
    CHECK(s.generators.size() == 2);
    CHECK(s.generators.by_name("g") == thue_morse().by_name("g"));
    auto again = parse_system(serialize_system(s));
    CHECK(serialize_system(again) == serialize_system(s));

    auto titled = parse_system(R"({"title":"t","alphabet":["a","b"],"substitutions":{"f":{"a":"ab","b":"a"}},"notes":"n"})");
    CHECK(titled.title == "t");
    CHECK(parse_system(serialize_system(titled)).notes == "n");

    for (const auto& file : {"thue_morse.json", "sturmian.json", "fibonacci.json", "sturmian_gk.json", "five_letter.json",
                             "collapsing.json", "fixed_letter.json"}) {
        std::ifstream in(data_path(file));
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto parsed = parse_system(text);
        CHECK(parse_system(serialize_system(parsed)).generators.generators() == parsed.generators.generators());
    }
}

TEST_CASE("system file diagnostics", "[cli]")
{
    CHECK_THROWS_WITH(parse_system(R"({"alphabet":["a","b"],"substitutions":{"f":{"a":"","b":"a"}}})"),
                      Catch::Matchers::ContainsSubstring("substitutions.f.a")
                          && Catch::Matchers::ContainsSubstring("erasing morphism rejected"));
    CHECK_THROWS_WITH(parse_system(R"({"alphabet":["a","b"],"substitutions":{"f":{"a":"ac","b":"a"}}})"),
                      Catch::Matchers::ContainsSubstring("'c'"));
    CHECK_THROWS_WITH(parse_system(R"({"alphabet":["a","b"],"substitutions":{"f":{"a":"ab"}}})"),
                      Catch::Matchers::ContainsSubstring("substitutions.f.b"));
    CHECK_THROWS_WITH(parse_system(R"({"alphabet":["a","b"],"substitutions":{"f":{"a":"ab","b":"a","c":"a"}}})"),
                      Catch::Matchers::ContainsSubstring("substitutions.f.c"));
    CHECK_THROWS_WITH(parse_system(R"({"alphabet":["a","a"],"substitutions":{"f":{"a":"a"}}})"),
                      Catch::Matchers::ContainsSubstring("duplicate"));
    CHECK_THROWS_WITH(parse_system(R"({"alphabet":["a"],"substitutions":{"f":{"a":"a"}}})"),
                      Catch::Matchers::ContainsSubstring("at least two"));
    CHECK_THROWS_WITH(parse_system(R"({"alphabet":["ab","c"],"substitutions":{}})"),
                      Catch::Matchers::ContainsSubstring("alphabet[0]"));
    CHECK_THROWS_WITH(parse_system("{\"alphabet\": [\"a\","), Catch::Matchers::ContainsSubstring("malformed JSON"));
    CHECK_THROWS_AS(parse_system(R"({"alphabet":["a","b"]})"), ValidationError);
}

TEST_CASE("analyze", "[cli]")
{
    auto r = run({"--system", data_path("five_letter.json"), "analyze"});
    REQUIRE(r.code == 0);
    auto doc = r.doc();
    CHECK(doc["first_letter_graph"]["terminal_components"] == json::array({"c", "de"}));
    CHECK(doc["first_letter_graph"]["recurrent_letters"] == "bcde");
    CHECK(doc["fixed_letter_free"] == true);

    auto st = run({"--system", data_path("sturmian.json"), "analyze"}).doc();
    CHECK(st["fixed_letter_free"] == false);
    CHECK(st["fixed_letter_witness"]["letter"] == "a");
}

TEST_CASE("limit and exit codes", "[cli]")
{
    auto tm = data_path("thue_morse.json");
    auto r = run({"--system", tm, "limit", "--letters", "ab", "--depth", "4", "--k", "16"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["size"] == 2);
    CHECK(r.doc()["parameters"]["k"] == 16);
    CHECK(r.doc()["members"][0]["prefix"] == "abbabaabbaababba");

    CHECK(run({"--system", tm, "limit", "--letters", "ab", "--depth", "3", "--k", "16"}).code == 4);
    CHECK(run({"--system", data_path("sturmian.json"), "limit", "--letters", "ab", "--depth", "8", "--k", "12"}).code
          == 2);
    auto skip = run({"--system", data_path("sturmian.json"), "limit", "--letters", "ab", "--depth", "8", "--k", "12",
                     "--allow-short"});
    CHECK(skip.code == 0);
    CHECK(skip.doc()["cover_sound"] == false);

    CHECK(run({"--system", tm, "--max-enumeration", "10", "limit", "--letters", "ab", "--depth", "4", "--k", "16"})
              .code
          == 3);
    CHECK(run({"--system", tm, "limit", "--letters", "ab", "--depth", "4", "--k", "16"}, "10").code == 3);
    CHECK(run({"--system", tm, "--max-enumeration", "100", "limit", "--letters", "ab", "--depth", "4", "--k", "16"},
              "10")
              .code
          == 0);
    CHECK(run({"--system", tm, "limit", "--letters", "ab", "--depth", "4", "--k", "16"}, "ten").code == 1);

    CHECK(run({}).code == 1);
    CHECK(run({"--system", tm, "limit", "--letters", "ab"}).code == 1);
    CHECK(run({"--system", "/nonexistent.json", "analyze"}).code == 1);
    CHECK(run({"analyze"}).code == 1);
    CHECK(run({"--help"}).code == 0);

    auto bad = write_temp("subsemigroup_bad.json", R"({"alphabet":["a","b"],"substitutions":{"f":{"a":"","b":"a"}}})");
    auto br = run({"--system", bad, "analyze"});
    CHECK(br.code == 1);
    CHECK(br.err.find("erasing morphism rejected") != std::string::npos);
}

TEST_CASE("output is byte-stable", "[cli]")
{
    std::vector<std::string> args{"--system", data_path("collapsing.json"), "hull", "--letter", "a", "--depth", "6",
                                  "--k", "5", "--shift-budget", "6", "--compare"};
    auto first = run(args);
    auto second = run(args);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.doc()["letter_independent"] == true);
    CHECK(first.doc()["size"] == 7);

    auto text = run({"--format", "text", "--system", data_path("thue_morse.json"), "dimension"});
    CHECK(text.code == 0);
    CHECK(text.out.find("bound: 1.0") != std::string::npos);
}

TEST_CASE("certify-uncountable", "[cli]")
{
    auto fib = run({"--system", data_path("fibonacci.json"), "certify-uncountable"});
    REQUIRE(fib.code == 0);
    auto doc = fib.doc();
    CHECK(doc["status"] == "inconclusive");
    CHECK(doc["prefix_injectivity"][0]["collision"]["shorter"] == "b");
    CHECK(doc["hint"]["pair"] == json::array({"g", "fg"}));

    auto gk = run({"--system", data_path("sturmian_gk.json"), "certify-uncountable", "--depth", "2", "--k", "8"}).doc();
    CHECK(gk["status"] == "certified");
    CHECK(gk["witnesses"][0]["prefix"] == "aabaabab");
    CHECK(gk["witnesses"][1]["prefix"] == "ababaaba");
}

TEST_CASE("dimension, fixed points, graph, sadic", "[cli]")
{
    auto fib = data_path("fibonacci.json");
    auto d = run({"--system", fib, "dimension"}).doc();
    CHECK(d["dimension"]["applicable"] == false);
    auto d2 = run({"--system", fib, "dimension", "--power", "2"}).doc();
    CHECK(d2["dimension"]["r"] == "2");
    CHECK(d2["dimension"]["bound"] == "2.0");

    auto fp = run({"--system", data_path("thue_morse.json"), "fixed-points", "--depth", "1", "--k", "7"}).doc();
    REQUIRE(fp["anchors"].size() == 2);
    CHECK(fp["anchors"][0]["prefix"] == "abbabaa");

    auto fpp = run({"--system", data_path("thue_morse.json"), "fixed-points", "--depth", "3", "--k", "7", "--profile"})
                   .doc();
    CHECK(fpp["fix_language_sizes"] == json::array({2, 2, 2}));
    CHECK(fpp["unchanged_at_last_depth"] == true);

    auto lp = run({"--system", data_path("thue_morse.json"), "limit", "--letters", "ab", "--depth", "4", "--k", "16",
                   "--profile-to", "6"})
                  .doc();
    CHECK(lp["profile"].size() == 3);
    CHECK(lp["profile"][2]["size"] == 2);

    auto hp = run({"--system", data_path("thue_morse.json"), "hull", "--letter", "a", "--depth", "5", "--k", "6",
                   "--shift-budget", "2", "--profile"})
                  .doc();
    CHECK(hp["profile"]["sizes_by_budget"].size() == 3);

    auto dot = write_temp("subsemigroup_graph.dot", "");
    auto g = run({"--system", data_path("five_letter.json"), "graph", "--dot", dot});
    CHECK(g.code == 0);
    std::ifstream in(dot);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.starts_with("digraph first_letter_graph {"));
    auto raw = run({"--system", data_path("five_letter.json"), "graph", "--dot", "-"});
    CHECK(raw.out == text);

    auto s = run({"--system", fib, "sadic", "--directive", "ffffffff", "--seeds", "a", "--k", "8"}).doc();
    CHECK(s["prefix"] == "abaababa");
}

TEST_CASE("oracle and extremal subcommands", "[cli]")
{
    auto fd = data_path("collapsing.json");
    CHECK(run({"--system", fd, "oracle", "relation", "--left", "fg", "--right", "gg"}).doc()["equal"] == true);
    auto nf = run({"--system", fd, "oracle", "normal-form", "--depth", "5"}).doc();
    CHECK(nf["covered"] == true);
    CHECK(nf["parameters"]["outer"] == "g");
    auto fl = run({"--system", data_path("fixed_letter.json"), "oracle", "fixed-letter"}).doc();
    CHECK(fl["witness"]["word"] == "f");
    CHECK(run({"--system", data_path("thue_morse.json"), "oracle", "balanced", "--word", "aabb"}).doc()["balanced"]
          == false);
    CHECK(run({"--system", data_path("thue_morse.json"), "oracle", "relation", "--left", "fx", "--right", "g"}).code
          == 1);

    auto ex = run({"extremal", "--letters", "ab", "--r", "2", "--s", "2", "--distinct", "4"});
    REQUIRE(ex.code == 0);
    auto doc = ex.doc();
    CHECK(doc["system"]["substitutions"]["f"]["b"] == "ba");
    CHECK(doc["distinctness"][3]["distinct"] == true);
    CHECK(run({"extremal", "--letters", "ab", "--r", "2", "--s", "3"}).code == 1);
    // The emitted system parses back.
    CHECK(parse_system(doc["system"].dump()).generators.size() == 2);
}
