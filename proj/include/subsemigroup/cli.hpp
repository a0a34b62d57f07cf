#pragma once

// Command-line front end. `run` is the whole program minus process plumbing, so
// tests can drive it with in-memory streams.

#include "subsemigroup/dimension.hpp"
#include "subsemigroup/fixedpoints.hpp"
#include "subsemigroup/flgraph.hpp"
#include "subsemigroup/hull.hpp"
#include "subsemigroup/limitset.hpp"
#include "subsemigroup/oracles.hpp"
#include "subsemigroup/system_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace subsemigroup::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,
    precondition = 2,
    resource_cap = 3,
    resolution_unreachable = 4,
};

using json = nlohmann::ordered_json;

inline constexpr std::size_t default_max_enumeration = 1'000'000;
inline constexpr const char* max_enumeration_env = "SUBSEMIGROUP_MAX_ENUM";

// ---------------------------------------------------------------------------
// Report builders. Lengths are emitted as decimal strings: they are exact and
// may exceed the range of JSON numbers.

namespace report {

inline std::string letter(char c) { return std::string(1, c); }

inline json witness(const GeneratorSet& g, const CompositionWord& w, char a)
{
    return json{{"word", render(g, w)}, {"letter", letter(a)}};
}

inline json graph(const FirstLetterGraph& graph, const ComponentDecomposition& d)
{
    json edges = json::array();
    for (const auto& e : graph.edges) {
        edges.push_back({{"source", letter(e.source)}, {"target", letter(e.target)}, {"generator", e.generator}});
    }
    json components = json::array();
    for (const auto& c : d.components) {
        components.push_back({{"letters", c.letters}, {"terminal", c.terminal}});
    }
    return json{{"edges", std::move(edges)},
                {"components", std::move(components)},
                {"terminal_components", d.terminal_components()},
                {"recurrent_letters", normalize_letters(graph.alphabet, d.recurrent())},
                {"non_recurrent_letters", d.non_recurrent}};
}

inline json order(const LimitSetOrder& o)
{
    json pairs = json::array();
    for (auto [a, b] : o.pairs()) {
        pairs.push_back({{"upper", letter(a)}, {"lower", letter(b)}, {"walk_length", *o.walk_length(a, b)}});
    }
    return pairs;
}

inline json dimension(const DimensionReport& r)
{
    json out{{"r", r.r.str()}, {"s", r.s}, {"applicable", r.applicable}};
    if (r.applicable) {
        out["bound"] = r.decimal;
        out["exact"] = r.rational ? json::array({r.rational->first, r.rational->second}) : json(nullptr);
    } else {
        out["bound"] = nullptr;
        out["reason"] = "family length r = " + r.r.str() + " is not greater than 1";
    }
    return out;
}

inline json verdicts(const std::vector<PrefixInjectivityVerdict>& vs)
{
    json out = json::array();
    for (const auto& v : vs) {
        json item{{"generator", v.generator}, {"prefix_injective", !v.collision.has_value()}};
        if (v.collision) {
            item["collision"] = {{"shorter", letter(v.collision->shorter)}, {"longer", letter(v.collision->longer)}};
        }
        out.push_back(std::move(item));
    }
    return out;
}

inline json generators(const GeneratorSet& g)
{
    json out = json::object();
    for (const auto& f : g.generators()) {
        json images = json::object();
        for (std::size_t i = 0; i < g.alphabet().size(); ++i) {
            images[letter(g.alphabet().letter(i))] = f.image_at(i);
        }
        out[f.name()] = std::move(images);
    }
    return out;
}

} // namespace report

// ---------------------------------------------------------------------------
// Text rendering: a plain indented dump of the JSON report.

namespace detail {

inline void render_text(const json& j, std::ostream& os, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_structured() && !value.empty()) {
                os << pad << key << ":\n";
                render_text(value, os, indent + 1);
            } else {
                os << pad << key << ": " << (value.is_structured() ? value.dump() : scalar(value)) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_structured() && !value.empty()) {
                os << pad << "-\n";
                render_text(value, os, indent + 1);
            } else {
                os << pad << "- " << (value.is_structured() ? value.dump() : scalar(value)) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read " + path);
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::size_t parse_cap(const std::string& text, const std::string& source)
{
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || text.empty() || v == 0) {
        throw ValidationError(source + ": expected a positive integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(v);
}

/// Looks for a fixed-letter-free pair among the generators and their depth-2
/// composites that passes certification. Used to suggest a next step when the
/// given family is inconclusive.
inline std::optional<json> certification_hint(const GeneratorSet& g, std::size_t depth, std::size_t k,
                                              const EnumerationLimits& limits)
{
    std::vector<std::pair<std::string, Substitution>> candidates;
    for (const auto& f : g.generators()) {
        candidates.emplace_back(f.name(), f);
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            CompositionWord w{{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}};
            candidates.emplace_back(render(g, w), realize(g, w));
        }
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            const auto& [ni, fi] = candidates[i];
            const auto& [nj, fj] = candidates[j];
            if (fi == fj || !is_prefix_injective(fi) || !is_prefix_injective(fj)) {
                continue;
            }
            // Placeholder names keep composite names (which may contain '.') out of the set.
            GeneratorSet pair(g.alphabet(), {Substitution(g.alphabet(), fi.images(), "x"),
                                              Substitution(g.alphabet(), fj.images(), "y")});
            if (!fixed_letter_free(pair)) {
                continue;
            }
            auto outcome = certify_uncountable(pair, depth, k, limits);
            if (const auto* c = std::get_if<UncountabilityCertificate>(&outcome)) {
                auto name = [&](const Anchor& a) {
                    std::string w;
                    for (auto idx : a.word.indices) {
                        w += (w.empty() ? "" : ".") + (idx == 0 ? ni : nj);
                    }
                    return w;
                };
                json images = json::object();
                for (const auto& [n, f] : {std::pair{ni, fi}, std::pair{nj, fj}}) {
                    json m = json::object();
                    for (std::size_t a = 0; a < g.alphabet().size(); ++a) {
                        m[report::letter(g.alphabet().letter(a))] = f.image_at(a);
                    }
                    images[n] = std::move(m);
                }
                return json{{"message", "try the derived pair {" + ni + ", " + nj + "}"},
                            {"pair", json::array({ni, nj})},
                            {"substitutions", std::move(images)},
                            {"witnesses",
                             json::array({json{{"word", name(c->first)},
                                               {"letter", report::letter(c->first.letter)},
                                               {"prefix", c->first_prefix}},
                                          json{{"word", name(c->second)},
                                               {"letter", report::letter(c->second.letter)},
                                               {"prefix", c->second_prefix}}})}};
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

// ---------------------------------------------------------------------------

/// Runs the command line `args` (without the program name). Reports go to `out`
/// (or the --out file), diagnostics to `err`. `env_cap` is the value of
/// SUBSEMIGROUP_MAX_ENUM, if set.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
               std::optional<std::string> env_cap = std::nullopt)
{
    CLI::App app{"Analysis of semigroups generated by substitutions", "subsemigroup"};
    app.require_subcommand(1);

    std::string system_path;
    std::string out_path;
    std::string format = "json";
    std::optional<std::size_t> max_enum_flag;
    app.add_option("--system", system_path, "JSON system file");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-enumeration", max_enum_flag,
                   "cap on enumerated composition words (default 1000000; env " + std::string(max_enumeration_env)
                       + ")");

    auto* analyze = app.add_subcommand("analyze", "fixed-letter-free verdict, irreducibility, graph, dimension");

    auto* graph = app.add_subcommand("graph", "first-letter graph and its components");
    std::string dot_path;
    graph->add_option("--dot", dot_path, "write Graphviz DOT here ('-' for stdout)");

    auto* limit = app.add_subcommand("limit", "prefix-resolution cover of the forward limit set");
    std::string letters;
    std::size_t depth = 0;
    std::size_t k = 0;
    bool allow_short = false;
    limit->add_option("--letters", letters, "seed letters")->required();
    limit->add_option("--depth", depth, "composition depth")->required();
    limit->add_option("--k", k, "prefix resolution")->required();
    limit->add_flag("--allow-short", allow_short, "skip short images instead of requiring min length >= k");
    std::optional<std::size_t> profile_to;
    limit->add_option("--profile-to", profile_to, "also report cover sizes for depths up to this one");

    auto* fixed = app.add_subcommand("fixed-points", "anchors and fixed-point prefixes");
    fixed->add_option("--depth", depth, "anchor word depth")->required();
    fixed->add_option("--k", k, "prefix resolution")->required();
    bool fix_profile = false;
    fixed->add_flag("--profile", fix_profile, "fix-language sizes for anchor depths 1..depth");

    auto* dim = app.add_subcommand("dimension", "logarithmic Hausdorff dimension bound");
    std::size_t power_k = 1;
    dim->add_option("--power", power_k, "use all depth-K composites as generators")->check(CLI::PositiveNumber);

    auto* certify = app.add_subcommand("certify-uncountable", "check the uncountability criterion");
    std::size_t anchor_depth = 2;
    std::size_t certify_k = 8;
    certify->add_option("--depth", anchor_depth, "anchor word depth")->capture_default_str();
    certify->add_option("--k", certify_k, "prefix resolution")->capture_default_str();

    auto* hull = app.add_subcommand("hull", "prefix approximation of the hull of a letter");
    std::string hull_letter;
    std::size_t budget = 0;
    bool compare = false;
    hull->add_option("--letter", hull_letter, "seed letter")->required();
    hull->add_option("--depth", depth, "composition depth")->required();
    hull->add_option("--k", k, "prefix resolution")->required();
    hull->add_option("--shift-budget", budget, "largest shift")->required();
    hull->add_flag("--compare", compare, "also compare the hulls of all letters");
    bool hull_profile = false;
    hull->add_flag("--profile", hull_profile, "sizes for budgets 0..shift-budget and at depth + 1");

    auto* sadic = app.add_subcommand("sadic", "prefix of an s-adic limit along a finite directive");
    std::string directive;
    std::string seeds;
    sadic->add_option("--directive", directive, "composition word f1 f2 ... fn")->required();
    sadic->add_option("--seeds", seeds, "one seed letter, or one per directive entry")->required();
    sadic->add_option("--k", k, "prefix resolution")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force oracles");
    oracle->require_subcommand(1);
    auto* balanced = oracle->add_subcommand("balanced", "balance of a two-letter word");
    std::string word;
    balanced->add_option("--word", word, "word to test")->required();
    auto* relation = oracle->add_subcommand("relation", "equality of two composition words");
    std::string left;
    std::string right;
    relation->add_option("--left", left)->required();
    relation->add_option("--right", right)->required();
    auto* fixed_letter = oracle->add_subcommand("fixed-letter", "exhaustive search for a fixed letter");
    std::optional<std::size_t> oracle_depth;
    fixed_letter->add_option("--depth", oracle_depth, "search depth (default |alphabet|)");
    auto* normal_form = oracle->add_subcommand("normal-form", "coverage by outer^m o inner^n");
    std::string outer;
    std::string inner;
    normal_form->add_option("--depth", depth, "word depth")->required();
    normal_form->add_option("--outer", outer, "outer generator (default: second)");
    normal_form->add_option("--inner", inner, "inner generator (default: first)");

    auto* extremal = app.add_subcommand("extremal", "extremal family of s substitutions of length r");
    std::size_t r = 0;
    std::size_t s = 0;
    std::size_t distinct_depth = 0;
    extremal->add_option("--letters", letters, "alphabet letters")->required();
    extremal->add_option("--r", r, "family length")->required();
    extremal->add_option("--s", s, "family size")->required();
    extremal->add_option("--distinct", distinct_depth, "also check distinctness for n = 1..N");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help;
        int code = app.exit(e, help, err);
        out << help.str();
        return code == 0 ? ExitCode::ok : ExitCode::usage;
    }

    json doc;
    std::string raw; // non-JSON output (DOT to stdout)
    try {
        EnumerationLimits limits{default_max_enumeration};
        if (env_cap) {
            limits.max_words = detail::parse_cap(*env_cap, max_enumeration_env);
        }
        if (max_enum_flag) {
            if (*max_enum_flag == 0) {
                throw ValidationError("--max-enumeration: expected a positive integer");
            }
            limits.max_words = *max_enum_flag;
        }

        std::optional<SystemFile> system;
        if (!extremal->parsed()) {
            if (system_path.empty()) {
                throw ValidationError("--system is required for this command");
            }
            system = parse_system(detail::read_file(system_path));
        }
        const GeneratorSet* g = system ? &system->generators : nullptr;

        auto header = [&](const std::string& command, json parameters) {
            json h{{"command", command}};
            if (system && system->title) {
                h["system"] = *system->title;
            }
            parameters["max_enumeration"] = limits.max_words;
            h["parameters"] = std::move(parameters);
            return h;
        };

        if (analyze->parsed()) {
            doc = header("analyze", json::object());
            auto witness = find_fixed_letter(*g);
            auto fl_graph = build_first_letter_graph(*g);
            auto d = decompose(fl_graph);
            doc["alphabet"] = std::string(g->alphabet().letters());
            json names = json::array();
            for (const auto& f : g->generators()) {
                names.push_back(f.name());
            }
            doc["generators"] = std::move(names);
            doc["fixed_letter_free"] = !witness.has_value();
            doc["fixed_letter_witness"] = witness ? report::witness(*g, witness->word, witness->letter) : json(nullptr);
            doc["irreducible"] = is_irreducible(*g);
            doc["family_length"] = family_length(*g);
            doc["first_letter_graph"] = report::graph(fl_graph, d);
            doc["limit_set_order"] = report::order(limitset_order(fl_graph));
            doc["dimension"] = report::dimension(dimension_bound(*g));
        } else if (graph->parsed()) {
            auto fl_graph = build_first_letter_graph(*g);
            auto d = decompose(fl_graph);
            auto dot = dot_export(fl_graph, d);
            if (dot_path == "-") {
                raw = dot;
            } else {
                doc = header("graph", json{{"dot", dot_path.empty() ? json(nullptr) : json(dot_path)}});
                doc["first_letter_graph"] = report::graph(fl_graph, d);
                if (!dot_path.empty()) {
                    std::ofstream f(dot_path, std::ios::binary);
                    if (!(f << dot)) {
                        throw ValidationError("cannot write " + dot_path);
                    }
                }
            }
        } else if (limit->parsed()) {
            auto policy = allow_short ? ShortImagePolicy::skip : ShortImagePolicy::reject;
            auto lang = limit_language(*g, letters, depth, k, limits, policy);
            doc = header("limit", json{{"letters", lang.letters},
                                       {"depth", depth},
                                       {"k", k},
                                       {"short_images", allow_short ? "skip" : "reject"}});
            doc["min_image_length"] = lang.min_image_length.str();
            doc["cover_sound"] = lang.cover_sound();
            doc["skipped_short"] = lang.skipped_short;
            doc["size"] = lang.language.size();
            json members = json::array();
            for (std::size_t i = 0; i < lang.language.size(); ++i) {
                json m = report::witness(*g, lang.witnesses[i].word, lang.witnesses[i].letter);
                m["prefix"] = lang.language.words()[i];
                members.push_back(std::move(m));
            }
            doc["members"] = std::move(members);
            if (profile_to) {
                if (allow_short) {
                    throw ValidationError("--profile-to requires the default short-image policy");
                }
                json profile = json::array();
                for (const auto& p : limit_size_profile(*g, letters, depth, *profile_to, k, limits)) {
                    profile.push_back({{"depth", p.depth}, {"size", p.size}});
                }
                doc["profile"] = std::move(profile);
            }
        } else if (fixed->parsed()) {
            doc = header("fixed-points", json{{"depth", depth}, {"k", k}});
            json anchors = json::array();
            for (const auto& a : find_anchors(*g, depth, limits)) {
                json item = report::witness(*g, a.word, a.letter);
                item["prefix"] = fixed_point_prefix(*g, a, k);
                anchors.push_back(std::move(item));
            }
            doc["anchors"] = std::move(anchors);
            if (fix_profile) {
                auto p = fix_language_profile(*g, depth, k, limits);
                doc["fix_language_sizes"] = p.sizes;
                doc["unchanged_at_last_depth"] = p.unchanged_at_last_depth;
            }
        } else if (dim->parsed()) {
            doc = header("dimension", json{{"power", power_k}});
            auto powered = power_generating_set(*g, power_k, limits);
            if (power_k > 1) {
                doc["generators"] = report::generators(powered);
            }
            doc["dimension"] = report::dimension(dimension_bound(powered));
        } else if (certify->parsed()) {
            doc = header("certify-uncountable", json{{"depth", anchor_depth}, {"k", certify_k}});
            auto outcome = certify_uncountable(*g, anchor_depth, certify_k, limits);
            if (const auto* c = std::get_if<UncountabilityCertificate>(&outcome)) {
                doc["status"] = "certified";
                doc["prefix_injectivity"] = report::verdicts(c->verdicts);
                json first = report::witness(*g, c->first.word, c->first.letter);
                first["prefix"] = c->first_prefix;
                json second = report::witness(*g, c->second.word, c->second.letter);
                second["prefix"] = c->second_prefix;
                doc["witnesses"] = json::array({std::move(first), std::move(second)});
                doc["shared_letter"] = report::letter(c->shared_letter);
                doc["differs_at"] = c->differs_at;
            } else {
                const auto& inc = std::get<Inconclusive>(outcome);
                doc["status"] = "inconclusive";
                doc["prefix_injectivity"] = report::verdicts(inc.verdicts);
                doc["reasons"] = inc.reasons;
                auto hint = detail::certification_hint(*g, anchor_depth, certify_k, limits);
                doc["hint"] = hint ? *hint : json(nullptr);
            }
        } else if (hull->parsed()) {
            if (hull_letter.size() != 1) {
                throw ValidationError("--letter: expected a single letter");
            }
            auto h = hull_language(*g, hull_letter.front(), depth, k, budget, limits);
            doc = header("hull", json{{"letter", hull_letter}, {"depth", depth}, {"k", k}, {"shift_budget", budget}});
            doc["size"] = h.words.size();
            json members = json::array();
            for (std::size_t i = 0; i < h.words.size(); ++i) {
                json m = report::witness(*g, h.witnesses[i].word, h.witnesses[i].letter);
                m["shift"] = h.witnesses[i].shift;
                m["prefix"] = h.words.words()[i];
                members.push_back(std::move(m));
            }
            doc["members"] = std::move(members);
            auto shift = shift_invariance_check(h, *g);
            doc["shift_invariance"] = {{"checked", shift.checked}, {"violations", shift.violations.size()}};
            if (hull_profile) {
                auto p = hull_size_profile(*g, hull_letter.front(), depth, k, budget, limits);
                doc["profile"] = {{"sizes_by_budget", p.by_budget}, {"next_depth_size", p.next_depth_size}};
            }
            if (compare) {
                auto eq = hull_equality_report(*g, depth, k, budget, limits);
                json pairs = json::array();
                for (const auto& p : eq.pairs) {
                    pairs.push_back({{"left", report::letter(p.left)},
                                     {"right", report::letter(p.right)},
                                     {"equal", p.equal()},
                                     {"only_left", p.only_left},
                                     {"only_right", p.only_right}});
                }
                doc["letter_independent"] = eq.all_equal();
                doc["comparisons"] = std::move(pairs);
            }
        } else if (sadic->parsed()) {
            auto w = parse_composition(*g, directive);
            auto res = sadic_prefix(*g, w, seeds, k);
            doc = header("sadic", json{{"directive", render(*g, w)}, {"seeds", seeds}, {"k", k}});
            doc["determined"] = res.prefix.has_value();
            doc["prefix"] = res.prefix ? json(*res.prefix) : json(nullptr);
            doc["stabilized_at"] = res.prefix ? json(res.stabilized_at) : json(nullptr);
        } else if (oracle->parsed()) {
            if (balanced->parsed()) {
                doc = header("oracle balanced", json{{"word", word}});
                doc["balanced"] = oracle::balanced(word, g->alphabet());
            } else if (relation->parsed()) {
                doc = header("oracle relation", json{{"left", left}, {"right", right}});
                doc["equal"] = oracle::check_relation(*g, {left, right});
            } else if (fixed_letter->parsed()) {
                const std::size_t d = oracle_depth.value_or(g->alphabet().size());
                doc = header("oracle fixed-letter", json{{"depth", d}});
                auto found = oracle::brute_fixed_letter(*g, d, limits.max_words);
                doc["found"] = found.has_value();
                doc["witness"] = found ? json{{"word", found->word}, {"letter", report::letter(found->letter)}}
                                       : json(nullptr);
            } else if (normal_form->parsed()) {
                if (g->size() < 2 && (outer.empty() || inner.empty())) {
                    throw ValidationError("normal-form needs --outer and --inner with fewer than two generators");
                }
                if (outer.empty()) {
                    outer = (*g)[1].name();
                }
                if (inner.empty()) {
                    inner = (*g)[0].name();
                }
                auto nf = oracle::normal_form_coverage(*g, depth, outer, inner, limits.max_words);
                doc = header("oracle normal-form", json{{"depth", depth}, {"outer", outer}, {"inner", inner}});
                doc["checked"] = nf.checked;
                doc["covered"] = nf.exceptions.empty();
                doc["exceptions"] = nf.exceptions;
            }
        } else if (extremal->parsed()) {
            auto family = extremal_family(Alphabet(letters), r, s);
            doc = header("extremal", json{{"letters", letters}, {"r", r}, {"s", s}, {"distinct", distinct_depth}});
            doc["system"] = system_to_json(SystemFile{family, {}, {}});
            doc["dimension"] = report::dimension(dimension_bound(family));
            if (distinct_depth > 0) {
                json checks = json::array();
                for (std::size_t n = 1; n <= distinct_depth; ++n) {
                    auto rep = distinctness_check(family, n, limits);
                    checks.push_back({{"n", n}, {"distinct", rep.distinct}, {"collisions", rep.collisions.size()}});
                }
                doc["distinctness"] = std::move(checks);
            }
        }
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::precondition;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::resource_cap;
    } catch (const ResolutionUnreachable& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::resolution_unreachable;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage;
    }

    std::string text = raw;
    if (text.empty()) {
        std::ostringstream os;
        if (format == "text") {
            detail::render_text(doc, os, 0);
        } else {
            os << doc.dump(2) << "\n";
        }
        text = os.str();
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!(f << text)) {
            err << "error: cannot write " << out_path << "\n";
            return ExitCode::usage;
        }
    } else {
        out << text;
    }
    return ExitCode::ok;
}

/// Reads the environment and forwards to run().
inline int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env;
    if (const char* v = std::getenv(max_enumeration_env)) {
        env = v;
    }
    return run(std::move(args), std::cout, std::cerr, env);
}

} // namespace subsemigroup::cli
