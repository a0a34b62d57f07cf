#pragma once

#include "subsemigroup/fixedpoints.hpp"
#include "subsemigroup/flgraph.hpp"
#include "subsemigroup/prefix_language.hpp"
#include "subsemigroup/semigroup.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace subsemigroup {

/// What limit_language does with images shorter than the requested resolution.
enum class ShortImagePolicy {
    /// Require a fixed-letter-free semigroup with min_image_length(depth) >= k, so
    /// no image is short and the cylinders cover the forward limit set.
    reject,
    /// Drop short images and count them. Allows semigroups with fixed letters,
    /// but the emitted prefixes are then only a sample, not a cover.
    skip,
};

/// Cylinder X(w, a): all infinite words with prefix F(w)(a).
struct CylinderDescriptor {
    CompositionWord word;
    char letter;
    std::string prefix;      // F(w)(a) truncated at the requested resolution
    Length image_length;     // exact |F(w)(a)|
    Length diameter_exponent; // r^n with r the family length, n = |w|; image_length >= r^n
};

/// Where a language member came from.
struct Witness {
    CompositionWord word;
    char letter;
};

struct LimitLanguage {
    std::string letters;
    std::size_t depth;
    std::size_t k;
    ShortImagePolicy policy;
    Length min_image_length; // over all letters at this depth
    PrefixLanguage language;
    std::vector<Witness> witnesses; // aligned with language.words(): first source in enumeration order
    std::size_t skipped_short = 0;

    /// The union of the member cylinders covers the forward limit set of `letters`
    /// (when `letters` is closed under the first-letter action). Never a claim of
    /// exact membership: members may be transient.
    bool cover_sound() const noexcept { return policy == ShortImagePolicy::reject; }

    const Witness& witness_of(std::string_view member) const
    {
        const auto& words = language.words();
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (words[i] == member) {
                return witnesses[i];
            }
        }
        throw ValidationError("'" + std::string(member) + "' is not a member");
    }
};

namespace detail {

inline void gate_resolution(std::size_t depth, std::size_t needed, const Length& min_length)
{
    if (!reaches(min_length, needed)) {
        throw ResolutionUnreachable("min_image_length(" + std::to_string(depth) + ") = " + min_length.str()
                                    + " is below the required " + std::to_string(needed)
                                    + "; increase the depth");
    }
}

} // namespace detail

/// Cylinders X(w, a) for |w| = depth and a in `letters`, in enumeration order.
inline std::vector<CylinderDescriptor> cylinder_cover(const GeneratorSet& g, std::string_view letters,
                                                      std::size_t depth, std::size_t k,
                                                      const EnumerationLimits& limits = {})
{
    PrefixRequest request(k);
    const auto set = normalize_letters(g.alphabet(), letters);
    const Length diameter_exponent = power(Length(family_length(g)), depth);
    std::vector<CylinderDescriptor> out;
    for_each_composition(g, depth, request.k, limits, [&](const CompositionWord& w, const PrefixRealization& r) {
        for (char a : set) {
            auto i = g.alphabet().at(a);
            out.push_back({w, a, r.prefix_at(i), r.length_at(i), diameter_exponent});
        }
    });
    return out;
}

/// Prefix-resolution approximation of the forward limit set of `letters`:
/// the first k letters of F(w)(a) for every composition word w of exactly
/// `depth` letters and every a in `letters`.
///
/// This is a cover, not the set itself: every point of the limit set lies in one
/// of the emitted cylinders, but an emitted prefix need not extend to a point of
/// the limit set. The cover is sound for letter sets closed under the first-letter
/// action (the full alphabet, terminal components); see forward_closure().
inline LimitLanguage limit_language(const GeneratorSet& g, std::string_view letters, std::size_t depth, std::size_t k,
                                    const EnumerationLimits& limits = {},
                                    ShortImagePolicy policy = ShortImagePolicy::reject)
{
    PrefixRequest request(k);
    const auto set = normalize_letters(g.alphabet(), letters);
    Length min_length = min_image_length(g, depth, limits);
    if (policy == ShortImagePolicy::reject) {
        require_fixed_letter_free(g);
        detail::gate_resolution(depth, request.k, min_length);
    }

    std::unordered_map<std::string, Witness> first_source;
    std::vector<std::string> members;
    std::size_t skipped = 0;
    for_each_composition(g, depth, request.k, limits, [&](const CompositionWord& w, const PrefixRealization& r) {
        for (char a : set) {
            const auto& p = r.prefix_at(g.alphabet().at(a));
            if (p.size() < request.k) {
                ++skipped;
                continue;
            }
            if (first_source.emplace(p, Witness{w, a}).second) {
                members.push_back(p);
            }
        }
    });

    PrefixLanguage language(g.alphabet(), request.k, std::move(members));
    std::vector<Witness> witnesses;
    witnesses.reserve(language.size());
    for (const auto& m : language.words()) {
        witnesses.push_back(first_source.at(m));
    }
    return LimitLanguage{set,          depth, request.k, policy, std::move(min_length), std::move(language),
                         std::move(witnesses), skipped};
}

struct SizeAtDepth {
    std::size_t depth;
    std::size_t size;
};

/// Cover sizes for depths first..last at fixed k. No stopping rule is implied:
/// the sizes are there to watch transient prefixes die out.
inline std::vector<SizeAtDepth> limit_size_profile(const GeneratorSet& g, std::string_view letters, std::size_t first,
                                                   std::size_t last, std::size_t k,
                                                   const EnumerationLimits& limits = {})
{
    if (first > last) {
        throw ValidationError("profile depths must satisfy first <= last");
    }
    std::vector<SizeAtDepth> out;
    for (std::size_t d = first; d <= last; ++d) {
        out.push_back({d, limit_language(g, letters, d, k, limits).language.size()});
    }
    return out;
}

/// Outcome of following a directive sequence f1, f2, ... with seed letters a1, a2, ...
struct SadicPrefix {
    std::optional<std::string> prefix; // nullopt: not yet determined by the finite directive
    std::size_t stabilized_at = 0;     // n at which the prefix became certain
};

/// First k letters of the s-adic limit of f1 ∘ ... ∘ fn(a_n), as far as a finite
/// directive determines them.
///
/// With P_n = f1 ∘ ... ∘ fn, every later value P_m(a_m) (n <= m <= N) begins with
/// P_n(c) where c = (f_{n+1} ∘ ... ∘ f_m)[a_m]. The prefix is declared stable at the
/// first n for which all such P_n(c) are at least k letters long and agree on them;
/// from then on every value up to the directive's end shares those k letters.
inline SadicPrefix sadic_prefix(const GeneratorSet& g, const CompositionWord& directive, std::string_view seeds,
                                std::size_t k)
{
    PrefixRequest request(k);
    const std::size_t n_total = directive.depth();
    if (n_total == 0) {
        throw ValidationError("the directive must be nonempty");
    }
    if (seeds.size() != 1 && seeds.size() != n_total) {
        throw ValidationError("give one seed letter or one per directive entry");
    }
    if (auto c = g.alphabet().first_foreign(seeds)) {
        throw ValidationError(std::string("seed letter '") + *c + "' is not in the alphabet");
    }
    auto seed = [&](std::size_t m) { return seeds.size() == 1 ? seeds.front() : seeds[m - 1]; };
    auto gen = [&](std::size_t m) -> const Substitution& { return g[directive.indices[m - 1]]; };

    PrefixRealization prefix_map(gen(1), request.k);
    for (std::size_t n = 1; n <= n_total; ++n) {
        if (n > 1) {
            prefix_map = prefix_map.then(gen(n));
        }
        std::set<char> candidates;
        for (std::size_t m = n; m <= n_total; ++m) {
            char c = seed(m);
            for (std::size_t j = m; j > n; --j) {
                c = first_letter(gen(j), c);
            }
            candidates.insert(c);
        }
        std::optional<std::string> agreed;
        bool stable = true;
        for (char c : candidates) {
            const auto& p = prefix_map.prefix(c);
            if (p.size() < request.k || (agreed && *agreed != p)) {
                stable = false;
                break;
            }
            agreed = p;
        }
        if (stable) {
            return SadicPrefix{agreed, n};
        }
    }
    return SadicPrefix{};
}

struct CylinderHit {
    bool hit = false;
    std::optional<Witness> witness;
};

/// Whether some F(w)(a) with |w| = depth begins with p. A hit is necessary, not
/// sufficient, for the cylinder [p] to meet the forward limit set.
inline CylinderHit cylinder_hit(const GeneratorSet& g, std::string_view p, std::size_t depth,
                                const EnumerationLimits& limits = {})
{
    if (p.empty()) {
        throw EmptyWordError("cylinder query needs a nonempty word");
    }
    if (auto c = g.alphabet().first_foreign(p)) {
        throw ValidationError(std::string("letter '") + *c + "' is not in the alphabet");
    }
    detail::gate_resolution(depth, p.size(), min_image_length(g, depth, limits));
    CylinderHit result;
    for_each_composition(g, depth, p.size(), limits, [&](const CompositionWord& w, const PrefixRealization& r) {
        if (result.hit) {
            return;
        }
        for (std::size_t i = 0; i < g.alphabet().size(); ++i) {
            if (r.prefix_at(i) == p) {
                result = CylinderHit{true, Witness{w, g.alphabet().letter(i)}};
                return;
            }
        }
    });
    return result;
}

struct PrefixInjectivityVerdict {
    std::string generator;
    std::optional<PrefixCollision> collision; // nullopt: prefix-injective
};

/// Machine-checkable instance of the hypotheses of the uncountability criterion:
/// every generator is prefix-injective, and two fixed points share a first letter
/// but differ within the resolution.
struct UncountabilityCertificate {
    std::vector<PrefixInjectivityVerdict> verdicts;
    Anchor first;
    Anchor second;
    std::string first_prefix;
    std::string second_prefix;
    char shared_letter;
    std::size_t differs_at; // first disagreement position, 1-based
    std::size_t anchor_depth;
    std::size_t k;
};

/// The hypotheses could not be verified at these parameters. Never a claim of countability.
struct Inconclusive {
    std::vector<PrefixInjectivityVerdict> verdicts;
    std::vector<std::string> reasons;
};

using CertificationOutcome = std::variant<UncountabilityCertificate, Inconclusive>;

inline std::vector<PrefixInjectivityVerdict> prefix_injectivity_verdicts(const GeneratorSet& g)
{
    std::vector<PrefixInjectivityVerdict> out;
    for (const auto& f : g.generators()) {
        out.push_back({f.name(), find_prefix_collision(f)});
    }
    return out;
}

inline CertificationOutcome certify_uncountable(const GeneratorSet& g, std::size_t anchor_depth, std::size_t k,
                                                const EnumerationLimits& limits = {})
{
    require_fixed_letter_free(g);
    PrefixRequest request(k);
    auto verdicts = prefix_injectivity_verdicts(g);
    std::vector<std::string> reasons;
    for (const auto& v : verdicts) {
        if (v.collision) {
            reasons.push_back("generator " + v.generator + " is not prefix-injective: image of '"
                              + std::string(1, v.collision->shorter) + "' is a prefix of the image of '"
                              + std::string(1, v.collision->longer) + "'");
        }
    }

    const auto anchors = find_anchors(g, anchor_depth, limits);
    std::vector<std::string> prefixes;
    prefixes.reserve(anchors.size());
    for (const auto& anchor : anchors) {
        prefixes.push_back(fixed_point_prefix(g, anchor, request.k));
    }
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t i = 0; i < anchors.size() && !pair; ++i) {
        for (std::size_t j = i + 1; j < anchors.size(); ++j) {
            if (prefixes[i].front() == prefixes[j].front() && prefixes[i] != prefixes[j]) {
                pair = {i, j};
                break;
            }
        }
    }
    if (!pair) {
        reasons.push_back("no two fixed-point prefixes with a common first letter differ at anchor depth "
                          + std::to_string(anchor_depth) + ", resolution " + std::to_string(request.k));
    }
    if (!reasons.empty()) {
        return Inconclusive{std::move(verdicts), std::move(reasons)};
    }
    auto [i, j] = *pair;
    return UncountabilityCertificate{std::move(verdicts),
                                     anchors[i],
                                     anchors[j],
                                     prefixes[i],
                                     prefixes[j],
                                     prefixes[i].front(),
                                     word_metric(prefixes[i], prefixes[j]).index(),
                                     anchor_depth,
                                     request.k};
}

/// Rechecks a certificate from scratch against the generating set. Returns the
/// list of problems; empty means the certificate holds.
inline std::vector<std::string> validate_certificate(const GeneratorSet& g, const UncountabilityCertificate& c)
{
    std::vector<std::string> problems;
    if (!fixed_letter_free(g)) {
        problems.push_back("semigroup has a fixed letter");
        return problems;
    }
    for (const auto& f : g.generators()) {
        if (!is_prefix_injective(f)) {
            problems.push_back("generator " + f.name() + " is not prefix-injective");
        }
    }
    for (const auto* anchor : {&c.first, &c.second}) {
        if (anchor->word.depth() == 0 || anchor->word.depth() > c.anchor_depth) {
            problems.push_back("anchor word outside the stated depth");
        }
        if (first_letter(realize(g, anchor->word), anchor->letter) != anchor->letter) {
            problems.push_back("anchor " + render(g, anchor->word) + " does not keep its letter first");
        }
    }
    if (!problems.empty()) {
        return problems;
    }
    const auto p = fixed_point_prefix(g, c.first, c.k);
    const auto q = fixed_point_prefix(g, c.second, c.k);
    if (p != c.first_prefix || q != c.second_prefix) {
        problems.push_back("recorded fixed-point prefixes do not match recomputation");
    }
    if (p.front() != c.shared_letter || q.front() != c.shared_letter) {
        problems.push_back("prefixes do not share the stated first letter");
    }
    auto d = word_metric(p, q);
    if (d.is_zero() || d.index() != c.differs_at || c.differs_at > c.k) {
        problems.push_back("prefixes do not differ at the stated position");
    }
    return problems;
}

struct InvarianceViolation {
    std::string member;
    Witness source;
    std::optional<std::string> generator; // forward violations: the generator applied
    std::string detail;
};

struct InvarianceReport {
    std::string letters;
    std::size_t depth;
    std::size_t k;
    std::size_t size_at_depth = 0;
    std::size_t size_at_next_depth = 0;
    std::vector<InvarianceViolation> forward;
    std::vector<InvarianceViolation> backward;

    bool clean() const noexcept { return forward.empty() && backward.empty(); }
};

/// Prefix-level reflection of invariance under the semigroup:
/// forward, the k-prefix of f(p) is in the depth+1 language for every member p and
/// generator f; backward, every depth+1 member whose word starts with f is the
/// k-prefix of f(p) for some depth member p.
inline InvarianceReport invariance_check(const GeneratorSet& g, std::string_view letters, std::size_t depth,
                                         std::size_t k, const EnumerationLimits& limits = {})
{
    const auto here = limit_language(g, letters, depth, k, limits);
    const auto next = limit_language(g, letters, depth + 1, k, limits);

    InvarianceReport report{here.letters, depth, k, here.language.size(), next.language.size(), {}, {}};
    std::vector<std::set<std::string>> images(g.size());
    const auto& members = here.language.words();
    for (std::size_t m = 0; m < members.size(); ++m) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            auto q = apply_prefix(g[i], members[m], k);
            images[i].insert(q);
            if (!next.language.contains(q)) {
                report.forward.push_back({members[m], here.witnesses[m], g[i].name(),
                                          "image " + q + " missing at depth " + std::to_string(depth + 1)});
            }
        }
    }
    const auto& next_members = next.language.words();
    for (std::size_t m = 0; m < next_members.size(); ++m) {
        const auto& w = next.witnesses[m];
        auto first = w.word.indices.front();
        if (!images[first].contains(next_members[m])) {
            report.backward.push_back({next_members[m], w, std::nullopt,
                                       "not the image under " + g[first].name() + " of any depth-"
                                           + std::to_string(depth) + " member"});
        }
    }
    return report;
}

struct OrderViolation {
    char upper;              // a
    char lower;              // b, reachable from a
    std::size_t walk_length; // m
    std::vector<std::string> missing;
};

struct OrderConsistencyReport {
    std::size_t depth;
    std::size_t k;
    std::size_t pairs_checked = 0;
    std::vector<OrderViolation> violations;

    bool clean() const noexcept { return violations.empty(); }
};

/// Prefix-level reflection of "b reachable from a implies Λ(b) ⊆ Λ(a)".
///
/// If a walk of length m leads from a to b, then for |w| = depth the word
/// F(w u)(a) begins with F(w)(b), where u realizes the walk. So the depth
/// language of b must sit inside the (depth + m) language of a, with m the
/// shortest walk length.
inline OrderConsistencyReport order_consistency_check(const GeneratorSet& g, std::size_t depth, std::size_t k,
                                                      const EnumerationLimits& limits = {})
{
    const auto order = limitset_order(build_first_letter_graph(g));
    std::map<std::pair<char, std::size_t>, PrefixLanguage> cache;
    auto language = [&](char a, std::size_t d) -> const PrefixLanguage& {
        auto key = std::make_pair(a, d);
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, limit_language(g, std::string(1, a), d, k, limits).language).first;
        }
        return it->second;
    };

    OrderConsistencyReport report{depth, k, 0, {}};
    for (auto [a, b] : order.pairs()) {
        const std::size_t m = *order.walk_length(a, b);
        ++report.pairs_checked;
        auto missing = language(b, depth).minus(language(a, depth + m));
        if (!missing.empty()) {
            report.violations.push_back({a, b, m, std::move(missing)});
        }
    }
    return report;
}

} // namespace subsemigroup
