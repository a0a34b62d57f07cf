#pragma once

#include "subsemigroup/semigroup.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace subsemigroup {

/// First-letter graph: one edge a -> f[a] per (letter, generator) pair.
/// Multi-edges and loops are kept.
struct FirstLetterGraph {
    struct Edge {
        char source;
        char target;
        std::string generator;
    };

    Alphabet alphabet;
    std::vector<Edge> edges;

    /// Distinct successor indices of each letter index.
    std::vector<std::vector<std::size_t>> successors() const
    {
        std::vector<std::vector<std::size_t>> out(alphabet.size());
        for (const auto& e : edges) {
            auto& row = out[alphabet.at(e.source)];
            auto t = alphabet.at(e.target);
            if (std::find(row.begin(), row.end(), t) == row.end()) {
                row.push_back(t);
            }
        }
        for (auto& row : out) {
            std::sort(row.begin(), row.end());
        }
        return out;
    }

    /// Edge multiplicities: count[a][b] = number of generators f with f[a] = b.
    std::vector<std::vector<std::size_t>> edge_counts() const
    {
        std::vector<std::vector<std::size_t>> count(alphabet.size(), std::vector<std::size_t>(alphabet.size(), 0));
        for (const auto& e : edges) {
            ++count[alphabet.at(e.source)][alphabet.at(e.target)];
        }
        return count;
    }
};

inline FirstLetterGraph build_first_letter_graph(const GeneratorSet& g)
{
    FirstLetterGraph graph{g.alphabet(), {}};
    graph.edges.reserve(g.alphabet().size() * g.size());
    for (char a : g.alphabet().letters()) {
        for (const auto& f : g.generators()) {
            graph.edges.push_back({a, first_letter(f, a), f.name()});
        }
    }
    return graph;
}

/// Strongly connected components among the recurrent letters (those on a directed
/// cycle). Letters not on any cycle are listed separately rather than as singletons.
struct ComponentDecomposition {
    struct Component {
        std::string letters; // alphabet order
        bool terminal = false;
    };

    std::vector<Component> components; // sorted by least letter
    std::string non_recurrent;         // alphabet order

    std::string recurrent() const
    {
        std::string out;
        for (const auto& c : components) {
            out += c.letters;
        }
        return out;
    }

    std::vector<std::string> terminal_components() const
    {
        std::vector<std::string> out;
        for (const auto& c : components) {
            if (c.terminal) {
                out.push_back(c.letters);
            }
        }
        return out;
    }

    /// Index of the component holding letter c, if c is recurrent.
    std::optional<std::size_t> component_of(char c) const
    {
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (components[i].letters.find(c) != std::string::npos) {
                return i;
            }
        }
        return std::nullopt;
    }
};

namespace detail {

// Tarjan's algorithm, recursive; alphabets are small.
struct Tarjan {
    const std::vector<std::vector<std::size_t>>& graph;
    std::vector<int> number;
    std::vector<int> low;
    std::vector<bool> on_stack;
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> sccs;
    int counter = 0;

    explicit Tarjan(const std::vector<std::vector<std::size_t>>& g)
        : graph(g), number(g.size(), -1), low(g.size(), -1), on_stack(g.size(), false)
    {
    }

    void visit(std::size_t v)
    {
        number[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w : graph[v]) {
            if (number[w] == -1) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], number[w]);
            }
        }
        if (low[v] == number[v]) {
            std::vector<std::size_t> scc;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                scc.push_back(w);
            } while (w != v);
            sccs.push_back(std::move(scc));
        }
    }

    std::vector<std::vector<std::size_t>> run()
    {
        for (std::size_t v = 0; v < graph.size(); ++v) {
            if (number[v] == -1) {
                visit(v);
            }
        }
        return std::move(sccs);
    }
};

} // namespace detail

inline ComponentDecomposition decompose(const FirstLetterGraph& graph)
{
    const auto& alphabet = graph.alphabet;
    const auto succ = graph.successors();
    auto sccs = detail::Tarjan(succ).run();

    std::vector<int> component_id(alphabet.size(), -1);
    ComponentDecomposition out;
    std::vector<std::vector<std::size_t>> kept;
    for (auto& scc : sccs) {
        std::sort(scc.begin(), scc.end());
        bool on_cycle = scc.size() > 1
            || std::find(succ[scc.front()].begin(), succ[scc.front()].end(), scc.front()) != succ[scc.front()].end();
        if (on_cycle) {
            kept.push_back(scc);
        }
    }
    std::sort(kept.begin(), kept.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });

    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (std::size_t v : kept[i]) {
            component_id[v] = static_cast<int>(i);
        }
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        ComponentDecomposition::Component c;
        c.terminal = true;
        for (std::size_t v : kept[i]) {
            c.letters += alphabet.letter(v);
            for (std::size_t w : succ[v]) {
                if (component_id[w] != static_cast<int>(i)) {
                    c.terminal = false;
                }
            }
        }
        out.components.push_back(std::move(c));
    }
    for (std::size_t v = 0; v < alphabet.size(); ++v) {
        if (component_id[v] == -1) {
            out.non_recurrent += alphabet.letter(v);
        }
    }
    return out;
}

/// Reachability by walks of length at least one, with shortest walk lengths.
/// A pair (a, b) here means the forward limit set of b is contained in that of a;
/// pairs within one component give equality.
struct LimitSetOrder {
    Alphabet alphabet;
    /// distance[a][b] = length of a shortest walk a -> b of length >= 1, if any.
    std::vector<std::vector<std::optional<std::size_t>>> distance;

    bool contains(char a, char b) const { return distance[alphabet.at(a)][alphabet.at(b)].has_value(); }

    std::optional<std::size_t> walk_length(char a, char b) const { return distance[alphabet.at(a)][alphabet.at(b)]; }

    /// All ordered pairs (a, b) with b reachable from a, in alphabet order.
    std::vector<std::pair<char, char>> pairs() const
    {
        std::vector<std::pair<char, char>> out;
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            for (std::size_t j = 0; j < alphabet.size(); ++j) {
                if (distance[i][j]) {
                    out.emplace_back(alphabet.letter(i), alphabet.letter(j));
                }
            }
        }
        return out;
    }
};

inline LimitSetOrder limitset_order(const FirstLetterGraph& graph)
{
    const auto succ = graph.successors();
    const std::size_t n = graph.alphabet.size();
    LimitSetOrder order{graph.alphabet, std::vector<std::vector<std::optional<std::size_t>>>(
                                            n, std::vector<std::optional<std::size_t>>(n))};
    for (std::size_t a = 0; a < n; ++a) {
        // BFS from the successors of a so that a itself is reached only by a real walk.
        std::deque<std::size_t> queue;
        for (std::size_t b : succ[a]) {
            if (!order.distance[a][b]) {
                order.distance[a][b] = 1;
                queue.push_back(b);
            }
        }
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : succ[v]) {
                if (!order.distance[a][w]) {
                    order.distance[a][w] = *order.distance[a][v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return order;
}

/// Letters of A together with every letter reachable from A in the graph.
inline std::string forward_closure(const FirstLetterGraph& graph, std::string_view letters)
{
    const auto order = limitset_order(graph);
    std::string out;
    for (char b : graph.alphabet.letters()) {
        bool hit = letters.find(b) != std::string_view::npos;
        for (char a : letters) {
            hit = hit || order.contains(a, b);
        }
        if (hit) {
            out += b;
        }
    }
    return out;
}

namespace detail {

inline std::string dot_id(char c)
{
    std::string s = "\"";
    if (c == '"' || c == '\\') {
        s += '\\';
    }
    s += c;
    s += '"';
    return s;
}

inline std::string dot_label(const std::string& text)
{
    std::string s = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') {
            s += '\\';
        }
        s += c;
    }
    s += '"';
    return s;
}

} // namespace detail

/// Graphviz digraph. Terminal components are drawn as clusters; edge labels are
/// generator names. Output depends only on the inputs.
inline std::string dot_export(const FirstLetterGraph& graph, const ComponentDecomposition& d)
{
    std::ostringstream os;
    os << "digraph first_letter_graph {\n";
    os << "  node [shape=circle];\n";
    std::string clustered;
    std::size_t cluster = 0;
    for (const auto& c : d.components) {
        if (!c.terminal) {
            continue;
        }
        os << "  subgraph cluster_" << cluster++ << " {\n";
        os << "    label=" << detail::dot_label("terminal {" + c.letters + "}") << ";\n";
        os << "    style=dashed;\n";
        for (char v : c.letters) {
            os << "    " << detail::dot_id(v) << ";\n";
        }
        os << "  }\n";
        clustered += c.letters;
    }
    for (char v : graph.alphabet.letters()) {
        if (clustered.find(v) == std::string::npos) {
            os << "  " << detail::dot_id(v) << ";\n";
        }
    }
    for (const auto& e : graph.edges) {
        os << "  " << detail::dot_id(e.source) << " -> " << detail::dot_id(e.target)
           << " [label=" << detail::dot_label(e.generator) << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace subsemigroup
