#include "foldkit/moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace foldkit {

namespace {

std::vector<std::pair<int, int>> arcs_of(const Matching& m) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m.size(); ++i)
        if (m.partner[i] > i) arcs.emplace_back(i, m.partner[i]);
    return arcs;
}

// No arc may have exactly one endpoint strictly inside (lo, hi); such an
// arc would sit between the two moved edges on the tree.
bool gap_is_clean_sibling(const std::vector<std::pair<int, int>>& arcs, int lo, int hi) {
    for (auto [a, b] : arcs) {
        const bool a_in = lo < a && a < hi;
        const bool b_in = lo < b && b < hi;
        if (a_in != b_in) return false;
    }
    return true;
}

// No arc may separate the nested pair: one endpoint strictly inside
// (o1, i1), the other strictly inside (i2, o2).
bool gap_is_clean_series(const std::vector<std::pair<int, int>>& arcs, int o1, int i1, int i2,
                         int o2) {
    for (auto [a, b] : arcs) {
        if (o1 < a && a < i1 && i2 < b && b < o2) return false;
    }
    return true;
}

}  // namespace

std::vector<Move> available_moves(const Word& w, const Matching& m) {
    if (!is_folding_of(w, m)) throw std::invalid_argument("matching is not a folding of the word");
    const Word dw = doubled(w);
    const auto arcs = arcs_of(m);
    std::vector<Move> moves;
    for (size_t x = 0; x < arcs.size(); ++x) {
        for (size_t y = 0; y < arcs.size(); ++y) {
            if (x == y) continue;
            const auto [a1, b1] = arcs[x];
            const auto [a2, b2] = arcs[y];
            if (b1 < a2) {
                // side by side: candidate Type 1 at (a1, b1, a2, b2)
                if (dw[a1] == dw[a2] && gap_is_clean_sibling(arcs, b1, a2))
                    moves.push_back({MoveKind::type1, {a1, b1, a2, b2}});
            } else if (a1 < a2 && b2 < b1) {
                // nested: candidate Type 2 at (a1, a2, b2, b1)
                if (dw[a1] == dw[b2] && gap_is_clean_series(arcs, a1, a2, b2, b1))
                    moves.push_back({MoveKind::type2, {a1, a2, b2, b1}});
            }
        }
    }
    std::sort(moves.begin(), moves.end());
    return moves;
}

Matching apply_move(const Matching& m, const Move& mv) {
    const auto [p1, p2, p3, p4] = mv.positions;
    if (!(0 <= p1 && p1 < p2 && p2 < p3 && p3 < p4 && p4 < m.size()))
        throw std::invalid_argument("move positions out of order");
    const auto arcs = arcs_of(m);
    Matching out = m;
    auto link = [&out](int a, int b) {
        out.partner[a] = b;
        out.partner[b] = a;
    };
    if (mv.kind == MoveKind::type1) {
        if (m.partner[p1] != p2 || m.partner[p3] != p4 || !gap_is_clean_sibling(arcs, p2, p3))
            throw std::invalid_argument("Type-1 move not applicable");
        link(p1, p4);
        link(p2, p3);
    } else {
        if (m.partner[p1] != p4 || m.partner[p2] != p3 ||
            !gap_is_clean_series(arcs, p1, p2, p3, p4))
            throw std::invalid_argument("Type-2 move not applicable");
        link(p1, p2);
        link(p3, p4);
    }
    return out;
}

FoldGraph build_fold_graph(const Word& w) {
    FoldGraph g;
    g.word = w;
    g.nodes = enumerate_foldings(w);
    std::map<Matching, int> index;
    for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i) index[g.nodes[i]] = i;
    for (int u = 0; u < static_cast<int>(g.nodes.size()); ++u) {
        for (const Move& mv : available_moves(w, g.nodes[u])) {
            if (mv.kind != MoveKind::type1) continue;
            g.edges.emplace_back(u, index.at(apply_move(g.nodes[u], mv)));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

SourceTheoremReport verify_source_theorem(const Word& w) {
    const GreedyOutcome greedy = greedy_fold(w);
    if (!greedy.foldable()) throw std::invalid_argument("word is not foldable");
    const FoldGraph g = build_fold_graph(w);
    std::vector<int> in_degree(g.nodes.size(), 0);
    std::vector<std::vector<int>> out(g.nodes.size());
    for (auto [u, v] : g.edges) {
        ++in_degree[v];
        out[u].push_back(v);
    }
    std::vector<int> sources;
    for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i)
        if (in_degree[i] == 0) sources.push_back(i);

    SourceTheoremReport report;
    report.unique_source = (sources.size() == 1);
    report.source_is_greedy =
        (sources.size() == 1 && g.nodes[sources.front()] == *greedy.matching);
    if (sources.size() == 1) {
        std::vector<char> seen(g.nodes.size(), 0);
        std::vector<int> queue = {sources.front()};
        seen[sources.front()] = 1;
        size_t reached = 1;
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            for (int v : out[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    queue.push_back(v);
                }
            }
        }
        report.all_reachable = (reached == g.nodes.size());
    }
    return report;
}

std::string to_dot(const FoldGraph& g) {
    std::ostringstream os;
    os << "digraph foldgraph {\n";
    for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i) {
        os << "  n" << i << " [label=\"[";
        const auto pairs = g.nodes[i].pairs();
        for (size_t k = 0; k < pairs.size(); ++k) {
            if (k) os << ",";
            os << "[" << pairs[k].first << "," << pairs[k].second << "]";
        }
        os << "]\"];\n";
    }
    for (auto [u, v] : g.edges) os << "  n" << u << " -> n" << v << " [kind=1];\n";
    os << "}\n";
    return os.str();
}

}  // namespace foldkit
