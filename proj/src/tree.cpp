#include "foldkit/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace foldkit {

namespace {

// Edge-indexed tree structure recovered from a Dyck word. Vertices are
// numbered 0 (root) upward in discovery order; edge e connects
// parent_of[e] to vertex e+1 and opens at opening_pos[e].
struct TreeStructure {
    int vertex_count = 1;
    std::vector<int> parent_of;     // per edge
    std::vector<int> opening_pos;   // per edge
    std::vector<std::vector<int>> incident;  // per vertex: edge ids
};

TreeStructure analyze(const PlaneTree& t) {
    TreeStructure s;
    s.incident.resize(t.edge_count() + 1);
    std::vector<int> stack = {0};
    int next_vertex = 1;
    int next_edge = 0;
    for (int i = 0; i < t.half_edges(); ++i) {
        if (t.dyck()[i] == '(') {
            const int parent = stack.back();
            const int edge = next_edge++;
            s.parent_of.push_back(parent);
            s.opening_pos.push_back(i);
            s.incident[parent].push_back(edge);
            s.incident[next_vertex].push_back(edge);
            stack.push_back(next_vertex++);
        } else {
            stack.pop_back();
        }
    }
    s.vertex_count = next_vertex;
    return s;
}

}  // namespace

PlaneTree::PlaneTree(std::string dyck) : dyck_(std::move(dyck)) {
    int depth = 0;
    for (char c : dyck_) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        else
            throw std::invalid_argument("Dyck string may contain only '(' and ')'");
        if (depth < 0) throw std::invalid_argument("unbalanced Dyck string");
    }
    if (depth != 0) throw std::invalid_argument("unbalanced Dyck string");
}

std::vector<int> PlaneTree::half_edge_pairs() const {
    std::vector<int> pair(dyck_.size());
    std::vector<int> stack;
    for (int i = 0; i < half_edges(); ++i) {
        if (dyck_[i] == '(') {
            stack.push_back(i);
        } else {
            pair[i] = stack.back();
            pair[stack.back()] = i;
            stack.pop_back();
        }
    }
    return pair;
}

PlaneTree matching_to_tree(const Matching& m) {
    std::string dyck(m.partner.size(), ' ');
    for (int i = 0; i < m.size(); ++i) {
        const int j = m.partner[i];
        if (j < 0 || j >= m.size() || j == i || m.partner[j] != i)
            throw std::invalid_argument("matching is not a perfect involution");
        dyck[i] = (j > i) ? '(' : ')';
    }
    try {
        PlaneTree t{std::move(dyck)};
        if (t.half_edge_pairs() != m.partner) throw std::invalid_argument("matching crosses");
        return t;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("matching is crossing or imperfect");
    }
}

Matching tree_to_matching(const PlaneTree& t) { return Matching{t.half_edge_pairs()}; }

bool is_valid(const Word& w, const PlaneTree& t) {
    if (w.size() != t.half_edges()) throw std::invalid_argument("word/tree length mismatch");
    const std::vector<int> pair = t.half_edge_pairs();
    for (int i = 0; i < w.size(); ++i)
        if (pair[i] > i && w[pair[i]] != complement(w[i])) return false;
    return true;
}

EdgeColoredTree fold_to_colored_tree(const Word& w, const PlaneTree& t) {
    if (!is_alternating(w)) throw std::invalid_argument("word is not alternating");
    if (!is_valid(w, t)) throw std::invalid_argument("tree is not valid for the word");
    EdgeColoredTree ct{t, {}, w.m()};
    ct.colors.reserve(t.edge_count());
    for (int i = 0; i < w.size(); ++i)
        if (t.dyck()[i] == '(') ct.colors.push_back(w[i].index);
    return ct;
}

std::pair<Word, PlaneTree> colored_tree_to_fold(const EdgeColoredTree& ct) {
    const PlaneTree& t = ct.tree;
    if (static_cast<int>(ct.colors.size()) != t.edge_count())
        throw std::invalid_argument("one color per edge required");
    const std::vector<int> pair = t.half_edge_pairs();
    std::vector<Letter> letters(t.half_edges());
    int edge = 0;
    for (int i = 0; i < t.half_edges(); ++i) {
        if (t.dyck()[i] != '(') continue;
        const int color = ct.colors[edge++];
        if (color < 1 || color > ct.m) throw std::invalid_argument("color outside [1, m]");
        const int j = pair[i];
        // 0-based even position = 1-indexed odd half edge: unbarred.
        letters[i] = {color, i % 2 != 0};
        letters[j] = {color, j % 2 != 0};
    }
    return {Word(std::move(letters), ct.m), t};
}

bool is_proper(const EdgeColoredTree& ct) {
    if (static_cast<int>(ct.colors.size()) != ct.tree.edge_count())
        throw std::invalid_argument("one color per edge required");
    const TreeStructure s = analyze(ct.tree);
    for (const auto& edges : s.incident) {
        for (size_t a = 0; a < edges.size(); ++a)
            for (size_t b = a + 1; b < edges.size(); ++b)
                if (ct.colors[edges[a]] == ct.colors[edges[b]]) return false;
    }
    return true;
}

bool DegreeMultiset::leaf_identity_holds() const {
    long long lhs = count(1);
    long long rhs = 2;
    for (int i = 2; i <= max_degree(); ++i) rhs += (i - 2) * count(i);
    return lhs == rhs;
}

DegreeMultiset degree_multiset(const PlaneTree& t) {
    const TreeStructure s = analyze(t);
    DegreeMultiset d;
    for (const auto& edges : s.incident) {
        const int degree = static_cast<int>(edges.size());
        if (degree == 0) continue;  // the one-vertex tree has no degrees to report
        if (degree > static_cast<int>(d.alpha.size())) d.alpha.resize(degree, 0);
        ++d.alpha[degree - 1];
    }
    return d;
}

bool classify_one_foldable(const Word& w) {
    if (w.size() % 2 != 0) return false;
    const Word dw = doubled(w);
    const GreedyOutcome greedy = greedy_fold(dw);
    if (!greedy.foldable()) return false;
    return is_proper(fold_to_colored_tree(dw, matching_to_tree(*greedy.matching)));
}

}  // namespace foldkit
