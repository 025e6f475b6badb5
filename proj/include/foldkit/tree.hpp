#pragma once

#include <string>
#include <utility>
#include <vector>

#include "foldkit/folding.hpp"
#include "foldkit/word.hpp"

namespace foldkit {

/// A plane tree encoded as its Dyck word: step i is the i-th half edge
/// in the counterclockwise perimeter order, '(' going down an edge and
/// ')' coming back up.
class PlaneTree {
public:
    PlaneTree() = default;

    /// Throws std::invalid_argument unless `dyck` is a balanced string
    /// over '(' and ')'.
    explicit PlaneTree(std::string dyck);

    const std::string& dyck() const { return dyck_; }
    int half_edges() const { return static_cast<int>(dyck_.size()); }
    int edge_count() const { return half_edges() / 2; }

    /// For each half edge, the position of the other half of its edge
    /// (0-based).
    std::vector<int> half_edge_pairs() const;

    friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
    friend auto operator<=>(const PlaneTree& a, const PlaneTree& b) {
        return a.dyck_ <=> b.dyck_;
    }

private:
    std::string dyck_;
};

/// Pair (i, j) of a non-crossing perfect matching becomes open at i,
/// close at j. Throws std::invalid_argument when the matching crosses or
/// is imperfect.
PlaneTree matching_to_tree(const Matching& m);
Matching tree_to_matching(const PlaneTree& t);

/// True iff for every edge of T the two letters of w on its half edges
/// are complements. Throws std::invalid_argument on length mismatch.
bool is_valid(const Word& w, const PlaneTree& t);

/// A plane tree with one color in [m] per edge; colors are listed in
/// increasing order of the edge's opening half-edge position.
struct EdgeColoredTree {
    PlaneTree tree;
    std::vector<int> colors;
    int m = 1;

    friend bool operator==(const EdgeColoredTree&, const EdgeColoredTree&) = default;
};

/// Colors each edge by the common index of its two letters. Requires
/// is_alternating(w) and is_valid(w, t).
EdgeColoredTree fold_to_colored_tree(const Word& w, const PlaneTree& t);

/// Inverse of fold_to_colored_tree: an edge of color i puts the barred
/// letter on its even half edge (1-indexed) and the unbarred one on the
/// odd half edge, producing an alternating word.
std::pair<Word, PlaneTree> colored_tree_to_fold(const EdgeColoredTree& ct);

/// True iff no two edges sharing a vertex have the same color.
bool is_proper(const EdgeColoredTree& ct);

/// Vertex-degree counts of a plane tree: alpha[i-1] vertices have
/// degree i. The root's degree is its child count; every other vertex
/// counts its parent edge too. For any tree with at least one edge the
/// leaf identity alpha_1 = 2 + sum_{i>=2} (i-2) alpha_i holds.
struct DegreeMultiset {
    std::vector<long long> alpha;

    long long count(int degree) const {
        return (degree >= 1 && degree <= static_cast<int>(alpha.size())) ? alpha[degree - 1] : 0;
    }
    int max_degree() const { return static_cast<int>(alpha.size()); }
    bool leaf_identity_holds() const;

    friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;
};

DegreeMultiset degree_multiset(const PlaneTree& t);

/// True iff w has exactly one folding: w is foldable and the edge
/// coloring of the greedy folding of its doubled form is proper (no
/// incident equal colors means no local move is available).
bool classify_one_foldable(const Word& w);

}  // namespace foldkit
