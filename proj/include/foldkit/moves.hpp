#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "foldkit/folding.hpp"
#include "foldkit/word.hpp"

namespace foldkit {

enum class MoveKind { type1 = 1, type2 = 2 };

/// A local re-pairing at positions p1 < p2 < p3 < p4 (0-based) holding
/// letters X, X', X, X' in the doubled word. Type 1 acts on the
/// side-by-side pairs {(p1,p2),(p3,p4)} and produces the nested pairs
/// {(p1,p4),(p2,p3)}; Type 2 is the reverse.
struct Move {
    MoveKind kind;
    std::array<int, 4> positions;

    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;
};

/// All moves available at folding M of w. Letter conditions are checked
/// on the doubled word, which makes the parity requirement automatic.
/// Throws std::invalid_argument when M is not a folding of w.
std::vector<Move> available_moves(const Word& w, const Matching& m);

/// Applies a move whose configuration is present in M; throws
/// std::invalid_argument otherwise. Callers guarantee the letter
/// condition (mv came from available_moves of the ambient word).
Matching apply_move(const Matching& m, const Move& mv);

/// The directed graph on the foldings of w: nodes in lexicographic
/// partner order, one edge (u, v) per Type-1 move from u to v.
struct FoldGraph {
    Word word;
    std::vector<Matching> nodes;
    std::vector<std::pair<int, int>> edges;
};

FoldGraph build_fold_graph(const Word& w);

struct SourceTheoremReport {
    bool unique_source = false;
    bool source_is_greedy = false;
    bool all_reachable = false;

    bool all() const { return unique_source && source_is_greedy && all_reachable; }
};

/// Checks that the fold graph has exactly one source, that it is the
/// greedy folding, and that every node is reachable from it. Throws
/// std::invalid_argument for unfoldable words.
SourceTheoremReport verify_source_theorem(const Word& w);

/// DOT digraph; nodes are labeled with 1-indexed pair lists and every
/// edge carries kind=1.
std::string to_dot(const FoldGraph& g);

}  // namespace foldkit
