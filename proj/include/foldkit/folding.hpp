#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "foldkit/bigint.hpp"
#include "foldkit/word.hpp"

namespace foldkit {

/// A non-crossing perfect matching of word positions, stored as the
/// involution partner[i] = j (0-based). Attached to a word it is a
/// folding: matched letters are complements and have opposite parity.
struct Matching {
    std::vector<int> partner;

    int size() const { return static_cast<int>(partner.size()); }

    /// Pairs (i, j) with i < j, 1-indexed, ordered by opening position.
    std::vector<std::pair<int, int>> pairs() const;

    /// Builds the involution from 1-indexed pairs; throws
    /// std::invalid_argument on overlaps or out-of-range positions.
    static Matching from_pairs(int length, const std::vector<std::pair<int, int>>& pairs);

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching& a, const Matching& b) {
        return a.partner <=> b.partner;
    }
};

/// True iff M is a perfect, fixed-point-free, non-crossing involution on
/// w's positions pairing complementary letters of opposite parity.
bool is_folding_of(const Word& w, const Matching& m);

/// Result of the greedy algorithm: `matching` is engaged exactly when w
/// is foldable; otherwise `open_positions` lists (0-based) the positions
/// the scan left unmatched.
struct GreedyOutcome {
    std::optional<Matching> matching;
    std::vector<int> open_positions;

    bool foldable() const { return matching.has_value(); }
};

/// Left-to-right scan: w[i] is matched with the most recent unmatched
/// position when that position holds the complement of w[i], and stays
/// open otherwise. For foldable words this produces the greedy folding,
/// the unique source of the move graph; otherwise the outcome reports
/// the open positions.
GreedyOutcome greedy_fold(const Word& w);

/// The number of foldings of w, by interval dynamic programming over
/// [i, j] splitting on the partner of position i. Exact; odd-length
/// words give 0.
BigInt count_foldings(const Word& w);

/// All foldings in lexicographic order of their partner arrays.
std::vector<Matching> enumerate_foldings(const Word& w);

/// A partial non-crossing matching of only the index-1 positions of an
/// alternating two-letter word; pairs are (0-based) word positions.
using AMatching = std::vector<std::pair<int, int>>;

/// All A-matchings of w in lexicographic order. Requires is_alternating
/// and m = 2.
std::vector<AMatching> enumerate_a_matchings(const Word& w);

/// Number of foldings extending `phi`: the A-matching cuts the index-2
/// letters into groupings of even size 2s, each contributing a Catalan
/// factor C_s. Throws std::logic_error if a grouping is odd or does not
/// alternate (impossible for alternating words).
BigInt a_matching_extension_count(const Word& w, const AMatching& phi);

/// Sum of extension counts over every A-matching; equals
/// count_foldings(w) for alternating m = 2 words.
BigInt count_via_a_matchings(const Word& w);

}  // namespace foldkit
