#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "foldkit/bigint.hpp"
#include "foldkit/folding.hpp"
#include "foldkit/word.hpp"

namespace foldkit {

/// Tally of fold counts over a word space: counts[k] words of S(n, m)
/// (or of the alternating subspace) are k-foldable.
struct Census {
    int n = 0;
    int m = 1;
    bool alternating_only = false;
    std::map<BigInt, unsigned long long> counts;

    unsigned long long total_words() const;
};

struct CensusOptions {
    int threads = 0;                 // 0: use available parallelism
    std::string checkpoint_dir;      // empty: no shard files
    unsigned long long budget = 0;   // 0: FOLDKIT_BUDGET or the built-in default
    bool alternating_only = false;
};

unsigned long long default_census_budget();

/// Iterates every word of the space, counts its foldings and tallies.
/// Deterministic for any thread count and block size; blocks are
/// checkpointed to census_n{n}_m{m}_block{b}.json when a checkpoint
/// directory is given, and existing shards are reused. Throws
/// std::invalid_argument when the space exceeds the budget.
Census fold_census(int n, int m, const CensusOptions& options = {});

/// R(n, m): the sorted fold counts attained by some word of S(n, m)
/// (0 included whenever an unfoldable word exists).
std::vector<BigInt> r_set(int n, int m, const CensusOptions& options = {});

/// Y(n, t): products of Catalan numbers over partitions of n - t into
/// at most t + 1 parts, {1} when n - t = 0. Requires 0 <= t <= n/2.
std::set<BigInt> y_set(int n, int t);

/// Z(n, t): sums of at most C_t elements of Y(n, t), with repetition;
/// computed by a min-term-count DP over [0, C_t * max Y].
std::set<BigInt> z_set(int n, int t);

/// Union of Z(n, t) over 0 <= t <= n/2: a superset of R(n, 1).
std::vector<BigInt> r_superset(int n);

/// Verification of the gap corollary: above C_{n-2} + C_2 C_{n-4} the
/// superset may contain only the five listed Catalan combinations.
struct TopGapReport {
    int n = 0;
    BigInt threshold;
    std::vector<BigInt> allowed;       // the five large values, ascending
    std::vector<BigInt> top_values;    // five largest superset elements
    std::vector<BigInt> violations;    // elements above threshold not allowed
    std::vector<std::pair<BigInt, BigInt>> gaps;  // missing ranges above threshold
    bool passed = false;
};

/// Requires n >= 13 (the corollary's hypothesis).
TopGapReport top_gap_report(int n);

/// Word families with proven fold counts (all over one letter pair):
///   maximal   n            (A a)^n                                C_n
///   product   n, t         (A a)^t (a A)^{n-t}                    C_t C_{n-t}
///   nearmax   n >= 3       (A a)^{n-3} a A A a a A                C_{n-2}+C_{n-3}
///   jcl       n, j, l      (a A)^l A^{n-l-j} a^j A^j a^{n-l-j}    (j+1) C_l,  2j <= n-l
///   small     n, l         a A^l a^j A^j a^l A, j = n-1-l         2j+2 if j<l else 2l+3
///   staircase n, i         A^i a^n A^{n-i}, 1 <= i <= n           1
///   three     n >= 4       A^{n-2} a^2 A^2 a^{n-2}                3
struct FamilyResult {
    Word word;
    BigInt expected;
};

FamilyResult family_word(const std::string& family,
                         const std::map<std::string, long long>& params);

/// The five-segment certificate of 2-foldability:
/// w = u1 X v1 X' u2 X v2 X' u3 with u1u3, u2, v1, v2 foldable and
/// u1 u2 X X' u3, X v1 v2 X' 1-foldable (X possibly barred, X' its
/// complement).
struct ADecomposition {
    Letter letter;
    std::array<int, 4> positions;  // 0-based p1 < p2 < p3 < p4
    Word u1, v1, u2, v2, u3;
};

/// Returns the lexicographically least witness quadruple, or nullopt.
/// Nonempty exactly for 2-foldable words.
std::optional<ADecomposition> find_a_decomposition(const Word& w);

}  // namespace foldkit
