// Brute-force oracles for the test suites. Everything here enumerates
// structures exhaustively and independently of the library's algorithms:
// foldings come from filtering all perfect matchings, walk counts from
// raw label sequences, tree counts from Dyck-word generation.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "foldkit/bigint.hpp"
#include "foldkit/folding.hpp"
#include "foldkit/tree.hpp"
#include "foldkit/word.hpp"

namespace oracles {

using foldkit::BigInt;
using foldkit::Letter;
using foldkit::Matching;
using foldkit::Word;

// All perfect matchings of {0..len-1} (crossing or not), via pairing the
// first free position with every later free one.
inline void all_perfect_matchings(int len, const std::function<void(const Matching&)>& fn) {
    Matching m;
    m.partner.assign(len, -1);
    std::function<void()> rec = [&]() {
        int first = -1;
        for (int i = 0; i < len; ++i)
            if (m.partner[i] < 0) {
                first = i;
                break;
            }
        if (first < 0) {
            fn(m);
            return;
        }
        for (int j = first + 1; j < len; ++j) {
            if (m.partner[j] >= 0) continue;
            m.partner[first] = j;
            m.partner[j] = first;
            rec();
            m.partner[first] = -1;
            m.partner[j] = -1;
        }
    };
    if (len % 2 == 0) rec();
}

// Foldings of w by filtering all perfect matchings with the four
// invariants (complementary, opposite parity, non-crossing), sorted.
inline std::vector<Matching> brute_foldings(const Word& w) {
    std::vector<Matching> out;
    all_perfect_matchings(w.size(), [&](const Matching& m) {
        if (foldkit::is_folding_of(w, m)) out.push_back(m);
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline BigInt brute_count(const Word& w) { return BigInt(brute_foldings(w).size()); }

// Every word of the given length over m letter pairs.
inline void for_each_word(int length, int m, const std::function<void(const Word&)>& fn) {
    std::vector<Letter> letters(length);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == length) {
            fn(Word(letters, m));
            return;
        }
        for (int d = 0; d < 2 * m; ++d) {
            letters[pos] = {d / 2 + 1, d % 2 == 1};
            rec(pos + 1);
        }
    };
    rec(0);
}

// Every alternating word (odd positions unbarred, even barred).
inline void for_each_alternating_word(int length, int m,
                                      const std::function<void(const Word&)>& fn) {
    std::vector<Letter> letters(length);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == length) {
            fn(Word(letters, m));
            return;
        }
        for (int d = 1; d <= m; ++d) {
            letters[pos] = {d, pos % 2 == 1};
            rec(pos + 1);
        }
    };
    rec(0);
}

// Closed walks on the m-regular tree: label sequences of length 2n that
// cancel to nothing when adjacent equal labels collapse.
inline BigInt brute_closed_walks(int n, int m) {
    BigInt count = 0;
    std::vector<int> labels(2 * n);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == 2 * n) {
            std::vector<int> stack;
            for (int x : labels) {
                if (!stack.empty() && stack.back() == x)
                    stack.pop_back();
                else
                    stack.push_back(x);
            }
            if (stack.empty()) ++count;
            return;
        }
        for (int d = 0; d < m; ++d) {
            labels[pos] = d;
            rec(pos + 1);
        }
    };
    rec(0);
    return count;
}

// All Dyck words with n pairs, lexicographic ('(' < ')').
inline std::vector<std::string> all_dyck(int n) {
    std::vector<std::string> out;
    std::string cur;
    std::function<void(int, int)> rec = [&](int open, int closed) {
        if (open == n && closed == n) {
            out.push_back(cur);
            return;
        }
        if (open < n) {
            cur.push_back('(');
            rec(open + 1, closed);
            cur.pop_back();
        }
        if (closed < open) {
            cur.push_back(')');
            rec(open, closed + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

// Deterministic generator for randomized cross-checks.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    int below(int n) { return static_cast<int>(next() % n); }
};

inline Word random_word(Lcg& rng, int length, int m) {
    std::vector<Letter> letters(length);
    for (int i = 0; i < length; ++i) letters[i] = {rng.below(m) + 1, rng.below(2) == 1};
    return Word(std::move(letters), m);
}

inline Word random_alternating_word(Lcg& rng, int length, int m) {
    std::vector<Letter> letters(length);
    for (int i = 0; i < length; ++i) letters[i] = {rng.below(m) + 1, i % 2 == 1};
    return Word(std::move(letters), m);
}

// Proper k-edge-colorings of a plane tree, by trying every assignment.
inline BigInt brute_proper_colorings(const foldkit::PlaneTree& t, int k) {
    const int edges = t.edge_count();
    BigInt count = 0;
    std::vector<int> colors(edges, 1);
    std::function<void(int)> rec = [&](int e) {
        if (e == edges) {
            if (foldkit::is_proper({t, colors, k})) ++count;
            return;
        }
        for (int c = 1; c <= k; ++c) {
            colors[e] = c;
            rec(e + 1);
        }
    };
    if (edges == 0) return foldkit::is_proper({t, {}, k}) ? 1 : 0;
    rec(0);
    return count;
}

}  // namespace oracles
