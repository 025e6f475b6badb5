#include "foldkit/folding.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "foldkit/enumeration.hpp"

namespace foldkit {

std::vector<std::pair<int, int>> Matching::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(partner.size() / 2);
    for (int i = 0; i < size(); ++i)
        if (partner[i] > i) out.emplace_back(i + 1, partner[i] + 1);
    return out;
}

Matching Matching::from_pairs(int length, const std::vector<std::pair<int, int>>& pairs) {
    Matching m;
    m.partner.assign(length, -1);
    for (auto [a, b] : pairs) {
        if (a < 1 || b < 1 || a > length || b > length || a == b)
            throw std::invalid_argument("pair out of range");
        if (m.partner[a - 1] != -1 || m.partner[b - 1] != -1)
            throw std::invalid_argument("position matched twice");
        m.partner[a - 1] = b - 1;
        m.partner[b - 1] = a - 1;
    }
    for (int i = 0; i < length; ++i)
        if (m.partner[i] == -1) throw std::invalid_argument("matching is not perfect");
    return m;
}

bool is_folding_of(const Word& w, const Matching& m) {
    const int n = w.size();
    if (m.size() != n || n % 2 != 0) return false;
    for (int i = 0; i < n; ++i) {
        const int j = m.partner[i];
        if (j < 0 || j >= n || j == i) return false;
        if (m.partner[j] != i) return false;
        if (w[j] != complement(w[i])) return false;
        if ((i % 2) == (j % 2)) return false;
    }
    // Non-crossing: arcs nest properly under a stack scan.
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        if (m.partner[i] > i) {
            stack.push_back(i);
        } else {
            if (stack.empty() || stack.back() != m.partner[i]) return false;
            stack.pop_back();
        }
    }
    return stack.empty();
}

GreedyOutcome greedy_fold(const Word& w) {
    const int n = w.size();
    std::vector<int> partner(n, -1);
    // The most recent unmatched position is the only legal partner:
    // anything between it and i is already matched, so the new arc can
    // never cross. Matching an older unmatched complement across an
    // open position would.
    std::vector<int> open;
    for (int i = 0; i < n; ++i) {
        if (!open.empty() && w[open.back()] == complement(w[i])) {
            partner[open.back()] = i;
            partner[i] = open.back();
            open.pop_back();
        } else {
            open.push_back(i);
        }
    }
    GreedyOutcome out;
    out.open_positions = std::move(open);
    if (out.open_positions.empty()) out.matching = Matching{std::move(partner)};
    return out;
}

namespace {

// Interval DP on half-open [i, j). Splits on the partner of position i:
// F(i,j) = sum over k complementary to i at odd offset of
// F(i+1,k) * F(k+1,j). Values never exceed C_{len/2}, so a u64 table is
// exact up to length 64; longer words use big integers.
template <typename Count>
Count count_interval(const Word& w, std::vector<Count>& memo, std::vector<char>& seen, int n,
                     int i, int j) {
    if (i >= j) return Count(1);
    const int id = i * (n + 1) + j;
    if (seen[id]) return memo[id];
    Count total(0);
    const Letter want = complement(w[i]);
    for (int k = i + 1; k < j; k += 2) {
        if (w[k] == want) {
            Count inside = count_interval(w, memo, seen, n, i + 1, k);
            if (inside != 0) total += inside * count_interval(w, memo, seen, n, k + 1, j);
        }
    }
    seen[id] = 1;
    memo[id] = total;
    return total;
}

template <typename Count>
Count count_foldings_impl(const Word& w) {
    const int n = w.size();
    if (n % 2 != 0) return Count(0);
    std::vector<Count> memo((n + 1) * (n + 1));
    std::vector<char> seen((n + 1) * (n + 1), 0);
    return count_interval(w, memo, seen, n, 0, n);
}

}  // namespace

BigInt count_foldings(const Word& w) {
    if (w.size() <= 64) return BigInt(count_foldings_impl<std::uint64_t>(w));
    return count_foldings_impl<BigInt>(w);
}

namespace {

// All matchings of [i, j), each as a pair list, in an order that makes
// the full partner arrays come out lexicographically sorted.
void enumerate_interval(const Word& w, int i, int j,
                        std::vector<std::vector<std::pair<int, int>>>& out) {
    out.clear();
    if (i >= j) {
        out.push_back({});
        return;
    }
    const Letter want = complement(w[i]);
    for (int k = i + 1; k < j; k += 2) {
        if (w[k] != want) continue;
        std::vector<std::vector<std::pair<int, int>>> inside, outside;
        enumerate_interval(w, i + 1, k, inside);
        if (inside.empty()) continue;
        enumerate_interval(w, k + 1, j, outside);
        for (const auto& in : inside)
            for (const auto& os : outside) {
                std::vector<std::pair<int, int>> m;
                m.reserve(1 + in.size() + os.size());
                m.emplace_back(i, k);
                m.insert(m.end(), in.begin(), in.end());
                m.insert(m.end(), os.begin(), os.end());
                out.push_back(std::move(m));
            }
    }
}

}  // namespace

std::vector<Matching> enumerate_foldings(const Word& w) {
    std::vector<Matching> result;
    const int n = w.size();
    if (n % 2 != 0) return result;
    std::vector<std::vector<std::pair<int, int>>> lists;
    enumerate_interval(w, 0, n, lists);
    result.reserve(lists.size());
    for (const auto& pairs : lists) {
        Matching m;
        m.partner.assign(n, -1);
        for (auto [a, b] : pairs) {
            m.partner[a] = b;
            m.partner[b] = a;
        }
        result.push_back(std::move(m));
    }
    return result;
}

namespace {

void require_alternating_two_letter(const Word& w) {
    if (!is_alternating(w)) throw std::invalid_argument("word is not alternating");
    if (w.m() != 2) throw std::invalid_argument("A-matchings require alphabet size 2");
}

// Matchings of the index-1 subsequence, recursing on subsequence slots.
void enumerate_a_interval(const Word& w, const std::vector<int>& slots, int i, int j,
                          std::vector<AMatching>& out) {
    out.clear();
    if (i >= j) {
        out.push_back({});
        return;
    }
    const Letter want = complement(w[slots[i]]);
    for (int k = i + 1; k < j; ++k) {
        if (w[slots[k]] != want) continue;
        std::vector<AMatching> inside, outside;
        enumerate_a_interval(w, slots, i + 1, k, inside);
        if (inside.empty()) continue;
        enumerate_a_interval(w, slots, k + 1, j, outside);
        for (const auto& in : inside)
            for (const auto& os : outside) {
                AMatching m;
                m.reserve(1 + in.size() + os.size());
                m.emplace_back(slots[i], slots[k]);
                m.insert(m.end(), in.begin(), in.end());
                m.insert(m.end(), os.begin(), os.end());
                out.push_back(std::move(m));
            }
    }
}

}  // namespace

std::vector<AMatching> enumerate_a_matchings(const Word& w) {
    require_alternating_two_letter(w);
    std::vector<int> slots;
    for (int i = 0; i < w.size(); ++i)
        if (w[i].index == 1) slots.push_back(i);
    std::vector<AMatching> out;
    if (slots.size() % 2 != 0) return out;
    enumerate_a_interval(w, slots, 0, static_cast<int>(slots.size()), out);
    return out;
}

BigInt a_matching_extension_count(const Word& w, const AMatching& phi) {
    require_alternating_two_letter(w);
    const int n = w.size();
    // Innermost enclosing A-arc per position; -1 for the root face.
    std::vector<int> open_at(n, -1), close_at(n, -1);
    for (int a = 0; a < static_cast<int>(phi.size()); ++a) {
        auto [i, j] = phi[a];
        open_at[i] = a;
        close_at[j] = a;
    }
    std::vector<int> face_size(phi.size() + 1, 0);
    std::vector<char> face_parity(phi.size() + 1, 0);  // barred flag of the group's first letter
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        if (open_at[i] >= 0) {
            stack.push_back(open_at[i]);
            continue;
        }
        if (close_at[i] >= 0) {
            if (stack.empty() || stack.back() != close_at[i])
                throw std::logic_error("A-matching is not non-crossing");
            stack.pop_back();
            continue;
        }
        if (w[i].index != 2) throw std::logic_error("index-1 position missing from A-matching");
        const int face = (stack.empty() ? static_cast<int>(phi.size()) : stack.back());
        if (face_size[face] == 0) {
            face_parity[face] = w[i].barred;
        } else {
            const bool expected = (face_size[face] % 2 == 0) == static_cast<bool>(face_parity[face]);
            if (w[i].barred != expected) throw std::logic_error("B-grouping does not alternate");
        }
        ++face_size[face];
    }
    BigInt product(1);
    for (size_t f = 0; f < face_size.size(); ++f) {
        if (face_size[f] == 0) continue;
        if (face_size[f] % 2 != 0) throw std::logic_error("odd B-grouping");
        product *= catalan(face_size[f] / 2);
    }
    return product;
}

BigInt count_via_a_matchings(const Word& w) {
    BigInt total(0);
    for (const AMatching& phi : enumerate_a_matchings(w))
        total += a_matching_extension_count(w, phi);
    return total;
}

}  // namespace foldkit
