#pragma once

#include <vector>

#include "foldkit/bigint.hpp"
#include "foldkit/tree.hpp"

namespace foldkit {

/// C_i = binom(2i, i) / (i + 1).
BigInt catalan(int i);

BigInt binomial(long long n, long long k);
BigInt factorial(long long n);

/// Number of proper k-edge-colorings of any plane tree with the given
/// degree multiset: k * prod_i (binom(k-1, i-1) (i-1)!)^{alpha_i}, with
/// 0^0 = 1; zero whenever the maximum degree exceeds k.
BigInt proper_coloring_count(const DegreeMultiset& d, int k);

/// Number of plane trees with the given degree multiset
/// (Mallows-Wacher): (2/alpha_1) * multinomial; zero when the leaf
/// identity fails.
BigInt rpt(const DegreeMultiset& d);

/// All degree multisets with alpha_i = 0 for i > k, sum i*alpha_i = 2n
/// and the leaf identity, i.e. the degree data of n-edge plane trees
/// that admit a proper k-edge-coloring. Deterministic order.
std::vector<DegreeMultiset> degree_sequences(int n, int k);

/// Number of 1-foldable words of length 2n over m letter pairs:
/// sum over degree_sequences(n, 2m) of rpt * proper_coloring_count.
BigInt count_one_foldable(int n, int m);

/// Number a_n of closed walks of length 2n on the infinite m-regular
/// tree, by the explicit formula
/// a_n = m^{2n} - sum_i m^{1+2(n-i)} (m-1)^i binom(2i,i)/(4i-2).
/// Every division is checked exact. Requires m >= 2; a_0 = 1.
BigInt closed_walks(int n, int m);

/// The same numbers extracted from the generating function
/// (1 - sum b_i x^i)/(1 - m^2 x) via the recurrence
/// a_n = m^2 a_{n-1} - b_n. Independent of closed_walks.
BigInt closed_walks_series(int n, int m);

/// |P(n, m)|: foldable words of length 2n over m letter pairs, via the
/// bijection with closed walks on the 2m-regular tree.
BigInt count_foldable(int n, int m);

/// Leading asymptotic term for closed_walks(n, m), m >= 3:
/// (4m-4)^n n^{-3/2} m(m-1) / (sqrt(pi) (m-2)^2). Computed in log
/// space; may overflow to infinity for very large n.
double asymptotic_estimate(int n, int m);

/// Natural log of the estimate (always finite).
double asymptotic_estimate_log(int n, int m);

/// Natural log of a positive big integer.
double log_big(const BigInt& v);

/// |closed_walks(n,m) / asymptotic_estimate(n,m) - 1|, evaluated in log
/// space so it stays finite for large n.
double asymptotic_relative_error(int n, int m);

/// Argmax and value of the exponential base governing the m = 2
/// 1-foldable count.
struct GrowthPoint {
    double x = 0;
    double y = 0;
    double base = 0;
};

/// The base value at a point of the open simplex x, y > 0, 2x + 3y < 1.
double one_fold_growth_base(double x, double y);

/// Maximizes the base over x, y > 0, 2x + 3y < 1 by a coarse grid
/// followed by coordinate-wise golden-section refinement, all in log
/// space, until the base moves by less than `tolerance`. Throws
/// std::runtime_error when the iteration budget is exhausted.
GrowthPoint one_fold_growth_rate(double tolerance);

}  // namespace foldkit
