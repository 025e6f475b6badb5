#include "foldkit/enumeration.hpp"

#include <cmath>
#include <stdexcept>

namespace foldkit {

BigInt catalan(int i) {
    if (i < 0) throw std::invalid_argument("catalan index must be >= 0");
    return binomial(2LL * i, i) / (i + 1);
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

BigInt factorial(long long n) {
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt proper_coloring_count(const DegreeMultiset& d, int k) {
    if (k < 1) throw std::invalid_argument("need at least one color");
    BigInt result = k;
    for (int i = 1; i <= d.max_degree(); ++i) {
        const long long a = d.count(i);
        if (a == 0) continue;
        const BigInt base = binomial(k - 1, i - 1) * factorial(i - 1);
        if (base == 0) return 0;
        for (long long rep = 0; rep < a; ++rep) result *= base;
    }
    return result;
}

BigInt rpt(const DegreeMultiset& d) {
    if (d.count(1) < 1 || !d.leaf_identity_holds()) return 0;
    long long top = 1;
    for (int i = 2; i <= d.max_degree(); ++i) top += (i - 1) * d.count(i);
    BigInt result = factorial(top);
    result /= factorial(d.count(1) - 1);
    for (int i = 2; i <= d.max_degree(); ++i) result /= factorial(d.count(i));
    result *= 2;
    const BigInt q = result / d.count(1);
    if (q * d.count(1) != result) throw std::logic_error("RPT formula is not integral");
    return q;
}

std::vector<DegreeMultiset> degree_sequences(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("degree_sequences requires n, k >= 1");
    std::vector<DegreeMultiset> out;
    // The two linear conditions determine alpha_1 and alpha_2 from the
    // higher entries, so only alpha_3..alpha_k are searched.
    std::vector<long long> high(std::max(0, k - 2), 0);
    auto emit = [&]() {
        long long a1 = 2, weight = 0;
        for (size_t h = 0; h < high.size(); ++h) {
            const long long i = static_cast<long long>(h) + 3;
            a1 += (i - 2) * high[h];
            weight += i * high[h];
        }
        const long long rest = 2LL * n - a1 - weight;
        if (rest < 0) return;
        // rest is always even: a1 + weight = 2 + sum (2i-2) alpha_i.
        const long long a2 = rest / 2;
        if (k < 2 && a2 > 0) return;
        DegreeMultiset d;
        d.alpha.assign(2 + high.size(), 0);
        d.alpha[0] = a1;
        if (d.alpha.size() > 1) d.alpha[1] = a2;
        for (size_t h = 0; h < high.size(); ++h) d.alpha[2 + h] = high[h];
        while (!d.alpha.empty() && d.alpha.back() == 0) d.alpha.pop_back();
        out.push_back(std::move(d));
    };
    auto rec = [&](auto&& self, int i, long long budget) -> void {
        if (i > k) {
            emit();
            return;
        }
        for (long long a = 0; a * i <= budget; ++a) {
            high[i - 3] = a;
            self(self, i + 1, budget - a * i);
        }
        high[i - 3] = 0;
    };
    if (k >= 3)
        rec(rec, 3, 2LL * n);
    else
        emit();
    return out;
}

BigInt count_one_foldable(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("count_one_foldable requires n, m >= 1");
    BigInt total = 0;
    for (const DegreeMultiset& d : degree_sequences(n, 2 * m))
        total += rpt(d) * proper_coloring_count(d, 2 * m);
    return total;
}

namespace {

// b_i = m (m-1)^i binom(2i, i) / (4i - 2); the division is exact.
BigInt walk_coefficient(int i, int m) {
    BigInt numerator = m * pow(BigInt(m - 1), i) * binomial(2LL * i, i);
    const BigInt divisor = 4LL * i - 2;
    const BigInt q = numerator / divisor;
    if (q * divisor != numerator) throw std::logic_error("walk coefficient is not integral");
    return q;
}

}  // namespace

BigInt closed_walks(int n, int m) {
    if (m < 2) throw std::invalid_argument("closed walks require m >= 2");
    if (n < 0) throw std::invalid_argument("closed walks require n >= 0");
    BigInt total = pow(BigInt(m), 2 * n);
    for (int i = 1; i <= n; ++i)
        total -= pow(BigInt(m), 2 * (n - i)) * walk_coefficient(i, m);
    return total;
}

BigInt closed_walks_series(int n, int m) {
    if (m < 2) throw std::invalid_argument("closed walks require m >= 2");
    if (n < 0) throw std::invalid_argument("closed walks require n >= 0");
    BigInt a = 1;
    for (int i = 1; i <= n; ++i) a = BigInt(m) * m * a - walk_coefficient(i, m);
    return a;
}

BigInt count_foldable(int n, int m) {
    if (n < 0 || m < 1) throw std::invalid_argument("count_foldable requires n >= 0, m >= 1");
    if (n == 0) return 1;
    return closed_walks(n, 2 * m);
}

double asymptotic_estimate_log(int n, int m) {
    if (m < 3) throw std::invalid_argument("asymptotic estimate requires m >= 3");
    if (n < 1) throw std::invalid_argument("asymptotic estimate requires n >= 1");
    return n * std::log(4.0 * m - 4.0) - 1.5 * std::log(static_cast<double>(n)) +
           std::log(static_cast<double>(m) * (m - 1)) - 0.5 * std::log(std::acos(-1.0)) -
           2.0 * std::log(static_cast<double>(m - 2));
}

double asymptotic_estimate(int n, int m) { return std::exp(asymptotic_estimate_log(n, m)); }

double log_big(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log of a non-positive value");
    const unsigned bits = static_cast<unsigned>(msb(v));
    if (bits < 960) return std::log(v.convert_to<double>());
    const unsigned shift = bits - 960;
    return std::log((v >> shift).convert_to<double>()) + shift * std::log(2.0);
}

double asymptotic_relative_error(int n, int m) {
    const double exact_log = log_big(closed_walks(n, m));
    return std::abs(std::exp(exact_log - asymptotic_estimate_log(n, m)) - 1.0);
}

namespace {

double growth_log(double x, double y) {
    const double s = 1.0 - 2.0 * x - 3.0 * y;
    if (x <= 0 || y <= 0 || s <= 0) return -1e300;
    return std::log(3.0) - std::log(s) +
           x * (std::log(2.0) + 2.0 * std::log(s) - std::log(3.0 * x * (x + 2.0 * y))) +
           y * (std::log(2.0) + 3.0 * std::log(s) - std::log(9.0 * y) -
                2.0 * std::log(x + 2.0 * y));
}

// Golden-section maximization of f over [lo, hi].
template <typename F>
double golden_max(F f, double lo, double hi, double tol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return (fc > fd) ? c : d;
}

}  // namespace

double one_fold_growth_base(double x, double y) {
    if (!(x > 0 && y > 0 && 2 * x + 3 * y < 1))
        throw std::invalid_argument("point outside the open simplex");
    return std::exp(growth_log(x, y));
}

GrowthPoint one_fold_growth_rate(double tolerance) {
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    constexpr int grid = 400;
    double best_x = 0, best_y = 0, best = -1e300;
    for (int i = 1; i < grid; ++i) {
        for (int j = 1; j < grid; ++j) {
            const double x = 0.5 * i / grid;
            const double y = (1.0 / 3.0) * j / grid;
            const double v = growth_log(x, y);
            if (v > best) {
                best = v;
                best_x = x;
                best_y = y;
            }
        }
    }
    const double coord_tol = tolerance * 1e-2;
    double x = best_x, y = best_y;
    double prev_base = std::exp(growth_log(x, y));
    for (int iter = 0; iter < 200; ++iter) {
        const double span_x = 2.0 / grid, span_y = 2.0 / (3.0 * grid);
        x = golden_max([&](double t) { return growth_log(t, y); },
                       std::max(1e-12, x - span_x), std::min(0.5, x + span_x), coord_tol);
        y = golden_max([&](double t) { return growth_log(x, t); },
                       std::max(1e-12, y - span_y), std::min(1.0 / 3.0, y + span_y), coord_tol);
        const double base = std::exp(growth_log(x, y));
        if (std::abs(base - prev_base) < tolerance * 0.5) return {x, y, base};
        prev_base = base;
    }
    throw std::runtime_error("growth-rate optimizer did not converge");
}

}  // namespace foldkit
