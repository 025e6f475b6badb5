#include "foldkit/rsets.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "foldkit/enumeration.hpp"
#include "foldkit/tree.hpp"

namespace foldkit {

namespace {

using CountMap = std::map<BigInt, unsigned long long>;

// ---- census ---------------------------------------------------------

struct CensusSpace {
    int n, m;
    bool alternating;
    int base;          // digits per position
    int length;        // 2n
    int prefix_len;    // positions fixed by the block id
    std::uint64_t block_count;
    std::uint64_t words_per_block;
};

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Letter letter_for_digit(const CensusSpace& space, int position, int digit) {
    if (space.alternating) return {digit + 1, position % 2 == 1};
    return {digit / 2 + 1, digit % 2 == 1};
}

Word word_for_rank(const CensusSpace& space, std::uint64_t rank) {
    std::vector<Letter> letters(space.length);
    for (int pos = space.length - 1; pos >= 0; --pos) {
        letters[pos] = letter_for_digit(space, pos, static_cast<int>(rank % space.base));
        rank /= space.base;
    }
    return Word(std::move(letters), space.m);
}

CountMap census_block(const CensusSpace& space, std::uint64_t block) {
    CountMap counts;
    const std::uint64_t lo = block * space.words_per_block;
    for (std::uint64_t i = 0; i < space.words_per_block; ++i)
        ++counts[count_foldings(word_for_rank(space, lo + i))];
    return counts;
}

std::filesystem::path shard_path(const std::string& dir, const CensusSpace& space,
                                 std::uint64_t block) {
    return std::filesystem::path(dir) /
           ("census_n" + std::to_string(space.n) + "_m" + std::to_string(space.m) + "_block" +
            std::to_string(block) + ".json");
}

void write_shard(const std::filesystem::path& path, const CensusSpace& space,
                 std::uint64_t block, const CountMap& counts) {
    nlohmann::json j;
    j["n"] = space.n;
    j["m"] = space.m;
    j["alternating"] = space.alternating;
    j["block"] = block;
    auto& rows = j["counts"] = nlohmann::json::array();
    for (const auto& [k, words] : counts) rows.push_back({k.str(), words});
    const auto tmp = path.string() + ".tmp";
    std::ofstream out(tmp);
    out << j.dump();
    out.close();
    std::filesystem::rename(tmp, path);
}

std::optional<CountMap> read_shard(const std::filesystem::path& path, const CensusSpace& space,
                                   std::uint64_t block) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    if (j.value("n", -1) != space.n || j.value("m", -1) != space.m ||
        j.value("alternating", !space.alternating) != space.alternating ||
        j.value("block", std::uint64_t(-1)) != block)
        throw std::runtime_error("checkpoint shard mismatch: " + path.string());
    CountMap counts;
    for (const auto& row : j.at("counts"))
        counts[BigInt(row.at(0).get<std::string>())] = row.at(1).get<unsigned long long>();
    return counts;
}

void merge_into(CountMap& into, const CountMap& from) {
    for (const auto& [k, words] : from) into[k] += words;
}

}  // namespace

unsigned long long Census::total_words() const {
    unsigned long long total = 0;
    for (const auto& [k, words] : counts) total += words;
    return total;
}

unsigned long long default_census_budget() {
    if (const char* env = std::getenv("FOLDKIT_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("FOLDKIT_BUDGET must be a positive integer");
    }
    return 1ull << 26;
}

Census fold_census(int n, int m, const CensusOptions& options) {
    if (n < 0 || m < 1) throw std::invalid_argument("fold_census requires n >= 0, m >= 1");
    CensusSpace space;
    space.n = n;
    space.m = m;
    space.alternating = options.alternating_only;
    space.base = options.alternating_only ? m : 2 * m;
    space.length = 2 * n;

    const unsigned long long budget = options.budget ? options.budget : default_census_budget();
    const BigInt size_check = pow(BigInt(space.base), space.length);
    if (size_check > budget)
        throw std::invalid_argument(
            "word space of " + size_check.str() + " words exceeds the budget of " +
            std::to_string(budget) +
            " (set FOLDKIT_BUDGET, restrict to the alternating space, or checkpoint)");

    space.prefix_len = 0;
    while (space.prefix_len < space.length && ipow(space.base, space.prefix_len) < 256)
        ++space.prefix_len;
    space.block_count = ipow(space.base, space.prefix_len);
    space.words_per_block = ipow(space.base, space.length - space.prefix_len);

    const int threads = options.threads > 0
                            ? options.threads
                            : std::max(1u, std::thread::hardware_concurrency());

    std::vector<CountMap> per_block(space.block_count);
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= space.block_count || failed.load()) return;
            try {
                if (!options.checkpoint_dir.empty()) {
                    const auto path = shard_path(options.checkpoint_dir, space, b);
                    if (auto loaded = read_shard(path, space, b)) {
                        per_block[b] = std::move(*loaded);
                        continue;
                    }
                    per_block[b] = census_block(space, b);
                    write_shard(path, space, b, per_block[b]);
                } else {
                    per_block[b] = census_block(space, b);
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed = true;
                error = e.what();
                return;
            }
        }
    };

    if (!options.checkpoint_dir.empty())
        std::filesystem::create_directories(options.checkpoint_dir);

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed) throw std::runtime_error("census failed: " + error);

    Census census;
    census.n = n;
    census.m = m;
    census.alternating_only = options.alternating_only;
    for (const auto& block : per_block) merge_into(census.counts, block);
    return census;
}

std::vector<BigInt> r_set(int n, int m, const CensusOptions& options) {
    std::vector<BigInt> keys;
    for (const auto& [k, words] : fold_census(n, m, options).counts)
        if (words > 0) keys.push_back(k);
    return keys;
}

// ---- Catalan superset -----------------------------------------------

namespace {

void partitions_into_parts(int total, int max_parts, int max_value,
                           std::vector<int>& current, const std::function<void()>& emit) {
    if (total == 0) {
        emit();
        return;
    }
    if (max_parts == 0) return;
    for (int first = std::min(total, max_value); first >= 1; --first) {
        current.push_back(first);
        partitions_into_parts(total - first, max_parts - 1, first, current, emit);
        current.pop_back();
    }
}

}  // namespace

std::set<BigInt> y_set(int n, int t) {
    if (t < 0 || 2 * t > n) throw std::invalid_argument("y_set requires 0 <= t <= n/2");
    std::set<BigInt> out;
    if (n - t == 0) {
        out.insert(1);
        return out;
    }
    std::vector<int> current;
    partitions_into_parts(n - t, t + 1, n - t, current, [&]() {
        BigInt product = 1;
        for (int part : current) product *= catalan(part);
        out.insert(product);
    });
    return out;
}

std::set<BigInt> z_set(int n, int t) {
    const std::set<BigInt> y = y_set(n, t);
    const BigInt h_max = catalan(t);
    const BigInt cap_big = h_max * *std::max_element(y.begin(), y.end());
    if (cap_big > (1 << 26))
        throw std::invalid_argument("z_set range " + cap_big.str() + " exceeds the budget");
    const std::uint64_t cap = cap_big.convert_to<std::uint64_t>();
    std::vector<std::uint64_t> values;
    for (const BigInt& v : y) values.push_back(v.convert_to<std::uint64_t>());

    // f[s] = least number of Y-terms summing to s.
    constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> terms(cap + 1, kUnreachable);
    terms[0] = 0;
    for (std::uint64_t s = 1; s <= cap; ++s) {
        std::uint32_t best = kUnreachable;
        for (std::uint64_t v : values) {
            if (v > s) break;
            if (terms[s - v] != kUnreachable && terms[s - v] + 1 < best) best = terms[s - v] + 1;
        }
        terms[s] = best;
    }
    const std::uint64_t h_limit =
        (h_max > cap_big) ? cap : h_max.convert_to<std::uint64_t>();
    std::set<BigInt> out;
    for (std::uint64_t s = 0; s <= cap; ++s)
        if (terms[s] != kUnreachable && terms[s] <= h_limit) out.insert(BigInt(s));
    return out;
}

std::vector<BigInt> r_superset(int n) {
    if (n < 1) throw std::invalid_argument("r_superset requires n >= 1");
    std::set<BigInt> all;
    for (int t = 0; 2 * t <= n; ++t) {
        const std::set<BigInt> z = z_set(n, t);
        all.insert(z.begin(), z.end());
    }
    return {all.begin(), all.end()};
}

TopGapReport top_gap_report(int n) {
    if (n < 13) throw std::invalid_argument("the gap corollary requires n >= 13");
    TopGapReport report;
    report.n = n;
    report.threshold = catalan(n - 2) + catalan(2) * catalan(n - 4);
    report.allowed = {catalan(n - 2) + catalan(n - 3), catalan(3) * catalan(n - 3),
                      catalan(2) * catalan(n - 2), catalan(n - 1), catalan(n)};
    std::sort(report.allowed.begin(), report.allowed.end());

    const std::vector<BigInt> superset = r_superset(n);
    report.top_values.assign(superset.end() - std::min<size_t>(5, superset.size()),
                             superset.end());

    BigInt previous = report.threshold;
    for (const BigInt& v : superset) {
        if (v <= report.threshold) continue;
        if (v - previous > 1) report.gaps.emplace_back(previous + 1, v - 1);
        previous = v;
        if (!std::binary_search(report.allowed.begin(), report.allowed.end(), v))
            report.violations.push_back(v);
    }
    report.passed = report.violations.empty();
    return report;
}

// ---- word families ---------------------------------------------------

namespace {

constexpr Letter kA{1, false};
constexpr Letter kABar{1, true};

void append_run(std::vector<Letter>& out, Letter x, long long times) {
    for (long long i = 0; i < times; ++i) out.push_back(x);
}

long long required(const std::map<std::string, long long>& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("family parameter '" + key + "' is required");
    return it->second;
}

}  // namespace

FamilyResult family_word(const std::string& family,
                         const std::map<std::string, long long>& params) {
    std::vector<Letter> letters;
    const long long n = required(params, "n");
    if (family == "maximal") {
        if (n < 0) throw std::invalid_argument("maximal requires n >= 0");
        for (long long i = 0; i < n; ++i) {
            letters.push_back(kA);
            letters.push_back(kABar);
        }
        return {Word(std::move(letters), 1), catalan(static_cast<int>(n))};
    }
    if (family == "product") {
        const long long t = required(params, "t");
        if (t < 0 || t > n) throw std::invalid_argument("product requires 0 <= t <= n");
        for (long long i = 0; i < t; ++i) {
            letters.push_back(kA);
            letters.push_back(kABar);
        }
        for (long long i = 0; i < n - t; ++i) {
            letters.push_back(kABar);
            letters.push_back(kA);
        }
        return {Word(std::move(letters), 1),
                catalan(static_cast<int>(t)) * catalan(static_cast<int>(n - t))};
    }
    if (family == "nearmax") {
        if (n < 3) throw std::invalid_argument("nearmax requires n >= 3");
        for (long long i = 0; i < n - 3; ++i) {
            letters.push_back(kA);
            letters.push_back(kABar);
        }
        for (char c : {'a', 'A', 'A', 'a', 'a', 'A'})
            letters.push_back(c == 'A' ? kA : kABar);
        return {Word(std::move(letters), 1),
                catalan(static_cast<int>(n - 2)) + catalan(static_cast<int>(n - 3))};
    }
    if (family == "jcl") {
        const long long j = required(params, "j");
        const long long l = required(params, "l");
        if (j < 0 || l < 0 || 2 * j > n - l)
            throw std::invalid_argument("jcl requires j, l >= 0 and 2j <= n - l");
        for (long long i = 0; i < l; ++i) {
            letters.push_back(kABar);
            letters.push_back(kA);
        }
        append_run(letters, kA, n - l - j);
        append_run(letters, kABar, j);
        append_run(letters, kA, j);
        append_run(letters, kABar, n - l - j);
        return {Word(std::move(letters), 1), BigInt(j + 1) * catalan(static_cast<int>(l))};
    }
    if (family == "small") {
        const long long l = required(params, "l");
        if (l < 1 || l >= n) throw std::invalid_argument("small requires 1 <= l < n");
        const long long j = n - 1 - l;
        letters.push_back(kABar);
        append_run(letters, kA, l);
        append_run(letters, kABar, j);
        append_run(letters, kA, j);
        append_run(letters, kABar, l);
        letters.push_back(kA);
        return {Word(std::move(letters), 1), BigInt(j < l ? 2 * j + 2 : 2 * l + 3)};
    }
    if (family == "staircase") {
        const long long i = required(params, "i");
        if (i < 1 || i > n) throw std::invalid_argument("staircase requires 1 <= i <= n");
        append_run(letters, kA, i);
        append_run(letters, kABar, n);
        append_run(letters, kA, n - i);
        return {Word(std::move(letters), 1), BigInt(1)};
    }
    if (family == "three") {
        if (n < 4) throw std::invalid_argument("three requires n >= 4");
        append_run(letters, kA, n - 2);
        append_run(letters, kABar, 2);
        append_run(letters, kA, 2);
        append_run(letters, kABar, n - 2);
        return {Word(std::move(letters), 1), BigInt(3)};
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

// ---- A-decomposition --------------------------------------------------

namespace {

Word slice(const Word& w, int from, int to) {
    std::vector<Letter> letters(w.letters().begin() + from, w.letters().begin() + to);
    return Word(std::move(letters), w.m());
}

Word join(std::initializer_list<const Word*> parts, int m) {
    std::vector<Letter> letters;
    for (const Word* p : parts)
        letters.insert(letters.end(), p->letters().begin(), p->letters().end());
    return Word(std::move(letters), m);
}

}  // namespace

std::optional<ADecomposition> find_a_decomposition(const Word& w) {
    const int n = w.size();
    for (int p1 = 0; p1 < n; ++p1) {
        const Letter x = w[p1];
        const Letter xbar = complement(x);
        for (int p2 = p1 + 1; p2 < n; ++p2) {
            if (w[p2] != xbar) continue;
            for (int p3 = p2 + 1; p3 < n; ++p3) {
                if (w[p3] != x) continue;
                for (int p4 = p3 + 1; p4 < n; ++p4) {
                    if (w[p4] != xbar) continue;
                    ADecomposition d;
                    d.letter = x;
                    d.positions = {p1, p2, p3, p4};
                    d.u1 = slice(w, 0, p1);
                    d.v1 = slice(w, p1 + 1, p2);
                    d.u2 = slice(w, p2 + 1, p3);
                    d.v2 = slice(w, p3 + 1, p4);
                    d.u3 = slice(w, p4 + 1, n);
                    const Word u1u3 = join({&d.u1, &d.u3}, w.m());
                    if (!is_foldable(u1u3) || !is_foldable(d.u2) || !is_foldable(d.v1) ||
                        !is_foldable(d.v2))
                        continue;
                    std::vector<Letter> pair{x, xbar};
                    const Word xx(std::move(pair), w.m());
                    if (!classify_one_foldable(join({&d.u1, &d.u2, &xx, &d.u3}, w.m())))
                        continue;
                    const Word inner = join({&d.v1, &d.v2}, w.m());
                    std::vector<Letter> wrapped;
                    wrapped.push_back(x);
                    wrapped.insert(wrapped.end(), inner.letters().begin(),
                                   inner.letters().end());
                    wrapped.push_back(xbar);
                    if (!classify_one_foldable(Word(std::move(wrapped), w.m()))) continue;
                    return d;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace foldkit
