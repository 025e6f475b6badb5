// foldkit -- exact folding counts, fold graphs and enumeration tables
// for words on alphabets of complementary letter pairs.

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldkit/enumeration.hpp"
#include "foldkit/folding.hpp"
#include "foldkit/moves.hpp"
#include "foldkit/rsets.hpp"
#include "foldkit/tree.hpp"
#include "foldkit/word.hpp"

namespace {

using foldkit::BigInt;
using foldkit::Word;
using nlohmann::json;

enum class Format { table, json, tsv, dot };

Format parse_format(const std::string& name, bool dot_allowed) {
    if (name == "table") return Format::table;
    if (name == "json") return Format::json;
    if (name == "tsv") return Format::tsv;
    if (name == "dot" && dot_allowed) return Format::dot;
    throw CLI::ValidationError("--format", "unsupported format '" + name + "'");
}

std::string pairs_text(const std::vector<std::pair<int, int>>& pairs) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) os << ",";
        os << "[" << pairs[i].first << "," << pairs[i].second << "]";
    }
    os << "]";
    return os.str();
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    json out = json::array();
    for (auto [a, b] : pairs) out.push_back({a, b});
    return out;
}

json big_list_json(const std::vector<BigInt>& values) {
    json out = json::array();
    for (const BigInt& v : values) out.push_back(v.str());
    return out;
}

std::string big_list_text(const std::vector<BigInt>& values) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << values[i].str();
    }
    os << "]";
    return os.str();
}

std::string real_text(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// Shared state filled by the option parser.
struct Invocation {
    std::vector<std::string> word_parts;
    std::optional<int> m_override;
    std::string format = "table";
    int n = 0;
    int m = 1;
    int threads = 0;
    int node = -1;
    long long upto = 0;
    double tolerance = std::ldexp(1.0, -25);
    bool verify = false;
    bool alternating = false;
    bool asymptotic = false;
    std::string checkpoint_dir;
    std::string family;
    std::map<std::string, long long> family_params;

    Word word() const {
        std::string text;
        for (size_t i = 0; i < word_parts.size(); ++i) {
            if (i) text += " ";
            text += word_parts[i];
        }
        return Word::parse(text, m_override);
    }
};

void add_word_options(CLI::App* cmd, Invocation& inv) {
    cmd->add_option("word", inv.word_parts, "word in compact or token form")->expected(-1);
    cmd->add_option("--m", inv.m_override, "alphabet size override");
}

// ---- fold subcommands -------------------------------------------------

void run_fold_count(const Invocation& inv, Format fmt) {
    const Word w = inv.word();
    const BigInt count = foldkit::count_foldings(w);
    switch (fmt) {
        case Format::table:
            std::cout << count.str() << "\n";
            break;
        case Format::json:
            std::cout << json{{"word", w.str()}, {"m", w.m()}, {"count", count.str()}} << "\n";
            break;
        default:
            std::cout << "count\n" << count.str() << "\n";
    }
}

void run_fold_greedy(const Invocation& inv, Format fmt) {
    const Word w = inv.word();
    const auto out = foldkit::greedy_fold(w);
    if (!out.foldable()) {
        std::ostringstream os;
        os << "word is not foldable; open positions:";
        for (int p : out.open_positions) os << " " << p + 1;
        throw std::domain_error(os.str());
    }
    const auto pairs = out.matching->pairs();
    const std::string dyck = foldkit::matching_to_tree(*out.matching).dyck();
    switch (fmt) {
        case Format::table:
            std::cout << "pairs: " << pairs_text(pairs) << "\n";
            std::cout << "dyck:  " << dyck << "\n";
            break;
        case Format::json:
            std::cout << json{{"word", w.str()},
                              {"m", w.m()},
                              {"pairs", pairs_json(pairs)},
                              {"dyck", dyck}}
                      << "\n";
            break;
        default:
            std::cout << "open\tclose\n";
            for (auto [a, b] : pairs) std::cout << a << "\t" << b << "\n";
    }
}

void run_fold_enumerate(const Invocation& inv, Format fmt) {
    const Word w = inv.word();
    const auto foldings = foldkit::enumerate_foldings(w);
    switch (fmt) {
        case Format::table:
            for (const auto& f : foldings) std::cout << pairs_text(f.pairs()) << "\n";
            break;
        case Format::json: {
            json list = json::array();
            for (const auto& f : foldings) list.push_back(pairs_json(f.pairs()));
            std::cout << json{{"word", w.str()},
                              {"m", w.m()},
                              {"count", std::to_string(foldings.size())},
                              {"foldings", list}}
                      << "\n";
            break;
        }
        default:
            std::cout << "index\tpairs\n";
            for (size_t i = 0; i < foldings.size(); ++i)
                std::cout << i << "\t" << pairs_text(foldings[i].pairs()) << "\n";
    }
}

void run_fold_classify(const Invocation& inv, Format fmt) {
    const Word w = inv.word();
    const bool one = foldkit::classify_one_foldable(w);
    switch (fmt) {
        case Format::table:
            std::cout << (one ? "true" : "false") << "\n";
            break;
        case Format::json:
            std::cout << json{{"word", w.str()}, {"m", w.m()}, {"one_foldable", one}} << "\n";
            break;
        default:
            std::cout << "one_foldable\n" << (one ? "true" : "false") << "\n";
    }
}

void run_fold_moves(const Invocation& inv, Format fmt) {
    const Word w = inv.word();
    foldkit::Matching node;
    if (inv.node >= 0) {
        const auto foldings = foldkit::enumerate_foldings(w);
        if (inv.node >= static_cast<int>(foldings.size()))
            throw std::domain_error("node rank " + std::to_string(inv.node) +
                                    " out of range (word has " +
                                    std::to_string(foldings.size()) + " foldings)");
        node = foldings[inv.node];
    } else {
        const auto out = foldkit::greedy_fold(w);
        if (!out.foldable()) throw std::domain_error("word is not foldable");
        node = *out.matching;
    }
    const auto moves = foldkit::available_moves(w, node);
    auto kind_of = [](const foldkit::Move& mv) {
        return mv.kind == foldkit::MoveKind::type1 ? 1 : 2;
    };
    switch (fmt) {
        case Format::table:
            for (const auto& mv : moves) {
                std::cout << "type" << kind_of(mv) << " (" << mv.positions[0] + 1 << ","
                          << mv.positions[1] + 1 << "," << mv.positions[2] + 1 << ","
                          << mv.positions[3] + 1 << ")\n";
            }
            break;
        case Format::json: {
            json list = json::array();
            for (const auto& mv : moves)
                list.push_back({{"kind", kind_of(mv)},
                                {"positions",
                                 {mv.positions[0] + 1, mv.positions[1] + 1,
                                  mv.positions[2] + 1, mv.positions[3] + 1}}});
            std::cout << json{{"word", w.str()},
                              {"node", pairs_json(node.pairs())},
                              {"moves", list}}
                      << "\n";
            break;
        }
        default:
            std::cout << "kind\tp1\tp2\tp3\tp4\n";
            for (const auto& mv : moves)
                std::cout << kind_of(mv) << "\t" << mv.positions[0] + 1 << "\t"
                          << mv.positions[1] + 1 << "\t" << mv.positions[2] + 1 << "\t"
                          << mv.positions[3] + 1 << "\n";
    }
}

void run_fold_graph(const Invocation& inv, Format fmt) {
    const Word w = inv.word();
    const foldkit::FoldGraph g = foldkit::build_fold_graph(w);
    switch (fmt) {
        case Format::dot:
            std::cout << foldkit::to_dot(g);
            break;
        case Format::json: {
            json nodes = json::array();
            for (const auto& node : g.nodes) nodes.push_back(pairs_json(node.pairs()));
            json edges = json::array();
            for (auto [u, v] : g.edges) edges.push_back({u, v});
            std::cout << json{{"word", w.str()}, {"nodes", nodes}, {"edges", edges}} << "\n";
            break;
        }
        case Format::table:
            std::cout << "nodes: " << g.nodes.size() << "\n";
            for (size_t i = 0; i < g.nodes.size(); ++i)
                std::cout << "  n" << i << " " << pairs_text(g.nodes[i].pairs()) << "\n";
            std::cout << "edges: " << g.edges.size() << "\n";
            for (auto [u, v] : g.edges) std::cout << "  n" << u << " -> n" << v << "\n";
            break;
        default:
            std::cout << "type\ta\tb\n";
            for (size_t i = 0; i < g.nodes.size(); ++i)
                std::cout << "node\t" << i << "\t" << pairs_text(g.nodes[i].pairs()) << "\n";
            for (auto [u, v] : g.edges) std::cout << "edge\t" << u << "\t" << v << "\n";
    }
}

// ---- word subcommands --------------------------------------------------

void run_word_double(const Invocation& inv, Format fmt) {
    const Word w = inv.word();
    const Word dw = foldkit::doubled(w);
    switch (fmt) {
        case Format::table:
            std::cout << dw.str() << "\n";
            break;
        case Format::json:
            std::cout << json{{"word", w.str()},
                              {"m", w.m()},
                              {"doubled", dw.str()},
                              {"doubled_m", dw.m()}}
                      << "\n";
            break;
        default:
            std::cout << "doubled\tm\n" << dw.str() << "\t" << dw.m() << "\n";
    }
}

void run_word_check(const Invocation& inv, Format fmt) {
    const Word w = inv.word();
    const bool foldable = foldkit::is_foldable(w);
    const bool alternating = foldkit::is_alternating(w);
    const auto greedy = foldkit::greedy_fold(w);
    json open = json::array();
    std::ostringstream open_text;
    for (int p : greedy.open_positions) {
        if (!open.empty()) open_text << " ";
        open.push_back(p + 1);
        open_text << p + 1;
    }
    switch (fmt) {
        case Format::table:
            std::cout << "m: " << w.m() << "\n"
                      << "length: " << w.size() << "\n"
                      << "foldable: " << (foldable ? "true" : "false") << "\n"
                      << "alternating: " << (alternating ? "true" : "false") << "\n";
            if (!foldable) std::cout << "open: " << open_text.str() << "\n";
            break;
        case Format::json:
            std::cout << json{{"word", w.str()},
                              {"m", w.m()},
                              {"length", w.size()},
                              {"foldable", foldable},
                              {"alternating", alternating},
                              {"open_positions", open}}
                      << "\n";
            break;
        default:
            std::cout << "m\tlength\tfoldable\talternating\n"
                      << w.m() << "\t" << w.size() << "\t" << (foldable ? "true" : "false")
                      << "\t" << (alternating ? "true" : "false") << "\n";
    }
}

// ---- enum subcommands ----------------------------------------------------

void emit_scalar(const std::string& name, const BigInt& value, const json& record, Format fmt) {
    switch (fmt) {
        case Format::table:
            std::cout << value.str() << "\n";
            break;
        case Format::json:
            std::cout << record << "\n";
            break;
        default:
            std::cout << name << "\n" << value.str() << "\n";
    }
}

void run_enum_one_foldable(const Invocation& inv, Format fmt) {
    const BigInt count = foldkit::count_one_foldable(inv.n, inv.m);
    if (inv.verify) {
        const auto census = foldkit::fold_census(inv.n, inv.m);
        const auto it = census.counts.find(BigInt(1));
        const BigInt brute = (it == census.counts.end()) ? BigInt(0) : BigInt(it->second);
        if (brute != count)
            throw std::domain_error("formula " + count.str() + " != census " + brute.str());
    }
    json record{{"n", inv.n}, {"m", inv.m}, {"count", count.str()}};
    if (inv.verify) record["verified"] = true;
    emit_scalar("one_foldable", count, record, fmt);
}

void run_enum_foldable(const Invocation& inv, Format fmt) {
    const BigInt count = foldkit::count_foldable(inv.n, inv.m);
    if (inv.verify) {
        const auto census = foldkit::fold_census(inv.n, inv.m);
        BigInt brute = 0;
        for (const auto& [k, words] : census.counts)
            if (k > 0) brute += words;
        if (brute != count)
            throw std::domain_error("formula " + count.str() + " != census " + brute.str());
    }
    json record{{"n", inv.n}, {"m", inv.m}, {"count", count.str()}};
    if (inv.verify) record["verified"] = true;
    emit_scalar("foldable", count, record, fmt);
}

void run_enum_walks(const Invocation& inv, Format fmt) {
    const BigInt walks = foldkit::closed_walks(inv.n, inv.m);
    if (inv.verify) {
        const BigInt series = foldkit::closed_walks_series(inv.n, inv.m);
        if (series != walks)
            throw std::domain_error("explicit formula " + walks.str() +
                                    " != series extraction " + series.str());
    }
    json record{{"n", inv.n}, {"m", inv.m}, {"walks", walks.str()}};
    if (inv.verify) record["verified"] = true;
    if (inv.asymptotic) {
        record["estimate_log"] = foldkit::asymptotic_estimate_log(inv.n, inv.m);
        record["relative_error"] = foldkit::asymptotic_relative_error(inv.n, inv.m);
    }
    if (fmt == Format::table && inv.asymptotic) {
        std::cout << walks.str() << "\n"
                  << "estimate_log: "
                  << real_text(foldkit::asymptotic_estimate_log(inv.n, inv.m)) << "\n"
                  << "relative_error: "
                  << real_text(foldkit::asymptotic_relative_error(inv.n, inv.m)) << "\n";
        return;
    }
    emit_scalar("walks", walks, record, fmt);
}

void run_enum_growth_rate(const Invocation& inv, Format fmt) {
    const foldkit::GrowthPoint g = foldkit::one_fold_growth_rate(inv.tolerance);
    switch (fmt) {
        case Format::table:
            std::cout << "x: " << real_text(g.x) << "\n"
                      << "y: " << real_text(g.y) << "\n"
                      << "base: " << real_text(g.base) << "\n"
                      << "tolerance: " << real_text(inv.tolerance) << "\n";
            break;
        case Format::json:
            std::cout << json{{"x", g.x},
                              {"y", g.y},
                              {"base", g.base},
                              {"tolerance", inv.tolerance}}
                      << "\n";
            break;
        default:
            std::cout << "x\ty\tbase\ttolerance\n"
                      << real_text(g.x) << "\t" << real_text(g.y) << "\t" << real_text(g.base)
                      << "\t" << real_text(inv.tolerance) << "\n";
    }
}

// ---- rset subcommands ------------------------------------------------------

foldkit::CensusOptions census_options(const Invocation& inv) {
    foldkit::CensusOptions options;
    options.threads = inv.threads;
    options.checkpoint_dir = inv.checkpoint_dir;
    options.alternating_only = inv.alternating;
    return options;
}

void run_rset_compute(const Invocation& inv, Format fmt) {
    const foldkit::Census census = foldkit::fold_census(inv.n, inv.m, census_options(inv));
    switch (fmt) {
        case Format::json: {
            json rows = json::array();
            for (const auto& [k, words] : census.counts)
                rows.push_back({{"k", k.str()}, {"words", words}});
            std::cout << json{{"n", census.n},
                              {"m", census.m},
                              {"alternating", census.alternating_only},
                              {"counts", rows}}
                      << "\n";
            break;
        }
        case Format::table:
            std::cout << "n: " << census.n << " m: " << census.m << "\n";
            for (const auto& [k, words] : census.counts)
                std::cout << "  " << k.str() << ": " << words << "\n";
            break;
        default:
            std::cout << "k\twords\n";
            for (const auto& [k, words] : census.counts)
                std::cout << k.str() << "\t" << words << "\n";
    }
}

void run_rset_superset(const Invocation& inv, Format fmt) {
    const auto values = foldkit::r_superset(inv.n);
    switch (fmt) {
        case Format::json:
            std::cout << json{{"n", inv.n}, {"superset", big_list_json(values)}} << "\n";
            break;
        case Format::table:
            std::cout << big_list_text(values) << "\n";
            break;
        default:
            std::cout << "value\n";
            for (const BigInt& v : values) std::cout << v.str() << "\n";
    }
}

void run_rset_topgap(const Invocation& inv, Format fmt) {
    const foldkit::TopGapReport report = foldkit::top_gap_report(inv.n);
    switch (fmt) {
        case Format::json: {
            json gaps = json::array();
            for (const auto& [lo, hi] : report.gaps) gaps.push_back({lo.str(), hi.str()});
            std::cout << json{{"n", report.n},
                              {"threshold", report.threshold.str()},
                              {"allowed", big_list_json(report.allowed)},
                              {"top_values", big_list_json(report.top_values)},
                              {"violations", big_list_json(report.violations)},
                              {"gaps", gaps},
                              {"passed", report.passed}}
                      << "\n";
            break;
        }
        case Format::table:
            std::cout << "n: " << report.n << "\n"
                      << "threshold: " << report.threshold.str() << "\n"
                      << "allowed: " << big_list_text(report.allowed) << "\n"
                      << "top: " << big_list_text(report.top_values) << "\n"
                      << "violations: " << big_list_text(report.violations) << "\n";
            for (const auto& [lo, hi] : report.gaps)
                std::cout << "gap: " << lo.str() << ".." << hi.str() << "\n";
            std::cout << "passed: " << (report.passed ? "true" : "false") << "\n";
            break;
        default:
            std::cout << "field\tvalue\n"
                      << "threshold\t" << report.threshold.str() << "\n"
                      << "violations\t" << big_list_text(report.violations) << "\n"
                      << "passed\t" << (report.passed ? "true" : "false") << "\n";
    }
    if (!report.passed)
        throw std::domain_error("superset values above the threshold are not all allowed");
}

// ---- family / seq -----------------------------------------------------------

void run_family(const Invocation& inv, Format fmt) {
    const foldkit::FamilyResult r = foldkit::family_word(inv.family, inv.family_params);
    std::optional<BigInt> count;
    if (inv.verify) {
        count = foldkit::count_foldings(r.word);
        if (*count != r.expected)
            throw std::domain_error("family count mismatch: expected " + r.expected.str() +
                                    ", counted " + count->str());
    }
    switch (fmt) {
        case Format::table:
            std::cout << "word: " << r.word.str() << "\n"
                      << "expected: " << r.expected.str() << "\n";
            if (count) std::cout << "count: " << count->str() << " (verified)\n";
            break;
        case Format::json: {
            json params;
            for (const auto& [key, value] : inv.family_params) params[key] = value;
            json record{{"family", inv.family},
                        {"params", params},
                        {"word", r.word.str()},
                        {"expected", r.expected.str()}};
            if (count) {
                record["count"] = count->str();
                record["verified"] = true;
            }
            std::cout << record << "\n";
            break;
        }
        default:
            std::cout << "word\texpected\n" << r.word.str() << "\t" << r.expected.str() << "\n";
    }
}

void run_seq_catalan(const Invocation& inv, Format fmt) {
    switch (fmt) {
        case Format::json: {
            json values = json::array();
            for (long long i = 0; i <= inv.upto; ++i)
                values.push_back(foldkit::catalan(static_cast<int>(i)).str());
            std::cout << json{{"upto", inv.upto}, {"values", values}} << "\n";
            break;
        }
        default:
            if (fmt == Format::tsv) std::cout << "n\tvalue\n";
            for (long long i = 0; i <= inv.upto; ++i)
                std::cout << i << "\t" << foldkit::catalan(static_cast<int>(i)).str() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"word foldings on plane trees: exact counts, move graphs and censuses"};
    app.require_subcommand(1);
    Invocation inv;

    auto* fold = app.add_subcommand("fold", "operations on one word's foldings");
    fold->require_subcommand(1);
    for (const char* name : {"count", "greedy", "enumerate", "graph", "classify", "moves"}) {
        auto* cmd = fold->add_subcommand(name);
        add_word_options(cmd, inv);
        cmd->add_option("--format", inv.format,
                        std::string("table|json|tsv") +
                            (std::string(name) == "graph" ? "|dot" : ""));
        if (std::string(name) == "moves")
            cmd->add_option("--node", inv.node, "folding rank to inspect (default: greedy)");
    }

    auto* word = app.add_subcommand("word", "word-level transforms and checks");
    word->require_subcommand(1);
    for (const char* name : {"double", "check"}) {
        auto* cmd = word->add_subcommand(name);
        add_word_options(cmd, inv);
        cmd->add_option("--format", inv.format, "table|json|tsv");
    }

    auto* enum_cmd = app.add_subcommand("enum", "closed-form enumeration");
    enum_cmd->require_subcommand(1);
    for (const char* name : {"one-foldable", "foldable", "walks"}) {
        auto* cmd = enum_cmd->add_subcommand(name);
        cmd->add_option("--n", inv.n, "half-length n")->required();
        cmd->add_option("--m", inv.m, "letter pairs (tree degree for walks)")->required();
        cmd->add_flag("--verify-brute", inv.verify,
                      "cross-check against an independent computation");
        cmd->add_option("--format", inv.format, "table|json|tsv");
        if (std::string(name) == "walks")
            cmd->add_flag("--asymptotic", inv.asymptotic, "include the leading-term estimate");
    }
    auto* growth = enum_cmd->add_subcommand("growth-rate");
    growth->add_option("--tol", inv.tolerance, "tolerance on the base (default 2^-25)");
    growth->add_option("--format", inv.format, "table|json|tsv");

    auto* rset = app.add_subcommand("rset", "fold-count censuses and supersets");
    rset->require_subcommand(1);
    for (const char* name : {"compute", "superset", "topgap"}) {
        auto* cmd = rset->add_subcommand(name);
        cmd->add_option("--n", inv.n, "half-length n")->required();
        cmd->add_option("--format", inv.format, "table|json|tsv");
        if (std::string(name) == "compute") {
            cmd->add_option("--m", inv.m, "letter pairs (default 1)");
            cmd->add_option("--threads", inv.threads, "worker threads (default: all cores)");
            cmd->add_option("--checkpoint", inv.checkpoint_dir, "shard directory for resume");
            cmd->add_flag("--alternating", inv.alternating, "census the alternating space");
        }
    }

    auto* family = app.add_subcommand("family", "word families with proven fold counts");
    family->add_option("name", inv.family, "maximal|product|nearmax|jcl|small|staircase|three")
        ->required();
    long long p_n = 0, p_t = 0, p_j = 0, p_l = 0, p_i = 0;
    auto* opt_n = family->add_option("--n", p_n, "half-length n");
    auto* opt_t = family->add_option("--t", p_t, "product split");
    auto* opt_j = family->add_option("--j", p_j, "jcl parameter j");
    auto* opt_l = family->add_option("--l", p_l, "run length l");
    auto* opt_i = family->add_option("--i", p_i, "staircase offset i");
    family->add_flag("--verify", inv.verify, "count the foldings and compare");
    family->add_option("--format", inv.format, "table|json|tsv");

    auto* seq = app.add_subcommand("seq", "integer sequences");
    seq->require_subcommand(1);
    auto* seq_catalan = seq->add_subcommand("catalan");
    seq_catalan->add_option("--upto", inv.upto, "largest index")->required();
    seq_catalan->add_option("--format", inv.format, "table|json|tsv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const bool is_graph = fold->parsed() && fold->got_subcommand("graph");
        const Format fmt = parse_format(inv.format, is_graph);
        if (family->parsed()) {
            if (opt_n->count()) inv.family_params["n"] = p_n;
            if (opt_t->count()) inv.family_params["t"] = p_t;
            if (opt_j->count()) inv.family_params["j"] = p_j;
            if (opt_l->count()) inv.family_params["l"] = p_l;
            if (opt_i->count()) inv.family_params["i"] = p_i;
            run_family(inv, fmt);
        } else if (fold->parsed()) {
            if (fold->got_subcommand("count"))
                run_fold_count(inv, fmt);
            else if (fold->got_subcommand("greedy"))
                run_fold_greedy(inv, fmt);
            else if (fold->got_subcommand("enumerate"))
                run_fold_enumerate(inv, fmt);
            else if (fold->got_subcommand("graph"))
                run_fold_graph(inv, fmt);
            else if (fold->got_subcommand("classify"))
                run_fold_classify(inv, fmt);
            else
                run_fold_moves(inv, fmt);
        } else if (word->parsed()) {
            if (word->got_subcommand("double"))
                run_word_double(inv, fmt);
            else
                run_word_check(inv, fmt);
        } else if (enum_cmd->parsed()) {
            if (enum_cmd->got_subcommand("one-foldable"))
                run_enum_one_foldable(inv, fmt);
            else if (enum_cmd->got_subcommand("foldable"))
                run_enum_foldable(inv, fmt);
            else if (enum_cmd->got_subcommand("walks"))
                run_enum_walks(inv, fmt);
            else
                run_enum_growth_rate(inv, fmt);
        } else if (rset->parsed()) {
            if (rset->got_subcommand("compute"))
                run_rset_compute(inv, fmt);
            else if (rset->got_subcommand("superset"))
                run_rset_superset(inv, fmt);
            else
                run_rset_topgap(inv, fmt);
        } else if (seq->parsed()) {
            run_seq_catalan(inv, fmt);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
