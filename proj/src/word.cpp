#include "foldkit/word.hpp"

#include <algorithm>
#include <cctype>

namespace foldkit {

namespace {

int max_index(const std::vector<Letter>& letters) {
    int m = 1;
    for (const Letter& x : letters) m = std::max(m, x.index);
    return m;
}

bool looks_like_token_form(std::string_view text) {
    return text.find_first_of("0123456789, \t\r\n") != std::string_view::npos;
}

[[noreturn]] void bad_token(std::string_view tok) {
    throw std::invalid_argument("malformed token: '" + std::string(tok) + "'");
}

}  // namespace

Word::Word(std::vector<Letter> letters, int m) : letters_(std::move(letters)), m_(m) {
    if (m_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
    for (const Letter& x : letters_) {
        if (x.index < 1 || x.index > m_)
            throw std::invalid_argument("letter index " + std::to_string(x.index) +
                                        " outside alphabet of size " + std::to_string(m_));
    }
}

Word Word::parse(std::string_view text, std::optional<int> m_override) {
    std::vector<Letter> letters;
    if (looks_like_token_form(text)) {
        size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
                ++i;
            if (i >= text.size()) break;
            size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',')
                ++j;
            std::string_view tok = text.substr(i, j - i);
            if (tok.size() < 2 || (tok[0] != 'A' && tok[0] != 'a')) bad_token(tok);
            int index = 0;
            for (size_t k = 1; k < tok.size(); ++k) {
                if (!std::isdigit(static_cast<unsigned char>(tok[k]))) bad_token(tok);
                index = index * 10 + (tok[k] - '0');
                if (index > 1'000'000'000) bad_token(tok);
            }
            if (index < 1) bad_token(tok);
            letters.push_back({index, tok[0] == 'a'});
            i = j;
        }
    } else {
        for (char c : text) {
            if (c >= 'A' && c <= 'Z')
                letters.push_back({c - 'A' + 1, false});
            else if (c >= 'a' && c <= 'z')
                letters.push_back({c - 'a' + 1, true});
            else
                bad_token(std::string_view(&c, 1));
        }
    }
    int m = m_override ? *m_override : max_index(letters);
    return Word(std::move(letters), m);
}

std::string Word::str() const {
    std::string out;
    if (m_ <= 26) {
        out.reserve(letters_.size());
        for (const Letter& x : letters_)
            out.push_back(static_cast<char>((x.barred ? 'a' : 'A') + x.index - 1));
    } else {
        for (size_t i = 0; i < letters_.size(); ++i) {
            if (i) out.push_back(' ');
            out.push_back(letters_[i].barred ? 'a' : 'A');
            out += std::to_string(letters_[i].index);
        }
    }
    return out;
}

Word operator+(const Word& a, const Word& b) {
    std::vector<Letter> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return Word(std::move(letters), std::max(a.m(), b.m()));
}

bool is_foldable(const Word& w) {
    std::vector<Letter> stack;
    for (const Letter& x : w.letters()) {
        if (!stack.empty() && stack.back() == complement(x))
            stack.pop_back();
        else
            stack.push_back(x);
    }
    return stack.empty();
}

Word doubled(const Word& w) {
    if (w.size() % 2 != 0) throw std::invalid_argument("doubled requires even length");
    const int m = w.m();
    std::vector<Letter> out;
    out.reserve(w.size());
    for (int i = 0; i < w.size(); ++i) {
        Letter x = w[i];
        const bool odd_position = (i % 2 == 0);  // 1-indexed odd
        if (odd_position && x.barred)
            x = {m + x.index, false};
        else if (!odd_position && !x.barred)
            x = {m + x.index, true};
        out.push_back(x);
    }
    return Word(std::move(out), 2 * m);
}

bool is_alternating(const Word& w) {
    for (int i = 0; i < w.size(); ++i)
        if (w[i].barred != (i % 2 == 1)) return false;
    return true;
}

std::vector<int> maximal_b_subword_lengths(const Word& w, bool swap_roles) {
    if (!is_alternating(w)) throw std::invalid_argument("word is not alternating");
    if (w.m() != 2) throw std::invalid_argument("B-subwords require alphabet size 2");
    const int a_index = swap_roles ? 2 : 1;
    const int b_index = swap_roles ? 1 : 2;
    if (!w.empty() && w[0].index != a_index)
        throw std::invalid_argument("word does not start with the A-role letter "
                                    "(use the role-swap flag)");
    std::vector<int> runs;
    int current = 0;
    for (const Letter& x : w.letters()) {
        if (x.index == b_index) {
            ++current;
        } else if (current > 0) {
            runs.push_back(current);
            current = 0;
        }
    }
    if (current > 0) runs.push_back(current);
    return runs;
}

}  // namespace foldkit
