#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace foldkit {

/// One symbol of the alphabet: the letter A_index or its complement
/// (barred form) when `barred` is set. Indices start at 1.
struct Letter {
    int index = 1;
    bool barred = false;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter complement(Letter x) { return {x.index, !x.barred}; }

/// A word over an alphabet of `m` letters and their complements.
/// Immutable after construction; all operations on words are pure.
class Word {
public:
    Word() = default;

    /// Throws std::invalid_argument if m < 1 or a letter index is
    /// outside [1, m].
    Word(std::vector<Letter> letters, int m);

    /// Parses compact form ("AaABba": rank in the Latin alphabet is the
    /// letter index, case is the bar) or token form ("A3 a3", tokens
    /// separated by whitespace or commas). Token form is assumed as soon
    /// as the text contains a digit, whitespace or comma. Empty text is
    /// the empty word. When `m_override` is absent the alphabet size is
    /// the largest index used (at least 1).
    static Word parse(std::string_view text, std::optional<int> m_override = std::nullopt);

    /// Compact form when m <= 26, token form otherwise.
    /// parse(str()) reproduces the word exactly (with m inferred; pass
    /// m() to reproduce an oversized alphabet).
    std::string str() const;

    int m() const { return m_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](int i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    /// Concatenation; the result's alphabet covers both operands.
    friend Word operator+(const Word& a, const Word& b);

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
    int m_ = 1;
};

/// True iff w reduces to the empty word by repeatedly deleting adjacent
/// complementary pairs (single stack scan). Equivalent to
/// count_foldings(w) > 0.
bool is_foldable(const Word& w);

/// The doubled-alphabet transform: over alphabet 2m, an unbarred letter
/// in an even position (1-indexed) becomes the barred copy m+i, a barred
/// letter in an odd position becomes the unbarred copy m+i, everything
/// else is unchanged. The result is alternating and has the same
/// foldings as w. Throws std::invalid_argument on odd length.
Word doubled(const Word& w);

/// True iff every odd position (1-indexed) holds an unbarred letter and
/// every even position a barred one.
bool is_alternating(const Word& w);

/// Lengths of the maximal runs of index-2 letters, left to right.
/// Requires an alternating word with m = 2 that starts with an index-1
/// letter; `swap_roles` exchanges the roles of the two indices for words
/// that start with index 2. Throws std::invalid_argument otherwise.
std::vector<int> maximal_b_subword_lengths(const Word& w, bool swap_roles = false);

}  // namespace foldkit
