#ifndef ULIE_WORDS_HPP
#define ULIE_WORDS_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ulie {

// Letters of the free side. The order is v > u.
enum class Letter : char { u = 'u', v = 'v' };

/* A finite word on {u, v}.
 *
 * Words are ordered by (length, lex) through operator<=>; this is the
 * canonical storage order of every term map keyed by words and has nothing
 * to do with the partial order used by lex_compare.
 */
class Word {
public:
    Word() = default;
    // Accepts only the letters 'u' and 'v'; "" is the empty word.
    explicit Word(std::string_view letters);

    static Word letter(Letter a) { return Word(std::string(1, static_cast<char>(a))); }
    // a^n
    static Word power(Letter a, std::size_t n) { return Word(std::string(n, static_cast<char>(a))); }

    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }

    Word beginning(std::size_t n) const { return Word(letters_.substr(0, n), Trusted{}); }
    // The ending that starts at index i (0-based).
    Word ending_from(std::size_t i) const { return Word(letters_.substr(i), Trusted{}); }

    std::size_t count(Letter a) const;

    const std::string& letters() const noexcept { return letters_; }
    // Plain spelling; the empty word is "1".
    std::string str() const { return letters_.empty() ? std::string("1") : letters_; }

    friend Word operator+(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_, Trusted{}); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.length() <=> b.length(); c != 0) return c;
        return a.letters_.compare(b.letters_) <=> 0;
    }

private:
    struct Trusted {};
    Word(std::string letters, Trusted) : letters_(std::move(letters)) {}

    std::string letters_;
};

// v u^n
Word d_word(std::size_t n);
// v u^{n1} v u^{n2}
Word c_word(std::size_t n1, std::size_t n2);

enum class LexOrder { Less, Equal, Greater, ProperPrefix };

// First disagreeing letter decides; ProperPrefix when one word begins the other.
LexOrder lex_compare(const Word& w1, const Word& w2);

// w1 |> w2 iff w1w2 > w2w1. Throws EmptyWordError on an empty argument.
bool wreath_greater(const Word& w1, const Word& w2);

// Throws EmptyWordError on the empty word.
bool is_regular(const Word& w);

struct RegularFactoring {
    Word left;
    Word right;
};

// w = left·right with right the longest regular proper ending.
// Throws NotRegularError (or EmptyWordError) unless w is regular with |w| >= 2.
RegularFactoring regular_factoring(const Word& w);

// All regular words of length <= max_len in (length, lex) order.
std::vector<Word> enumerate_regular(std::size_t max_len);

enum class WordClass { Generator, InD, InC, OtherRegular, NotRegular };

WordClass classify(const Word& w);
const char* to_string(WordClass c);

// n when w = v u^n (n >= 0).
std::optional<std::size_t> d_index(const Word& w);
// (n1, n2) when w = v u^{n1} v u^{n2} (any n1, n2 >= 0).
std::optional<std::pair<std::size_t, std::size_t>> c_indices(const Word& w);

// Spelling with runs of three or more letters written as powers: "vu^3".
std::string format_compact(const Word& w);

}  // namespace ulie

#endif
