#include "ulie/words.hpp"

#include <algorithm>

#include "ulie/errors.hpp"

namespace ulie {

Word::Word(std::string_view letters) : letters_(letters) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] != 'u' && letters_[i] != 'v') {
            throw ParseError("unknown letter '" + std::string(1, letters_[i]) + "'", i + 1);
        }
    }
}

std::size_t Word::count(Letter a) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), static_cast<char>(a)));
}

Word d_word(std::size_t n) { return Word::letter(Letter::v) + Word::power(Letter::u, n); }

Word c_word(std::size_t n1, std::size_t n2) { return d_word(n1) + d_word(n2); }

LexOrder lex_compare(const Word& w1, const Word& w2) {
    const auto& a = w1.letters();
    const auto& b = w2.letters();
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        // 'u' < 'v' as characters, matching v > u.
        if (a[i] != b[i]) return a[i] > b[i] ? LexOrder::Greater : LexOrder::Less;
    }
    return a.size() == b.size() ? LexOrder::Equal : LexOrder::ProperPrefix;
}

bool wreath_greater(const Word& w1, const Word& w2) {
    if (w1.empty() || w2.empty()) throw EmptyWordError("wreath_greater");
    // Both concatenations have the same length, so the comparison is decided.
    return lex_compare(w1 + w2, w2 + w1) == LexOrder::Greater;
}

bool is_regular(const Word& w) {
    if (w.empty()) throw EmptyWordError("is_regular");
    const std::size_t n = w.length();
    for (std::size_t i = 1; i < n; ++i) {
        const Word rotated = w.ending_from(i) + w.beginning(i);
        if (!wreath_greater(w, rotated)) return false;
    }
    return true;
}

RegularFactoring regular_factoring(const Word& w) {
    if (w.empty()) throw EmptyWordError("regular_factoring");
    if (w.length() < 2 || !is_regular(w)) throw NotRegularError("regular_factoring", w.str());
    // Longest regular proper ending first.
    for (std::size_t i = 1; i < w.length(); ++i) {
        Word d = w.ending_from(i);
        if (is_regular(d)) return {w.beginning(i), std::move(d)};
    }
    // The last letter is always regular.
    return {w.beginning(w.length() - 1), w.ending_from(w.length() - 1)};
}

std::vector<Word> enumerate_regular(std::size_t max_len) {
    std::vector<Word> out;
    std::string buf;
    for (std::size_t len = 1; len <= max_len; ++len) {
        buf.assign(len, 'u');
        // Counting in binary with u = 0, v = 1 visits words in lex order.
        for (;;) {
            Word w(buf);
            if (is_regular(w)) out.push_back(std::move(w));
            std::size_t i = len;
            while (i > 0 && buf[i - 1] == 'v') buf[--i] = 'u';
            if (i == 0) break;
            buf[i - 1] = 'v';
        }
    }
    return out;
}

std::optional<std::size_t> d_index(const Word& w) {
    if (w.empty() || w[0] != Letter::v) return std::nullopt;
    for (std::size_t i = 1; i < w.length(); ++i) {
        if (w[i] != Letter::u) return std::nullopt;
    }
    return w.length() - 1;
}

std::optional<std::pair<std::size_t, std::size_t>> c_indices(const Word& w) {
    if (w.count(Letter::v) != 2 || w[0] != Letter::v) return std::nullopt;
    const std::size_t second = w.letters().find('v', 1);
    return std::make_pair(second - 1, w.length() - second - 1);
}

WordClass classify(const Word& w) {
    if (w.empty() || !is_regular(w)) return WordClass::NotRegular;
    if (w.length() == 1) return WordClass::Generator;
    if (auto n = d_index(w); n && *n >= 1) return WordClass::InD;
    if (auto c = c_indices(w); c && c->first < c->second) return WordClass::InC;
    return WordClass::OtherRegular;
}

const char* to_string(WordClass c) {
    switch (c) {
        case WordClass::Generator: return "Generator";
        case WordClass::InD: return "InD";
        case WordClass::InC: return "InC";
        case WordClass::OtherRegular: return "OtherRegular";
        case WordClass::NotRegular: return "NotRegular";
    }
    return "?";
}

std::string format_compact(const Word& w) {
    if (w.empty()) return "1";
    const std::string& s = w.letters();
    std::string out;
    for (std::size_t i = 0; i < s.size();) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        const std::size_t run = j - i;
        if (run >= 3) {
            out += s[i];
            out += '^';
            out += std::to_string(run);
        } else {
            out.append(run, s[i]);
        }
        i = j;
    }
    return out;
}

}  // namespace ulie
