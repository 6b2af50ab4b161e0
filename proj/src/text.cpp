#include "ulie/text.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "ulie/errors.hpp"

namespace ulie::text {

const char* to_string(Kind k) {
    switch (k) {
        case Kind::Free: return "free";
        case Kind::Lie: return "lie";
        case Kind::Enveloping: return "enveloping";
    }
    return "?";
}

namespace {

enum class Side { None, UV, XY };

Side side_of(char c) {
    if (c == 'u' || c == 'v') return Side::UV;
    if (c == 'x' || c == 'y') return Side::XY;
    return Side::None;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    bool done() const { return i_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[i_]; }
    char get() { return s_[i_++]; }
    std::size_t pos() const { return i_ + 1; }  // 1-based
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    // Next non-space character without consuming.
    char peek_past_ws() const {
        std::size_t j = i_;
        while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
        return j < s_.size() ? s_[j] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos()); }

    std::string digits() {
        std::string out;
        while (!done() && is_digit(peek())) out += get();
        return out;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

/* Letters with optional powers; appends to out and returns the alphabet.
 * Stops at the first character that is neither a letter nor '^'.
 */
Side read_letters(Cursor& in, std::string& out, Side side) {
    while (!in.done()) {
        const char c = in.peek();
        const Side s = side_of(c);
        if (s == Side::None) {
            if (std::isalpha(static_cast<unsigned char>(c))) in.fail("unknown letter '" + std::string(1, c) + "'");
            break;
        }
        if (side != Side::None && s != side) in.fail("mixed alphabets: letter '" + std::string(1, c) + "'");
        side = s;
        in.get();
        if (in.peek() == '^') {
            in.get();
            const std::size_t at = in.pos();
            const std::string d = in.digits();
            if (d.empty()) throw ParseError("malformed power", at);
            if (d.size() > 4) throw ParseError("power too large", at);
            out.append(std::stoul(d), c);
        } else {
            out += c;
        }
    }
    return side;
}

// A parsed term before the element kind is known.
struct RawTerm {
    Rational coeff;
    enum class Atom { Scalar, Letters, Bracket } atom = Atom::Scalar;
    std::string letters;
    Side side = Side::None;
    std::size_t pos = 0;
};

RawTerm read_term(Cursor& in, int sign) {
    RawTerm t;
    t.coeff = sign;
    in.skip_ws();
    if (in.peek() == '-') {
        in.get();
        t.coeff = -t.coeff;
        in.skip_ws();
    }
    t.pos = in.pos();
    bool have_coeff = false;
    if (is_digit(in.peek())) {
        std::string r = in.digits();
        if (in.peek() == '/') {
            in.get();
            const std::string den = in.digits();
            if (den.empty()) in.fail("malformed rational");
            r += "/" + den;
        }
        t.coeff *= rational_from_string(r);
        have_coeff = true;
        if (in.peek_past_ws() == '*') {
            in.skip_ws();
            in.get();
            in.skip_ws();
            if (in.done() || (side_of(in.peek()) == Side::None && in.peek() != '[')) in.fail("expected a word after '*'");
        }
    }
    in.skip_ws();
    t.pos = in.pos();
    if (in.peek() == '[') {
        in.get();
        in.skip_ws();
        t.atom = RawTerm::Atom::Bracket;
        t.side = read_letters(in, t.letters, Side::None);
        if (t.side == Side::XY) in.fail("bracketed words must be on {u, v}");
        in.skip_ws();
        if (in.peek() != ']') in.fail(in.done() ? "missing ']'" : "unexpected '" + std::string(1, in.peek()) + "'");
        in.get();
        if (t.letters.empty()) throw ParseError("empty bracket", t.pos);
        if (!is_regular(Word(t.letters))) {
            throw ParseError("word '" + t.letters + "' inside [...] is not regular", t.pos);
        }
        return t;
    }
    if (side_of(in.peek()) != Side::None) {
        t.atom = RawTerm::Atom::Letters;
        t.side = read_letters(in, t.letters, Side::None);
        // Further factors joined by '*'.
        while (in.peek_past_ws() == '*') {
            in.skip_ws();
            in.get();
            in.skip_ws();
            if (side_of(in.peek()) == Side::None) in.fail("expected letters after '*'");
            t.side = read_letters(in, t.letters, t.side);
        }
        return t;
    }
    if (!have_coeff) {
        in.fail(in.done() ? "unexpected end of input" : "unexpected '" + std::string(1, in.peek()) + "'");
    }
    return t;
}

UElement u_word_value(const std::string& letters) {
    UElement f = UElement::unity();
    for (char c : letters) f = f * (c == 'x' ? UElement::x() : UElement::y());
    return f;
}

}  // namespace

ParsedWord parse_word(std::string_view text) {
    Cursor in(text);
    in.skip_ws();
    if (in.peek() == '1') {
        in.get();
        in.skip_ws();
        if (!in.done()) in.fail("unexpected '" + std::string(1, in.peek()) + "'");
        return {ParsedWord::Alphabet::Empty, ""};
    }
    if (in.done()) in.fail("empty word text");
    std::string letters;
    const Side s = read_letters(in, letters, Side::None);
    in.skip_ws();
    if (!in.done()) {
        const char c = in.peek();
        in.fail(std::isalpha(static_cast<unsigned char>(c)) ? "unknown letter '" + std::string(1, c) + "'"
                                                            : "unexpected '" + std::string(1, c) + "'");
    }
    if (s == Side::None || letters.empty()) return {ParsedWord::Alphabet::Empty, ""};
    return {s == Side::UV ? ParsedWord::Alphabet::UV : ParsedWord::Alphabet::XY, letters};
}

Word parse_free_word(std::string_view text) {
    const ParsedWord w = parse_word(text);
    if (w.alphabet == ParsedWord::Alphabet::XY) throw ParseError("expected a word on {u, v}", 1);
    return Word(w.letters);
}

Kind kind_of(const Element& e) { return static_cast<Kind>(e.index()); }

bool is_scalar_text(std::string_view text) {
    return std::none_of(text.begin(), text.end(),
                        [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '['; });
}

Element parse_element(std::string_view text, std::optional<Kind> fallback) {
    Cursor in(text);
    std::vector<RawTerm> terms;
    in.skip_ws();
    int sign = 1;
    if (in.peek() == '+' || in.peek() == '-') sign = in.get() == '-' ? -1 : 1;
    terms.push_back(read_term(in, sign));
    for (;;) {
        in.skip_ws();
        if (in.done()) break;
        const char c = in.get();
        if (c != '+' && c != '-') {
            throw ParseError("unexpected '" + std::string(1, c) + "'", in.pos() - 1);
        }
        terms.push_back(read_term(in, c == '-' ? -1 : 1));
    }

    // Infer the kind from the atoms.
    std::optional<Kind> kind;
    bool has_scalar = false;
    for (const auto& t : terms) {
        std::optional<Kind> k;
        if (t.atom == RawTerm::Atom::Scalar) {
            has_scalar = true;
            continue;
        }
        if (t.atom == RawTerm::Atom::Bracket) {
            k = Kind::Lie;
        } else {
            k = t.side == Side::UV ? Kind::Free : Kind::Enveloping;
        }
        if (kind && *kind != *k) {
            throw ParseError(std::string("mixed expression: ") + to_string(*kind) + " and " + to_string(*k) +
                                 " terms",
                             t.pos);
        }
        kind = k;
    }
    const Kind resolved = kind.value_or(fallback.value_or(Kind::Free));

    switch (resolved) {
        case Kind::Free: {
            NCPoly p;
            for (const auto& t : terms) p.add_term(Word(t.letters), t.coeff);
            return p;
        }
        case Kind::Lie: {
            if (has_scalar) throw ParseError("constant term in a Lie element", 1);
            LieElement f;
            for (const auto& t : terms) f.add_term(Word(t.letters), t.coeff);
            return f;
        }
        case Kind::Enveloping: {
            UElement f;
            for (const auto& t : terms) f.add_scaled(u_word_value(t.letters), t.coeff);
            return f;
        }
    }
    return NCPoly();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// atom "" denotes the unity.
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, atom] : terms) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (atom.empty()) {
            out += ulie::to_string(mag);
        } else if (mag == 1) {
            out += atom;
        } else {
            out += ulie::to_string(mag) + "*" + atom;
        }
    }
    return out;
}

std::string monomial_atom(const PBWMonomial& m) {
    std::string out;
    const auto power = [](char letter, unsigned e) {
        return e == 1 ? std::string(1, letter) : std::string(1, letter) + "^" + std::to_string(e);
    };
    if (m.k > 0) out += power('x', m.k);
    if (m.l > 0) out += (out.empty() ? "" : "*") + power('y', m.l);
    return out;
}

}  // namespace

std::string format(const NCPoly& p) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [w, c] : p) terms.emplace_back(c, w.empty() ? std::string() : format_compact(w));
    return join_terms(terms);
}

std::string format(const LieElement& f) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [w, c] : f) terms.emplace_back(c, "[" + format_compact(w) + "]");
    return join_terms(terms);
}

std::string format(const UElement& f) {
    std::vector<std::pair<PBWMonomial, Rational>> sorted(f.begin(), f.end());
    // Descending total degree, then descending power of x.
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const unsigned da = a.first.k + a.first.l;
        const unsigned db = b.first.k + b.first.l;
        return da != db ? da > db : a.first.k > b.first.k;
    });
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [m, c] : sorted) terms.emplace_back(c, monomial_atom(m));
    return join_terms(terms);
}

std::string format(const NormalForm& nf) { return format(nf.to_lie()); }

std::string format(const Element& e) {
    return std::visit([](const auto& x) { return format(x); }, e);
}

// ---------------------------------------------------------------------------
// JSON: coefficients are "p/q" strings.

nlohmann::json to_json(const NCPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : p) terms.push_back({{"word", w.str()}, {"coeff", ulie::to_string(c)}});
    return {{"kind", "free"}, {"terms", terms}, {"text", format(p)}};
}

nlohmann::json to_json(const LieElement& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : f) terms.push_back({{"word", w.str()}, {"coeff", ulie::to_string(c)}});
    return {{"kind", "lie"}, {"terms", terms}, {"text", format(f)}};
}

nlohmann::json to_json(const UElement& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f) {
        terms.push_back({{"monomial", {{"k", m.k}, {"l", m.l}}}, {"coeff", ulie::to_string(c)}});
    }
    return {{"kind", "enveloping"}, {"terms", terms}, {"text", format(f)}};
}

nlohmann::json to_json(const Element& e) {
    return std::visit([](const auto& x) { return to_json(x); }, e);
}

nlohmann::json to_json(const ReductionTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps) {
        nlohmann::json uses = nlohmann::json::array();
        for (const auto& w : s.uses) uses.push_back(w.str());
        steps.push_back({{"rule", ulie::to_string(s.rule)},
                         {"target", s.target.str()},
                         {"replacement", to_json(s.replacement)},
                         {"uses", uses}});
    }
    return {{"steps", steps}};
}

}  // namespace ulie::text
