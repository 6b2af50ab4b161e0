#ifndef ULIE_TEXT_HPP
#define ULIE_TEXT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "ulie/enveloping.hpp"
#include "ulie/freealg.hpp"
#include "ulie/freelie.hpp"
#include "ulie/presentation.hpp"
#include "ulie/words.hpp"

namespace ulie::text {

// Which algebra a piece of text denotes.
enum class Kind { Free, Lie, Enveloping };
const char* to_string(Kind k);

struct ParsedWord {
    enum class Alphabet { UV, XY, Empty } alphabet;
    std::string letters;
};

// Letters with optional powers ("vu^3"); "1" is the empty word.
ParsedWord parse_word(std::string_view text);
// Like parse_word but requires the {u, v} alphabet.
Word parse_free_word(std::string_view text);

using Element = std::variant<NCPoly, LieElement, UElement>;

Kind kind_of(const Element& e);

/* Grammar: term (('+'|'-') term)*
 *   term   := ['-'] [rational ['*']] atom | ['-'] rational
 *   atom   := '[' word ']' | factor ('*' factor)*
 *   factor := letter-run with optional '^' powers
 * The kind is inferred from the letters; an expression with no letters
 * takes `fallback` (NCPoly if none).
 */
Element parse_element(std::string_view text, std::optional<Kind> fallback = std::nullopt);

// True when the text has no letters or brackets (a bare scalar).
bool is_scalar_text(std::string_view text);

std::string format(const NCPoly& p);
std::string format(const LieElement& f);
std::string format(const UElement& f);
std::string format(const NormalForm& nf);
std::string format(const Element& e);

nlohmann::json to_json(const NCPoly& p);
nlohmann::json to_json(const LieElement& f);
nlohmann::json to_json(const UElement& f);
nlohmann::json to_json(const Element& e);
nlohmann::json to_json(const ReductionTrace& t);

}  // namespace ulie::text

#endif
