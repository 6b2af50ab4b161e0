#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "ulie/errors.hpp"
#include "ulie/text.hpp"

using namespace ulie;
using namespace ulie::text;

namespace {

std::size_t error_position(std::string_view s) {
    try {
        parse_element(s);
    } catch (const ParseError& e) {
        return e.position();
    }
    return 0;
}

template <class T>
T parse_as(std::string_view s) {
    const Element e = parse_element(s);
    REQUIRE(std::holds_alternative<T>(e));
    return std::get<T>(e);
}

}  // namespace

TEST_CASE("parse_word") {
    CHECK(parse_word("vu^2").letters == "vuu");
    CHECK(parse_word("vu^2").alphabet == ParsedWord::Alphabet::UV);
    CHECK(parse_word("1").letters.empty());
    CHECK(parse_word("1").alphabet == ParsedWord::Alphabet::Empty);
    CHECK(parse_word("x^2y").letters == "xxy");
    CHECK(parse_word("x^2y").alphabet == ParsedWord::Alphabet::XY);
    CHECK(parse_free_word("v^2u^3") == Word("vvuuu"));
    CHECK_THROWS_AS(parse_free_word("xy"), ParseError);

    try {
        parse_word("vw");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("'w'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_word("vu^"), ParseError);
    CHECK_THROWS_AS(parse_word("vx"), ParseError);
}

TEST_CASE("parse_element") {
    CHECK(parse_as<LieElement>("[vvu] + 1/6*[vu^3]") == alpha(1).element);
    CHECK(parse_as<UElement>("x^2*y - 2*x^2") == UElement::monomial(2, 1) - UElement::monomial(2, 0, 2));
    CHECK(parse_as<NCPoly>("uv - vu") == NCPoly::monomial(Word("uv")) - NCPoly::monomial(Word("vu")));
    CHECK(parse_as<NCPoly>("2 + u") == Rational(2) * NCPoly::unit() + NCPoly::monomial(Word("u")));
    CHECK(parse_as<NCPoly>("-1/2*vu^3") == NCPoly::monomial(Word("vuuu"), Rational(-1, 2)));
    // {x, y} words are products in U.
    CHECK(parse_as<UElement>("yx") == UElement::monomial(1, 1) - UElement::monomial(1, 0));
    CHECK(parse_as<UElement>("y*x") == parse_as<UElement>("yx"));

    CHECK(kind_of(parse_element("3")) == Kind::Free);
    CHECK(kind_of(parse_element("3", Kind::Enveloping)) == Kind::Enveloping);
    CHECK(is_scalar_text("-1/2"));
    CHECK_FALSE(is_scalar_text("2*u"));

    CHECK_THROWS_AS(parse_element("[uv]"), ParseError);
    try {
        parse_element("[uv]");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("uv") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_element("[vu] + u"), ParseError);
    CHECK_THROWS_AS(parse_element("u + x"), ParseError);
    CHECK_THROWS_AS(parse_element("ux"), ParseError);
    CHECK_THROWS_AS(parse_element("[vu] + 1"), ParseError);
    CHECK_THROWS_AS(parse_element("1/0*u"), DomainError);
    CHECK(error_position("u + w") == 5);
    CHECK(error_position("u ) v") == 3);
}

TEST_CASE("format") {
    CHECK(format(alpha(1).element) == "[vvu] + 1/6*[vu^3]");
    CHECK(format(UElement::monomial(1, 2) - UElement::monomial(1, 1, 2) + UElement::monomial(1, 0)) ==
          "x*y^2 - 2*x*y + x");
    CHECK(format(UElement::unity()) == "1");
    CHECK(format(UElement()) == "0");
    CHECK(format(NCPoly::monomial(Word("vu")) - NCPoly::monomial(Word("uv"))) == "-uv + vu");
    CHECK(format(LieElement::basis(Word("vu"), -1)) == "-[vu]");
}

TEST_CASE("printing and parsing round-trip") {
    std::mt19937_64 rng(31);
    const auto pool = enumerate_regular(7);
    for (int trial = 0; trial < 50; ++trial) {
        const NCPoly p = oracle::random_ncpoly(rng, 5, 3);
        CHECK(std::get<NCPoly>(parse_element(format(p), Kind::Free)) == p);
        const LieElement f = oracle::random_lie(rng, pool, 3);
        if (!f.is_zero()) CHECK(std::get<LieElement>(parse_element(format(f))) == f);
        const UElement g = oracle::random_u(rng, 5, 3);
        CHECK(std::get<UElement>(parse_element(format(g), Kind::Enveloping)) == g);

        const std::string once = format(parse_element(format(g), Kind::Enveloping));
        CHECK(format(parse_element(once, Kind::Enveloping)) == once);
    }
    for (const char* s : {"  u +u+ 2 * vu^2 ", "y*x - x", "[vu] + [vu]", "-[v] + 0*[u]"}) {
        const std::string once = format(parse_element(s, Kind::Lie));
        CHECK(format(parse_element(once, Kind::Lie)) == once);
    }
}

TEST_CASE("json") {
    const auto j = to_json(alpha(1).element);
    CHECK(j["kind"] == "lie");
    CHECK(j["text"] == "[vvu] + 1/6*[vu^3]");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["word"] == "vvu");
    CHECK(j["terms"][0]["coeff"] == "1");
    CHECK(j["terms"][1]["coeff"] == "1/6");

    const auto ju = to_json(UElement::monomial(3, 1, Rational(-2, 3)));
    CHECK(ju["kind"] == "enveloping");
    CHECK(ju["terms"][0]["monomial"]["k"] == 3);
    CHECK(ju["terms"][0]["monomial"]["l"] == 1);
    CHECK(ju["terms"][0]["coeff"] == "-2/3");

    CHECK(to_json(NCPoly::monomial(Word("uv")))["kind"] == "free");

    const auto jt = to_json(reduce_mod_A(LieElement::basis(Word("vvu"))).trace);
    REQUIRE(jt["steps"].size() == 1);
    CHECK(jt["steps"][0]["rule"] == "AlphaSubst");
    CHECK(jt["steps"][0]["target"] == "vvu");
}
