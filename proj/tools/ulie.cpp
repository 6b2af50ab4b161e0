// ulie: command-line front end for the free Lie algebra on {u, v}, the
// enveloping algebra with xy - yx = x, and the presented subalgebra R.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ulie/errors.hpp"
#include "ulie/freelie.hpp"
#include "ulie/presentation.hpp"
#include "ulie/text.hpp"
#include "ulie/verify.hpp"

namespace {

using namespace ulie;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;

struct Output {
    bool as_json = false;

    void emit(const std::string& text, const json& j) const {
        if (as_json) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << text << "\n";
        }
    }
};

// Parses two operands; a bare scalar takes the kind of the other operand.
std::pair<text::Element, text::Element> parse_pair(const std::string& a, const std::string& b) {
    if (text::is_scalar_text(a) && !text::is_scalar_text(b)) {
        text::Element eb = text::parse_element(b);
        text::Element ea = text::parse_element(a, text::kind_of(eb));
        return {std::move(ea), std::move(eb)};
    }
    text::Element ea = text::parse_element(a);
    text::Element eb = text::parse_element(b, text::kind_of(ea));
    return {std::move(ea), std::move(eb)};
}

void require_same_kind(const text::Element& a, const text::Element& b) {
    if (text::kind_of(a) != text::kind_of(b)) {
        throw DomainError(std::string("operands differ in kind: ") + text::to_string(text::kind_of(a)) + " and " +
                          text::to_string(text::kind_of(b)));
    }
}

LieElement as_lie(const text::Element& e, const std::string& source) {
    switch (text::kind_of(e)) {
        case text::Kind::Lie: return std::get<LieElement>(e);
        case text::Kind::Free: return to_basis(std::get<NCPoly>(e));
        case text::Kind::Enveloping: break;
    }
    throw DomainError("expected an element on {u, v}, got '" + source + "'");
}

json with_op(json j, const std::string& op) {
    j["op"] = op;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in U(L) with xy - yx = x, the free Lie algebra on {u, v} and its quotient R"};
    app.require_subcommand(1);

    std::string format = "text";
    if (const char* env = std::getenv("ULIE_FORMAT")) format = env;
    app.add_option("--format", format, "Output format (text or json; default from ULIE_FORMAT)")
        ->check(CLI::IsMember({"text", "json"}));

    unsigned order_l = 0, order_m = 0;
    auto* normal_order = app.add_subcommand("normal-order", "PBW form of y^l x^m");
    normal_order->add_option("l", order_l)->required();
    normal_order->add_option("m", order_m)->required();

    std::string lhs, rhs;
    auto* mul_cmd = app.add_subcommand("mul", "Product in the free algebra or in U");
    mul_cmd->add_option("e1", lhs)->required();
    mul_cmd->add_option("e2", rhs)->required();

    auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket (free algebra, Shirshov coordinates or U)");
    bracket_cmd->add_option("e1", lhs)->required();
    bracket_cmd->add_option("e2", rhs)->required();

    std::size_t max_len = 0;
    auto* regular_cmd = app.add_subcommand("regular", "List regular words with counts per length");
    regular_cmd->add_option("--max-len", max_len)->required()->check(CLI::Range(1, 24));

    std::string word_text;
    auto* factor_cmd = app.add_subcommand("factor", "Regular factoring and bracketing of a regular word");
    factor_cmd->add_option("w", word_text)->required();

    auto* expand_cmd = app.add_subcommand("expand", "Expansion of a bracketed regular word in the free algebra");
    expand_cmd->add_option("w", word_text)->required();

    auto* to_basis_cmd = app.add_subcommand("to-basis", "Shirshov coordinates of a polynomial on {u, v}");
    to_basis_cmd->add_option("p", lhs)->required();

    auto* phi_cmd = app.add_subcommand("phi", "Image in U under u -> xy, v -> x^2 y");
    phi_cmd->add_option("f", lhs)->required();

    bool show_trace = false;
    auto* reduce_cmd = app.add_subcommand("reduce", "Normal form modulo the ideal generated by the alpha_n");
    reduce_cmd->add_option("f", lhs)->required();
    reduce_cmd->add_flag("--trace", show_trace, "Print the rewrite steps");

    VerifyOptions vopts;
    bool serial = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check the presentation of R on all regular words up to a length");
    verify_cmd->add_option("--max", vopts.max_length)->required()->check(CLI::Range(2, 16));
    verify_cmd->add_option("--seed", vopts.seed, "Seed for the sampled ideal elements");
    verify_cmd->add_option("--samples", vopts.samples, "Number of sampled ideal elements");
    verify_cmd->add_option("--threads", vopts.threads, "OpenMP threads (0: default)");
    verify_cmd->add_flag("--serial", serial, "Use the serial reference loop");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    const Output out{format == "json"};

    try {
        if (*normal_order) {
            const UElement f = normal_order_yx(order_l, order_m);
            out.emit(text::format(f), with_op(text::to_json(f), "normal-order"));
        } else if (*mul_cmd) {
            auto [a, b] = parse_pair(lhs, rhs);
            require_same_kind(a, b);
            text::Element r;
            switch (text::kind_of(a)) {
                case text::Kind::Free: r = mul(std::get<NCPoly>(a), std::get<NCPoly>(b)); break;
                case text::Kind::Enveloping: r = mul_u(std::get<UElement>(a), std::get<UElement>(b)); break;
                case text::Kind::Lie: throw DomainError("mul is not defined on Lie elements; use bracket");
            }
            out.emit(text::format(r), with_op(text::to_json(r), "mul"));
        } else if (*bracket_cmd) {
            auto [a, b] = parse_pair(lhs, rhs);
            require_same_kind(a, b);
            text::Element r;
            switch (text::kind_of(a)) {
                case text::Kind::Free: r = commutator(std::get<NCPoly>(a), std::get<NCPoly>(b)); break;
                case text::Kind::Lie: r = lie_bracket(std::get<LieElement>(a), std::get<LieElement>(b)); break;
                case text::Kind::Enveloping: r = bracket_u(std::get<UElement>(a), std::get<UElement>(b)); break;
            }
            out.emit(text::format(r), with_op(text::to_json(r), "bracket"));
        } else if (*regular_cmd) {
            const auto words = enumerate_regular(max_len);
            std::map<std::size_t, std::vector<std::string>> by_length;
            for (const auto& w : words) by_length[w.length()].push_back(w.str());
            std::string t;
            json counts = json::object();
            for (std::size_t n = 1; n <= max_len; ++n) {
                const auto& ws = by_length[n];
                counts[std::to_string(n)] = ws.size();
                t += "length " + std::to_string(n) + ": " + std::to_string(ws.size());
                for (const auto& w : ws) t += " " + w;
                t += "\n";
            }
            t += "total: " + std::to_string(words.size());
            json words_json = json::array();
            for (const auto& w : words) words_json.push_back(w.str());
            out.emit(t, {{"kind", "regular"}, {"max_len", max_len}, {"counts", counts}, {"words", words_json}});
        } else if (*factor_cmd) {
            const Word w = text::parse_free_word(word_text);
            const auto [c, d] = regular_factoring(w);
            const std::string tree = bracketing(w).str();
            out.emit(w.str() + " = (" + c.str() + ")(" + d.str() + ")\nbracketing: " + tree,
                     {{"kind", "factoring"}, {"word", w.str()}, {"left", c.str()}, {"right", d.str()},
                      {"bracketing", tree}});
        } else if (*expand_cmd) {
            const Word w = text::parse_free_word(word_text);
            const NCPoly p = expand(w);
            out.emit(text::format(p), with_op(text::to_json(p), "expand"));
        } else if (*to_basis_cmd) {
            const text::Element e = text::parse_element(lhs, text::Kind::Free);
            if (text::kind_of(e) != text::Kind::Free) throw DomainError("to-basis expects a polynomial on {u, v}");
            const LieElement f = to_basis(std::get<NCPoly>(e));
            out.emit(text::format(f), with_op(text::to_json(f), "to-basis"));
        } else if (*phi_cmd) {
            const LieElement f = as_lie(text::parse_element(lhs, text::Kind::Lie), lhs);
            const UElement img = phi(f);
            out.emit(text::format(img), with_op(text::to_json(img), "phi"));
        } else if (*reduce_cmd) {
            const LieElement f = as_lie(text::parse_element(lhs, text::Kind::Lie), lhs);
            const Reduction r = reduce_mod_A(f);
            std::string t = text::format(r.normal_form);
            if (show_trace) {
                for (const auto& s : r.trace.steps) {
                    t += "\n  " + std::string(to_string(s.rule)) + "  [" + format_compact(s.target) + "] -> " +
                         text::format(s.replacement);
                }
            }
            json j = {{"kind", "reduction"}, {"input", text::to_json(f)},
                      {"normal_form", text::to_json(r.normal_form.to_lie())}};
            if (show_trace) j["trace"] = text::to_json(r.trace);
            out.emit(t, j);
        } else if (*verify_cmd) {
            const VerificationReport report =
                serial ? verify_presentation_serial(vopts) : verify_presentation(vopts);
            if (out.as_json) {
                std::cout << json{{"kind", "verification"}, {"report", report.to_json()}}.dump(2) << "\n";
            } else {
                std::cout << report.to_text();
            }
            return report.ok() ? kExitOk : kExitCounterexample;
        }
    } catch (const AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
