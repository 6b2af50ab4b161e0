#ifndef ULIE_VERIFY_HPP
#define ULIE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ulie/freelie.hpp"
#include "ulie/presentation.hpp"
#include "ulie/words.hpp"

namespace ulie {

struct VerifyOptions {
    unsigned max_length = 6;   // N: regular words with |w| <= N are checked
    std::uint64_t seed = 1;
    unsigned samples = 100;    // random elements of the alpha-ideal
    unsigned threads = 0;      // 0: OpenMP default
};

struct WordCheck {
    Word word;
    NormalForm normal_form;
    bool phi_agrees = false;     // phi([w]) == phi(nf)
    bool in_kernel = false;      // [w] - nf maps to 0
    bool ok() const { return phi_agrees && in_kernel; }
};

// One sampled ideal element: sum c_i [[r_i], alpha(n_i)] + sum d_j alpha(m_j).
struct IdealSample {
    struct BracketTerm {
        Rational coeff;
        Word left;
        unsigned n;
    };
    struct AlphaTerm {
        Rational coeff;
        unsigned n;
    };
    std::vector<BracketTerm> brackets;
    std::vector<AlphaTerm> alphas;

    LieElement build() const;
    std::string str() const;
};

struct SampleCheck {
    IdealSample sample;
    std::size_t support = 0;     // number of Shirshov coordinates of the element
    bool maps_to_zero = false;   // phi(f) == 0
    bool zero_normal_form = false;
    std::string residual;        // nonzero normal form, if any
    bool ok() const { return maps_to_zero && zero_normal_form; }
};

struct Counterexample {
    std::string check;    // "phi-agreement", "kernel", "ideal-sample"
    std::string subject;  // word or sample description
    std::string payload;  // serialized element(s)
};

struct VerificationReport {
    unsigned max_length = 0;
    std::uint64_t seed = 0;
    std::vector<WordCheck> words;
    std::vector<SampleCheck> samples;
    std::vector<Counterexample> counterexamples;
    double seconds_words = 0;
    double seconds_samples = 0;

    bool ok() const { return counterexamples.empty(); }
    std::string to_text() const;
    nlohmann::json to_json() const;
};

// Deterministic in the seed; the samples are drawn before any evaluation.
std::vector<IdealSample> draw_ideal_samples(unsigned max_length, std::uint64_t seed, unsigned count);

// Per-word and per-sample checks run as an OpenMP parallel loop.
VerificationReport verify_presentation(const VerifyOptions& options);
// Reference: the same checks in a plain loop.
VerificationReport verify_presentation_serial(const VerifyOptions& options);

}  // namespace ulie

#endif
