#include "ulie/verify.hpp"

#include <omp.h>

#include <chrono>
#include <exception>
#include <random>
#include <sstream>

#include "ulie/text.hpp"

namespace ulie {

namespace {

// Uniform in [0, bound) by rejection; std distributions are not portable
// across standard libraries and seeded runs must be bit-reproducible.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

Rational random_coeff(std::mt19937_64& rng) {
    long p = static_cast<long>(below(rng, 10)) - 5;
    if (p >= 0) ++p;  // -5..-1, 1..5
    Rational c(p, static_cast<long>(below(rng, 4)) + 1);
    c.canonicalize();
    return c;
}

WordCheck check_word(const Word& w) {
    WordCheck out;
    out.word = w;
    const LieElement f = LieElement::basis(w);
    out.normal_form = reduce_normal_form(f);
    const LieElement nf = out.normal_form.to_lie();
    out.phi_agrees = phi(f) == phi(nf);
    out.in_kernel = in_kernel(f - nf);
    return out;
}

SampleCheck check_sample(const IdealSample& s) {
    SampleCheck out;
    out.sample = s;
    const LieElement f = s.build();
    out.support = f.size();
    out.maps_to_zero = in_kernel(f);
    const NormalForm nf = reduce_normal_form(f);
    out.zero_normal_form = nf.is_zero();
    if (!out.zero_normal_form) out.residual = text::format(nf);
    return out;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void collect_counterexamples(VerificationReport& report) {
    for (const auto& c : report.words) {
        const LieElement f = LieElement::basis(c.word);
        const LieElement nf = c.normal_form.to_lie();
        if (!c.phi_agrees) {
            report.counterexamples.push_back({"phi-agreement", c.word.str(),
                                              "phi(w) = " + text::format(phi(f)) +
                                                  "; phi(nf) = " + text::format(phi(nf))});
        }
        if (!c.in_kernel) {
            report.counterexamples.push_back(
                {"kernel", c.word.str(), "phi(w - nf) = " + text::format(phi_bracketed(f - nf))});
        }
    }
    for (const auto& s : report.samples) {
        if (!s.ok()) {
            std::string payload = s.zero_normal_form ? std::string("normal form 0") : "normal form " + s.residual;
            if (!s.maps_to_zero) payload += "; phi(f) != 0";
            report.counterexamples.push_back({"ideal-sample", s.sample.str(), payload});
        }
    }
}

template <class Kernel>
VerificationReport run(const VerifyOptions& options, Kernel&& kernel) {
    VerificationReport report;
    report.max_length = options.max_length;
    report.seed = options.seed;

    const std::vector<Word> words = enumerate_regular(options.max_length);
    const std::vector<IdealSample> samples = draw_ideal_samples(options.max_length, options.seed, options.samples);
    report.words.resize(words.size());
    report.samples.resize(samples.size());
    std::vector<std::string> errors(words.size() + samples.size());

    auto t0 = Clock::now();
    kernel(words.size(), [&](std::size_t i) {
        try {
            report.words[i] = check_word(words[i]);
        } catch (const std::exception& e) {
            report.words[i].word = words[i];
            errors[i] = e.what();
        }
    });
    report.seconds_words = seconds_since(t0);

    t0 = Clock::now();
    kernel(samples.size(), [&](std::size_t i) {
        try {
            report.samples[i] = check_sample(samples[i]);
        } catch (const std::exception& e) {
            report.samples[i].sample = samples[i];
            errors[words.size() + i] = e.what();
        }
    });
    report.seconds_samples = seconds_since(t0);

    collect_counterexamples(report);
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (errors[i].empty()) continue;
        const std::string subject = i < words.size() ? words[i].str() : samples[i - words.size()].str();
        report.counterexamples.push_back({"exception", subject, errors[i]});
    }
    return report;
}

}  // namespace

LieElement IdealSample::build() const {
    LieElement f;
    for (const auto& b : brackets) {
        f.add_scaled(lie_bracket(LieElement::basis(b.left), alpha(b.n).element), b.coeff);
    }
    for (const auto& a : alphas) f.add_scaled(alpha(a.n).element, a.coeff);
    return f;
}

std::string IdealSample::str() const {
    std::ostringstream os;
    bool first = true;
    const auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    for (const auto& b : brackets) {
        sep();
        os << "(" << to_string(b.coeff) << ")*[[" << format_compact(b.left) << "], alpha_" << b.n << "]";
    }
    for (const auto& a : alphas) {
        sep();
        os << "(" << to_string(a.coeff) << ")*alpha_" << a.n;
    }
    return os.str();
}

std::vector<IdealSample> draw_ideal_samples(unsigned max_length, std::uint64_t seed, unsigned count) {
    std::mt19937_64 rng(seed);
    const std::size_t left_len = max_length > 4 ? max_length - 3 : 1;
    const std::vector<Word> pool = enumerate_regular(left_len);
    const unsigned n_max = max_length > 0 ? max_length : 1;

    std::vector<IdealSample> out(count);
    for (auto& s : out) {
        const std::uint64_t nb = 1 + below(rng, 2);
        for (std::uint64_t i = 0; i < nb; ++i) {
            Rational c = random_coeff(rng);
            Word left = pool[below(rng, pool.size())];
            const auto n = static_cast<unsigned>(1 + below(rng, n_max));
            s.brackets.push_back({std::move(c), std::move(left), n});
        }
        const std::uint64_t na = below(rng, 3);
        for (std::uint64_t i = 0; i < na; ++i) {
            Rational c = random_coeff(rng);
            const auto n = static_cast<unsigned>(1 + below(rng, n_max));
            s.alphas.push_back({std::move(c), n});
        }
    }
    return out;
}

VerificationReport verify_presentation(const VerifyOptions& options) {
    const int threads = options.threads > 0 ? static_cast<int>(options.threads) : omp_get_max_threads();
    return run(options, [threads](std::size_t count, const auto& body) {
        const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    });
}

VerificationReport verify_presentation_serial(const VerifyOptions& options) {
    return run(options, [](std::size_t count, const auto& body) {
        for (std::size_t i = 0; i < count; ++i) body(i);
    });
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    std::size_t phi_ok = 0, kernel_ok = 0, zero_nf = 0, maps_zero = 0;
    for (const auto& w : words) {
        phi_ok += w.phi_agrees;
        kernel_ok += w.in_kernel;
    }
    for (const auto& s : samples) {
        zero_nf += s.zero_normal_form;
        maps_zero += s.maps_to_zero;
    }
    os << "presentation check: regular words of length <= " << max_length << ", seed " << seed << "\n";
    for (const auto& w : words) {
        os << "  " << (w.ok() ? "ok  " : "FAIL") << "  [" << format_compact(w.word)
           << "] -> " << text::format(w.normal_form) << "\n";
    }
    os << "words: " << words.size() << " (phi agreement " << phi_ok << "/" << words.size() << ", kernel "
       << kernel_ok << "/" << words.size() << ")\n";
    os << "ideal samples: " << samples.size() << " (zero normal form " << zero_nf << "/" << samples.size()
       << ", phi = 0 " << maps_zero << "/" << samples.size() << ")\n";
    os << "time: words " << seconds_words << " s, samples " << seconds_samples << " s\n";
    for (const auto& c : counterexamples) {
        os << "counterexample [" << c.check << "] " << c.subject << ": " << c.payload << "\n";
    }
    os << counterexamples.size() << " counterexamples\n";
    return os.str();
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["max_length"] = max_length;
    j["seed"] = seed;
    j["words"] = nlohmann::json::array();
    for (const auto& w : words) {
        j["words"].push_back({{"word", w.word.str()},
                              {"class", to_string(classify(w.word))},
                              {"normal_form", text::to_json(w.normal_form.to_lie())},
                              {"phi_agrees", w.phi_agrees},
                              {"in_kernel", w.in_kernel}});
    }
    j["samples"] = nlohmann::json::array();
    for (const auto& s : samples) {
        j["samples"].push_back({{"element", s.sample.str()},
                                {"support", s.support},
                                {"maps_to_zero", s.maps_to_zero},
                                {"zero_normal_form", s.zero_normal_form},
                                {"residual", s.residual}});
    }
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& c : counterexamples) {
        j["counterexamples"].push_back({{"check", c.check}, {"subject", c.subject}, {"payload", c.payload}});
    }
    j["timing"] = {{"words_seconds", seconds_words}, {"samples_seconds", seconds_samples}};
    j["ok"] = ok();
    return j;
}

}  // namespace ulie
