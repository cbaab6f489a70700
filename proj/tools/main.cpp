#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "wolst/bernoulli.hpp"
#include "wolst/errors.hpp"
#include "wolst/primes.hpp"
#include "wolst/report_json.hpp"
#include "wolst/scanner.hpp"
#include "wolst/series.hpp"
#include "wolst/wolstenholme.hpp"

namespace {

using nlohmann::json;

struct CliConfig {
    std::uint64_t prime = 0;       // verify
    std::uint64_t limit = 0;       // scan
    std::uint64_t bernoulli_n = 0; // bernoulli
    std::size_t order = 8;         // expand
    unsigned exponent = 4;         // verify depth
    std::string format = "text";
    std::string checkpoint;
    unsigned threads = 1;
};

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void render_report_text(const wolst::VerificationReport& report, unsigned exponent) {
    std::cout << "p = " << report.prime << " (harmonic exponent " << exponent << ")\n";
    for (const auto& c : report.checks) {
        std::cout << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << std::left << std::setw(19)
                  << c.name << " " << c.claim << "\n";
        std::cout << "           left  = " << c.left << "\n";
        std::cout << "           right = " << c.right << "\n";
    }
    if (report.prime > wolst::kGlaisherMaxPrime) {
        std::cout << "  note: glaisher_p4 skipped (B_{p-3} beyond the stock Bernoulli table, p > "
                  << wolst::kGlaisherMaxPrime << ")\n";
    }
    if (report.prime > wolst::kResidueExactMaxPrime) {
        std::cout << "  note: residue_exact skipped (exact series route bounded at p <= "
                  << wolst::kResidueExactMaxPrime << ")\n";
    }
    std::size_t passed = 0;
    for (const auto& c : report.checks) passed += c.passed ? 1 : 0;
    std::cout << "overall: " << (report.overall() ? "PASS" : "FAIL") << " (" << passed << "/"
              << report.checks.size() << " checks)\n";
}

int run_verify(const CliConfig& cfg) {
    if (!wolst::is_prime(cfg.prime)) {
        std::cerr << "error: " << cfg.prime << " is not prime\n";
        return kExitUsage;
    }
    if (cfg.prime < 5) {
        std::cerr << "warning: hypothesis p >= 5 violated; theorem checks are expected to fail\n";
    }
    wolst::VerifyOptions options;
    options.mod_exponent = cfg.exponent;
    const wolst::VerificationReport report = wolst::run_verification(cfg.prime, options);
    if (cfg.format == "json") {
        std::cout << wolst::report_to_json(report).dump(2) << "\n";
    } else {
        render_report_text(report, cfg.exponent);
    }
    return report.overall() ? kExitPass : kExitCheckFailed;
}

int run_scan(const CliConfig& cfg) {
    const bool text = cfg.format == "text";
    wolst::ScanOptions options;
    options.limit = cfg.limit;
    options.threads = cfg.threads;
    if (!cfg.checkpoint.empty()) options.checkpoint = cfg.checkpoint;
    options.on_record = [&](const wolst::ScanRecord& rec) {
        if (rec.is_wolstenholme && text) {
            std::cout << "Wolstenholme prime: " << rec.prime << " (residue "
                      << rec.residue_mod_p4.get_str() << " mod p^4, "
                      << (rec.cross_checked ? "cross-checked" : "CROSS-CHECK FAILED") << ")\n"
                      << std::flush;
        }
    };
    options.on_progress = [](const wolst::ScanProgress& progress) {
        std::cerr << "progress: p=" << progress.last_prime << " tested=" << progress.tested << "/"
                  << progress.total << " rate=" << static_cast<std::uint64_t>(progress.primes_per_second)
                  << "/s\n";
    };

    wolst::ScanSummary summary;
    try {
        summary = wolst::scan(options);
    } catch (const wolst::CheckpointError& e) {
        std::cerr << "checkpoint error: " << e.what() << "\n";
        return kExitIo;
    }

    bool cross_check_failed = false;
    for (const auto& hit : summary.hits) {
        if (!hit.cross_checked) cross_check_failed = true;
    }
    if (text) {
        std::cout << "tested " << summary.primes_tested << " primes below " << summary.limit << ": "
                  << summary.hits.size() << " Wolstenholme prime"
                  << (summary.hits.size() == 1 ? "" : "s") << " found\n";
    } else {
        json hits = json::array();
        for (const auto& hit : summary.hits) {
            hits.push_back({{"prime", hit.prime},
                            {"residue_mod_p4", hit.residue_mod_p4.get_str()},
                            {"is_wolstenholme", hit.is_wolstenholme},
                            {"cross_checked", hit.cross_checked}});
        }
        std::cout << json{{"v", 1},
                          {"limit", summary.limit},
                          {"primes_tested", summary.primes_tested},
                          {"hits", hits}}
                         .dump(2)
                  << "\n";
    }
    if (cross_check_failed) {
        std::cerr << "error: a reported hit failed the harmonic-exponential cross-check\n";
        return kExitCheckFailed;
    }
    return kExitPass;
}

int run_bernoulli(const CliConfig& cfg) {
    const wolst::BernoulliTable table(static_cast<std::size_t>(cfg.bernoulli_n));
    if (cfg.format == "json") {
        json values = json::array();
        for (std::size_t k = 0; k <= table.max_index(); ++k) {
            values.push_back({{"index", k},
                              {"numerator", table.value(k).num().get_str()},
                              {"denominator", table.value(k).den().get_str()}});
        }
        std::cout << json{{"v", 1}, {"max_index", table.max_index()}, {"values", values}}.dump(2)
                  << "\n";
    } else {
        for (std::size_t k = 0; k <= table.max_index(); ++k) {
            std::cout << "B_" << k << " = " << table.value(k).str() << "\n";
        }
    }
    return kExitPass;
}

struct ExpandGolden {
    std::size_t index;
    wolst::ParamPoly expected;
};

json param_poly_to_json(const wolst::ParamPoly& poly) {
    json terms = json::array();
    for (int d = 0; d <= std::max(poly.degree(), 0); ++d) {
        const wolst::BigRational c = poly.coefficient(static_cast<std::size_t>(d));
        terms.push_back({{"degree", d},
                         {"numerator", c.num().get_str()},
                         {"denominator", c.den().get_str()}});
    }
    return {{"text", poly.str()}, {"terms", terms}};
}

int run_expand(const CliConfig& cfg) {
    using wolst::BigRational;
    using wolst::ParamPoly;
    const std::size_t order = cfg.order;

    const auto a = wolst::exp_minus_one_over_t(order);
    const auto log_a = wolst::lift_to_param(a.log1());
    const auto a_pow = wolst::pow_param(a);
    const auto a_pow_inv = a_pow.invert();
    const auto numerator =
        wolst::exp_ct(wolst::ParamPolyRing{}, ParamPoly::monomial(BigRational(2), 1), order);
    const auto product = wolst::product_expansion(order);

    const std::vector<ExpandGolden> log_a_golden = {{3, ParamPoly()}};
    const std::vector<ExpandGolden> product_golden = {
        {1, ParamPoly::monomial(BigRational(3, 2), 1)},
        {2, ParamPoly::from_coefficients({BigRational(), BigRational(-1, 24), BigRational(9, 8)})},
    };

    struct Section {
        const char* title;
        const char* key;
        const wolst::ParamSeries* series;
        const std::vector<ExpandGolden>* golden;
    };
    const std::vector<Section> sections = {
        {"log A(t), A = (e^t-1)/t", "log_a", &log_a, &log_a_golden},
        {"A(t)^p = exp(p log A)", "a_pow_p", &a_pow, nullptr},
        {"1/A(t)^p", "a_pow_p_inverse", &a_pow_inv, nullptr},
        {"e^{2pt}", "exp_2pt", &numerator, nullptr},
        {"e^{2pt}/A(t)^p (product)", "product", &product, &product_golden},
    };

    bool golden_ok = true;
    auto golden_for = [](const Section& s, std::size_t k) -> const ExpandGolden* {
        if (!s.golden) return nullptr;
        for (const auto& g : *s.golden) {
            if (g.index == k) return &g;
        }
        return nullptr;
    };

    if (cfg.format == "json") {
        json out_sections = json::array();
        for (const auto& s : sections) {
            json coeffs = json::array();
            for (std::size_t k = 0; k < order; ++k) {
                json entry = param_poly_to_json(s.series->coefficient(k));
                entry["t"] = k;
                if (const ExpandGolden* g = golden_for(s, k)) {
                    entry["golden"] = g->expected.str();
                    if (s.series->coefficient(k) != g->expected) golden_ok = false;
                }
                coeffs.push_back(std::move(entry));
            }
            out_sections.push_back({{"name", s.key}, {"coefficients", std::move(coeffs)}});
        }
        std::cout << json{{"v", 1}, {"order", order}, {"series", out_sections}}.dump(2) << "\n";
    } else {
        std::cout << "series expansions at order " << order << " (coefficients are polynomials in p)\n";
        for (const auto& s : sections) {
            std::cout << "\n" << s.title << ":\n";
            for (std::size_t k = 0; k < order; ++k) {
                std::cout << "  t^" << k << ": " << s.series->coefficient(k).str();
                if (const ExpandGolden* g = golden_for(s, k)) {
                    const bool ok = s.series->coefficient(k) == g->expected;
                    if (!ok) golden_ok = false;
                    std::cout << "   [golden: " << g->expected.str() << " — " << (ok ? "ok" : "MISMATCH")
                              << "]";
                }
                std::cout << "\n";
            }
        }
    }
    if (!golden_ok) {
        std::cerr << "error: a golden coefficient does not match\n";
        return kExitCheckFailed;
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Wolstenholme-type binomial congruences"};
    app.require_subcommand(1);
    CliConfig cfg;

    CLI::App* verify = app.add_subcommand("verify", "run the full congruence suite for one prime");
    verify->add_option("p", cfg.prime, "prime to verify (p in {2,3} allowed, expected to fail)")
        ->required();
    verify->add_option("--mod-exponent", cfg.exponent, "harmonic-exponential depth e")
        ->check(CLI::IsMember({3, 4}));
    verify->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* scan = app.add_subcommand("scan", "search for Wolstenholme primes below a limit");
    scan->add_option("--limit", cfg.limit, "scan primes 5 <= p < limit")->required();
    scan->add_option("--checkpoint", cfg.checkpoint, "resumable progress file");
    scan->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* bern = app.add_subcommand("bernoulli", "print exact Bernoulli numbers B_0..B_n");
    bern->add_option("n", cfg.bernoulli_n, "largest index (<= 200)")->required();
    bern->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* expand = app.add_subcommand("expand", "print the symbolic series expansions");
    expand->add_option("--order", cfg.order, "truncation order (>= 3)");
    expand->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(verify)) {
            return run_verify(cfg);
        }
        if (app.got_subcommand(scan)) {
            if (cfg.limit < 5) {
                std::cerr << "error: --limit must be at least 5\n";
                return kExitUsage;
            }
            return run_scan(cfg);
        }
        if (app.got_subcommand(bern)) {
            if (cfg.bernoulli_n > wolst::kDefaultBernoulliMaxIndex) {
                std::cerr << "error: n exceeds the configured maximum "
                          << wolst::kDefaultBernoulliMaxIndex << "\n";
                return kExitUsage;
            }
            return run_bernoulli(cfg);
        }
        if (app.got_subcommand(expand)) {
            if (cfg.order < 3) {
                std::cerr << "error: --order must be at least 3\n";
                return kExitUsage;
            }
            return run_expand(cfg);
        }
    } catch (const wolst::CheckpointError& e) {
        std::cerr << "checkpoint error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
