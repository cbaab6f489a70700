#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wolst/bernoulli.hpp"
#include "wolst/modring.hpp"
#include "wolst/padic.hpp"
#include "wolst/rational.hpp"
#include "wolst/series.hpp"

namespace wolst {

// Report check names form a fixed enumeration; JSON parsing rejects others.
namespace check_names {
inline constexpr const char* kWolstenholmeP3 = "wolstenholme_p3";
inline constexpr const char* kGlaisherP4 = "glaisher_p4";
inline constexpr const char* kHarmonicV2 = "harmonic_v2";
inline constexpr const char* kHarmonic2V1 = "harmonic2_v1";
inline constexpr const char* kResidueExact = "residue_exact";
inline constexpr const char* kHarmonicExpP4 = "harmonic_exp_p4";
inline constexpr const char* kWilson = "wilson";
inline constexpr const char* kSymmetricFunctions = "symmetric_functions";
inline constexpr const char* kDoubleSum = "double_sum";
inline constexpr const char* kGFactorization = "g_factorization";
} // namespace check_names

const std::array<const char*, 10>& all_check_names();

struct CheckResult {
    std::string name;
    std::string claim;
    std::string left;
    std::string right;
    bool passed = false;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    std::uint64_t prime = 0;
    std::vector<CheckResult> checks;

    bool overall() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Exact C(m, n) by the multiplicative formula with exact division each step.
BigInt binom_exact(std::uint64_t m, std::uint64_t n);

// [t^{p-1}] of e^{2pt} / A(t)^p over Q at truncation order p, with
// A = (e^t - 1)/t and the p-th power taken as exp(p log A). The t^{-p}
// prefactor is never materialized; reading index p-1 absorbs the shift.
// Equals C(2p-1, p-1) exactly.
BigRational residue_binomial(std::uint64_t p);

// e^{2pt} / A(t)^p over Q[p] (again without the t^{-p} prefactor):
// 1 + (3p/2) t + (9p^2/8 - p/24) t^2 + ...
ParamSeries product_expansion(std::size_t order);

// G(t) = 2t - log A(t), the exponent series with e^{2pt}/A^p = exp(p G):
// 3t/2 - c_1 t^2 - c_2 t^4 - ... (odd coefficients beyond t vanish).
RationalSeries g_series(std::size_t order);

// H_{p-1}^{(r)} = sum_{k=1}^{p-1} 1/k^r, exact.
BigRational harmonic(std::uint64_t p, unsigned r);

// Same sum in Z/p^e via modular inverses. Requires p > e.
ModRingElement harmonic_mod(std::uint64_t p, unsigned r, unsigned e);

// exp(p H - p^2/2 H^(2) + p^3/3 H^(3) - ...) truncated in Z/p^e;
// equals C(2p-1, p-1) mod p^e for p >= 5, e <= 4.
ModRingElement harmonic_exponential(std::uint64_t p, unsigned e);

// C(2p-1, p-1) mod p^e as the product prod_{k=1}^{p-1} (1 + p k^{-1}),
// with all k^{-1} obtained by batch inversion (one inverse of a prefix
// product). Uses 64-bit arithmetic with 128-bit products while p^e stays
// below word_modulus_bound, arbitrary precision above it.
inline constexpr std::uint64_t kWordModulusBound = 1ull << 62;
ModRingElement binomial_product_mod(std::uint64_t p, unsigned e,
                                    std::uint64_t word_modulus_bound = kWordModulusBound);

namespace detail {
std::uint64_t product_residue_word(std::uint64_t p, unsigned e); // pre: p^e < 2^62
BigInt product_residue_big(std::uint64_t p, unsigned e);
std::uint64_t factorial_mod(std::uint64_t n, std::uint64_t m);
std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m);
} // namespace detail

// --- per-prime checks; a failed assertion is a report entry, not an exception ---

// C(2p-1, p-1) mod p^3 = 1; when the series residue is supplied, the same
// congruence is also required of it (the coefficient-extraction route).
CheckResult wolstenholme_check(std::uint64_t p);
CheckResult wolstenholme_check(std::uint64_t p, const BigRational& series_residue);

// v_p(H_{p-1}) >= 2 and v_p(H^(2)_{p-1}) >= 1, as two report entries.
std::vector<CheckResult> harmonic_criteria(std::uint64_t p);

// residue_binomial(p) = binom_exact(2p-1, p-1), exact integer equality.
CheckResult residue_exact_check(std::uint64_t p);
CheckResult residue_exact_check(std::uint64_t p, const BigRational& series_residue);

CheckResult harmonic_exponential_check(std::uint64_t p, unsigned e);

// C(2p-1, p-1) = 1 - (2/3) p^3 B_{p-3} mod p^4; needs the table to reach B_{p-3}.
CheckResult glaisher_check(std::uint64_t p, const BernoulliTable& table);

// (p-1)! = -1 mod p, and 1/((p-3)(p-3)!) = 2/3 mod p -- the constant that
// multiplies B_{p-3} in the Glaisher term. The second clause needs p >= 5.
CheckResult wilson_checks(std::uint64_t p);

// Elementary symmetric functions of {1..p-1}: e_k = 0 mod p for
// 1 <= k <= p-2, e_{p-1} = -1; plus sum k^{p-2} = 0 mod p for p >= 5.
CheckResult symmetric_function_check(std::uint64_t p);

// sum_{i<j} 1/(ij): the identity 2S = H^2 - H^(2) exactly in Q, and
// v_p(S) >= 1 when p >= 5.
CheckResult double_sum_check(std::uint64_t p);

// exp(p G(t)) reproduces product_expansion(order) over Q[p].
CheckResult g_factorization_check(std::size_t order = 8);

// cmd_verify runs the exact-series residue route only up to this prime;
// the route costs O(p^2) big-rational operations.
inline constexpr std::uint64_t kResidueExactMaxPrime = 211;

// Largest prime whose B_{p-3} the stock Bernoulli table reaches.
inline constexpr std::uint64_t kGlaisherMaxPrime = kDefaultBernoulliMaxIndex + 3;

struct VerifyOptions {
    unsigned mod_exponent = 4; // harmonic-exponential depth e, 3 or 4
};

// Full per-prime report in the fixed check order. Checks whose hypotheses
// cannot be evaluated at this p (glaisher beyond the table, residue route
// beyond kResidueExactMaxPrime, p < 5 special cases) are omitted.
VerificationReport run_verification(std::uint64_t p, const VerifyOptions& options = {});

} // namespace wolst
