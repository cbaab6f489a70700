#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "wolst/bernoulli.hpp"
#include "wolst/errors.hpp"
#include "wolst/primes.hpp"
#include "wolst/series.hpp"
#include "wolst/wolstenholme.hpp"

using namespace wolst;

namespace {

// Independent oracle: B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j.
std::vector<BigRational> bernoulli_by_recurrence(std::size_t n) {
    std::vector<BigRational> b(n + 1);
    b[0] = BigRational(1);
    for (std::size_t m = 1; m <= n; ++m) {
        BigRational sum;
        for (std::size_t j = 0; j < m; ++j) {
            sum += BigRational(binom_exact(m + 1, j)) * b[j];
        }
        b[m] = -sum / BigRational(static_cast<long>(m + 1));
    }
    // This recurrence yields the B_1 = -1/2 convention directly.
    return b;
}

} // namespace

TEST_CASE("table matches the recurrence oracle through B_60") {
    const BernoulliTable table(60);
    const auto oracle = bernoulli_by_recurrence(60);
    for (std::size_t k = 0; k <= 60; ++k) {
        CHECK(table.value(k) == oracle[k]);
    }
}

TEST_CASE("frozen values") {
    const BernoulliTable table(12);
    CHECK(table.value(0) == BigRational(1));
    CHECK(table.value(1) == BigRational(-1, 2));
    CHECK(table.value(2) == BigRational(1, 6));
    CHECK(table.value(4) == BigRational(-1, 30));
    CHECK(table.value(12) == BigRational(-691, 2730));
    CHECK(table.max_index() == 12);
    CHECK_THROWS_AS(table.value(13), TableExhausted);
}

TEST_CASE("odd Bernoulli numbers vanish") {
    const BernoulliTable table(61);
    for (std::size_t k = 3; k <= 61; k += 2) {
        CHECK(table.value(k).is_zero());
    }
}

TEST_CASE("von Staudt-Clausen integrality") {
    const BernoulliTable table(60);
    for (std::size_t m = 2; m <= 60; m += 2) {
        BigRational sum = table.value(m);
        for (std::uint64_t q : prime_sieve(m + 2)) {
            if (m % (q - 1) == 0) sum += BigRational(1, static_cast<long>(q));
        }
        CHECK(sum.is_integer());
    }
    // spot-check the denominator this pins down: 2730 = 2*3*5*7*13
    CHECK(table.value(12).den() == 2730);
}

TEST_CASE("generating-function round trip") {
    const std::size_t order = 62;
    const BernoulliTable table(order - 1);
    std::vector<BigRational> egf;
    BigInt fact(1);
    for (std::size_t k = 0; k < order; ++k) {
        if (k > 0) fact *= static_cast<unsigned long>(k);
        egf.push_back(table.value(k) / BigRational(fact));
    }
    const RationalSeries t_over_em1(RationalRing{}, std::move(egf));
    CHECK(exp_minus_one_over_t(order) * t_over_em1 == RationalSeries::one(RationalRing{}, order));
}

TEST_CASE("c_k coefficients") {
    const BernoulliTable table(8);
    CHECK(c_coefficient(1, table) == BigRational(1, 24));
    CHECK(c_coefficient(2, table) == BigRational(-1, 2880));
    CHECK_THROWS_AS(c_coefficient(5, table), TableExhausted);
    CHECK_THROWS_AS(c_coefficient(0, table), std::invalid_argument);
}

TEST_CASE("log A ties into the c_k ladder") {
    // log A(t) = t/2 + c_1 t^2 + 0 t^3 + c_2 t^4 + 0 t^5
    const BernoulliTable table(4);
    const auto log_a = exp_minus_one_over_t(6).log1();
    CHECK(log_a.coefficient(0).is_zero());
    CHECK(log_a.coefficient(1) == BigRational(1, 2));
    CHECK(log_a.coefficient(2) == c_coefficient(1, table));
    CHECK(log_a.coefficient(3).is_zero());
    CHECK(log_a.coefficient(4) == c_coefficient(2, table));
    CHECK(log_a.coefficient(5).is_zero());
}

TEST_CASE("bernoulli_mod_p") {
    const BernoulliTable table(8);
    CHECK(bernoulli_mod_p(2, 5, table) == ModRingElement(BigInt(1), 5, 1));
    CHECK(bernoulli_mod_p(4, 7, table) == ModRingElement(BigInt(3), 7, 1));
    CHECK(bernoulli_mod_p(0, 11, table).residue() == 1);
    // (p-1) | m violates the precondition; von Staudt-Clausen puts p in the denominator
    CHECK_THROWS_AS(bernoulli_mod_p(4, 5, table), NonInvertibleDenominator);
    CHECK_THROWS_AS(bernoulli_mod_p(10, 7, table), TableExhausted);
}
